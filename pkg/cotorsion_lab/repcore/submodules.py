from logging import getLogger

from ..exception import EnumerationRefused
from .module import quotient, submodule

logger = getLogger(__name__)


def _subspaces_containing(field, required, ambient):
    """Reduced bases of all subspaces of F^ambient containing the row span of required"""
    projection, section = field.quotient_map(required, ambient)
    for complement in field.subspaces(projection.shape[0]):
        lifted = field.matmul(complement, section.T)
        yield field.rref(field.vstack([required, lifted], ambient))[0]


def _choose(module, v, bases):
    field = module.field
    if v == 0:
        yield list(reversed(bases))
        return

    if bases:
        image = field.matmul(module.arrow(v), bases[-1].T)
        required = field.column_space(image)

    else:
        required = field.zeros(0, module.dim(v))

    for basis in _subspaces_containing(field, required, module.dim(v)):
        yield from _choose(module, v - 1, bases + [basis])


def submodule_bases(module, dim_cap=None):
    """Per-vertex bases of every subrepresentation, chosen from the top vertex downwards"""
    if dim_cap is not None and module.total_dim > dim_cap:
        raise EnumerationRefused(module.total_dim, dim_cap)

    yield from _choose(module, module.presentation.n, [])


def submodules(module, dim_cap=None):
    """Every submodule exactly once, as (submodule, inclusion)"""
    for bases in submodule_bases(module, dim_cap):
        yield submodule(module, bases)


def subquotients(module, dim_cap=None):
    """Every submodule with its quotient, as (sub, inclusion, quotient, projection)"""
    count = 0
    for bases in submodule_bases(module, dim_cap):
        count += 1
        sub, inclusion = submodule(module, bases)
        rest, projection = quotient(module, bases)
        yield sub, inclusion, rest, projection

    logger.debug("Enumerated %d submodules of a module with dims %s", count, module.dims)
