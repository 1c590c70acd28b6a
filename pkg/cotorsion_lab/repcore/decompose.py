"""Krull-Schmidt decomposition of representations

Two independent algorithms are provided. The serial one repeatedly splits off the interval generated
by an element of maximal reach; it relies on the algebra being Nakayama. The generic one splits by
Fitting's lemma on random endomorphisms and falls back to an exhaustive idempotent search.
"""
from collections import namedtuple
from itertools import product
from logging import getLogger

import numpy as np

from ..contexts import get_decomposition_seed, get_fitting_attempts, get_idempotent_search_cap
from ..exception import DecompositionInconclusive, ValidationError
from .module import (Morphism, compose, hom_space, identity, interval_module, kernel, linear_combination,
                     submodule, matrix_morphism)

logger = getLogger(__name__)


Piece = namedtuple("Piece", "interval embedding")


class Decomposition(namedtuple("Decomposition", "module pieces")):
    """Interval summands of a module, sorted by interval, each with its split embedding"""

    @property
    def intervals(self):
        return tuple(p.interval for p in self.pieces)

    def isomorphism(self):
        """Isomorphism from the direct sum of the interval modules (in order) onto the module"""
        module = self.module
        sources = [p.embedding.source for p in self.pieces]
        iso, _, _ = matrix_morphism(module.presentation, module.field, [[p.embedding for p in self.pieces]],
                                    sources, [module])
        return iso


def rank_profile(module):
    """Ranks r(a, b) of the path maps from b down to a, for a <= b"""
    n = module.presentation.n
    return {(a, b): module.field.rank(module.path(a, b)) for a in range(1, n + 1) for b in range(a, n + 1)}


def interval_multiplicities(module):
    """Multiplicity of every interval summand from the rank invariant alone"""
    ranks = rank_profile(module)
    n = module.presentation.n

    def r(a, b):
        if a < 1 or b > n:
            return 0

        return ranks[a, b]

    counts = {}
    for a, b in ranks:
        multiplicity = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
        if multiplicity:
            counts[a, b] = multiplicity

    return counts


def _interval_embedding(module, a, b, generator):
    """Map from the interval module [a, b] into module sending the top basis vector to generator"""
    presentation, field = module.presentation, module.field
    source = interval_module(presentation, field, a, b)
    components = []
    for v in presentation.vertices:
        if a <= v <= b:
            components.append(field.matmul(module.path(v, b), generator))

        else:
            components.append(field.zeros(module.dim(v), 0))

    return Morphism(source, module, components)


def _maximal_reach(module):
    """Longest nonzero path (a, b) in the module and a basis vector at b surviving along it"""
    n = module.presentation.n
    field = module.field
    for length in range(n - 1, -1, -1):
        for a in range(1, n - length + 1):
            b = a + length
            if not module.dim(b):
                continue

            path = module.path(a, b)
            columns = np.flatnonzero(np.any(path.view(np.ndarray), axis=0))
            if columns.size:
                generator = field.zeros(module.dim(b), 1)
                generator[int(columns[0]), 0] = 1
                return a, b, generator

    return None


def _split_serial(module):
    pieces = []
    current, inclusion = module, identity(module)
    while not current.is_zero:
        a, b, generator = _maximal_reach(current)
        embedding = _interval_embedding(current, a, b, generator)

        retraction = None
        for candidate in hom_space(current, embedding.source):
            value = compose(candidate, embedding).component(b)[0, 0]
            if value:
                retraction = candidate.scaled(int(np.reciprocal(value)))
                break

        if retraction is None:
            raise ValidationError("Interval [{},{}] generated by a top element does not split".format(a, b))

        pieces.append(Piece((a, b), compose(inclusion, embedding)))
        complement, complement_inclusion = kernel(retraction)
        current, inclusion = complement, compose(inclusion, complement_inclusion)

    return pieces


def _as_interval(module, inclusion):
    support = [v for v in module.presentation.vertices if module.dim(v)]
    a, b = support[0], support[-1]
    if support != list(range(a, b + 1)) or any(module.dim(v) != 1 for v in support):
        raise ValidationError("Indecomposable summand with dims {} is not an interval module".format(module.dims))

    generator = module.field.identity(1)
    return Piece((a, b), compose(inclusion, _interval_embedding(module, a, b, generator)))


def _power(morphism, exponent):
    result = identity(morphism.source)
    for _ in range(exponent):
        result = compose(morphism, result)

    return result


def _image_and_kernel(endomorphism):
    field = endomorphism.field
    image = submodule(endomorphism.source, [field.column_space(c) for c in endomorphism.components])
    return image, kernel(endomorphism)


def _split_by(endomorphism, inclusion):
    """Split along im/ker of a Fitting power, or None if the power is nilpotent or invertible"""
    stable = _power(endomorphism, endomorphism.source.total_dim)
    (image, image_inclusion), (null, null_inclusion) = _image_and_kernel(stable)
    if image.is_zero or null.is_zero:
        return None

    return [(image, compose(inclusion, image_inclusion)), (null, compose(inclusion, null_inclusion))]


def _split_generic(module, inclusion, rng):
    if module.is_zero:
        return []

    basis = hom_space(module, module)
    if len(basis) == 1:
        return [_as_interval(module, inclusion)]

    p = module.field.p
    for _ in range(get_fitting_attempts()):
        coefficients = rng.integers(0, p, size=len(basis))
        parts = _split_by(linear_combination(module, module, basis, coefficients), inclusion)
        if parts is not None:
            return [piece for part, part_inclusion in parts for piece in _split_generic(part, part_inclusion, rng)]

    cap = get_idempotent_search_cap()
    if len(basis) > cap:
        raise DecompositionInconclusive(len(basis), cap)

    one = identity(module)
    for coefficients in product(range(p), repeat=len(basis)):
        candidate = linear_combination(module, module, basis, coefficients)
        if candidate.is_zero or candidate == one or compose(candidate, candidate) != candidate:
            continue

        parts = _split_by(candidate, inclusion)
        return [piece for part, part_inclusion in parts for piece in _split_generic(part, part_inclusion, rng)]

    return [_as_interval(module, inclusion)]


def decompose(module, method="serial"):
    """Decompose a module into interval summands

    ``method`` is ``"serial"`` (maximal reach splitting) or ``"generic"`` (Fitting splitting, then
    exhaustive idempotents when End is small enough).
    """
    if method == "serial":
        pieces = _split_serial(module)

    elif method == "generic":
        rng = np.random.default_rng(get_decomposition_seed())
        pieces = _split_generic(module, identity(module), rng)

    else:
        raise ValueError("Unknown decomposition method {!r}".format(method))

    pieces.sort(key=lambda p: p.interval)
    logger.debug("Decomposed module with dims %s into %s", module.dims, [p.interval for p in pieces])
    return Decomposition(module, tuple(pieces))
