"""Epimorphisms and monomorphisms of the heart, each decided two ways

The criterion: f: A -> B is epic modulo W iff the cokernel of (f, w): A -> B + W^A lies in U, where
A -> W^A is the inflation of the B- witness of A; dually f is monic iff the kernel of
(f w): A + W_B -> B lies in T. The direct method: f is epic iff precomposition with f is injective on
Hom(-, C)/W for every indecomposable C of the heart; dually for monos. Hom functors are additive, so
the indecomposables suffice.
"""
from logging import getLogger

from ..contexts import get_cross_check_enabled
from ..exception import CriterionDisagreement
from ..repcore import cokernel, kernel
from ..serialcat import ObjMorphism

logger = getLogger(__name__)


def epi_joint(heart, f):
    """(f, w): A -> B + W^A, with the positions of the summands of B and W^A in the target"""
    inflation = heart.bminus_conflation(f.source).inflation
    joint, _, target_positions = ObjMorphism.assemble(heart.ctx, [[f], [inflation]], [f.source],
                                                      [f.target, inflation.target])
    return joint, target_positions


def mono_joint(heart, f):
    """(f w): A + W_B -> B, with the positions of the summands of A and W_B in the source"""
    deflation = heart.bplus_conflation(f.target).deflation
    joint, source_positions, _ = ObjMorphism.assemble(heart.ctx, [[f, deflation]], [f.source, deflation.source],
                                                      [f.target])
    return joint, source_positions


def epi_cokernel_class(heart, f):
    joint, _ = epi_joint(heart, f)
    module, _ = cokernel(joint.realize())
    return heart.ctx.classify(module)


def mono_kernel_class(heart, f):
    joint, _ = mono_joint(heart, f)
    module, _ = kernel(joint.realize())
    return heart.ctx.classify(module)


def is_epi_by_criterion(heart, f):
    return heart.tp.u.contains_obj(epi_cokernel_class(heart, f))


def is_mono_by_criterion(heart, f):
    return heart.tp.t.contains_obj(mono_kernel_class(heart, f))


def is_epi_direct(heart, f):
    field = heart.ctx.field
    for c in heart.ids:
        matrix = heart.pre_composition(f, c)
        if field.rank(matrix) != matrix.shape[1]:
            return False

    return True


def is_mono_direct(heart, f):
    field = heart.ctx.field
    for d in heart.ids:
        matrix = heart.post_composition(f, d)
        if field.rank(matrix) != matrix.shape[1]:
            return False

    return True


def _decide(name, criterion, direct, heart, f):
    heart.check_morphism(f)
    value = direct(heart, f)
    if get_cross_check_enabled():
        other = criterion(heart, f)
        if other != value:
            raise CriterionDisagreement("{} of {!r}: criterion says {}, hom functors say {}".format(
                name, f, other, value))

    return value


def is_epi_in_heart(heart, f):
    """Whether f is an epimorphism of H/W"""
    return _decide("epi", is_epi_by_criterion, is_epi_direct, heart, f)


def is_mono_in_heart(heart, f):
    """Whether f is a monomorphism of H/W"""
    return _decide("mono", is_mono_by_criterion, is_mono_direct, heart, f)
