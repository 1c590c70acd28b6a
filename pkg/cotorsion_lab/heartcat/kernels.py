"""Kernels and cokernels in the heart

For f: A -> B, the kernel is built from the conflation C -> A + W_B -> B given by (f w) and the
B+ witness W_B -> B of B. The map g: C -> A is corrected by the coreflection C^- -> C: take the (S, T)
approximation C -> T1 -> S1, the (U, V) approximation V1 -> W1 -> T1, and pull back along W1 -> T1.
The kernel of f modulo W is g c^-. Cokernels are built dually with pushouts.
"""
from collections import namedtuple
from logging import getLogger

from ..exception import ApproximationUnavailable, ValidationError
from ..repcore import compose, inverse, pullback, pushout
from ..serialcat import Interval, Obj, ObjMorphism, sum_positions
from ..subcat import kernel_conflation, cokernel_conflation
from .epimono import epi_joint, mono_joint
from .heart import HeartMorphism, sum_conflations

logger = getLogger(__name__)


HeartKernel = namedtuple("HeartKernel", "obj morphism")


def part_projection(ctx, combined, positions, part):
    """Projection from a direct sum onto one of its parts"""
    coefficients = ctx.field.zeros(len(part), len(combined))
    for k, position in enumerate(positions):
        coefficients[k, position] = 1

    return ObjMorphism(ctx, combined, part, coefficients, validate=False)


def part_injection(ctx, part, combined, positions):
    coefficients = ctx.field.zeros(len(combined), len(part))
    for k, position in enumerate(positions):
        coefficients[position, k] = 1

    return ObjMorphism(ctx, part, combined, coefficients, validate=False)


def _approximations(search, obj, bounds, name):
    conflations = []
    for x in obj:
        verdict = search(x, bounds)
        if not verdict.is_holds:
            raise ApproximationUnavailable("No {} approximation of {} within {}".format(name, x, bounds))

        conflations.append(verdict.witness)

    return conflations


def kernel_in_heart(heart, f, bounds=None, validate=True):
    """Kernel of f modulo W, as an object of H and a morphism into the source of f"""
    ctx = heart.ctx
    tp = heart.tp
    bounds = bounds or heart.classes.bounds
    heart.check_morphism(f)

    joint, source_positions = mono_joint(heart, f)
    conflation = kernel_conflation(ctx, joint)
    c = conflation.first
    g = part_projection(ctx, joint.source, source_positions[0], f.source).compose(conflation.inflation)

    alpha = sum_conflations(ctx, _approximations(tp.st.right_approximation, c, bounds, "(S,T)")).inflation
    beta = sum_conflations(ctx, _approximations(tp.uv.left_approximation, alpha.target, bounds, "(U,V)")).deflation

    module, leg, _ = pullback(alpha.realize(), beta.realize())
    decomposition = ctx.decompose(module)
    c_minus_obj = ctx.check_obj(_obj(decomposition))
    c_minus = ObjMorphism.from_morphism(ctx, c_minus_obj, c, compose(leg, decomposition.isomorphism()))

    outside = [x for x in c_minus_obj if x not in heart.objects]
    if outside:
        raise ValidationError("Kernel object {} has summands outside H: {}".format(
            c_minus_obj, ", ".join(str(x) for x in outside)))

    result = HeartKernel(c_minus_obj, HeartMorphism(heart, g.compose(c_minus)))
    logger.debug("Kernel of %r is %s", f, c_minus_obj)
    if validate:
        validate_kernel(heart, f, result.morphism.morphism)

    return result


def cokernel_in_heart(heart, f, bounds=None, validate=True):
    """Cokernel of f modulo W, as an object of H and a morphism out of the target of f"""
    ctx = heart.ctx
    tp = heart.tp
    bounds = bounds or heart.classes.bounds
    heart.check_morphism(f)

    joint, target_positions = epi_joint(heart, f)
    conflation = cokernel_conflation(ctx, joint)
    c = conflation.third
    h = conflation.deflation.compose(part_injection(ctx, f.target, joint.target, target_positions[0]))

    beta = sum_conflations(ctx, _approximations(tp.uv.left_approximation, c, bounds, "(U,V)")).deflation
    alpha = sum_conflations(ctx, _approximations(tp.st.right_approximation, beta.source, bounds, "(S,T)")).inflation

    module, leg, _ = pushout(beta.realize(), alpha.realize())
    decomposition = ctx.decompose(module)
    c_plus_obj = ctx.check_obj(_obj(decomposition))
    c_plus = ObjMorphism.from_morphism(ctx, c, c_plus_obj, compose(inverse(decomposition.isomorphism()), leg))

    outside = [x for x in c_plus_obj if x not in heart.objects]
    if outside:
        raise ValidationError("Cokernel object {} has summands outside H: {}".format(
            c_plus_obj, ", ".join(str(x) for x in outside)))

    result = HeartKernel(c_plus_obj, HeartMorphism(heart, c_plus.compose(h)))
    logger.debug("Cokernel of %r is %s", f, c_plus_obj)
    if validate:
        validate_cokernel(heart, f, result.morphism.morphism)

    return result


def validate_kernel(heart, f, k):
    """Universal property of k: K -> A as a kernel of f, tested against every indecomposable of H/W

    For each D, composing with k must embed Hom(D, K)/W onto the maps D -> A killed by f.
    """
    field = heart.ctx.field
    if not heart.in_w_ideal(f.compose(k)):
        raise ValidationError("Kernel candidate does not compose to zero with {!r}".format(f))

    for d in heart.ids:
        along_k = heart.post_composition(k, d)
        along_f = heart.post_composition(f, d)
        killed = along_f.shape[1] - field.rank(along_f)
        if field.rank(along_k) != along_k.shape[1] or field.rank(along_k) != killed:
            raise ValidationError("Kernel candidate of {!r} fails the universal property at {}".format(f, d))


def validate_cokernel(heart, f, q):
    field = heart.ctx.field
    if not heart.in_w_ideal(q.compose(f)):
        raise ValidationError("Cokernel candidate does not compose to zero with {!r}".format(f))

    for c in heart.ids:
        along_q = heart.pre_composition(q, c)
        along_f = heart.pre_composition(f, c)
        killed = along_f.shape[1] - field.rank(along_f)
        if field.rank(along_q) != along_q.shape[1] or field.rank(along_q) != killed:
            raise ValidationError("Cokernel candidate of {!r} fails the universal property at {}".format(f, c))


def _obj(decomposition):
    return Obj(Interval(*i) for i in decomposition.intervals)


# Squares
def pullback_map(ctx, b, d):
    """(b, -d): B + C -> D, whose kernel is the pullback of b and d"""
    joint, _, _ = ObjMorphism.assemble(ctx, [[b, -d]], [b.source, d.source], [b.target])
    return joint


def pushout_map(ctx, b, d):
    """(b; -d): D -> B + C, whose cokernel is the pushout of b and d"""
    joint, _, _ = ObjMorphism.assemble(ctx, [[b], [-d]], [b.source], [b.target, d.target])
    return joint


def pullback_leg(ctx, kernel, b, d):
    """Component P -> B of a kernel P -> B + C of (b, -d)"""
    combined, positions = sum_positions(b.source, d.source)
    return part_projection(ctx, combined, positions[0], b.source).compose(kernel)


def pushout_leg(ctx, cokernel, b, d):
    """Component B -> Q of a cokernel B + C -> Q of (b; -d)"""
    combined, positions = sum_positions(b.target, d.target)
    return cokernel.compose(part_injection(ctx, b.target, combined, positions[0]))
