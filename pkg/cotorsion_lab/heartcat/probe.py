"""Direct search for squares that break integrality

Left integral: the pullback of an epimorphism along any morphism is an epimorphism. Right integral:
the pushout of a monomorphism along any morphism is a monomorphism. Objects range over sums of heart
indecomposables within the bounds and morphisms over one representative per coset modulo W, so the
search can refute integrality but never establish it.
"""
from logging import getLogger

from ..exception import ApproximationUnavailable
from ..subcat import DEFAULT_BOUNDS, Verdict, enumerate_objs
from .certificates import BadSquare
from .epimono import is_epi_in_heart, is_mono_in_heart
from .kernels import (cokernel_in_heart, kernel_in_heart, pullback_leg, pullback_map, pushout_leg,
                      pushout_map)

logger = getLogger(__name__)


def heart_objects(heart, bounds):
    return enumerate_objs(heart.ids, mult=bounds.mult, terms=bounds.terms, dim_cap=bounds.dim_cap)


def _nonzero_representatives(heart, a, b):
    for f in heart.quotient_representatives(a, b):
        if not heart.in_w_ideal(f):
            yield f


def _left_squares(heart, objs):
    """(b, d) with d: C -> D epic and b: B -> D nonzero"""
    for target in objs:
        for middle in objs:
            for d in heart.quotient_representatives(middle, target):
                if not is_epi_in_heart(heart, d):
                    continue

                for source in objs:
                    for b in _nonzero_representatives(heart, source, target):
                        yield b, d


def _right_squares(heart, objs):
    """(b, d) with d: D -> C monic and b: D -> B nonzero"""
    for source in objs:
        for middle in objs:
            for d in heart.quotient_representatives(source, middle):
                if not is_mono_in_heart(heart, d):
                    continue

                for target in objs:
                    for b in _nonzero_representatives(heart, source, target):
                        yield b, d


def _left_square_verdict(heart, b, d, bounds):
    kernel = kernel_in_heart(heart, pullback_map(heart.ctx, b, d), bounds, validate=False)
    leg = pullback_leg(heart.ctx, kernel.morphism.morphism, b, d)
    if is_epi_in_heart(heart, leg):
        return None

    return BadSquare("left", b, d, kernel.morphism.morphism, leg)


def _right_square_verdict(heart, b, d, bounds):
    cokernel = cokernel_in_heart(heart, pushout_map(heart.ctx, b, d), bounds, validate=False)
    leg = pushout_leg(heart.ctx, cokernel.morphism.morphism, b, d)
    if is_mono_in_heart(heart, leg):
        return None

    return BadSquare("right", b, d, cokernel.morphism.morphism, leg)


def _probe(heart, bounds, squares, test, route):
    objs, truncated = heart_objects(heart, bounds)
    checked = unresolved = 0
    for b, d in squares(heart, objs):
        try:
            square = test(heart, b, d, bounds)

        except ApproximationUnavailable as err:
            logger.debug("Skipping square: %s", err)
            unresolved += 1
            continue

        checked += 1
        if square is not None:
            square.validate(heart)
            logger.info("%s finds a bad square after %d squares", route, checked)
            return Verdict.fails(square, route=route, bounds=bounds, details={"squares": checked})

    logger.info("%s checked %d squares over %d objects without a counterexample", route, checked, len(objs))
    notes = []
    if heart.classes.tainted:
        notes.append("heart memberships unresolved within bounds")

    if unresolved:
        notes.append("{} squares lacked approximations".format(unresolved))

    return Verdict.unknown(bounds=bounds, details={"squares": checked, "objects": len(objs), "truncated": truncated},
                           notes=notes)


def probe_integral_direct(heart, bounds=DEFAULT_BOUNDS):
    """Search pullbacks of heart epimorphisms whose leg is not epic"""
    return _probe(heart, bounds, _left_squares, _left_square_verdict, "pullback probe")


def probe_right_integral(heart, bounds=DEFAULT_BOUNDS):
    """Search pushouts of heart monomorphisms whose leg is not monic"""
    return _probe(heart, bounds, _right_squares, _right_square_verdict, "pushout probe")
