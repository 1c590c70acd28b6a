"""Epi and mono conflations of the heart

An epi conflation A -> B -> U has A, B in H, U in U and a W-monic first map; its third terms make up
epi.U. A mono conflation T -> A -> B has A, B in H, T in T and a W-epic second map; its first terms
make up T_mono. Enumeration is in normal form (see subcat.search), which covers every conflation
with an indecomposable end term up to isomorphism.
"""
from collections import namedtuple
from logging import getLogger

from ..exception import ValidationError
from ..serialcat import Conflation, Obj
from ..subcat import (DEFAULT_BOUNDS, Verdict, canonical_deflation, canonical_inflation, cokernel_conflation,
                      kernel_conflation)
from ..subcat.search import left_candidates, right_candidates
from ..repcore import cokernel, kernel

logger = getLogger(__name__)


EPI = "epi"
MONO = "mono"


class EpiTriangle(namedtuple("EpiTriangle", "conflation variant")):
    """Epi conflation A -> B -> U, or with variant ``mono`` a mono conflation T -> A -> B"""

    @property
    def end_term(self):
        """The term certified: the third term of an epi conflation, the first of a mono one"""
        if self.variant == EPI:
            return self.conflation.third

        return self.conflation.first

    def validate(self, heart):
        conflation = self.conflation.validate()
        u, t = heart.tp.u, heart.tp.t
        if self.variant == EPI:
            in_heart = (conflation.first, conflation.middle)
            if not u.contains_obj(conflation.third):
                raise ValidationError("Third term {} of an epi conflation is not in U".format(conflation.third))

            if not heart.is_w_monic(conflation.inflation):
                raise ValidationError("First map of {} is not W-monic".format(conflation))

        elif self.variant == MONO:
            in_heart = (conflation.middle, conflation.third)
            if not t.contains_obj(conflation.first):
                raise ValidationError("First term {} of a mono conflation is not in T".format(conflation.first))

            if not heart.is_w_epic(conflation.deflation):
                raise ValidationError("Second map of {} is not W-epic".format(conflation))

        else:
            raise ValidationError("Unknown conflation variant {!r}".format(self.variant))

        for obj in in_heart:
            if not heart.objects.contains_obj(obj):
                raise ValidationError("{} of {} is not in H".format(obj, conflation))

        return self

    def __str__(self):
        return "{} conflation {}".format(self.variant, self.conflation)

    def to_dict(self):
        return {"variant": self.variant, "conflation": self.conflation.to_dict()}

    @classmethod
    def from_dict(cls, ctx, data):
        return cls(Conflation.from_dict(ctx, data["conflation"]), data["variant"])


def _epi_triangles_onto(heart, u, bounds):
    ctx = heart.ctx
    candidates, truncated = left_candidates(ctx, u, heart.objects, bounds.dim_cap)
    triangles = []
    for middle in candidates:
        deflation = canonical_deflation(ctx, middle, u)
        module, _ = kernel(deflation.realize())
        if not heart.objects.contains_obj(ctx.classify(module)):
            continue

        conflation = kernel_conflation(ctx, deflation)
        if heart.is_w_monic(conflation.inflation):
            triangles.append(EpiTriangle(conflation, EPI))

    return triangles, truncated


def _mono_triangles_from(heart, t, bounds):
    ctx = heart.ctx
    candidates, truncated = right_candidates(ctx, t, heart.objects, bounds.dim_cap)
    triangles = []
    for middle in candidates:
        inflation = canonical_inflation(ctx, t, middle)
        module, _ = cokernel(inflation.realize())
        if not heart.objects.contains_obj(ctx.classify(module)):
            continue

        conflation = cokernel_conflation(ctx, inflation)
        if heart.is_w_epic(conflation.deflation):
            triangles.append(EpiTriangle(conflation, MONO))

    return triangles, truncated


def enum_epi_triangles(heart, bounds=DEFAULT_BOUNDS):
    """Epi conflations: the trivial ones h -> h -> 0 first, then one batch per indecomposable of U"""
    for x in sorted(heart.objects.ids):
        yield EpiTriangle(Conflation.trivial_right(heart.ctx, Obj([x])), EPI)

    for u in heart.tp.u:
        triangles, _ = _epi_triangles_onto(heart, u, bounds)
        yield from triangles


def enum_mono_triangles(heart, bounds=DEFAULT_BOUNDS):
    for x in sorted(heart.objects.ids):
        yield EpiTriangle(Conflation.trivial_left(heart.ctx, Obj([x])), MONO)

    for t in heart.tp.t:
        triangles, _ = _mono_triangles_from(heart, t, bounds)
        yield from triangles


def epi_triangle_for(heart, u, bounds=DEFAULT_BOUNDS):
    """Decide whether the indecomposable u lies in epi.U; Holds carries the first epi conflation onto u"""
    u = heart.ctx.check(u)
    if u not in heart.tp.u:
        return Verdict.unknown(bounds=bounds, exhaustive=True, details={"object": u})

    triangles, truncated = _epi_triangles_onto(heart, u, bounds)
    if triangles:
        logger.debug("%s lies in epi.U via %s", u, triangles[0])
        return Verdict.holds(route="normal form", witness=triangles[0], bounds=bounds)

    return Verdict.unknown(bounds=bounds, exhaustive=not truncated, details={"object": u})


def mono_triangle_for(heart, t, bounds=DEFAULT_BOUNDS):
    t = heart.ctx.check(t)
    if t not in heart.tp.t:
        return Verdict.unknown(bounds=bounds, exhaustive=True, details={"object": t})

    triangles, truncated = _mono_triangles_from(heart, t, bounds)
    if triangles:
        logger.debug("%s lies in T_mono via %s", t, triangles[0])
        return Verdict.holds(route="normal form", witness=triangles[0], bounds=bounds)

    return Verdict.unknown(bounds=bounds, exhaustive=not truncated, details={"object": t})
