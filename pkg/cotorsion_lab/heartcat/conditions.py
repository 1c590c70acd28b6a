"""Conditions on the heart shared by the integral and abelian checks"""
from collections import namedtuple
from logging import getLogger

from ..serialcat import Obj
from ..subcat import Verdict

logger = getLogger(__name__)


class HeartComparison(namedtuple("HeartComparison", "outside_st_heart outside_uv_heart extra")):
    """How H/W differs from H1/(S∩T) ∩ H2/(U∩V), compared on indecomposables outside the cores"""

    @property
    def holds(self):
        return not (self.outside_st_heart or self.outside_uv_heart or self.extra)

    def witnesses(self):
        for side, ids in zip(self._fields, self):
            for x in ids:
                yield side, x

    def to_dict(self):
        return {side: [str(x) for x in ids] for side, ids in zip(self._fields, self)}


def compare_hearts(heart):
    classes = heart.classes
    heart_ids = set(heart.ids)
    both = set(classes.h1.intersection(classes.h2).difference(heart.w))
    return HeartComparison(sorted(x for x in heart_ids if x not in classes.h1),
                           sorted(x for x in heart_ids if x not in classes.h2),
                           sorted(both - heart_ids))


def tainted_ids(heart):
    return {x for _, x in heart.classes.taint}


def is_semisimple(heart, comparison=None):
    """A single indecomposable whose endomorphisms modulo W form the ground field"""
    comparison = comparison or compare_hearts(heart)
    if len(heart.ids) != 1 or not comparison.holds:
        return False

    obj = Obj([heart.ids[0]])
    return heart.quotient_hom_dim(obj, obj) == 1


def epi_part_contained(heart):
    """Ind(U) ⊆ Ind(S) ∪ Ind(W), so every object of epi.U lies in S + W"""
    tp = heart.tp
    return tp.u.issubset(tp.s.union(tp.w))


def mono_part_contained(heart):
    tp = heart.tp
    return tp.t.issubset(tp.v.union(tp.w))


def abelian_holds_route(heart, bounds, comparison=None):
    """A definitive Holds for abelianness that needs no integrality check, else None"""
    if heart.classes.tainted:
        return None

    if heart.is_zero:
        return Verdict.holds(route="zero heart", bounds=bounds)

    comparison = comparison or compare_hearts(heart)
    details = {"condition_1": comparison}
    if is_semisimple(heart, comparison):
        logger.info("Heart is generated by %s with a field of endomorphisms", heart.ids[0])
        return Verdict.holds(route="semisimple", witness=heart.ids[0], bounds=bounds, details=details)

    if not comparison.holds:
        return None

    if not comparison.outside_st_heart and epi_part_contained(heart):
        return Verdict.holds(route="heart inside H1 and epi.U inside S + W", bounds=bounds, details=details)

    if not comparison.outside_uv_heart and mono_part_contained(heart):
        return Verdict.holds(route="heart inside H2 and T_mono inside V + W", bounds=bounds, details=details)

    return None
