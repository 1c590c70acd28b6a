"""Decision ladder for integrality of the heart

The heart is integral exactly when every object of B- admitting a conflation T0 -> Z -> U0 with T0
in T and U0 in epi.U lies in U; equivalently when every object of B+ admitting a conflation with
first term in T_mono and third term in U lies in T. A counterexample to either is a certificate of
non-integrality. Since S + W and V + W lie in S*T and U*V, epi.U inside S + W or T_mono inside V + W
already settles integrality.
"""
from logging import getLogger

from ..repcore import SES, subquotients
from ..serialcat import Conflation
from ..subcat import DEFAULT_BOUNDS, Verdict, enumerate_objs, subcat_in_star
from .certificates import DUAL, MAIN, NonIntegralCertificate
from .conditions import abelian_holds_route, epi_part_contained, mono_part_contained
from .triangles import epi_triangle_for, mono_triangle_for

logger = getLogger(__name__)


class _TriangleCache:
    """Per-indecomposable epi and mono conflation lookups for one check"""

    def __init__(self, heart, bounds):
        self.heart = heart
        self.bounds = bounds
        self._epi = {}
        self._mono = {}

    def epi(self, u):
        if u not in self._epi:
            self._epi[u] = epi_triangle_for(self.heart, u, self.bounds)

        return self._epi[u]

    def mono(self, t):
        if t not in self._mono:
            self._mono[t] = mono_triangle_for(self.heart, t, self.bounds)

        return self._mono[t]

    def epi_witnesses(self, obj):
        """Epi conflations for every summand of obj, or None if one is missing"""
        verdicts = [self.epi(x) for x in obj]
        if all(v.is_holds for v in verdicts):
            return [v.witness for v in verdicts]

        return None

    def mono_witnesses(self, obj):
        verdicts = [self.mono(x) for x in obj]
        if all(v.is_holds for v in verdicts):
            return [v.witness for v in verdicts]

        return None


def _candidates(ids, outside, bounds):
    objs, truncated = enumerate_objs(ids, mult=bounds.mult, terms=bounds.terms, dim_cap=bounds.dim_cap)
    return [z for z in objs if any(x not in outside for x in z)], truncated


def find_main_certificate(heart, bounds=DEFAULT_BOUNDS, cache=None):
    """First Z in B- outside U, by dimension then lexicographically, with T0 -> Z -> U0 and U0 in epi.U"""
    ctx = heart.ctx
    tp = heart.tp
    classes = heart.classes
    cache = cache or _TriangleCache(heart, bounds)
    candidates, truncated = _candidates(classes.bminus.ids, tp.u, bounds)
    for z in candidates:
        for sub, inclusion, rest, projection in subquotients(ctx.realize(z), bounds.dim_cap):
            if not tp.t.contains_obj(ctx.classify(sub)):
                continue

            third = ctx.classify(rest)
            if not tp.u.contains_obj(third) or cache.epi_witnesses(third) is None:
                continue

            conflation = Conflation.from_ses(ctx, z, SES(inclusion, projection))
            triangles = cache.epi_witnesses(conflation.third)
            memberships = {x: classes.bminus_witness(x) for x in z.distinct()}
            offending = next(x for x in z if x not in tp.u)
            certificate = NonIntegralCertificate(MAIN, z, conflation, triangles, memberships, offending)
            logger.info("Non-integral certificate: %s in B- outside U via %s", z, conflation)
            return certificate.validate(heart), truncated

    return None, truncated


def find_dual_certificate(heart, bounds=DEFAULT_BOUNDS, cache=None):
    """First Z in B+ outside T with T0 -> Z -> U0, T0 in T_mono and U0 in U"""
    ctx = heart.ctx
    tp = heart.tp
    classes = heart.classes
    cache = cache or _TriangleCache(heart, bounds)
    candidates, truncated = _candidates(classes.bplus.ids, tp.t, bounds)
    for z in candidates:
        for sub, inclusion, rest, projection in subquotients(ctx.realize(z), bounds.dim_cap):
            if not tp.u.contains_obj(ctx.classify(rest)):
                continue

            first = ctx.classify(sub)
            if not tp.t.contains_obj(first) or cache.mono_witnesses(first) is None:
                continue

            conflation = Conflation.from_ses(ctx, z, SES(inclusion, projection))
            triangles = cache.mono_witnesses(conflation.first)
            memberships = {x: classes.bplus_witness(x) for x in z.distinct()}
            offending = next(x for x in z if x not in tp.t)
            certificate = NonIntegralCertificate(DUAL, z, conflation, triangles, memberships, offending)
            logger.info("Non-integral certificate: %s in B+ outside T via %s", z, conflation)
            return certificate.validate(heart), truncated

    return None, truncated


def containment_route(heart, bounds=DEFAULT_BOUNDS):
    """Holds when every indecomposable of U lies in S or W, or every indecomposable of T in V or W"""
    if epi_part_contained(heart):
        return Verdict.holds(route="epi.U inside S + W", bounds=bounds)

    if mono_part_contained(heart):
        return Verdict.holds(route="T_mono inside V + W", bounds=bounds)

    return None


def check_integral(heart, bounds=DEFAULT_BOUNDS):
    """Integrality of the heart: zero heart, star inclusions, containment, abelian routes, then certificates"""
    tp = heart.tp
    if heart.is_zero and not heart.classes.tainted:
        logger.info("Heart is zero, hence integral")
        return Verdict.holds(route="zero heart", bounds=bounds)

    details = {}
    for route, (a, x, y) in (("U in S*T", (tp.u, tp.s, tp.t)), ("T in U*V", (tp.t, tp.u, tp.v))):
        verdict = subcat_in_star(a, x, y, bounds)
        details[route] = verdict
        if verdict.is_holds:
            logger.info("Heart is integral: %s", route)
            return Verdict.holds(route=route, witness=verdict.witness, bounds=bounds, details=details)

    contained = containment_route(heart, bounds)
    if contained is not None:
        logger.info("Heart is integral: %s", contained.route)
        return Verdict.holds(route=contained.route, bounds=bounds, details=details)

    abelian = abelian_holds_route(heart, bounds)
    if abelian is not None:
        logger.info("Heart is abelian (%s), hence integral", abelian.route)
        details["abelian"] = abelian
        return Verdict.holds(route="abelian: {}".format(abelian.route), bounds=bounds, details=details)

    cache = _TriangleCache(heart, bounds)
    for find in (find_main_certificate, find_dual_certificate):
        certificate, _ = find(heart, bounds, cache)
        if certificate is not None:
            return Verdict.fails(certificate, route="{} certificate".format(certificate.variant), bounds=bounds,
                                 details={"z": certificate.z})

    notes = []
    if heart.classes.tainted:
        notes.append("heart memberships unresolved within bounds")

    logger.info("No certificate of non-integrality within %s", bounds)
    return Verdict.unknown(bounds=bounds, details=details, notes=notes)
