"""Decision procedure for abelianness of the heart

The heart is abelian iff (1) H/W agrees with H1/(S∩T) ∩ H2/(U∩V), (2) epi.U lies in S + W and
(3) T_mono lies in V + W. Each condition is necessary on its own, and abelian categories are
integral, so a counterexample to any of them or a non-integrality certificate refutes abelianness.
"""
from logging import getLogger

from ..subcat import DEFAULT_BOUNDS, Verdict
from .certificates import NonAbelianCertificate
from .conditions import abelian_holds_route, compare_hearts, tainted_ids
from .integral import check_integral
from .triangles import epi_triangle_for, mono_triangle_for

logger = getLogger(__name__)


def _condition_one(heart, comparison):
    """Certificate for the first definite witness of condition (1), skipping unresolved memberships"""
    unresolved = tainted_ids(heart)
    for side, x in comparison.witnesses():
        if x not in unresolved:
            return NonAbelianCertificate(1, x, side)

    return None


def _condition_two(heart, bounds):
    tp = heart.tp
    allowed = tp.s.union(tp.w)
    checked = []
    for u in tp.u:
        if u in allowed:
            continue

        verdict = epi_triangle_for(heart, u, bounds)
        checked.append(verdict)
        if verdict.is_holds:
            return NonAbelianCertificate(2, verdict.witness, None), checked

    return None, checked


def _condition_three(heart, bounds):
    tp = heart.tp
    allowed = tp.v.union(tp.w)
    checked = []
    for t in tp.t:
        if t in allowed:
            continue

        verdict = mono_triangle_for(heart, t, bounds)
        checked.append(verdict)
        if verdict.is_holds:
            return NonAbelianCertificate(3, verdict.witness, None), checked

    return None, checked


def check_abelian(heart, bounds=DEFAULT_BOUNDS):
    """Abelianness of the heart; every verdict carries the sub-verdicts it was decided from"""
    comparison = compare_hearts(heart)
    details = {"condition_1": comparison}

    holds = abelian_holds_route(heart, bounds, comparison)
    if holds is not None:
        logger.info("Heart is abelian: %s", holds.route)
        holds.details.update(details)
        return holds

    failures = []
    if not comparison.holds:
        certificate = _condition_one(heart, comparison)
        if certificate is not None:
            failures.append((1, certificate))

    for number, condition in ((2, _condition_two), (3, _condition_three)):
        certificate, checked = condition(heart, bounds)
        details["condition_{}".format(number)] = {
            "checked": len(checked),
            "exhaustive": all(v.exhaustive for v in checked),
            "counterexample": None if certificate is None else str(certificate.witness.end_term),
        }
        if certificate is not None:
            failures.append((number, certificate))

    if failures:
        number, certificate = failures[0]
        logger.info("Heart is not abelian: condition %d fails at %s", number, certificate.witness)
        return Verdict.fails(certificate, route="condition {}".format(number), bounds=bounds, details=details)

    integral = check_integral(heart, bounds)
    details["integral"] = integral
    if integral.is_fails:
        logger.info("Heart is not integral, hence not abelian")
        return Verdict.fails(NonAbelianCertificate("integral", integral.certificate, None), route="not integral",
                             bounds=bounds, details=details)

    notes = []
    if heart.classes.tainted:
        notes.append("heart memberships unresolved within bounds")

    return Verdict.unknown(bounds=bounds, details=details, notes=notes)
