"""Certificates backing Fails verdicts of the heart checks, and their replay

Every certificate stores its conflations and morphisms as canonical-coordinate matrices. Replay
validates those matrices again: exactness, class memberships and, for bad squares, the universal
property of the stored kernel or cokernel. Class membership of H itself is read off a recomputed
membership table, which is deterministic for fixed bounds.
"""
from collections import namedtuple
from logging import getLogger

from ..exception import CotorsionLabException, ReplayMismatch, ValidationError
from ..serialcat import Conflation, Obj, ObjMorphism, parse_interval, parse_obj
from ..subcat import SearchBounds, find_left_approx, find_right_approx, star_member
from ..pairs import compute_hearts
from .epimono import is_epi_in_heart, is_mono_in_heart
from .heart import Heart
from .kernels import (pullback_leg, pullback_map, pushout_leg, pushout_map, validate_cokernel,
                      validate_kernel)
from .triangles import EPI, MONO, EpiTriangle

logger = getLogger(__name__)


MAIN = "main"
DUAL = "dual"


def _witnesses_to_dict(witnesses):
    return {str(x): conflation.to_dict() for x, conflation in sorted(witnesses.items())}


def _witnesses_from_dict(ctx, data):
    return {parse_interval(x): Conflation.from_dict(ctx, conflation) for x, conflation in data.items()}


def validate_bminus_witness(tp, x, conflation):
    """x -> W' -> S' with W' in W and S' in S"""
    conflation.validate()
    if conflation.first != Obj([x]) or not tp.w.contains_obj(conflation.middle) \
            or not tp.s.contains_obj(conflation.third):
        raise ValidationError("{} is not a B- witness of {}".format(conflation, x))


def validate_bplus_witness(tp, x, conflation):
    """V' -> W' -> x with V' in V and W' in W"""
    conflation.validate()
    if conflation.third != Obj([x]) or not tp.w.contains_obj(conflation.middle) \
            or not tp.v.contains_obj(conflation.first):
        raise ValidationError("{} is not a B+ witness of {}".format(conflation, x))


class NonIntegralCertificate(namedtuple("NonIntegralCertificate",
                                        "variant z conflation triangles memberships offending")):
    """Object Z outside the class the integrality criterion confines it to

    ``main``: Z in B-, a conflation T0 -> Z -> U0 with T0 in T and one epi conflation per summand of
    U0, and a summand of Z outside U. ``dual``: Z in B+, a conflation T0 -> Z -> U0 with U0 in U and
    one mono conflation per summand of T0, and a summand of Z outside T.
    """

    def validate(self, heart):
        tp = heart.tp
        conflation = self.conflation.validate()
        if conflation.middle != self.z:
            raise ValidationError("Conflation middle {} is not Z = {}".format(conflation.middle, self.z))

        if self.offending not in self.z.distinct():
            raise ValidationError("{} is not a summand of {}".format(self.offending, self.z))

        if self.variant == MAIN:
            certified, variant, validate_witness = conflation.third, EPI, validate_bminus_witness
            if not tp.t.contains_obj(conflation.first):
                raise ValidationError("{} is not in T".format(conflation.first))

            if self.offending in tp.u:
                raise ValidationError("{} lies in U".format(self.offending))

        elif self.variant == DUAL:
            certified, variant, validate_witness = conflation.first, MONO, validate_bplus_witness
            if not tp.u.contains_obj(conflation.third):
                raise ValidationError("{} is not in U".format(conflation.third))

            if self.offending in tp.t:
                raise ValidationError("{} lies in T".format(self.offending))

        else:
            raise ValidationError("Unknown certificate variant {!r}".format(self.variant))

        end_terms = Obj(x for triangle in self.triangles for x in triangle.end_term)
        if end_terms != certified:
            raise ValidationError("Triangles certify {}, conflation needs {}".format(end_terms, certified))

        for triangle in self.triangles:
            if triangle.variant != variant or len(triangle.end_term) != 1:
                raise ValidationError("{} does not certify a single summand".format(triangle))

            triangle.validate(heart)

        if set(self.memberships) != set(self.z.distinct()):
            raise ValidationError("Membership witnesses do not cover the summands of {}".format(self.z))

        for x, witness in self.memberships.items():
            validate_witness(tp, x, witness)

        return self

    def to_dict(self):
        return {
            "kind": "non_integral",
            "variant": self.variant,
            "z": str(self.z),
            "conflation": self.conflation.to_dict(),
            "triangles": [t.to_dict() for t in self.triangles],
            "memberships": _witnesses_to_dict(self.memberships),
            "offending": str(self.offending),
        }

    @classmethod
    def from_dict(cls, ctx, data):
        return cls(data["variant"], ctx.check_obj(parse_obj(data["z"])), Conflation.from_dict(ctx, data["conflation"]),
                   [EpiTriangle.from_dict(ctx, t) for t in data["triangles"]],
                   _witnesses_from_dict(ctx, data["memberships"]), ctx.check(parse_interval(data["offending"])))


class BadSquare(namedtuple("BadSquare", "side b d kernel leg")):
    """A square of the heart breaking left or right integrality

    ``left``: d: C -> D is epic, b: B -> D arbitrary, ``kernel``: P -> B + C is the kernel of (b, -d) and
    its B component ``leg`` is not epic. ``right``: d: D -> C is monic, b: D -> B arbitrary,
    ``kernel``: B + C -> Q is the cokernel of (b; -d) and its B component ``leg`` is not monic.
    """

    def validate(self, heart):
        if self.side == "left":
            if not is_epi_in_heart(heart, self.d):
                raise ValidationError("{!r} is not epic".format(self.d))

            joint = pullback_map(heart.ctx, self.b, self.d)
            validate_kernel(heart, joint, self.kernel)
            leg = pullback_leg(heart.ctx, self.kernel, self.b, self.d)
            if leg != self.leg or is_epi_in_heart(heart, leg):
                raise ValidationError("Pullback leg {!r} does not witness the square".format(self.leg))

        elif self.side == "right":
            if not is_mono_in_heart(heart, self.d):
                raise ValidationError("{!r} is not monic".format(self.d))

            joint = pushout_map(heart.ctx, self.b, self.d)
            validate_cokernel(heart, joint, self.kernel)
            leg = pushout_leg(heart.ctx, self.kernel, self.b, self.d)
            if leg != self.leg or is_mono_in_heart(heart, leg):
                raise ValidationError("Pushout leg {!r} does not witness the square".format(self.leg))

        else:
            raise ValidationError("Unknown square side {!r}".format(self.side))

        return self

    def to_dict(self):
        return {"kind": "bad_square", "side": self.side, "b": self.b.to_dict(), "d": self.d.to_dict(),
                "kernel": self.kernel.to_dict(), "leg": self.leg.to_dict()}

    @classmethod
    def from_dict(cls, ctx, data):
        return cls(data["side"], *(ObjMorphism.from_dict(ctx, data[key]) for key in ("b", "d", "kernel", "leg")))


class NonAbelianCertificate(namedtuple("NonAbelianCertificate", "condition witness side")):
    """A necessary condition for an abelian heart that fails

    Condition ``1``: ``witness`` is an indecomposable in one heart modulo the core and not in the other;
    ``side`` names the comparison (outside_st_heart, outside_uv_heart or extra). Condition ``2``: an epi
    conflation whose third term lies outside S + W. Condition ``3``: a mono conflation whose first term
    lies outside V + W. Condition ``integral``: a NonIntegralCertificate or BadSquare, since abelian
    categories are integral.
    """

    def validate(self, heart):
        tp = heart.tp
        if self.condition == 1:
            classes = heart.classes
            heart_ids = set(classes.heart_ids())
            both = set(classes.h1.intersection(classes.h2).difference(tp.w))
            found = {
                "outside_st_heart": self.witness in heart_ids and self.witness not in classes.h1,
                "outside_uv_heart": self.witness in heart_ids and self.witness not in classes.h2,
                "extra": self.witness in both and self.witness not in heart_ids,
            }
            if not found.get(self.side, False):
                raise ValidationError("{} does not separate the hearts ({})".format(self.witness, self.side))

        elif self.condition in (2, 3):
            triangle = self.witness.validate(heart)
            outside = tp.s.union(tp.w) if self.condition == 2 else tp.v.union(tp.w)
            expected = EPI if self.condition == 2 else MONO
            if triangle.variant != expected or outside.contains_obj(triangle.end_term):
                raise ValidationError("{} does not break condition {}".format(triangle, self.condition))

        elif self.condition == "integral":
            self.witness.validate(heart)

        else:
            raise ValidationError("Unknown abelian condition {!r}".format(self.condition))

        return self

    def to_dict(self):
        if self.condition == 1:
            witness = str(self.witness)

        else:
            witness = self.witness.to_dict()

        return {"kind": "non_abelian", "condition": self.condition, "side": self.side, "witness": witness}

    @classmethod
    def from_dict(cls, ctx, data):
        condition = data["condition"]
        if condition == 1:
            witness = ctx.check(parse_interval(data["witness"]))

        elif condition in (2, 3):
            witness = EpiTriangle.from_dict(ctx, data["witness"])

        else:
            witness = certificate_from_dict(ctx, data["witness"])

        return cls(condition, witness, data.get("side"))


def certificate_from_dict(ctx, data):
    kind = data.get("kind")
    if kind == "non_integral":
        return NonIntegralCertificate.from_dict(ctx, data)

    if kind == "bad_square":
        return BadSquare.from_dict(ctx, data)

    if kind == "non_abelian":
        return NonAbelianCertificate.from_dict(ctx, data)

    raise ValidationError("Unknown heart certificate kind {!r}".format(kind))


def _replay_pair_certificate(tp, data, bounds):
    """Replay certificates of the twin verification and of the subcategory searches"""
    ctx = tp.ctx
    kind = data["kind"]
    if kind == "orthogonality":
        left, right = ctx.check(parse_interval(data["left"])), ctx.check(parse_interval(data["right"]))
        conflation = Conflation.from_dict(ctx, data["conflation"]).validate()
        if conflation.first != Obj([right]) or conflation.third != Obj([left]):
            raise ValidationError("Conflation does not run from {} to {}".format(right, left))

        if conflation.middle == Obj([left, right]):
            raise ValidationError("Conflation {} splits".format(conflation))

        if not ((left in tp.s and right in tp.t) or (left in tp.u and right in tp.v)):
            raise ValidationError("Ext^1({}, {}) does not meet a cotorsion pair".format(left, right))

    elif kind == "inclusion":
        x = ctx.check(parse_interval(data["object"]))
        if x not in tp.s or x in tp.u:
            raise ValidationError("{} does not violate S ⊆ U".format(x))

    elif kind == "missing_approximation":
        x = ctx.check(parse_interval(data["object"]))
        pair = _pair_with_classes(tp, data["classes"])
        search = find_left_approx if data["side"] == "left" else find_right_approx
        classes = (pair.u, pair.v) if data["side"] == "left" else (pair.v, pair.u)
        verdict = search(x, classes[0], classes[1], bounds)
        if not (verdict.is_unknown and verdict.exhaustive):
            raise ValidationError("{} has a {} approximation".format(x, data["side"]))

    elif kind == "star_non_membership":
        left = _class_with_ids(tp, data["left"])
        right = _class_with_ids(tp, data["right"])
        if not star_member(ctx.check_obj(parse_obj(data["object"])), left, right, bounds).is_fails:
            raise ValidationError("{} lies in {} * {}".format(data["object"], left, right))

    else:
        return False

    return True


def _class_with_ids(tp, ids):
    for candidate in (tp.s, tp.t, tp.u, tp.v, tp.w, tp.core_st, tp.core_uv):
        if candidate.to_list() == list(ids):
            return candidate

    raise ValidationError("Certificate names a class outside the twin pair: {}".format(ids))


def _pair_with_classes(tp, classes):
    for pair in (tp.st, tp.uv):
        if [c.to_list() for c in (pair.u, pair.v)] in (list(classes), list(reversed(classes))):
            return pair

    raise ValidationError("Certificate names a cotorsion pair outside the twin pair")


def replay_certificate(tp, data, bounds=None, heart=None):
    """Revalidate a stored certificate against the twin pair; ReplayMismatch if it does not hold up"""
    bounds = SearchBounds(**data.get("bounds", {})) if bounds is None else bounds
    try:
        if _replay_pair_certificate(tp, data, bounds):
            logger.info("Replayed %s certificate", data["kind"])
            return True

        if heart is None:
            heart = Heart(compute_hearts(tp, bounds))

        certificate_from_dict(tp.ctx, data).validate(heart)

    except (CotorsionLabException, KeyError, ValueError) as err:
        raise ReplayMismatch("Certificate does not replay: {}".format(err)) from err

    logger.info("Replayed %s certificate", data["kind"])
    return True
