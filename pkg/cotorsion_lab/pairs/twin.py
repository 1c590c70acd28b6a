from collections import namedtuple
from logging import getLogger

from ..exception import ArgumentMismatchError
from ..manager import memoize
from ..serialcat import Obj
from ..subcat import DEFAULT_BOUNDS, Verdict, find_left_approx, find_right_approx
from .cotorsion import CotorsionPair, verify_cotorsion

logger = getLogger(__name__)


class InclusionFailure(namedtuple("InclusionFailure", "obj smaller larger")):
    """An indecomposable of ``smaller`` outside ``larger``"""

    def to_dict(self):
        return {"kind": "inclusion", "object": str(self.obj), "smaller": self.smaller.to_list(),
                "larger": self.larger.to_list()}


class TwinPair:
    """Twin cotorsion pair ((S, T), (U, V)) with core W = U ∩ T

    Membership searches for the classes B+ and B- of the pair, and of the single pairs (S, T) and
    (U, V) with cores S ∩ T and U ∩ V, are cached per indecomposable and bounds.
    """

    def __init__(self, st, uv):
        if not st.ctx.same_as(uv.ctx):
            raise ArgumentMismatchError("Twin cotorsion pair halves live in different categories")

        self.st = st
        self.uv = uv
        self.s, self.t = st.u, st.v
        self.u, self.v = uv.u, uv.v
        self.w = self.u.intersection(self.t, name="W")
        self.core_st = self.s.intersection(self.t, name="S∩T")
        self.core_uv = self.u.intersection(self.v, name="U∩V")

    @classmethod
    def from_classes(cls, s, t, u, v):
        return cls(CotorsionPair(s.renamed("S"), t.renamed("T"), "(S,T)"),
                   CotorsionPair(u.renamed("U"), v.renamed("V"), "(U,V)"))

    @property
    def ctx(self):
        return self.s.ctx

    def __repr__(self):
        return "TwinPair({}, {})".format(self.st.name, self.uv.name)

    def to_dict(self):
        return {"S": self.s.to_list(), "T": self.t.to_list(), "U": self.u.to_list(), "V": self.v.to_list(),
                "W": self.w.to_list()}

    # Memberships of the twin pair
    @memoize
    def membership_bplus(self, x, bounds=DEFAULT_BOUNDS):
        """Conflation V -> W -> x with W in the core and V in V"""
        return find_left_approx(x, self.w, self.v, bounds)

    @memoize
    def membership_bminus(self, x, bounds=DEFAULT_BOUNDS):
        """Conflation x -> W' -> S with W' in the core and S in S"""
        return find_right_approx(x, self.w, self.s, bounds)

    # Memberships of the single pairs
    @memoize
    def membership_bplus_st(self, x, bounds=DEFAULT_BOUNDS):
        return find_left_approx(x, self.core_st, self.t, bounds)

    @memoize
    def membership_bminus_st(self, x, bounds=DEFAULT_BOUNDS):
        return find_right_approx(x, self.core_st, self.s, bounds)

    @memoize
    def membership_bplus_uv(self, x, bounds=DEFAULT_BOUNDS):
        return find_left_approx(x, self.core_uv, self.v, bounds)

    @memoize
    def membership_bminus_uv(self, x, bounds=DEFAULT_BOUNDS):
        return find_right_approx(x, self.core_uv, self.u, bounds)

    def inclusion_record(self):
        """V ⊆ T and Ext^1(S, V) = 0, which every twin cotorsion pair satisfies"""
        ctx = self.ctx
        ext_pairs = [(s, v) for s in self.s for v in self.v if ctx.ext_dim(s, v)]
        return {
            "v_in_t": self.v.issubset(self.t),
            "v_outside_t": [str(x) for x in self.v.difference(self.t)],
            "ext_s_v_vanishes": not ext_pairs,
        }


def verify_twin(tp, bounds=DEFAULT_BOUNDS):
    """Verify both cotorsion pairs and S ⊆ U; Holds carries the TwinPair itself"""
    missing = tp.s.difference(tp.u)
    if missing:
        logger.info("%s violates S ⊆ U at %s", tp, missing[0])
        return Verdict.fails(InclusionFailure(Obj([missing[0]]), tp.s, tp.u), route="inclusion", bounds=bounds)

    details = {}
    unknown = False
    for key, pair in (("st", tp.st), ("uv", tp.uv)):
        verdict = verify_cotorsion(pair, bounds)
        details[key] = verdict
        if verdict.is_fails:
            return Verdict.fails(verdict.certificate, route="cotorsion {}".format(pair.name), bounds=bounds,
                                 details=details)

        unknown = unknown or verdict.is_unknown

    details["inclusions"] = tp.inclusion_record()
    details["w"] = tp.w
    notes = []
    if tp.w == tp.u and tp.w == tp.t:
        notes.append("W = U = T")

    if unknown:
        return Verdict.unknown(bounds=bounds, details=details, notes=notes)

    logger.info("%s is a twin cotorsion pair with core %s", tp, tp.w.to_list())
    return Verdict.holds(route="definition", witness=tp, bounds=bounds, details=details, notes=notes)
