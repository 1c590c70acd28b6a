from collections import namedtuple
from logging import getLogger

from ..exception import ArgumentMismatchError
from ..serialcat import Conflation, Obj
from ..subcat import DEFAULT_BOUNDS, Verdict, find_left_approx, find_right_approx

logger = getLogger(__name__)


class OrthogonalityFailure(namedtuple("OrthogonalityFailure", "left right conflation")):
    """A non-split conflation right -> E -> left with left in the first class and right in the second"""

    def to_dict(self):
        return {"kind": "orthogonality", "left": str(self.left), "right": str(self.right),
                "conflation": self.conflation.to_dict()}


class MissingApproximation(namedtuple("MissingApproximation", "obj side classes")):
    """No approximation conflation of obj exists; the complete normal form search found none"""

    def to_dict(self):
        return {"kind": "missing_approximation", "object": str(self.obj), "side": self.side,
                "classes": [c.to_list() for c in self.classes]}


class ApproximationRecord(namedtuple("ApproximationRecord", "left right")):

    def to_dict(self):
        return {side: {str(x): str(conflation) for x, conflation in sorted(record.items())}
                for side, record in zip(self._fields, self)}


def orthogonality_failure(u, v):
    """First pair (x, y) in canonical order with Ext^1(x, y) nonzero, as a certificate, else None"""
    ctx = u.ctx
    for x in u:
        for y in v:
            if ctx.ext_dim(x, y):
                inflation, deflation = ctx.nonsplit_extension(x, y)
                return OrthogonalityFailure(x, y, Conflation(inflation, deflation))

    return None


class CotorsionPair:
    """Candidate cotorsion pair (U, V) of subcategories

    Approximations of B are conflations V_B -> U_B -> B and B -> V^B -> U^B.
    """

    def __init__(self, u, v, name=None):
        if not u.ctx.same_as(v.ctx):
            raise ArgumentMismatchError("Cotorsion pair classes live in different categories")

        self.u = u
        self.v = v
        self.name = name or "({},{})".format(u, v)

    @property
    def ctx(self):
        return self.u.ctx

    def __repr__(self):
        return "CotorsionPair{}".format(self.name)

    def left_approximation(self, x, bounds=DEFAULT_BOUNDS):
        return find_left_approx(x, self.u, self.v, bounds)

    def right_approximation(self, x, bounds=DEFAULT_BOUNDS):
        return find_right_approx(x, self.v, self.u, bounds)

    def verify(self, bounds=DEFAULT_BOUNDS):
        return verify_cotorsion(self, bounds)


def verify_cotorsion(pair, bounds=DEFAULT_BOUNDS):
    """Check Ext-orthogonality and witness both approximations of every indecomposable

    Holds carries an ApproximationRecord, Fails an OrthogonalityFailure or MissingApproximation.
    """
    failure = orthogonality_failure(pair.u, pair.v)
    if failure is not None:
        logger.info("%s is not Ext-orthogonal: Ext^1(%s, %s) != 0", pair, failure.left, failure.right)
        return Verdict.fails(failure, route="orthogonality", bounds=bounds)

    left, right = {}, {}
    unwitnessed = []
    for x in pair.ctx.indecomposables:
        for side, search, record in (("left", pair.left_approximation, left),
                                     ("right", pair.right_approximation, right)):
            verdict = search(x, bounds)
            if verdict.is_holds:
                record[x] = verdict.witness
                continue

            if verdict.exhaustive:
                classes = (pair.u, pair.v) if side == "left" else (pair.v, pair.u)
                logger.info("%s has no %s approximation of %s", pair, side, x)
                return Verdict.fails(MissingApproximation(Obj([x]), side, classes), route="approximation",
                                     bounds=bounds)

            unwitnessed.append((x, side))

    if unwitnessed:
        return Verdict.unknown(bounds=bounds, details={"unwitnessed": ["{} ({})".format(x, side)
                                                                       for x, side in unwitnessed]})

    logger.info("%s is a cotorsion pair", pair)
    return Verdict.holds(route="approximations", witness=ApproximationRecord(left, right), bounds=bounds)
