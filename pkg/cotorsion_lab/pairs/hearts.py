from logging import getLogger

from ..subcat import DEFAULT_BOUNDS, Subcategory

logger = getLogger(__name__)


def membership_bplus(x, tp, bounds=DEFAULT_BOUNDS):
    return tp.membership_bplus(x, bounds)


def membership_bminus(x, tp, bounds=DEFAULT_BOUNDS):
    return tp.membership_bminus(x, bounds)


_membership_methods = {
    "bplus": "membership_bplus",
    "bminus": "membership_bminus",
    "bplus_st": "membership_bplus_st",
    "bminus_st": "membership_bminus_st",
    "bplus_uv": "membership_bplus_uv",
    "bminus_uv": "membership_bminus_uv",
}


class HeartClasses:
    """Indecomposable-level membership tables for B+, B-, H and the single-pair hearts H1, H2

    An object belongs to one of these classes when each of its summands does. Memberships whose search
    stopped at a bound are listed in ``taint``; they are counted as non-members.
    """

    def __init__(self, tp, bounds, verdicts):
        self.tp = tp
        self.bounds = bounds
        self.verdicts = verdicts

        ctx = tp.ctx
        members = {name: Subcategory(ctx, [x for x, v in table.items() if v.is_holds], name)
                   for name, table in verdicts.items()}
        self.bplus = members["bplus"]
        self.bminus = members["bminus"]
        self.h = self.bplus.intersection(self.bminus, name="H")
        self.h1 = members["bplus_st"].intersection(members["bminus_st"], name="H1")
        self.h2 = members["bplus_uv"].intersection(members["bminus_uv"], name="H2")
        self.members = members
        self.taint = sorted((name, x) for name, table in verdicts.items() for x, v in table.items()
                            if v.is_unknown and not v.exhaustive)

    @property
    def ctx(self):
        return self.tp.ctx

    @property
    def tainted(self):
        return bool(self.taint)

    def heart_ids(self):
        """Indecomposables of H that are nonzero in H/W"""
        return self.h.difference(self.tp.w)

    def heart_st_ids(self):
        return self.h1.difference(self.tp.core_st)

    def heart_uv_ids(self):
        return self.h2.difference(self.tp.core_uv)

    def witness(self, name, x):
        return self.verdicts[name][x].witness

    def bplus_witness(self, x):
        """Conflation V_x -> W_x -> x"""
        return self.witness("bplus", x)

    def bminus_witness(self, x):
        """Conflation x -> W^x -> S^x"""
        return self.witness("bminus", x)

    def to_dict(self):
        return {
            "B+": self.bplus.to_list(),
            "B-": self.bminus.to_list(),
            "H": self.h.to_list(),
            "W": self.tp.w.to_list(),
            "heart": [str(x) for x in self.heart_ids()],
            "H1": self.h1.to_list(),
            "heart_st": [str(x) for x in self.heart_st_ids()],
            "H2": self.h2.to_list(),
            "heart_uv": [str(x) for x in self.heart_uv_ids()],
            "taint": ["{} {}".format(name, x) for name, x in self.taint],
        }


def compute_hearts(tp, bounds=DEFAULT_BOUNDS):
    verdicts = {}
    for name, method in _membership_methods.items():
        search = getattr(tp, method)
        verdicts[name] = {x: search(x, bounds) for x in tp.ctx.indecomposables}

    classes = HeartClasses(tp, bounds, verdicts)
    logger.info("Heart of %s modulo W: %s", tp, [str(x) for x in classes.heart_ids()])
    if classes.tainted:
        logger.warning("Heart memberships unresolved within bounds: %s", classes.taint)

    return classes
