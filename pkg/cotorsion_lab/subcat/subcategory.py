from ..exception import ArgumentMismatchError
from ..serialcat import Interval


class Subcategory:
    """Summand-closed class, stored as its set of indecomposables

    The zero object belongs to every subcategory.
    """

    def __init__(self, ctx, ids, name=None, provenance=None):
        self.ctx = ctx
        self.ids = frozenset(ctx.check(x) for x in ids)
        self.name = name
        self.provenance = provenance

    def _check_context(self, other):
        if not self.ctx.same_as(other.ctx):
            raise ArgumentMismatchError("Subcategories {} and {} live in different categories".format(self, other))

    def __contains__(self, x):
        return Interval(*x) in self.ids

    def contains_obj(self, obj):
        return all(x in self.ids for x in obj)

    def __iter__(self):
        return iter(sorted(self.ids))

    def __len__(self):
        return len(self.ids)

    def __eq__(self, other):
        return isinstance(other, Subcategory) and self.ctx.same_as(other.ctx) and self.ids == other.ids

    def __hash__(self):
        return hash(self.ids)

    def __str__(self):
        if self.name:
            return self.name

        return "add{{{}}}".format(", ".join(str(x) for x in self))

    def __repr__(self):
        return "Subcategory({}: {})".format(self.name, [str(x) for x in self])

    def renamed(self, name):
        return Subcategory(self.ctx, self.ids, name, self.provenance)

    def issubset(self, other):
        self._check_context(other)
        return self.ids <= other.ids

    def intersection(self, other, name=None):
        self._check_context(other)
        return Subcategory(self.ctx, self.ids & other.ids, name)

    def union(self, other, name=None):
        self._check_context(other)
        return Subcategory(self.ctx, self.ids | other.ids, name)

    def difference(self, other):
        self._check_context(other)
        return sorted(self.ids - other.ids)

    def to_list(self):
        return [str(x) for x in self]


def add(ctx, ids, name=None):
    return Subcategory(ctx, ids, name, provenance="literal")


def zero(ctx):
    return Subcategory(ctx, (), "0")


def everything(ctx):
    return Subcategory(ctx, ctx.indecomposables, "all")


def projectives(ctx):
    return Subcategory(ctx, ctx.projectives, "proj")


def injectives(ctx):
    return Subcategory(ctx, ctx.injectives, "inj")


def oplus(x, y):
    """X ⊕ Y: summands of direct sums, i.e. the union of the indecomposables"""
    return x.union(y)


def inter(x, y):
    return x.intersection(y)


def right_perp(x):
    """Indecomposables y with Ext^1(u, y) = 0 for every u in x"""
    ctx = x.ctx
    return Subcategory(ctx, [y for y in ctx.indecomposables if not any(ctx.ext_dim(u, y) for u in x.ids)],
                       provenance="rperp")


def left_perp(x):
    """Indecomposables y with Ext^1(y, v) = 0 for every v in x"""
    ctx = x.ctx
    return Subcategory(ctx, [y for y in ctx.indecomposables if not any(ctx.ext_dim(y, v) for v in x.ids)],
                       provenance="lperp")
