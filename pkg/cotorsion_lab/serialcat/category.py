"""The module category of a linear Nakayama algebra, described combinatorially"""
from logging import getLogger

import numpy as np

from ..exception import ArgumentMismatchError, PresentationError, ValidationError
from ..manager import memoize, memo_property
from ..repcore import (PrimeField, QuiverPresentation, decompose, direct_sum, ext_dimension,
                       hom_space, interval_module, interval_multiplicities)
from .intervals import Interval, Obj

logger = getLogger(__name__)


CATEGORY_KIND = "nakayama_linear"


class CategoryCtx:
    """Indecomposables, Hom/Ext tables and realisations for mod kQ/I

    Immutable after construction; all lookups are pure.
    """

    def __init__(self, presentation, field):
        self.presentation = presentation
        self.field = field
        self.indecomposables = tuple(Interval(a, b) for a, b in presentation.intervals())
        self._index = {x: i for i, x in enumerate(self.indecomposables)}

        count = len(self.indecomposables)
        self.hom_table = np.zeros((count, count), dtype=np.int8)
        self.ext_table = np.zeros((count, count), dtype=np.int8)
        for i, x in enumerate(self.indecomposables):
            for j, y in enumerate(self.indecomposables):
                self.hom_table[i, j] = self._hom_closed_form(x, y)

        for i, x in enumerate(self.indecomposables):
            for j, y in enumerate(self.indecomposables):
                self.ext_table[i, j] = self._ext_closed_form(x, y)

        self.projectives = frozenset(self.projective_cover(b) for b in presentation.vertices)
        self.injectives = frozenset(self.injective_envelope(a) for a in presentation.vertices)

    def __repr__(self):
        return "CategoryCtx(n={}, relations={}, p={})".format(self.presentation.n, list(self.presentation.relations),
                                                             self.field.p)

    def same_as(self, other):
        return self.presentation == other.presentation and self.field == other.field

    # Ids
    def check(self, x):
        x = Interval(*x)
        if x not in self._index:
            raise ArgumentMismatchError("{} is not an indecomposable of this category".format(x))

        return x

    def check_obj(self, obj):
        for x in obj:
            self.check(x)

        return obj

    def index(self, x):
        return self._index[x]

    # Closed forms
    def _hom_closed_form(self, x, y):
        a, b = x
        c, d = y
        return int(a <= c <= b <= d)

    def _ext_closed_form(self, x, y):
        omega = self.syzygy(x)
        if omega is None or not self._hom_closed_form(omega, y):
            return 0

        cover = self.projective_cover(x.b)
        restriction_rank = int(bool(self._hom_closed_form(cover, y) and self.compose_constant(omega, cover, y)))
        return 1 - restriction_rank

    def hom_dim(self, x, y):
        """dim Hom(x, y), which is 0 or 1"""
        return int(self.hom_table[self._index[x], self._index[y]])

    def ext_dim(self, x, y):
        """dim Ext^1(x, y): extensions with y as first and x as third term"""
        return int(self.ext_table[self._index[x], self._index[y]])

    def compose_constant(self, x, y, z):
        """1 if the canonical maps x -> y -> z compose to the canonical x -> z, else 0"""
        if not (self._hom_closed_form(x, y) and self._hom_closed_form(y, z)):
            return 0

        return int(z.a <= x.b)

    def compose_canonical(self, x, y, z):
        if not (self.hom_dim(x, y) and self.hom_dim(y, z)):
            raise ArgumentMismatchError("No canonical maps {} -> {} -> {}".format(x, y, z))

        return self.compose_constant(x, y, z)

    def factors_through(self, x, y, z):
        """Whether the canonical x -> z factors as x -> y -> z"""
        return bool(self.hom_dim(x, z) and self.compose_constant(x, y, z))

    # Projectives and injectives
    def projective_cover(self, b):
        return Interval(self.presentation.lowest_reach(b), b)

    def injective_envelope(self, a):
        return Interval(a, self.presentation.highest_reach(a))

    def syzygy(self, x):
        """Kernel of the projective cover, or None when x is projective"""
        cover = self.projective_cover(x.b)
        if cover.a == x.a:
            return None

        return Interval(cover.a, x.a - 1)

    def cosyzygy(self, x):
        """Cokernel of the injective envelope, or None when x is injective"""
        envelope = self.injective_envelope(x.a)
        if envelope.b == x.b:
            return None

        return Interval(x.b + 1, envelope.b)

    # Extensions
    def nonsplit_extension(self, x, y):
        """Explicit non-split sequence y -> E -> x, where E = [c,b] + [a,d] for x = [a,b], y = [c,d]"""
        from .morphisms import ObjMorphism

        if not self.ext_dim(x, y):
            raise ArgumentMismatchError("Ext^1({}, {}) vanishes".format(x, y))

        a, b = x
        c, d = y
        long_part = Interval(c, b)
        if a == d + 1:
            middle = Obj([long_part])
            inflation = ObjMorphism.canonical(self, y, long_part)
            deflation = ObjMorphism.canonical(self, long_part, x)

        else:
            short_part = Interval(a, d)
            middle = Obj([long_part, short_part])
            inflation = ObjMorphism(self, Obj([y]), middle, self._column(middle, {long_part: 1, short_part: 1}))
            deflation = ObjMorphism(self, middle, Obj([x]), self._column(middle, {long_part: 1, short_part: -1}).T)

        return inflation, deflation

    def _column(self, obj, values):
        column = self.field.zeros(len(obj), 1)
        for i, summand in enumerate(obj):
            column[i, 0] = self.field.scalar(values[summand])

        return column

    def extensions(self, x, y):
        """Middle terms of all extensions y -> E -> x, the split one first"""
        middles = [Obj([x, y])]
        if self.ext_dim(x, y):
            inflation, _ = self.nonsplit_extension(x, y)
            middles.append(inflation.target)

        return middles

    # Realisation
    @memoize
    def realize_sum(self, obj):
        modules = [self.realize_interval(x) for x in obj]
        return direct_sum(self.presentation, self.field, modules)

    def realize(self, obj):
        if isinstance(obj, Interval):
            return self.realize_interval(obj)

        return self.realize_sum(obj).module

    @memoize
    def realize_interval(self, x):
        return interval_module(self.presentation, self.field, *self.check(x))

    def decompose(self, module):
        return decompose(module)

    def identify(self, module):
        """Obj isomorphic to the module, via decomposition"""
        return Obj(decompose(module).intervals)

    def classify(self, module):
        """Obj isomorphic to the module, read off the rank invariant"""
        return Obj.from_counts({Interval(*k): v for k, v in interval_multiplicities(module).items()})

    # Reporting
    @memo_property
    def census(self):
        projective_injective = self.projectives & self.injectives
        return {
            "indecomposables": len(self.indecomposables),
            "projectives": len(self.projectives),
            "injectives": len(self.injectives),
            "projective_injectives": len(projective_injective),
        }

    def validate(self):
        """Compare the closed forms with brute force on every ordered pair of indecomposables"""
        mismatches = []
        for x in self.indecomposables:
            for y in self.indecomposables:
                source, target = self.realize_interval(x), self.realize_interval(y)
                hom = len(hom_space(source, target))
                ext = ext_dimension(source, target)
                if hom != self.hom_dim(x, y) or ext != self.ext_dim(x, y):
                    mismatches.append((x, y, hom, ext))

        if mismatches:
            raise ValidationError("Closed forms disagree with brute force on {}".format(
                ", ".join("({}, {})".format(x, y) for x, y, _, _ in mismatches)))

        logger.info("Validated Hom and Ext closed forms on %d pairs", len(self.indecomposables) ** 2)
        return self

    def to_dict(self):
        data = {"kind": CATEGORY_KIND}
        data.update(self.presentation.to_dict())
        data["field_char"] = self.field.p
        return data


def generate(presentation, field=None, validate=False):
    """Build the category of a presentation over F_p (p = 2 by default)"""
    if field is None:
        field = PrimeField(2)

    ctx = CategoryCtx(presentation, field)
    logger.info("Generated category with %d indecomposables", len(ctx.indecomposables))
    if validate:
        ctx.validate()

    return ctx


def category_from_dict(data, validate=False):
    kind = data.get("kind", CATEGORY_KIND)
    if kind != CATEGORY_KIND:
        raise PresentationError("Unsupported category kind {!r}".format(kind))

    try:
        presentation = QuiverPresentation.from_dict(data)

    except KeyError as err:
        raise PresentationError("Category description lacks {}".format(err))

    return generate(presentation, PrimeField(data.get("field_char", 2)), validate=validate)
