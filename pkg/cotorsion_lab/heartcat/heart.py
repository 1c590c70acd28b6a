"""The ideal quotient H/W in canonical coordinates

Every Hom space between indecomposables is spanned by one canonical map, and a composite of canonical
maps is canonical or zero. The ideal of maps factoring through W is therefore a coordinate subspace:
the coordinate of x -> y lies in it exactly when the canonical map factors through some w in W.
"""
from itertools import product
from logging import getLogger

import numpy as np

from ..exception import ArgumentMismatchError
from ..manager import memoize
from ..serialcat import Conflation, Obj, ObjMorphism

logger = getLogger(__name__)


class Heart:
    """Computable view of the heart H/W of a twin cotorsion pair"""

    def __init__(self, classes):
        self.classes = classes
        self.tp = classes.tp
        self.ctx = classes.ctx
        self.w = self.tp.w
        self.objects = classes.h
        self.ids = classes.heart_ids()

    def __repr__(self):
        return "Heart({})".format([str(x) for x in self.ids])

    @property
    def is_zero(self):
        return not self.ids

    def check_obj(self, obj):
        outside = [x for x in obj if x not in self.objects]
        if outside:
            raise ArgumentMismatchError("{} does not lie in the heart: {} outside H".format(
                obj, ", ".join(str(x) for x in outside)))

        return obj

    def check_morphism(self, f):
        self.check_obj(f.source)
        self.check_obj(f.target)
        return f

    # The W-ideal
    @memoize
    def is_w_coordinate(self, x, y):
        """Whether the canonical map x -> y factors through W"""
        ctx = self.ctx
        if not ctx.hom_dim(x, y):
            return False

        return any(ctx.hom_dim(x, w) and ctx.hom_dim(w, y) and ctx.compose_constant(x, w, y) for w in self.w.ids)

    def w_mask(self, a, b):
        mask = np.zeros((len(b), len(a)), dtype=bool)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                mask[j, i] = self.is_w_coordinate(x, y)

        return mask

    def quotient_mask(self, a, b):
        """Coordinates of Hom(a, b) that survive modulo W"""
        return ObjMorphism.hom_mask(self.ctx, a, b) & ~self.w_mask(a, b)

    def quotient_hom_dim(self, a, b):
        return int(np.count_nonzero(self.quotient_mask(a, b)))

    def quotient_hom_table(self):
        return {(x, y): self.quotient_hom_dim(Obj([x]), Obj([y])) for x in self.ids for y in self.ids}

    def w_ideal(self, a, b):
        """Basis of the maps a -> b factoring through W, one canonical coordinate each"""
        basis = []
        mask = self.w_mask(a, b)
        for j, i in zip(*np.nonzero(mask)):
            coefficients = self.ctx.field.zeros(len(b), len(a))
            coefficients[j, i] = 1
            basis.append(ObjMorphism(self.ctx, a, b, coefficients, validate=False))

        return basis

    def in_w_ideal(self, f):
        values = self.ctx.field.to_int(f.coefficients)
        return not np.any(values[self.quotient_mask(f.source, f.target)])

    def reduce(self, f):
        """Representative of the coset of f with every W coordinate cleared"""
        mask = self.quotient_mask(f.source, f.target)
        values = self.ctx.field.to_int(f.coefficients) * mask
        return ObjMorphism(self.ctx, f.source, f.target, self.ctx.field.matrix(values), validate=False)

    def quotient_representatives(self, a, b):
        """One morphism a -> b per coset modulo W, coordinates in lexicographic order"""
        field = self.ctx.field
        positions = list(zip(*np.nonzero(self.quotient_mask(a, b))))
        for values in product(range(field.p), repeat=len(positions)):
            coefficients = field.zeros(len(b), len(a))
            for (j, i), value in zip(positions, values):
                coefficients[j, i] = value

            yield ObjMorphism(self.ctx, a, b, coefficients, validate=False)

    # Composition matrices
    def pre_composition(self, f, c):
        """Matrix of g -> g f from Hom(target, c)/W to Hom(source, c)/W, for an indecomposable c"""
        ctx = self.ctx
        rows = [i for i, x in enumerate(f.source) if ctx.hom_dim(x, c) and not self.is_w_coordinate(x, c)]
        cols = [j for j, y in enumerate(f.target) if ctx.hom_dim(y, c) and not self.is_w_coordinate(y, c)]
        return self._matrix(f, rows, cols, lambda i, j: ctx.compose_constant(f.source[i], f.target[j], c))

    def post_composition(self, f, d):
        """Matrix of h -> f h from Hom(d, source)/W to Hom(d, target)/W, for an indecomposable d"""
        ctx = self.ctx
        rows = [j for j, y in enumerate(f.target) if ctx.hom_dim(d, y) and not self.is_w_coordinate(d, y)]
        cols = [i for i, x in enumerate(f.source) if ctx.hom_dim(d, x) and not self.is_w_coordinate(d, x)]
        return self._matrix(f, cols, rows, lambda i, j: ctx.compose_constant(d, f.source[i], f.target[j])).T

    def _matrix(self, f, sources, targets, constant):
        """Matrix indexed by (source position, target position) with entries f_ji times a constant"""
        field = self.ctx.field
        values = field.to_int(f.coefficients)
        matrix = np.zeros((len(sources), len(targets)), dtype=np.int64)
        for row, i in enumerate(sources):
            for col, j in enumerate(targets):
                if values[j, i]:
                    matrix[row, col] = values[j, i] * constant(i, j)

        return field.matrix(matrix.reshape((len(sources), len(targets))))

    def is_w_monic(self, f):
        """Hom(target, W) -> Hom(source, W) is onto for every W in the core"""
        ctx = self.ctx
        for w in sorted(self.w.ids):
            rows = [i for i, x in enumerate(f.source) if ctx.hom_dim(x, w)]
            cols = [j for j, y in enumerate(f.target) if ctx.hom_dim(y, w)]
            matrix = self._matrix(f, rows, cols, lambda i, j: ctx.compose_constant(f.source[i], f.target[j], w))
            if ctx.field.rank(matrix) != len(rows):
                return False

        return True

    def is_w_epic(self, f):
        """Hom(W, source) -> Hom(W, target) is onto for every W in the core"""
        ctx = self.ctx
        for w in sorted(self.w.ids):
            rows = [j for j, y in enumerate(f.target) if ctx.hom_dim(w, y)]
            cols = [i for i, x in enumerate(f.source) if ctx.hom_dim(w, x)]
            matrix = self._matrix(f, cols, rows, lambda i, j: ctx.compose_constant(w, f.source[i], f.target[j]))
            if ctx.field.rank(matrix) != len(rows):
                return False

        return True

    # Witnesses of H membership, summed over the summands of an object
    def bplus_conflation(self, b):
        """Conflation V_b -> W_b -> b for an object of H"""
        return sum_conflations(self.ctx, [self.classes.bplus_witness(x) for x in self.check_obj(b)])

    def bminus_conflation(self, a):
        """Conflation a -> W^a -> S^a for an object of H"""
        return sum_conflations(self.ctx, [self.classes.bminus_witness(x) for x in self.check_obj(a)])


def sum_conflations(ctx, conflations):
    result = Conflation.trivial_left(ctx, Obj())
    for conflation in conflations:
        result = result.direct_sum(conflation)

    return result


class HeartMorphism:
    """A morphism of H regarded modulo W"""

    def __init__(self, heart, morphism):
        self.heart = heart
        self.morphism = heart.check_morphism(morphism)

    @property
    def source(self):
        return self.morphism.source

    @property
    def target(self):
        return self.morphism.target

    @property
    def is_zero(self):
        return self.heart.in_w_ideal(self.morphism)

    def compose(self, other):
        """self after other"""
        return HeartMorphism(self.heart, self.morphism.compose(other.morphism))

    def __eq__(self, other):
        if not isinstance(other, HeartMorphism) or other.heart is not self.heart:
            return False

        if self.source != other.source or self.target != other.target:
            return False

        return self.heart.in_w_ideal(self.morphism - other.morphism)

    def __hash__(self):
        return hash(self.heart.reduce(self.morphism))

    def __repr__(self):
        return "HeartMorphism({!r})".format(self.heart.reduce(self.morphism))

    def to_dict(self):
        return self.morphism.to_dict()
