"""Morphisms between formal direct sums in canonical coordinates

A morphism ``A -> B`` is the matrix ``C`` with ``C[j, i]`` the coefficient of the canonical map from
the i-th summand of A to the j-th summand of B. Entries where Hom vanishes are zero.
"""
import numpy as np

from ..exception import ArgumentMismatchError, ValidationError
from ..repcore import Morphism
from .intervals import Interval, Obj, sum_positions


class ObjMorphism:

    def __init__(self, ctx, source, target, coefficients, validate=True):
        self.ctx = ctx
        self.source = source if isinstance(source, Obj) else Obj([source])
        self.target = target if isinstance(target, Obj) else Obj([target])
        self.coefficients = coefficients

        if validate:
            self.validate()

    def validate(self):
        if self.coefficients.shape != (len(self.target), len(self.source)):
            raise ValidationError("Coefficient matrix has shape {}, expected {}".format(
                self.coefficients.shape, (len(self.target), len(self.source))))

        mask = self.hom_mask(self.ctx, self.source, self.target)
        if np.any(self.ctx.field.to_int(self.coefficients)[~mask]):
            raise ValidationError("Nonzero coefficient between summands without morphisms")

        return self

    @staticmethod
    def hom_mask(ctx, source, target):
        mask = np.zeros((len(target), len(source)), dtype=bool)
        for i, x in enumerate(source):
            for j, y in enumerate(target):
                mask[j, i] = bool(ctx.hom_dim(x, y))

        return mask

    # Construction
    @classmethod
    def zero(cls, ctx, source, target):
        return cls(ctx, source, target, ctx.field.zeros(len(target), len(source)), validate=False)

    @classmethod
    def identity(cls, ctx, obj):
        return cls(ctx, obj, obj, ctx.field.identity(len(obj)), validate=False)

    @classmethod
    def canonical(cls, ctx, x, y):
        if not ctx.hom_dim(x, y):
            raise ArgumentMismatchError("Hom({}, {}) vanishes".format(x, y))

        return cls(ctx, Obj([x]), Obj([y]), ctx.field.identity(1), validate=False)

    @classmethod
    def from_integers(cls, ctx, source, target, rows):
        return cls(ctx, source, target, ctx.field.matrix(np.array(rows, dtype=np.int64).reshape(
            (len(target), len(source)))))

    @classmethod
    def assemble(cls, ctx, blocks, sources, targets):
        """Morphism between direct sums from a grid with ``blocks[i][j]: sources[j] -> targets[i]``"""
        source, source_positions = sum_positions(*sources)
        target, target_positions = sum_positions(*targets)
        coefficients = ctx.field.zeros(len(target), len(source))
        for i, row in enumerate(blocks):
            for j, block in enumerate(row):
                if block is None:
                    continue

                if block.source != sources[j] or block.target != targets[i]:
                    raise ArgumentMismatchError("Block ({}, {}) does not match the given summands".format(i, j))

                rows = np.array(target_positions[i], dtype=np.int64)
                cols = np.array(source_positions[j], dtype=np.int64)
                if rows.size and cols.size:
                    coefficients[np.ix_(rows, cols)] = block.coefficients

        return cls(ctx, source, target, coefficients, validate=False), source_positions, target_positions

    @classmethod
    def from_morphism(cls, ctx, source, target, morphism):
        """Read canonical coordinates off a module morphism realize(source) -> realize(target)

        The coefficient of ``x -> y`` is the entry of the component at the top vertex of x.
        """
        source_rows = _vertex_positions(source, ctx.presentation.n)
        target_rows = _vertex_positions(target, ctx.presentation.n)
        coefficients = ctx.field.zeros(len(target), len(source))
        for i, x in enumerate(source):
            component = morphism.component(x.b)
            for j, y in enumerate(target):
                if ctx.hom_dim(x, y):
                    coefficients[j, i] = component[target_rows[x.b][j], source_rows[x.b][i]]

        return cls(ctx, source, target, coefficients, validate=False)

    # Algebra
    def _check_parallel(self, other):
        if self.source != other.source or self.target != other.target:
            raise ArgumentMismatchError("Morphisms are not parallel")

    def __add__(self, other):
        self._check_parallel(other)
        return ObjMorphism(self.ctx, self.source, self.target, self.coefficients + other.coefficients, validate=False)

    def __sub__(self, other):
        self._check_parallel(other)
        return ObjMorphism(self.ctx, self.source, self.target, self.coefficients - other.coefficients, validate=False)

    def __neg__(self):
        return ObjMorphism(self.ctx, self.source, self.target, -self.coefficients, validate=False)

    def scaled(self, scalar):
        field = self.ctx.field
        return ObjMorphism(self.ctx, self.source, self.target, self.coefficients * field.GF(field.scalar(scalar)),
                           validate=False)

    def compose(self, other):
        """self after other"""
        if other.target != self.source:
            raise ArgumentMismatchError("Cannot compose {} -> {} after {} -> {}".format(
                self.source, self.target, other.source, other.target))

        ctx = self.ctx
        constants = composition_constants(ctx, other.source, other.target, self.target)
        product = np.einsum("kj,ji,ijk->ki", ctx.field.to_int(self.coefficients), ctx.field.to_int(other.coefficients),
                            constants)
        return ObjMorphism(ctx, other.source, self.target, ctx.field.matrix(product), validate=False)

    @property
    def is_zero(self):
        return self.ctx.field.is_zero(self.coefficients)

    def entries(self):
        """Nonzero coefficients as ((i, j), value) in row-major order"""
        values = self.ctx.field.to_int(self.coefficients)
        return [((i, j), int(values[j, i])) for j in range(values.shape[0]) for i in range(values.shape[1])
                if values[j, i]]

    def __eq__(self, other):
        return (isinstance(other, ObjMorphism) and self.source == other.source and self.target == other.target
                and self.ctx.field.equal(self.coefficients, other.coefficients))

    def __hash__(self):
        return hash((self.source, self.target, self.ctx.field.to_int(self.coefficients).tobytes()))

    def __repr__(self):
        return "ObjMorphism({} -> {}, {})".format(self.source, self.target,
                                                  self.ctx.field.to_int(self.coefficients).tolist())

    # Realisation
    def realize(self):
        ctx = self.ctx
        field = ctx.field
        n = ctx.presentation.n
        source_rows = _vertex_positions(self.source, n)
        target_rows = _vertex_positions(self.target, n)
        source_module, target_module = ctx.realize(self.source), ctx.realize(self.target)

        components = []
        for v in ctx.presentation.vertices:
            component = field.zeros(target_module.dim(v), source_module.dim(v))
            for i, j in _supported_pairs(ctx, self.source, self.target, v):
                component[target_rows[v][j], source_rows[v][i]] = self.coefficients[j, i]

            components.append(component)

        return Morphism(source_module, target_module, components, validate=False)

    def to_dict(self):
        return {
            "source": [str(x) for x in self.source],
            "target": [str(y) for y in self.target],
            "coefficients": self.ctx.field.to_int(self.coefficients).tolist(),
        }

    @classmethod
    def from_dict(cls, ctx, data):
        from .intervals import parse_interval

        source = ctx.check_obj(Obj(parse_interval(s) for s in data["source"]))
        target = ctx.check_obj(Obj(parse_interval(s) for s in data["target"]))
        if source.summands != tuple(parse_interval(s) for s in data["source"]):
            raise ValidationError("Summands of a stored morphism must be listed in sorted order")

        return cls.from_integers(ctx, source, target, data["coefficients"])


def _vertex_positions(obj, n):
    """For each vertex, the row of each summand in the realised module (None off its support)"""
    positions = {}
    for v in range(1, n + 1):
        row = 0
        table = []
        for x in obj:
            if Interval(*x).contains(v):
                table.append(row)
                row += 1

            else:
                table.append(None)

        positions[v] = table

    return positions


def _supported_pairs(ctx, source, target, v):
    """Summand pairs whose canonical map is nonzero at vertex v"""
    for i, x in enumerate(source):
        for j, y in enumerate(target):
            if ctx.hom_dim(x, y) and y.a <= v <= x.b:
                yield i, j


def composition_constants(ctx, first, middle, last):
    """Tensor K[i, j, k] = 1 when first[i] -> middle[j] -> last[k] composes to the canonical map"""
    constants = np.zeros((len(first), len(middle), len(last)), dtype=np.int64)
    for i, x in enumerate(first):
        for j, y in enumerate(middle):
            for k, z in enumerate(last):
                constants[i, j, k] = ctx.compose_constant(x, y, z)

    return constants
