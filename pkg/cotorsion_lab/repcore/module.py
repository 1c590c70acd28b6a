"""Representations of a bound linear quiver and the maps between them"""
from collections import namedtuple
from logging import getLogger

import numpy as np

from ..exception import ArgumentMismatchError, ValidationError

logger = getLogger(__name__)


class Module:
    """Representation with a vector space at each vertex and a matrix for each arrow v+1 -> v

    ``arrows[v - 1]`` is the ``dims[v - 1] x dims[v]`` matrix of the arrow leaving vertex v + 1.
    Instances are immutable.
    """

    def __init__(self, presentation, field, dims, arrows=None, validate=True):
        self.presentation = presentation
        self.field = field
        self.dims = tuple(int(d) for d in dims)

        if len(self.dims) != presentation.n:
            raise ValidationError("Expected {} vertex dimensions, got {}".format(presentation.n, len(self.dims)))

        if arrows is None:
            arrows = [field.zeros(self.dims[i], self.dims[i + 1]) for i in range(presentation.n - 1)]

        self.arrows = tuple(arrows)

        if validate:
            self.validate()

    def validate(self):
        if any(d < 0 for d in self.dims):
            raise ValidationError("Negative dimension in {}".format(self.dims))

        if len(self.arrows) != self.presentation.n - 1:
            raise ValidationError("Expected {} arrow maps, got {}".format(self.presentation.n - 1, len(self.arrows)))

        for v in range(1, self.presentation.n):
            shape = self.arrow(v).shape
            if shape != (self.dim(v), self.dim(v + 1)):
                raise ValidationError("Arrow {}->{} has shape {}, expected {}"
                                      .format(v + 1, v, shape, (self.dim(v), self.dim(v + 1))))

        for a, b in self.presentation.relations:
            if not self.field.is_zero(self.path(a, b)):
                raise ValidationError("Relation [{},{}] is not satisfied".format(a, b))

    def dim(self, v):
        return self.dims[v - 1]

    def arrow(self, v):
        """Matrix of the arrow v+1 -> v"""
        return self.arrows[v - 1]

    def path(self, a, b):
        """Matrix of the path from vertex b down to vertex a"""
        assert a <= b, (a, b)
        result = self.field.identity(self.dim(b))
        for v in range(b - 1, a - 1, -1):
            result = self.field.matmul(self.arrow(v), result)

        return result

    @property
    def total_dim(self):
        return sum(self.dims)

    @property
    def is_zero(self):
        return not self.total_dim

    def same_category(self, other):
        return self.presentation == other.presentation and self.field == other.field

    def key(self):
        """Hashable value identifying the module up to equality (not isomorphism)"""
        return (self.presentation, self.field.p, self.dims,
                tuple(self.field.to_int(a).tobytes() for a in self.arrows))

    def __eq__(self, other):
        return isinstance(other, Module) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Module(dims={})".format(self.dims)

    def transport(self, isos):
        """The module with basis changed by the invertible matrices ``isos`` (one per vertex)

        Returns the new module N and the isomorphism self -> N.
        """
        inverses = [np.linalg.inv(g) if g.size else g for g in isos]
        arrows = [self.field.chain(isos[v - 1], self.arrow(v), inverses[v])
                  for v in range(1, self.presentation.n)]
        target = Module(self.presentation, self.field, self.dims, arrows)
        return target, Morphism(self, target, isos)

    def to_dict(self):
        return {"dims": list(self.dims), "arrows": [self.field.to_int(a).tolist() for a in self.arrows]}

    @classmethod
    def from_dict(cls, presentation, field, data):
        dims = data["dims"]
        arrows = [field.matrix(np.array(a, dtype=np.int64).reshape((dims[i], dims[i + 1])))
                  for i, a in enumerate(data["arrows"])]
        return cls(presentation, field, dims, arrows)


class Morphism:
    """Family of matrices ``components[v - 1]: source_v -> target_v`` commuting with the arrows"""

    def __init__(self, source, target, components, validate=True):
        if not source.same_category(target):
            raise ArgumentMismatchError("Morphism endpoints live over different presentations or fields")

        self.source = source
        self.target = target
        self.components = tuple(components)

        if validate:
            self.validate()

    @property
    def field(self):
        return self.source.field

    def component(self, v):
        return self.components[v - 1]

    def validate(self):
        field = self.field
        for v in self.source.presentation.vertices:
            if self.component(v).shape != (self.target.dim(v), self.source.dim(v)):
                raise ValidationError("Component at vertex {} has shape {}".format(v, self.component(v).shape))

        for v in range(1, self.source.presentation.n):
            left = field.matmul(self.target.arrow(v), self.component(v + 1))
            right = field.matmul(self.component(v), self.source.arrow(v))
            if not field.equal(left, right):
                raise ValidationError("Naturality fails on the arrow {}->{}".format(v + 1, v))

    def ranks(self):
        return tuple(self.field.rank(c) for c in self.components)

    @property
    def is_zero(self):
        return all(self.field.is_zero(c) for c in self.components)

    @property
    def is_injective(self):
        return self.ranks() == self.source.dims

    @property
    def is_surjective(self):
        return self.ranks() == self.target.dims

    @property
    def is_iso(self):
        return self.source.dims == self.target.dims and self.is_injective

    def _check_parallel(self, other):
        if self.source != other.source or self.target != other.target:
            raise ArgumentMismatchError("Morphisms are not parallel")

    def __add__(self, other):
        self._check_parallel(other)
        return Morphism(self.source, self.target, [a + b for a, b in zip(self.components, other.components)],
                        validate=False)

    def __sub__(self, other):
        self._check_parallel(other)
        return Morphism(self.source, self.target, [a - b for a, b in zip(self.components, other.components)],
                        validate=False)

    def __neg__(self):
        return Morphism(self.source, self.target, [-c for c in self.components], validate=False)

    def scaled(self, scalar):
        scalar = self.field.GF(self.field.scalar(scalar))
        return Morphism(self.source, self.target, [c * scalar for c in self.components], validate=False)

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.source == other.source and self.target == other.target
                and all(self.field.equal(a, b) for a, b in zip(self.components, other.components)))

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.field.to_int(c).tobytes() for c in self.components)))

    def __repr__(self):
        return "Morphism({} -> {})".format(self.source.dims, self.target.dims)

    def to_dict(self):
        return {"components": [self.field.to_int(c).tolist() for c in self.components]}


class SES(namedtuple("SES", "inflation deflation")):
    """Short exact sequence A -> B -> C given by its two maps"""

    @property
    def first(self):
        return self.inflation.source

    @property
    def middle(self):
        return self.inflation.target

    @property
    def third(self):
        return self.deflation.target

    def validate(self):
        if self.inflation.target != self.deflation.source:
            raise ValidationError("SES maps are not composable")

        if not self.inflation.is_injective:
            raise ValidationError("First map of the sequence is not injective")

        if not self.deflation.is_surjective:
            raise ValidationError("Second map of the sequence is not surjective")

        if not compose(self.deflation, self.inflation).is_zero:
            raise ValidationError("Sequence composite is not zero")

        if any(f + s != m for f, s, m in zip(self.first.dims, self.third.dims, self.middle.dims)):
            raise ValidationError("Sequence is not exact in the middle")

        return self


DirectSum = namedtuple("DirectSum", "module injections projections")


def _check_same(*modules):
    first = modules[0]
    for module in modules[1:]:
        if not first.same_category(module):
            raise ArgumentMismatchError("Modules live over different presentations or fields")


def zero_module(presentation, field):
    return Module(presentation, field, [0] * presentation.n)


def interval_module(presentation, field, a, b):
    """Indecomposable module with one dimensional spaces on [a, b] and identity arrows"""
    if not presentation.is_admissible(a, b):
        raise ValidationError("[{},{}] is not an admissible interval".format(a, b))

    dims = [1 if a <= v <= b else 0 for v in presentation.vertices]
    arrows = []
    for v in range(1, presentation.n):
        if a <= v < b:
            arrows.append(field.identity(1))

        else:
            arrows.append(field.zeros(dims[v - 1], dims[v]))

    return Module(presentation, field, dims, arrows)


def identity(module):
    return Morphism(module, module, [module.field.identity(d) for d in module.dims], validate=False)


def zero_morphism(source, target):
    return Morphism(source, target, [source.field.zeros(target.dim(v), source.dim(v))
                                     for v in source.presentation.vertices], validate=False)


def compose(*morphisms):
    """Composite of morphisms, right-most applied first"""
    result = morphisms[-1]
    for morphism in reversed(morphisms[:-1]):
        if morphism.source != result.target:
            raise ArgumentMismatchError("Cannot compose {!r} after {!r}".format(morphism, result))

        field = morphism.field
        result = Morphism(result.source, morphism.target,
                          [field.matmul(g, f) for g, f in zip(morphism.components, result.components)],
                          validate=False)

    return result


def _block_diagonal(field, matrices):
    rows = sum(m.shape[0] for m in matrices)
    cols = sum(m.shape[1] for m in matrices)
    result = field.zeros(rows, cols)
    row = col = 0
    for matrix in matrices:
        result[row:row + matrix.shape[0], col:col + matrix.shape[1]] = matrix
        row += matrix.shape[0]
        col += matrix.shape[1]

    return result


def direct_sum(presentation, field, modules):
    """Direct sum with its canonical injections and projections"""
    modules = list(modules)
    if modules:
        _check_same(*modules)

    dims = [sum(m.dim(v) for m in modules) for v in presentation.vertices]
    arrows = [_block_diagonal(field, [m.arrow(v) for m in modules]) for v in range(1, presentation.n)]
    total = Module(presentation, field, dims, arrows, validate=False)

    injections = []
    projections = []
    offsets = [0] * presentation.n
    for module in modules:
        inclusion = []
        projection = []
        for v in presentation.vertices:
            matrix = field.zeros(total.dim(v), module.dim(v))
            offset = offsets[v - 1]
            for i in range(module.dim(v)):
                matrix[offset + i, i] = 1

            offsets[v - 1] += module.dim(v)
            inclusion.append(matrix)
            projection.append(matrix.T)

        injections.append(Morphism(module, total, inclusion, validate=False))
        projections.append(Morphism(total, module, projection, validate=False))

    return DirectSum(total, injections, projections)


def matrix_morphism(presentation, field, blocks, sources, targets):
    """Morphism from the sum of sources to the sum of targets with ``blocks[i][j]: sources[j] -> targets[i]``

    ``None`` entries are zero maps.
    """
    source_sum = direct_sum(presentation, field, sources)
    target_sum = direct_sum(presentation, field, targets)
    result = zero_morphism(source_sum.module, target_sum.module)
    for i, row in enumerate(blocks):
        for j, block in enumerate(row):
            if block is None:
                continue

            if block.source != sources[j] or block.target != targets[i]:
                raise ArgumentMismatchError("Block ({}, {}) does not match the given summands".format(i, j))

            result = result + compose(target_sum.injections[i], block, source_sum.projections[j])

    return result, source_sum, target_sum


def _pivots(basis):
    return np.array([int(np.argmax(row.view(np.ndarray) != 0)) for row in basis], dtype=np.int64)


def submodule(module, bases):
    """Submodule spanned by reduced basis rows at each vertex, with its inclusion

    The spans must be closed under the arrows.
    """
    field = module.field
    arrows = []
    for v in range(1, module.presentation.n):
        image = field.matmul(module.arrow(v), bases[v].T)
        arrows.append(image[_pivots(bases[v - 1]), :])

    sub = Module(module.presentation, field, [b.shape[0] for b in bases], arrows, validate=False)
    inclusion = Morphism(sub, module, [b.T for b in bases], validate=False)
    return sub, inclusion


def quotient(module, bases):
    """Quotient by the submodule spanned by reduced basis rows, with its projection"""
    field = module.field
    maps = [field.quotient_map(b, d) for b, d in zip(bases, module.dims)]
    arrows = [field.chain(maps[v - 1][0], module.arrow(v), maps[v][1]) for v in range(1, module.presentation.n)]
    result = Module(module.presentation, field, [q.shape[0] for q, _ in maps], arrows, validate=False)
    projection = Morphism(module, result, [q for q, _ in maps], validate=False)
    return result, projection


def kernel(morphism):
    field = morphism.field
    return submodule(morphism.source, [field.null_space(c) for c in morphism.components])


def cokernel(morphism):
    field = morphism.field
    return quotient(morphism.target, [field.column_space(c) for c in morphism.components])


def image_factorisation(morphism):
    """Return (I, e, m) with e: source -> I surjective, m: I -> target injective and m e = morphism"""
    field = morphism.field
    bases = [field.column_space(c) for c in morphism.components]
    image, inclusion = submodule(morphism.target, bases)
    epi = Morphism(morphism.source, image,
                   [c[_pivots(b), :] for b, c in zip(bases, morphism.components)], validate=False)
    return image, epi, inclusion


def pullback(alpha, beta):
    """Pullback of X -alpha-> Z <-beta- Y, returned as (P, P -> X, P -> Y)"""
    if alpha.target != beta.target:
        raise ArgumentMismatchError("Pullback needs a common target")

    presentation, field = alpha.source.presentation, alpha.field
    joint, source_sum, _ = matrix_morphism(presentation, field, [[alpha, -beta]],
                                           [alpha.source, beta.source], [alpha.target])
    module, inclusion = kernel(joint)
    return (module, compose(source_sum.projections[0], inclusion),
            compose(source_sum.projections[1], inclusion))


def pushout(alpha, beta):
    """Pushout of X <-alpha- Z -beta-> Y, returned as (Q, X -> Q, Y -> Q)"""
    if alpha.source != beta.source:
        raise ArgumentMismatchError("Pushout needs a common source")

    presentation, field = alpha.source.presentation, alpha.field
    joint, _, target_sum = matrix_morphism(presentation, field, [[alpha], [-beta]],
                                           [alpha.source], [alpha.target, beta.target])
    module, projection = cokernel(joint)
    return (module, compose(projection, target_sum.injections[0]),
            compose(projection, target_sum.injections[1]))


def hom_space(source, target):
    """Basis of Hom(source, target) as Morphisms

    Solves the naturality system ``N_v phi_{v+1} = phi_v M_v`` on row-major vectorised components;
    the basis is the reduced row echelon basis of the solution space.
    """
    if not source.same_category(target):
        raise ArgumentMismatchError("Hom space requested between modules over different categories")

    field = source.field
    presentation = source.presentation
    sizes = [target.dim(v) * source.dim(v) for v in presentation.vertices]
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
    unknowns = int(offsets[-1])
    if not unknowns:
        return []

    equations = []
    for v in range(1, presentation.n):
        rows = target.dim(v) * source.dim(v + 1)
        if not rows:
            continue

        block = np.zeros((rows, unknowns), dtype=np.int64)
        upper = np.kron(field.to_int(target.arrow(v)), np.eye(source.dim(v + 1), dtype=np.int64))
        lower = np.kron(np.eye(target.dim(v), dtype=np.int64), field.to_int(source.arrow(v)).T)
        block[:, offsets[v]:offsets[v + 1]] += upper.reshape((rows, sizes[v]))
        block[:, offsets[v - 1]:offsets[v]] -= lower.reshape((rows, sizes[v - 1]))
        equations.append(block)

    if equations:
        solutions = field.null_space(field.matrix(np.vstack(equations)))

    else:
        solutions = field.identity(unknowns)

    basis = []
    for row in solutions:
        components = [row[offsets[v - 1]:offsets[v]].reshape((target.dim(v), source.dim(v)))
                      for v in presentation.vertices]
        basis.append(Morphism(source, target, components, validate=False))

    logger.debug("Hom space between modules of dims %s and %s has dimension %d", source.dims, target.dims,
                 len(basis))
    return basis


def linear_combination(source, target, basis, coefficients):
    result = zero_morphism(source, target)
    for morphism, coefficient in zip(basis, coefficients):
        if coefficient % source.field.p:
            result = result + morphism.scaled(coefficient)

    return result


def inverse(morphism):
    """Inverse of an isomorphism"""
    if not morphism.is_iso:
        raise ValidationError("Only isomorphisms can be inverted")

    components = [np.linalg.inv(c) if c.size else c for c in morphism.components]
    return Morphism(morphism.target, morphism.source, components, validate=False)
