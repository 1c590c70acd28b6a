"""Brute-force extensions by gluing: E = A + C with arrows [[A_v, xi_v], [0, C_v]]"""
import numpy as np

from .module import SES, Module, Morphism


def _offsets(sizes):
    return np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)


def _xi_sizes(first, third):
    n = first.presentation.n
    return [first.dim(k) * third.dim(k + 1) for k in range(1, n)]


def cocycle_space(first, third):
    """Basis rows of the gluing data xi satisfying every relation"""
    field = first.field
    sizes = _xi_sizes(first, third)
    offsets = _offsets(sizes)
    unknowns = int(offsets[-1])
    if not unknowns:
        return field.zeros(0, 0)

    equations = []
    for a, b in first.presentation.relations:
        rows = first.dim(a) * third.dim(b)
        if not rows:
            continue

        block = np.zeros((rows, unknowns), dtype=np.int64)
        for k in range(a, b):
            left = field.to_int(first.path(a, k))
            right = field.to_int(third.path(k + 1, b))
            block[:, offsets[k - 1]:offsets[k]] += np.kron(left, right.T).reshape((rows, sizes[k - 1]))

        equations.append(block)

    if not equations:
        return field.identity(unknowns)

    return field.null_space(field.matrix(np.vstack(equations)))


def coboundary_rank(first, third):
    """Dimension of the split gluings xi_v = A_v h_{v+1} - h_v C_v"""
    field = first.field
    n = first.presentation.n
    xi_sizes = _xi_sizes(first, third)
    xi_offsets = _offsets(xi_sizes)
    h_sizes = [first.dim(v) * third.dim(v) for v in first.presentation.vertices]
    h_offsets = _offsets(h_sizes)
    if not xi_offsets[-1] or not h_offsets[-1]:
        return 0

    matrix = np.zeros((int(xi_offsets[-1]), int(h_offsets[-1])), dtype=np.int64)
    for k in range(1, n):
        rows = xi_sizes[k - 1]
        if not rows:
            continue

        upper = np.kron(field.to_int(first.arrow(k)), np.eye(third.dim(k + 1), dtype=np.int64))
        lower = np.kron(np.eye(first.dim(k), dtype=np.int64), field.to_int(third.arrow(k)).T)
        matrix[xi_offsets[k - 1]:xi_offsets[k], h_offsets[k]:h_offsets[k + 1]] += upper.reshape(
            (rows, h_sizes[k]))
        matrix[xi_offsets[k - 1]:xi_offsets[k], h_offsets[k - 1]:h_offsets[k]] -= lower.reshape(
            (rows, h_sizes[k - 1]))

    return field.rank(field.matrix(matrix))


def ext_dimension(third, first):
    """dim Ext^1(third, first) by counting cocycles modulo coboundaries"""
    return cocycle_space(first, third).shape[0] - coboundary_rank(first, third)


def glue(first, third, xi):
    """Extension of third by first with gluing vector xi (row-major, arrow by arrow)"""
    field = first.field
    presentation = first.presentation
    sizes = _xi_sizes(first, third)
    offsets = _offsets(sizes)
    dims = [first.dim(v) + third.dim(v) for v in presentation.vertices]
    arrows = []
    for k in range(1, presentation.n):
        arrow = field.zeros(dims[k - 1], dims[k])
        fa, ta = first.dim(k), first.dim(k + 1)
        arrow[:fa, :ta] = first.arrow(k)
        arrow[fa:, ta:] = third.arrow(k)
        arrow[:fa, ta:] = xi[offsets[k - 1]:offsets[k]].reshape((fa, third.dim(k + 1)))
        arrows.append(arrow)

    middle = Module(presentation, field, dims, arrows)
    inflation = []
    deflation = []
    for v in presentation.vertices:
        inclusion = field.zeros(dims[v - 1], first.dim(v))
        inclusion[:first.dim(v), :] = field.identity(first.dim(v))
        inflation.append(inclusion)
        projection = field.zeros(third.dim(v), dims[v - 1])
        projection[:, first.dim(v):] = field.identity(third.dim(v))
        deflation.append(projection)

    return SES(Morphism(first, middle, inflation), Morphism(middle, third, deflation))


def glued_extensions(first, third):
    """Every extension first -> E -> third obtained from a cocycle, the zero cocycle first"""
    field = first.field
    basis = cocycle_space(first, third)
    width = int(_offsets(_xi_sizes(first, third))[-1])
    for coefficients in field.vectors(basis.shape[0]):
        xi = field.zeros(1, width)
        for coefficient, row in zip(coefficients, basis):
            if coefficient:
                xi = xi + row.reshape((1, -1)) * field.GF(coefficient)

        yield glue(first, third, xi.reshape(-1))
