"""Prime field linear algebra.

Every matrix in the package is a ``galois`` field array. Row reduction and null spaces come from
``galois``; this wrapper only adds the zero-sized cases (``galois`` expects at least one row and
column) and a few compound helpers used by the module layer.
"""
from itertools import combinations, product

import galois
import numpy as np

from ..exception import PresentationError


MAX_CHARACTERISTIC = 97


class PrimeField:
    """The field of ``p`` elements"""

    def __init__(self, p=2):
        p = int(p)
        if p > MAX_CHARACTERISTIC or not galois.is_prime(p):
            raise PresentationError("Field characteristic must be a prime at most {}, not {}"
                                    .format(MAX_CHARACTERISTIC, p))

        self.p = p
        self.GF = galois.GF(p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "PrimeField({})".format(self.p)

    # Construction
    def zeros(self, rows, cols):
        return self.GF.Zeros((rows, cols))

    def identity(self, size):
        if size == 0:
            return self.zeros(0, 0)

        return self.GF.Identity(size)

    def matrix(self, data, rows=None, cols=None):
        """Coerce integer data into a field matrix, reducing modulo p"""
        array = np.asarray(data, dtype=np.int64)
        if rows is not None:
            array = array.reshape((rows, cols))

        if array.ndim != 2:
            raise ValueError("Expected a two dimensional matrix, got shape {}".format(array.shape))

        return self.GF(np.mod(array, self.p))

    def scalar(self, value):
        return int(value) % self.p

    @staticmethod
    def to_int(matrix):
        return np.asarray(matrix.view(np.ndarray), dtype=np.int64)

    def block(self, rows):
        """Assemble a block matrix from a grid of field matrices"""
        return self.matrix(np.block([[self.to_int(m) for m in row] for row in rows]))

    def hstack(self, matrices, rows):
        matrices = [m for m in matrices if m.shape[1]]
        if not matrices:
            return self.zeros(rows, 0)

        return self.matrix(np.hstack([self.to_int(m) for m in matrices]))

    def vstack(self, matrices, cols):
        matrices = [m for m in matrices if m.shape[0]]
        if not matrices:
            return self.zeros(0, cols)

        return self.matrix(np.vstack([self.to_int(m) for m in matrices]))

    def kron(self, left, right):
        rows = left.shape[0] * right.shape[0]
        cols = left.shape[1] * right.shape[1]
        if not rows or not cols:
            return self.zeros(rows, cols)

        return self.matrix(np.kron(self.to_int(left), self.to_int(right)))

    # Arithmetic
    def matmul(self, left, right):
        if left.shape[1] != right.shape[0]:
            raise ValueError("Cannot multiply {} by {}".format(left.shape, right.shape))

        if not left.shape[0] or not left.shape[1] or not right.shape[1]:
            return self.zeros(left.shape[0], right.shape[1])

        return left @ right

    def chain(self, *matrices):
        """Product of matrices, right-most applied first"""
        result = matrices[-1]
        for matrix in reversed(matrices[:-1]):
            result = self.matmul(matrix, result)

        return result

    @staticmethod
    def is_zero(matrix):
        return not np.any(matrix.view(np.ndarray))

    @staticmethod
    def equal(left, right):
        return left.shape == right.shape and np.array_equal(left.view(np.ndarray), right.view(np.ndarray))

    # Row reduction
    def rref(self, matrix):
        """Return the nonzero rows of the reduced row echelon form and the pivot columns"""
        rows, cols = matrix.shape
        if not rows or not cols or self.is_zero(matrix):
            return self.zeros(0, cols), ()

        reduced = matrix.row_reduce()
        nonzero = np.any(reduced.view(np.ndarray), axis=1)
        reduced = reduced[nonzero]
        pivots = tuple(int(i) for i in np.argmax(reduced.view(np.ndarray) != 0, axis=1))
        return reduced, pivots

    def rank(self, matrix):
        return len(self.rref(matrix)[1])

    def null_space(self, matrix):
        """Basis rows of {x : matrix @ x = 0}, in reduced row echelon form"""
        rows, cols = matrix.shape
        if not cols:
            return self.zeros(0, 0)

        if not rows or self.is_zero(matrix):
            return self.identity(cols)

        if self.rank(matrix) == cols:
            return self.zeros(0, cols)

        return self.rref(matrix.null_space())[0]

    def column_space(self, matrix):
        """Basis rows (reduced) of the span of the columns"""
        return self.rref(matrix.T)[0]

    def quotient_map(self, basis, ambient):
        """Matrix of a surjection F^ambient -> F^(ambient - r) whose kernel is the row span of basis

        ``basis`` must be in reduced row echelon form. Returns the quotient matrix and its section,
        the embedding of the non-pivot coordinates.
        """
        pivots = [int(np.argmax(row.view(np.ndarray) != 0)) for row in basis]
        free = [c for c in range(ambient) if c not in pivots]
        selection = self.zeros(len(free), ambient)
        for row, column in enumerate(free):
            selection[row, column] = 1

        pivot_selection = self.zeros(len(pivots), ambient)
        for row, column in enumerate(pivots):
            pivot_selection[row, column] = 1

        projector = self.identity(ambient) - self.chain(basis.T, pivot_selection)
        return self.matmul(selection, projector), selection.T

    # Enumeration
    def subspaces(self, dim):
        """Every subspace of F^dim as reduced row echelon basis rows

        Ordered by dimension, then pivot pattern, then the free entries in lexicographic order.
        """
        for rank in range(dim + 1):
            for pivots in combinations(range(dim), rank):
                free_positions = [(row, column) for row, pivot in enumerate(pivots)
                                  for column in range(pivot + 1, dim) if column not in pivots]

                for values in product(range(self.p), repeat=len(free_positions)):
                    basis = self.zeros(rank, dim)
                    for row, pivot in enumerate(pivots):
                        basis[row, pivot] = 1

                    for (row, column), value in zip(free_positions, values):
                        basis[row, column] = value

                    yield basis

    def vectors(self, dim):
        """All coefficient vectors of length dim, lexicographic"""
        for values in product(range(self.p), repeat=dim):
            yield values
