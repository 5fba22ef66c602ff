"""
Smith normal form with transformation matrices, and finite abelian groups
presented as cokernels.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, Sequence, Tuple

from ..utils.errors import GroupError, MatrixError
from .int_matrix import IntMatrix

logger = logging.getLogger(__name__)

Label = Tuple[int, ...]


@dataclass(frozen=True)
class SmithDecomposition:
    """
    Result of smith_normal_form: left @ matrix @ right == diagonal.

    Attributes:
        left: Unimodular row transform U
        diagonal: Diagonal matrix D with d_i | d_{i+1} and d_i >= 0
        right: Unimodular column transform V
        left_inverse: U^{-1}, tracked alongside U
    """

    left: IntMatrix
    diagonal: IntMatrix
    right: IntMatrix
    left_inverse: IntMatrix

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.diagonal.diagonal()


def smith_normal_form(matrix: IntMatrix) -> SmithDecomposition:
    """
    Compute the Smith normal form of an integer matrix.

    The pivot is always the nonzero entry of least absolute value in the
    remaining block (first in row-major order), so the output is a
    deterministic function of the input.

    Args:
        matrix: Any integer matrix

    Returns:
        SmithDecomposition with unimodular U, V and U^{-1}
    """
    nrows, ncols = matrix.shape
    a = matrix.to_list()
    u = IntMatrix.identity(nrows).to_list()
    u_inv = IntMatrix.identity(nrows).to_list()
    v = IntMatrix.identity(ncols).to_list()
    operations = 0

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]
        for row in u_inv:
            row[i], row[k] = row[k], row[i]

    def add_row(target, source, factor):
        # row_target += factor * row_source
        for j in range(ncols):
            a[target][j] += factor * a[source][j]
        for j in range(nrows):
            u[target][j] += factor * u[source][j]
        for row in u_inv:
            row[source] -= factor * row[target]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_col(target, source, factor):
        for row in a:
            row[target] += factor * row[source]
        for row in v:
            row[target] += factor * row[source]

    for t in range(min(nrows, ncols)):
        while True:
            pivot = None
            for i in range(t, nrows):
                for j in range(t, ncols):
                    if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])

            clean = True
            for i in range(t + 1, nrows):
                q = a[i][t] // a[t][t]
                if q:
                    add_row(i, t, -q)
                    operations += 1
                if a[i][t] != 0:
                    clean = False
            for j in range(t + 1, ncols):
                q = a[t][j] // a[t][t]
                if q:
                    add_col(j, t, -q)
                    operations += 1
                if a[t][j] != 0:
                    clean = False
            if not clean:
                continue

            offending = next(
                (i for i in range(t + 1, nrows)
                 for j in range(t + 1, ncols) if a[i][j] % a[t][t] != 0),
                None,
            )
            if offending is None:
                break
            add_row(t, offending, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
            for row in u_inv:
                row[t] = -row[t]

    logger.debug("Smith normal form of %dx%d matrix after %d eliminations", nrows, ncols, operations)
    return SmithDecomposition(
        left=IntMatrix(u, ncols=nrows),
        diagonal=IntMatrix(a, ncols=ncols),
        right=IntMatrix(v, ncols=ncols),
        left_inverse=IntMatrix(u_inv, ncols=nrows),
    )


@dataclass(frozen=True)
class AbelianGroupStructure:
    """
    A finite abelian group Z^n / M Z^n in invariant-factor form.

    Elements are labelled by coordinate tuples (h_1, ..., h_k) with
    0 <= h_i < d_i, one coordinate per invariant factor d_i > 1.

    Attributes:
        invariant_factors: The nontrivial invariant factors, each dividing the next
    """

    invariant_factors: Tuple[int, ...]
    _coordinate_rows: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False, compare=False)
    _lift_columns: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False, compare=False)
    _ambient_rank: int = field(default=0, repr=False, compare=False)

    def __post_init__(self):
        for d in self.invariant_factors:
            if d < 2:
                raise GroupError(f"Invariant factors must exceed 1, got {d}")
        for d, e in zip(self.invariant_factors, self.invariant_factors[1:]):
            if e % d != 0:
                raise GroupError(f"Invariant factors must divide each other, got {d} then {e}")

    @property
    def order(self) -> int:
        result = 1
        for d in self.invariant_factors:
            result *= d
        return result

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    @property
    def zero(self) -> Label:
        return (0,) * len(self.invariant_factors)

    def elements(self) -> Iterator[Label]:
        """Yield every label in lexicographic order, starting with zero."""
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def normalize(self, label: Sequence[int]) -> Label:
        if len(label) != len(self.invariant_factors):
            raise GroupError(f"Label {tuple(label)} does not match invariant factors {self.invariant_factors}")
        return tuple(int(h) % d for h, d in zip(label, self.invariant_factors))

    def add(self, a: Sequence[int], b: Sequence[int]) -> Label:
        return self.normalize([x + y for x, y in zip(a, b)])

    def negate(self, a: Sequence[int]) -> Label:
        return self.normalize([-x for x in a])

    def scale(self, k: int, a: Sequence[int]) -> Label:
        return self.normalize([k * x for x in a])

    def coordinates(self, vector: Sequence[int]) -> Label:
        """
        Class of an integer vector in the cokernel.

        Args:
            vector: Vector in Z^n

        Returns:
            Its label
        """
        if len(vector) != self._ambient_rank:
            raise GroupError(f"Vector of length {len(vector)} is not in Z^{self._ambient_rank}")
        return tuple(
            sum(c * x for c, x in zip(row, vector)) % d
            for row, d in zip(self._coordinate_rows, self.invariant_factors)
        )

    def lift(self, label: Sequence[int]) -> Tuple[int, ...]:
        """
        An integer vector whose class is the given label.

        Args:
            label: Group element label

        Returns:
            Vector in Z^n with coordinates(vector) == label
        """
        label = self.normalize(label)
        result = [0] * self._ambient_rank
        for h, column in zip(label, self._lift_columns):
            for i, c in enumerate(column):
                result[i] += h * c
        return tuple(result)


def cokernel(matrix: IntMatrix) -> AbelianGroupStructure:
    """
    Structure of coker(M) = Z^n / M Z^n for a nonsingular square matrix.

    Args:
        matrix: Square IntMatrix with nonzero determinant

    Returns:
        AbelianGroupStructure with coordinate and lift maps

    Raises:
        MatrixError: If the matrix is not square or is singular
    """
    matrix.require_square()
    snf = smith_normal_form(matrix)
    factors = snf.invariant_factors
    if any(d == 0 for d in factors):
        raise MatrixError("Matrix is singular; its cokernel is infinite")
    keep = [i for i, d in enumerate(factors) if d > 1]
    left = snf.left.to_list()
    left_inverse = snf.left_inverse
    return AbelianGroupStructure(
        invariant_factors=tuple(factors[i] for i in keep),
        _coordinate_rows=tuple(tuple(left[i]) for i in keep),
        _lift_columns=tuple(left_inverse.column(i) for i in keep),
        _ambient_rank=matrix.nrows,
    )
