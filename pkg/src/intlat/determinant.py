"""
Exact determinants, adjugates and definiteness tests.
"""

from typing import List, Union

from ..utils.errors import MatrixError
from .int_matrix import IntMatrix


def _bareiss(rows: List[List[int]]) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(matrix: Union[IntMatrix, List[List[int]]]) -> int:
    """
    Compute the determinant of a square integer matrix exactly.

    Args:
        matrix: Square IntMatrix (or list of rows)

    Returns:
        The determinant; 1 for the empty matrix
    """
    if not isinstance(matrix, IntMatrix):
        matrix = IntMatrix(matrix)
    matrix.require_square()
    return _bareiss(matrix.to_list())


def adjugate(matrix: IntMatrix) -> IntMatrix:
    """
    Compute the adjugate (transposed cofactor matrix).

    The result satisfies matrix @ adj == det * I.

    Args:
        matrix: Square IntMatrix

    Returns:
        The adjugate matrix
    """
    matrix.require_square()
    n = matrix.nrows
    if n == 0:
        return IntMatrix.zeros(0, 0)
    if n == 1:
        return IntMatrix([[1]])
    rows = matrix.to_list()
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [rows[r][c] for c in range(n) if c != j]
                for r in range(n) if r != i
            ]
            cofactor = _bareiss(minor)
            adj[j][i] = -cofactor if (i + j) % 2 else cofactor
    return IntMatrix(adj)


def leading_minors(matrix: IntMatrix) -> List[int]:
    """Determinants of the k x k upper-left blocks for k = 1..n."""
    matrix.require_square()
    rows = matrix.to_list()
    return [_bareiss([row[:k] for row in rows[:k]]) for k in range(1, matrix.nrows + 1)]


def is_negative_definite(matrix: IntMatrix) -> bool:
    """
    Test negative definiteness of a symmetric integer matrix.

    Uses Sylvester's criterion on the negated matrix: every leading minor of
    -matrix must be positive. The empty matrix is vacuously definite.

    Args:
        matrix: Square IntMatrix

    Returns:
        True if the matrix is negative definite

    Raises:
        MatrixError: If the matrix is not symmetric
    """
    if not matrix.is_symmetric():
        raise MatrixError(f"Definiteness needs a symmetric matrix, got {matrix.to_list()}")
    return all(minor > 0 for minor in leading_minors(-matrix))
