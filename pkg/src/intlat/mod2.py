"""
Linear algebra over GF(2).
"""

from typing import Sequence, Tuple

import numpy as np

from ..utils.errors import MatrixError
from .int_matrix import IntMatrix


def solve_mod2(matrix: IntMatrix, rhs: Sequence[int]) -> Tuple[int, ...]:
    """
    Solve matrix @ x = rhs over GF(2).

    Args:
        matrix: Square integer matrix, invertible mod 2
        rhs: Integer right-hand side

    Returns:
        The unique solution as a tuple of 0/1 entries

    Raises:
        MatrixError: If the matrix is singular mod 2
    """
    matrix.require_square()
    n = matrix.nrows
    if len(rhs) != n:
        raise MatrixError(f"Right-hand side of length {len(rhs)} does not match rank {n}")
    if n == 0:
        return ()
    augmented = np.zeros((n, n + 1), dtype=np.uint8)
    augmented[:, :n] = np.array([[x % 2 for x in row] for row in matrix.to_list()], dtype=np.uint8)
    augmented[:, n] = np.array([int(b) % 2 for b in rhs], dtype=np.uint8)

    for col in range(n):
        pivots = np.nonzero(augmented[col:, col])[0]
        if len(pivots) == 0:
            raise MatrixError("Matrix is singular mod 2 (even determinant)")
        pivot = col + int(pivots[0])
        if pivot != col:
            augmented[[col, pivot]] = augmented[[pivot, col]]
        for row in range(n):
            if row != col and augmented[row, col]:
                augmented[row] ^= augmented[col]
    return tuple(int(x) for x in augmented[:, n])
