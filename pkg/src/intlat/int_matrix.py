"""
Dense exact integer matrices.

Entries are Python integers held in a numpy object array, so products never
overflow and every value stays exact.
"""

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..utils.errors import MatrixError


class IntMatrix:
    """
    Immutable dense matrix of arbitrary-precision integers.

    Rows and columns are indexed from zero. The empty 0 x 0 matrix is allowed
    and represents the rank-0 form.
    """

    def __init__(self, rows: Iterable[Sequence[int]], ncols: int = None):
        """
        Build a matrix from a sequence of rows.

        Args:
            rows: Iterable of integer rows, all the same length
            ncols: Column count, only needed when there are no rows

        Raises:
            MatrixError: If rows are ragged or entries are not integers
        """
        rows = [list(row) for row in rows]
        width = len(rows[0]) if rows else (ncols or 0)
        for row in rows:
            if len(row) != width:
                raise MatrixError(f"Ragged matrix: expected rows of length {width}, got {len(row)}")
            for entry in row:
                if isinstance(entry, bool) or not isinstance(entry, (int, np.integer)):
                    raise MatrixError(f"Matrix entries must be integers, got {entry!r}")
        self._data = np.zeros((len(rows), width), dtype=object)
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                self._data[i, j] = int(entry)
        self._data.setflags(write=False)

    @classmethod
    def _wrap(cls, array: np.ndarray) -> "IntMatrix":
        matrix = cls.__new__(cls)
        data = np.array(array, dtype=object, copy=True)
        for index in np.ndindex(data.shape):
            data[index] = int(data[index])
        data.setflags(write=False)
        matrix._data = data
        return matrix

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def nrows(self) -> int:
        return self._data.shape[0]

    @property
    def ncols(self) -> int:
        return self._data.shape[1]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def require_square(self) -> None:
        if not self.is_square():
            raise MatrixError(f"Matrix must be square, got shape {self.shape}")

    def is_symmetric(self) -> bool:
        return self.is_square() and np.array_equal(self._data, self._data.T)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        return self._data[index]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self._data[:, j].tolist())

    def to_list(self) -> List[List[int]]:
        return [list(map(int, row)) for row in self._data.tolist()]

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(int(self._data[i, i]) for i in range(min(self.shape)))

    def transpose(self) -> "IntMatrix":
        return IntMatrix._wrap(self._data.T)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __neg__(self) -> "IntMatrix":
        return IntMatrix._wrap(-self._data)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise MatrixError(f"Shape mismatch: {self.shape} + {other.shape}")
        return IntMatrix._wrap(self._data + other._data)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __mul__(self, scalar: int) -> "IntMatrix":
        return IntMatrix._wrap(self._data * int(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise MatrixError(f"Shape mismatch: {self.shape} @ {other.shape}")
        if self.ncols == 0:
            return IntMatrix.zeros(self.nrows, other.ncols)
        return IntMatrix._wrap(np.dot(self._data, other._data))

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """
        Multiply the matrix by an integer column vector.

        Args:
            vector: Integer sequence of length ncols

        Returns:
            Tuple of length nrows
        """
        if len(vector) != self.ncols:
            raise MatrixError(f"Vector of length {len(vector)} does not match {self.ncols} columns")
        if self.ncols == 0:
            return (0,) * self.nrows
        product = np.dot(self._data, np.array([int(v) for v in vector], dtype=object))
        return tuple(int(v) for v in product.tolist())

    def bilinear(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Return x^T M y."""
        return sum(int(a) * b for a, b in zip(x, self.apply(y)))

    def congruent(self, change: "IntMatrix") -> "IntMatrix":
        """Return change^T M change."""
        return change.T @ self @ change

    def block_sum(self, other: "IntMatrix") -> "IntMatrix":
        """Block-diagonal sum of two matrices."""
        r1, c1 = self.shape
        r2, c2 = other.shape
        data = np.zeros((r1 + r2, c1 + c2), dtype=object)
        data[:r1, :c1] = self._data
        data[r1:, c1:] = other._data
        return IntMatrix._wrap(data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._data, other._data)

    def __hash__(self) -> int:
        return hash((self.shape, tuple(tuple(row) for row in self._data.tolist())))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_list()})"
