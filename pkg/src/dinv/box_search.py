"""
Exhaustive search over a box of lattice points.

Used as an independent oracle for the sphere decoder. The box is centred at
the rounded center of the problem and scanned in vectorised chunks with
exact integer arithmetic.
"""

import itertools
import logging
import math
from fractions import Fraction

import numpy as np

from ..utils.errors import OracleLimitError
from .search_base import BaseSearch, SearchProblem, SearchResult

logger = logging.getLogger(__name__)

# Points per vectorised chunk.
_CHUNK_POINTS = 200_000
_INT64_SAFE = 2 ** 62


class BoxSearch(BaseSearch):
    """
    Minimise the objective over round(center) + [-bound, bound]^n.
    """

    def __init__(self, bound: int):
        """
        Initialize the box search.

        Args:
            bound: Half-width B of the box

        Raises:
            OracleLimitError: If the bound is negative
        """
        super().__init__()
        if bound < 0:
            raise OracleLimitError(f"Box bound must be nonnegative, got {bound}")
        self._name = "Box Search"
        self.bound = bound

    def _run(self, problem: SearchProblem):
        n = problem.rank
        if n == 0:
            return SearchResult(distance=Fraction(0), minimizers=((),), nodes=0)

        # Scale the center to integers: scale * (v - c) = scale * v - numerators.
        scale = 1
        for c in problem.center:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        shifted = [int(c * scale) for c in problem.center]
        origin = [round(c) for c in problem.center]
        gram = problem.gram.to_list()

        width = 2 * self.bound + 1
        reach = max(abs(scale * (o + s * self.bound) - h)
                    for o, h in zip(origin, shifted) for s in (-1, 1))
        magnitude = n * n * max(abs(x) for row in gram for x in row) * reach * reach
        dtype = np.int64 if magnitude < _INT64_SAFE else object
        gram_array = np.array(gram, dtype=dtype)

        inner = 1
        while inner < n and width ** (inner + 1) <= _CHUNK_POINTS:
            inner += 1
        offsets = np.array(list(itertools.product(range(-self.bound, self.bound + 1), repeat=inner)),
                           dtype=dtype).reshape(-1, inner)

        best = None
        minimizers = []
        nodes = 0
        for head in itertools.product(range(-self.bound, self.bound + 1), repeat=n - inner):
            points = np.empty((offsets.shape[0], n), dtype=dtype)
            points[:, : n - inner] = np.array(head, dtype=dtype)
            points[:, n - inner:] = offsets
            points += np.array(origin, dtype=dtype)
            w = points * scale - np.array(shifted, dtype=dtype)
            values = np.einsum("ki,ij,kj->k", w, gram_array, w) if dtype is np.int64 else \
                np.array([int(row.dot(gram_array).dot(row)) for row in w], dtype=object)
            nodes += len(values)
            chunk_best = min(values.tolist())
            if best is None or chunk_best < best:
                best = chunk_best
                minimizers = []
                yield self._step(tuple(int(x) for x in points[values.tolist().index(chunk_best)]),
                                 Fraction(best, scale * scale))
            if chunk_best == best:
                for k in np.flatnonzero(values == best):
                    minimizers.append(tuple(int(x) for x in points[k]))

        logger.debug("Box search: rank %d, bound %d, %d points", n, self.bound, nodes)
        return SearchResult(
            distance=Fraction(best, scale * scale),
            minimizers=tuple(minimizers),
            nodes=nodes,
        )
