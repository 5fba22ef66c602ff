"""
Exact closest-vector enumeration (Fincke-Pohst with Schnorr-Euchner order).
"""

import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from ..utils.errors import MatrixError
from .search_base import BaseSearch, SearchProblem, SearchResult

logger = logging.getLogger(__name__)


def ldl_decomposition(problem: SearchProblem) -> Tuple[List[Fraction], List[List[Fraction]]]:
    """
    Rational decomposition gram = R^T diag(D) R with R unit upper triangular.

    Then (v - c)^T gram (v - c) = sum_i D_i (y_i + sum_{j>i} R_ij y_j)^2
    with y = v - c.

    Returns:
        (D, R)

    Raises:
        MatrixError: If the matrix is not positive definite
    """
    n = problem.rank
    a = [[Fraction(x) for x in row] for row in problem.gram.to_list()]
    pivots = [Fraction(0)] * n
    r = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        pivots[i] = a[i][i]
        if pivots[i] <= 0:
            raise MatrixError("Search matrix is not positive definite")
        for j in range(i + 1, n):
            r[i][j] = a[i][j] / a[i][i]
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] -= a[j][i] * r[i][k]
    return pivots, r


class SphereDecoder(BaseSearch):
    """
    Exact enumeration of all lattice points closest to a rational center.

    Candidates at each level are visited nearest-first; a branch is cut as
    soon as its partial sum exceeds the incumbent, so equal-distance points
    are all collected. The first complete descent is the Babai point, which
    seeds the radius.
    """

    def __init__(self):
        """Initialize the sphere decoder."""
        super().__init__()
        self._name = "Sphere Decoder"

    def _run(self, problem: SearchProblem):
        n = problem.rank
        if n == 0:
            return SearchResult(distance=Fraction(0), minimizers=((),), nodes=0)

        pivots, r = ldl_decomposition(problem)
        c = problem.center
        v = [0] * n
        state = {"best": None, "minimizers": [], "nodes": 0}

        def descend(level: int, partial: Fraction):
            t = c[level] - sum(
                (r[level][j] * (v[j] - c[j]) for j in range(level + 1, n)), Fraction(0)
            )
            lo = math.floor(t)
            hi = lo + 1
            down_open = up_open = True
            while down_open or up_open:
                if down_open and (not up_open or t - lo <= hi - t):
                    x, side = lo, "down"
                    lo -= 1
                else:
                    x, side = hi, "up"
                    hi += 1
                state["nodes"] += 1
                total = partial + pivots[level] * (x - t) ** 2
                best: Optional[Fraction] = state["best"]
                if best is not None and total > best:
                    if side == "down":
                        down_open = False
                    else:
                        up_open = False
                    continue
                v[level] = x
                if level > 0:
                    yield from descend(level - 1, total)
                elif best is None or total < best:
                    state["best"] = total
                    state["minimizers"] = [tuple(v)]
                    yield self._step(tuple(v), total)
                else:
                    state["minimizers"].append(tuple(v))

        yield from descend(n - 1, Fraction(0))
        logger.debug(
            "Sphere decoder: rank %d, %d nodes, %d minimizers",
            n, state["nodes"], len(state["minimizers"]),
        )
        return SearchResult(
            distance=state["best"],
            minimizers=tuple(state["minimizers"]),
            nodes=state["nodes"],
        )
