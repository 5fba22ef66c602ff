"""
Common machinery for lattice searches.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..intlat import IntMatrix
from ..utils.errors import MatrixError

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class SearchProblem:
    """
    Minimise (v - center)^T gram (v - center) over integer vectors v.

    Attributes:
        gram: Positive-definite integer matrix
        center: Rational target point
    """

    gram: IntMatrix
    center: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.center) != self.gram.nrows:
            raise MatrixError(
                f"Center of length {len(self.center)} does not match rank {self.gram.nrows}"
            )

    @property
    def rank(self) -> int:
        return self.gram.nrows

    def distance(self, v: Vector) -> Fraction:
        """Exact value of the objective at v."""
        y = [Fraction(x) - c for x, c in zip(v, self.center)]
        rows = self.gram.to_list()
        return sum(
            (y[i] * rows[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )


@dataclass(frozen=True)
class SearchResult:
    """
    Outcome of a search.

    Attributes:
        distance: The minimum objective value found
        minimizers: Every vector attaining it, in discovery order
        nodes: Number of candidates examined
    """

    distance: Fraction
    minimizers: Tuple[Vector, ...]
    nodes: int


class BaseSearch(ABC):
    """
    Base class for lattice searches.
    Records a step every time the incumbent improves.
    """

    def __init__(self):
        """Initialize the search."""
        self._name = self.__class__.__name__
        self._steps = []

    @property
    def name(self) -> str:
        return self._name

    def execute(self, problem: SearchProblem) -> SearchResult:
        """
        Run the search on a problem.

        Args:
            problem: The SearchProblem to solve

        Returns:
            SearchResult with every minimiser
        """
        self._steps = []
        run = self._run(problem)
        while True:
            try:
                step = next(run)
            except StopIteration as stop:
                return stop.value
            self._steps.append(step)

    @abstractmethod
    def _run(self, problem: SearchProblem) -> Iterator[Dict[str, Any]]:
        """
        Run the search logic.
        Must be implemented by subclasses: yield a step dictionary for each
        improvement and return the SearchResult.

        Args:
            problem: The SearchProblem to solve

        Yields:
            Dictionary containing step information
        """
        pass

    def _step(self, vector: Vector, distance: Fraction) -> Dict[str, Any]:
        return {
            "algorithm": self._name,
            "step_number": len(self._steps) + 1,
            "description": f"New incumbent at distance {distance}",
            "vector": vector,
            "distance": distance,
        }

    def get_steps(self) -> List[Dict[str, Any]]:
        """
        Get all improvement steps of the last run.

        Returns:
            List of step dictionaries
        """
        return self._steps

    def get_step(self, index: int) -> Optional[Dict[str, Any]]:
        if 0 <= index < len(self._steps):
            return self._steps[index]
        return None
