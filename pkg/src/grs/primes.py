"""
Prime factorisation and prime-power parameters.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy import factorint, isprime

from ..utils.errors import GroupError


def factorize(n: int) -> List[Tuple[int, int]]:
    """
    Prime factorisation of a positive integer.

    Args:
        n: Integer N >= 1

    Returns:
        (prime, multiplicity) pairs in increasing prime order; [] for 1

    Raises:
        GroupError: If n < 1
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise GroupError(f"Can only factorize positive integers, got {n!r}")
    return sorted((int(p), int(m)) for p, m in factorint(n).items())


def max_exponent(multiplicity: int) -> int:
    """Largest exponent e with D_{p^e} in the obstruction range."""
    return (multiplicity + 1) // 2


@dataclass(frozen=True)
class PrimePowerSpec:
    """
    A prime power q = p^e at which a D invariant is evaluated.

    Attributes:
        p: A prime dividing det(K), or 1
        e: Exponent, 0 <= e <= (m + 1) // 2
        m: Multiplicity of p in det(K); None leaves it to be read off the form
    """

    p: int
    e: int
    m: Optional[int] = None

    def __post_init__(self):
        if self.e < 0:
            raise GroupError(f"Exponent must be nonnegative, got {self.e}")
        if self.p == 1:
            if self.e != 0:
                raise GroupError(f"p = 1 requires e = 0, got e = {self.e}")
            return
        if not isprime(self.p):
            raise GroupError(f"{self.p} is not prime")
        if self.m is not None and self.e > max_exponent(self.m):
            raise GroupError(
                f"Exponent {self.e} outside the range 0..{max_exponent(self.m)} for {self.p}^{self.m}"
            )

    @property
    def q(self) -> int:
        return self.p ** self.e

    @classmethod
    def trivial(cls) -> "PrimePowerSpec":
        return cls(p=1, e=0, m=0)
