"""
The finite-concordance-order obstruction and its report.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..diagram import GoeritzForm, PlanarDiagram, build_faces, definite_goeritz
from ..dinv import all_correction_terms, lattice_context
from ..intlat import AbelianGroupStructure, IntMatrix
from ..intlat.smith import Label
from ..utils.errors import PDParseError
from ..utils.helpers import parse_rational
from .invariants import D_invariant
from .primes import PrimePowerSpec, factorize, max_exponent

logger = logging.getLogger(__name__)


class Verdict(Enum):
    INFINITE_ORDER = "infinite_order"
    NO_OBSTRUCTION = "no_obstruction"
    NOT_APPLICABLE_NONCYCLIC = "not_applicable_noncyclic"


@dataclass(frozen=True)
class DValue:
    """One computed D_{p^e}."""

    p: int
    e: int
    value: Fraction

    @property
    def q(self) -> int:
        return self.p ** self.e


@dataclass(frozen=True)
class ObstructionReport:
    """
    Everything computed for one knot.

    Attributes:
        name: Knot name
        det: |det| of the form, the knot determinant
        factorization: (p, m) pairs of det
        h2_structure: Cokernel of the form
        d_table: Correction term of every Spin^c structure, in label order
        D_values: D_1 first, then D_{p^e} by prime and exponent
        verdict: Outcome of the obstruction
        mirror_flag: True if the form belongs to the mirror knot
        form: The Goeritz form used
    """

    name: str
    det: int
    factorization: Tuple[Tuple[int, int], ...]
    h2_structure: AbelianGroupStructure
    d_table: Dict[Label, Fraction]
    D_values: Tuple[DValue, ...]
    verdict: Verdict
    mirror_flag: bool
    form: GoeritzForm = field(repr=False)

    @property
    def nonzero_D(self) -> List[DValue]:
        return [d for d in self.D_values if d.value != 0]

    def D(self, q: int) -> Optional[Fraction]:
        """The computed D_q, or None if q was not evaluated."""
        for d in self.D_values:
            if d.q == q:
                return d.value
        return None


def _as_form(source: Union[PlanarDiagram, GoeritzForm, IntMatrix, Sequence]) -> GoeritzForm:
    if isinstance(source, GoeritzForm):
        return source
    if isinstance(source, PlanarDiagram):
        return definite_goeritz(source, build_faces(source))
    if isinstance(source, IntMatrix):
        return GoeritzForm(source)
    return GoeritzForm.from_rows(source)


def obstruction(
    source: Union[PlanarDiagram, GoeritzForm, IntMatrix, Sequence],
    name: str = "knot",
) -> ObstructionReport:
    """
    Run the D-invariant obstruction on a diagram or a knot form.

    Args:
        source: PlanarDiagram, validated GoeritzForm, or a matrix
        name: Name recorded in the report

    Returns:
        ObstructionReport
    """
    form = _as_form(source)
    context = lattice_context(form)
    det = form.order
    factors = factorize(det)
    table = all_correction_terms(form)
    d_table = {label: term.value for label, term in table.items()}

    if not context.group.is_cyclic:
        logger.info("%s: cokernel %s is not cyclic", name, context.group.invariant_factors)
        return ObstructionReport(
            name=name, det=det, factorization=tuple(factors), h2_structure=context.group,
            d_table=d_table, D_values=(), verdict=Verdict.NOT_APPLICABLE_NONCYCLIC,
            mirror_flag=form.mirror_flag, form=form,
        )

    specs = [PrimePowerSpec.trivial()]
    for p, m in factors:
        specs += [PrimePowerSpec(p=p, e=e, m=m) for e in range(1, max_exponent(m) + 1)]
    values = tuple(DValue(s.p, s.e, D_invariant(form, s, table)) for s in specs)
    verdict = Verdict.INFINITE_ORDER if any(v.value != 0 for v in values) else Verdict.NO_OBSTRUCTION
    logger.info("%s: det %d, verdict %s", name, det, verdict.value)
    return ObstructionReport(
        name=name, det=det, factorization=tuple(factors), h2_structure=context.group,
        d_table=d_table, D_values=values, verdict=verdict,
        mirror_flag=form.mirror_flag, form=form,
    )


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool):
        raise PDParseError(f"Expected {what} must be an integer, got {value!r}")
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise PDParseError(f"Expected {what} must be an integer, got {value!r}") from e


def verify_expected(report: ObstructionReport, expected: Mapping[str, Any]) -> Tuple[bool, str]:
    """
    Compare a report with expected values.

    The determinant must agree exactly. The listed D values must agree up to
    one global sign, and every other computed D value must be zero.

    Args:
        report: Computed report
        expected: {"det": int, "D": {"q": value, ...}}

    Returns:
        (matched, human-readable reason)

    Raises:
        PDParseError: If the expected values cannot be read
    """
    det = expected.get("det")
    if det is not None and _as_int(det, "det") != report.det:
        return False, f"det {report.det} != expected {det}"
    wanted = {_as_int(q, "D key"): parse_rational(v) for q, v in (expected.get("D") or {}).items()}
    computed = {d.q: d.value for d in report.D_values}
    missing = sorted(q for q in wanted if q not in computed)
    if missing:
        return False, f"D_{missing[0]} was not computed"

    for sign in (1, -1):
        if all(computed[q] == sign * v for q, v in wanted.items()) and all(
            value == 0 for q, value in computed.items() if q not in wanted
        ):
            return True, "match" if sign == 1 else "match (mirror sign)"
    differing = sorted(set(q for q, v in computed.items() if v != 0) | set(wanted))
    return False, "D values differ at q in " + ", ".join(str(q) for q in differing)
