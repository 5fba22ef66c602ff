"""
Batch processing of knot records with an optional worker pool.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Sequence, Tuple

from ..grs import obstruction, verify_expected
from ..utils.errors import ObstructionError
from .records import KnotRecord
from .serialize import report_to_dict

logger = logging.getLogger(__name__)


def process_line(item: Tuple[int, str]) -> Dict[str, Any]:
    """
    Compute the output record for one input line.

    Errors are captured in the output instead of being raised.

    Args:
        item: (line number, raw JSON text)

    Returns:
        Report dictionary, or {"name", "error"} on failure
    """
    number, line = item
    name = f"line {number}"
    try:
        record = KnotRecord.from_json(line)
        name = record.name
        report = obstruction(record.to_input(), name=record.name)
        check = None
        if record.expected is not None:
            check = verify_expected(report, record.expected)
    except ObstructionError as e:
        logger.info("%s failed at %s: %s", name, e.stage, e.message)
        return {"name": name, "error": e.to_dict()}

    result = report_to_dict(report)
    if check is not None:
        matched, detail = check
        result["check"] = {"status": "match" if matched else "mismatch", "detail": detail}
    return result


def read_lines(lines: Sequence[str]) -> List[Tuple[int, str]]:
    """Number the non-blank lines of a JSON-lines file from 1."""
    return [(k, line) for k, line in enumerate(lines, start=1) if line.strip()]


def run_batch(items: Sequence[Tuple[int, str]], jobs: int = 1) -> List[Dict[str, Any]]:
    """
    Process records, in parallel when jobs > 1.

    Results are returned in input order whatever the worker count.

    Args:
        items: Numbered input lines
        jobs: Number of worker processes

    Returns:
        One output dictionary per input line
    """
    if jobs <= 1 or len(items) <= 1:
        return [process_line(item) for item in items]
    logger.info("Processing %d records with %d workers", len(items), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(process_line, items))
