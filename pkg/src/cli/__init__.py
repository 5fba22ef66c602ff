"""
CLI Module
Command-line front end: single knots, batch tables and the search oracle.
"""

from .records import KnotRecord
from .batch import process_line, read_lines, run_batch
from .obstruction_cli import cli, main

__all__ = ['KnotRecord', 'process_line', 'read_lines', 'run_batch', 'cli', 'main']
