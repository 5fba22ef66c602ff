"""
Utilities Module
Configuration, error types and small shared helpers.
"""

from .config import Config, get_config, set_config
from .errors import (
    DiagramError,
    GroupError,
    MatrixError,
    ObstructionError,
    OracleLimitError,
    PDParseError,
)
from .helpers import format_rational, parse_rational

__all__ = [
    'Config', 'get_config', 'set_config',
    'ObstructionError', 'PDParseError', 'DiagramError', 'MatrixError',
    'GroupError', 'OracleLimitError',
    'format_rational', 'parse_rational',
]
