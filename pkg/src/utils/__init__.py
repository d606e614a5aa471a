"""Text-format parsing and console formatting helpers."""

from .format_utils import fmt_check, fmt_optional, fmt_parts, fmt_tableau_grid
from .parsing import parse_composition, parse_partition, parse_pattern, parse_tableau

__all__ = [
    'fmt_check', 'fmt_optional', 'fmt_parts', 'fmt_tableau_grid',
    'parse_composition', 'parse_partition', 'parse_pattern', 'parse_tableau'
]
