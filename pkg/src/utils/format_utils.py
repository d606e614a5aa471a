"""Formatting utilities for consistent console display of combinatorial objects."""

from typing import Iterable, List, Optional, Sequence


def fmt_optional(value: Optional[object], none_text: str = "-") -> str:
    """
    Format an optional value, or return a placeholder if None.

    Args:
        value: Value to format, or None
        none_text: Text to display when value is None - default '-'

    Examples:
        >>> fmt_optional(None)
        '-'
        >>> fmt_optional(3)
        '3'
    """
    if value is None:
        return none_text
    return str(value)


def fmt_parts(parts: Optional[Iterable[int]], none_text: str = "-") -> str:
    """
    Format a partition, composition or base list as '(3,2,1)'.

    Examples:
        >>> fmt_parts((3, 2, 1))
        '(3,2,1)'
        >>> fmt_parts([])
        '()'
    """
    if parts is None:
        return none_text
    return '(' + ','.join(str(p) for p in parts) + ')'


def fmt_check(flag: bool) -> str:
    """Status marker used in console reports."""
    return "✓" if flag else "✗"


def fmt_tableau_grid(rows: Sequence[Sequence[int]], indent: str = "  ") -> List[str]:
    """
    Lay out tableau rows as an aligned grid, one line per row.

    Examples:
        >>> fmt_tableau_grid([(1, 2, 10), (3,)])
        ['   1  2 10', '   3']
    """
    if not rows:
        return [indent + "(empty)"]
    width = max(len(str(x)) for row in rows for x in row)
    return [indent + ' '.join(str(x).rjust(width) for x in row) for row in rows]
