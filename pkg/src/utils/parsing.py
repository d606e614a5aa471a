"""
Parsers for the text formats accepted on the command line.

- Partitions and compositions: "3,2,2,1" or "3 2 2 1"
- Tableaux: rows separated by '/', e.g. "1 2 5 / 3 4 / 6 8 / 7"
- Link patterns: blocks separated by '|', e.g. "1 2 5 | 3 8 | 6 7 | 4"
"""

import re
from typing import List, Optional

import config
from src.combinatorics.linkpatterns import LinkPattern, from_blocks
from src.combinatorics.shapes import Composition, Partition
from src.combinatorics.tableaux import StandardTableau
from src.errors import ParseError, SizeBoundError

_INT = re.compile(r'^\d+$')
_SEPARATORS = re.compile(r'[,\s]+')


def _integers(text: str, what: str) -> List[int]:
    tokens = [t for t in _SEPARATORS.split(text.strip()) if t]
    values = []
    for token in tokens:
        if not _INT.match(token):
            raise ParseError(f"Invalid {what} token {token!r} in {text!r}")
        values.append(int(token))
    return values


def _check_size(n: int, what: str, bound: Optional[int]):
    limit = config.PARSE_MAX_N if bound is None else bound
    if n > limit:
        raise SizeBoundError(f"parse {what}", n, limit)


def parse_composition(text: str, bound: Optional[int] = None) -> Composition:
    """
    Parse a composition.

    Examples:
        >>> parse_composition('2,3,1,2').parts
        (2, 3, 1, 2)
        >>> parse_composition('2 3 1 2').parts
        (2, 3, 1, 2)
    """
    parts = _integers(text, 'composition')
    if not parts:
        raise ParseError(f"Empty composition {text!r}")
    if 0 in parts:
        raise ParseError(f"Invalid composition token '0' in {text!r}: parts must be positive")
    _check_size(sum(parts), 'composition', bound)
    return Composition(tuple(parts))


def parse_partition(text: str, bound: Optional[int] = None) -> Partition:
    """Parse a partition; parts must be weakly decreasing."""
    parts = parse_composition(text, bound).parts
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ParseError(f"Partition {text!r} is not weakly decreasing at token '{b}'")
    return Partition(parts)


def parse_tableau(text: str, bound: Optional[int] = None) -> StandardTableau:
    """Parse a standard tableau; validation errors are reported as ParseError."""
    rows = [_integers(chunk, 'tableau') for chunk in text.split('/')]
    if any(not row for row in rows):
        raise ParseError(f"Empty row in tableau {text!r}")
    _check_size(sum(len(row) for row in rows), 'tableau', bound)
    try:
        return StandardTableau(tuple(tuple(row) for row in rows))
    except ValueError as e:
        raise ParseError(f"Invalid tableau {text!r}: {e}")


def parse_pattern(text: str, bound: Optional[int] = None) -> LinkPattern:
    """Parse a link pattern over 1..n, n being the number of elements given."""
    blocks = [_integers(chunk, 'pattern') for chunk in text.split('|')]
    if any(not block for block in blocks):
        raise ParseError(f"Empty block in pattern {text!r}")
    n = sum(len(block) for block in blocks)
    _check_size(n, 'pattern', bound)
    try:
        return from_blocks(blocks, n)
    except ValueError as e:
        raise ParseError(f"Invalid pattern {text!r}: {e}")
