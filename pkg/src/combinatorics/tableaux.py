"""
Standard Young tableaux.

Provides enumeration, transposition, shape chains, the concatenation sum,
Schutzenberger evacuation and the direct builders of the Bala-Carter tableau
T_pi (for a permutation of the Jordan type) and of the Richardson tableau
T*_pi (for a permutation of the conjugate type).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import config
from src.combinatorics.shapes import (
    Partition, PartsLike, as_composition, as_partition, is_partition, row_sum,
)
from src.errors import ShapeMismatchError, ValidationError, check_bound


@dataclass(frozen=True)
class StandardTableau:
    """
    Numbering of a Young diagram by 1..n, increasing along rows and down columns.

    Rows are stored top to bottom; the empty tableau (n = 0) has no rows.
    """
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)

        lengths = [len(row) for row in rows]
        if any(length == 0 for length in lengths) or not is_partition(lengths):
            raise ValidationError(f"Row lengths {lengths} do not form a Young diagram")

        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValidationError(f"Entries of {rows} are not exactly 1..{len(entries)}")

        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValidationError(f"Row {row} is not increasing in {rows}")
        for upper, lower in zip(rows, rows[1:]):
            for a, b in zip(upper, lower):
                if a >= b:
                    raise ValidationError(f"Column violation {a} above {b} in {rows}")

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def columns(self) -> List[Tuple[int, ...]]:
        if not self.rows:
            return []
        return [tuple(row[c] for row in self.rows if len(row) > c)
                for c in range(len(self.rows[0]))]

    def position(self, entry: int) -> Tuple[int, int]:
        """0-based (row, column) of an entry."""
        for r, row in enumerate(self.rows):
            if entry in row:
                return r, row.index(entry)
        raise ValueError(f"{entry} could not be found in tableau.")

    def row_word(self) -> Tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def __str__(self):
        return ' / '.join(' '.join(str(x) for x in row) for row in self.rows)


EMPTY_TABLEAU = StandardTableau(())


def tableau_from_columns(column_of: Sequence[int]) -> StandardTableau:
    """
    Build the tableau placing entry i (1-based) in column column_of[i-1].

    Entries of each column are stacked top to bottom in increasing order.
    Raises ValidationError if the filling is not standard.
    """
    columns: Dict[int, List[int]] = {}
    for entry, col in enumerate(column_of, start=1):
        columns.setdefault(col, []).append(entry)
    if not columns:
        return EMPTY_TABLEAU
    if sorted(columns) != list(range(1, len(columns) + 1)):
        raise ValidationError(f"Column indices {sorted(columns)} leave a gap")
    height = len(columns[1])
    rows = []
    for r in range(height):
        rows.append(tuple(columns[c][r] for c in sorted(columns) if len(columns[c]) > r))
    return StandardTableau(tuple(rows))


def tableau_from_rows(row_of: Sequence[int]) -> StandardTableau:
    """Build the tableau placing entry i in row row_of[i-1] (1-based), appending left to right."""
    rows: Dict[int, List[int]] = {}
    for entry, r in enumerate(row_of, start=1):
        rows.setdefault(r, []).append(entry)
    if not rows:
        return EMPTY_TABLEAU
    if sorted(rows) != list(range(1, len(rows) + 1)):
        raise ValidationError(f"Row indices {sorted(rows)} leave a gap")
    return StandardTableau(tuple(tuple(rows[r]) for r in sorted(rows)))


def _offsets_within_groups(parts: Sequence[int]) -> List[int]:
    offsets = []
    for size in parts:
        offsets.extend(range(1, size + 1))
    return offsets


def tableau_from_composition(pi: PartsLike) -> StandardTableau:
    """
    Bala-Carter tableau T_pi of a permutation pi of the Jordan type.

    Entry i lies in column c(i), its position inside the consecutive block
    {pi_1+...+pi_{j-1}+1, ..., pi_1+...+pi_j}; this is the column index of
    the standard link pattern of pi.

    Examples:
        >>> str(tableau_from_composition((2, 3, 1, 2)))
        '1 2 5 / 3 4 / 6 8 / 7'
    """
    return tableau_from_columns(_offsets_within_groups(as_composition(pi)))


def tableau_from_cocomposition(pi: PartsLike) -> StandardTableau:
    """
    Richardson tableau T*_pi of a permutation pi of the conjugate type.

    The m-th entry of group j goes to row m, appended to the next free cell.
    """
    try:
        return tableau_from_rows(_offsets_within_groups(as_composition(pi)))
    except ValidationError as e:
        raise ValidationError(f"Richardson filling for {tuple(pi)} is not standard: {e}")


def transpose(tableau: StandardTableau) -> StandardTableau:
    """Rows of the result are the columns of the input."""
    return StandardTableau(tuple(tableau.columns()))


def shape_chain(tableau: StandardTableau) -> List[Partition]:
    """Shapes of the subtableaux of entries 1..i for i = 1..n."""
    row_of = {}
    for r, row in enumerate(tableau.rows):
        for x in row:
            row_of[x] = r
    lengths: List[int] = []
    chain = []
    for entry in range(1, tableau.n + 1):
        r = row_of[entry]
        if r == len(lengths):
            lengths.append(0)
        lengths[r] += 1
        chain.append(Partition(tuple(lengths)))
    return chain


def restrict(tableau: StandardTableau, m: int) -> StandardTableau:
    """Subtableau formed by the entries 1..m."""
    rows = [tuple(x for x in row if x <= m) for row in tableau.rows]
    return StandardTableau(tuple(row for row in rows if row))


def last_column_contains_max(tableau: StandardTableau) -> bool:
    """True if n lies in the last column of the tableau."""
    if tableau.n == 0:
        return False
    return tableau.position(tableau.n)[1] == len(tableau.rows[0]) - 1


def tableau_sum(first: StandardTableau, second: StandardTableau) -> StandardTableau:
    """
    Row-wise concatenation T1 + T2, entries of T2 shifted by n1.

    Raises:
        ShapeMismatchError: if the summed rows are not a Young diagram
    """
    shape = row_sum(first.shape, second.shape)
    if not is_partition(shape):
        raise ShapeMismatchError(
            f"Cannot sum shapes {first.shape.parts} and {second.shape.parts}: rows {shape} not decreasing")
    n1 = first.n
    height = len(shape)
    rows = []
    for r in range(height):
        left = first.rows[r] if r < len(first.rows) else ()
        right = second.rows[r] if r < len(second.rows) else ()
        rows.append(tuple(left) + tuple(x + n1 for x in right))
    return StandardTableau(tuple(rows))


def evacuation(tableau: StandardTableau) -> StandardTableau:
    """
    Schutzenberger evacuation.

    Repeatedly delete the entry in the corner cell, slide the hole outward
    (always pulling the smaller of the right and lower neighbours) and record
    the vacated outer cell with the labels n, n-1, ..., 1 in that order.
    """
    n = tableau.n
    cells: Dict[Tuple[int, int], int] = {}
    for r, row in enumerate(tableau.rows):
        for c, x in enumerate(row):
            cells[(r, c)] = x
    result: Dict[Tuple[int, int], int] = {}

    for label in range(n, 0, -1):
        hole = (0, 0)
        del cells[hole]
        while True:
            r, c = hole
            right = cells.get((r, c + 1))
            below = cells.get((r + 1, c))
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                source = (r, c + 1)
            else:
                source = (r + 1, c)
            cells[hole] = cells.pop(source)
            hole = source
        result[hole] = label

    rows = []
    for r in range(len(tableau.rows)):
        rows.append(tuple(result[(r, c)] for c in range(len(tableau.rows[r]))))
    return StandardTableau(tuple(rows))


def _corners(shape: Tuple[int, ...]) -> List[int]:
    """Rows whose last box can be removed."""
    return [r for r in range(len(shape))
            if r == len(shape) - 1 or shape[r] > shape[r + 1]]


@lru_cache(maxsize=None)
def _count(shape: Tuple[int, ...]) -> int:
    if sum(shape) <= 1:
        return 1
    total = 0
    for r in _corners(shape):
        smaller = list(shape)
        smaller[r] -= 1
        total += _count(tuple(p for p in smaller if p > 0))
    return total


def count_standard(lam: PartsLike) -> int:
    """Number of standard tableaux, counted through maximal chains of subdiagrams."""
    return _count(as_partition(lam).parts)


def enumerate_standard(lam: PartsLike, bound: Optional[int] = None) -> List[StandardTableau]:
    """
    All standard tableaux of shape lam, sorted by row-reading word.

    Raises:
        SizeBoundError: if n exceeds the tableau enumeration bound
    """
    lam = as_partition(lam)
    check_bound('enumerate_standard', lam.n, config.TABLEAU_MAX_N if bound is None else bound)
    shape = lam.parts
    if not shape:
        return [EMPTY_TABLEAU]

    found: List[Tuple[Tuple[int, ...], ...]] = []
    rows: List[List[int]] = [[] for _ in shape]

    def place(entry: int):
        if entry > lam.n:
            found.append(tuple(tuple(row) for row in rows))
            return
        for r in range(len(shape)):
            if len(rows[r]) < shape[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(entry)
                place(entry + 1)
                rows[r].pop()

    place(1)
    tableaux = [StandardTableau(t) for t in found]
    tableaux.sort(key=lambda t: t.row_word())
    return tableaux


def row_word(tableau: StandardTableau) -> Tuple[int, ...]:
    """Entries read row by row, top to bottom."""
    return tableau.row_word()
