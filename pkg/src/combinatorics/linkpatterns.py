"""
Link patterns: partitions of {1..n} into blocks, read as arc diagrams.

A pattern with blocks of sizes lambda_1 >= lambda_2 >= ... encodes a Jordan
basis of a nilpotent endomorphism of Jordan type lambda; consecutive elements
of a block are joined by an arc (pred(i), i). The subsets of standard patterns
(blocks are intervals) and of crossingless, nesting-free patterns index the
Bala-Carter and generalized Bala-Carter components.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import config
from src.combinatorics.shapes import (
    Partition, PartsLike, as_composition, as_partition, distinct_permutations,
)
from src.combinatorics.tableaux import StandardTableau, tableau_from_columns
from src.errors import NotApplicableError, ValidationError, check_bound

# Predecessor of the minimum of a block; compares below every label
NONE = 0


class PatternFilter(str, Enum):
    """Subsets of Pi_u returned by enumerate_patterns."""
    ALL = 'all'
    PI0 = 'pi0'
    PI1 = 'pi1'


@dataclass(frozen=True)
class LinkPattern:
    """
    Partition of {1..n} into blocks, kept in canonical order.

    Blocks are sorted internally; the block list is ordered by size
    descending, ties broken by the minimum element ascending.
    """
    blocks: Tuple[Tuple[int, ...], ...]
    n: int
    _pred: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _block_of: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blocks = [tuple(sorted(int(x) for x in block)) for block in self.blocks]
        if any(not block for block in blocks):
            raise ValidationError("Link pattern blocks must be nonempty")
        blocks.sort(key=lambda b: (-len(b), b[0]))
        object.__setattr__(self, 'blocks', tuple(blocks))

        seen = set()
        for block in blocks:
            for x in block:
                if x < 1 or x > self.n:
                    raise ValidationError(f"Element {x} is out of range 1..{self.n}")
                if x in seen:
                    raise ValidationError(f"Element {x} appears in more than one block")
                seen.add(x)
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise ValidationError(f"Blocks do not cover 1..{self.n}, missing {missing}")

        pred = [NONE] * (self.n + 1)
        block_of = [-1] * (self.n + 1)
        for index, block in enumerate(blocks):
            for a, b in zip(block, block[1:]):
                pred[b] = a
            for x in block:
                block_of[x] = index
        object.__setattr__(self, '_pred', tuple(pred))
        object.__setattr__(self, '_block_of', tuple(block_of))

    @property
    def jordan_type(self) -> Partition:
        return Partition(tuple(len(block) for block in self.blocks))

    def pred(self, i: int, power: int = 1) -> int:
        """pred^power(i), with NONE absorbing."""
        for _ in range(power):
            if i == NONE:
                break
            i = self._pred[i]
        return i

    def block_index(self, i: int) -> int:
        return self._block_of[i]

    def block_of(self, i: int) -> Tuple[int, ...]:
        return self.blocks[self._block_of[i]]

    def to_dict(self) -> Dict:
        return {'n': self.n, 'blocks': [list(block) for block in self.blocks]}

    def __str__(self):
        return ' | '.join(' '.join(str(x) for x in block) for block in self.blocks)


EMPTY_PATTERN = LinkPattern((), 0)


def from_blocks(blocks: Iterable[Iterable[int]], n: Optional[int] = None) -> LinkPattern:
    """
    Build a canonically ordered pattern.

    Args:
        blocks: Disjoint sets covering 1..n
        n: Total size; defaults to the number of elements given

    Examples:
        >>> str(from_blocks([{4}, {3, 8}, {1, 2, 5}, {6, 7}], 8))
        '1 2 5 | 3 8 | 6 7 | 4'
    """
    blocks = [tuple(block) for block in blocks]
    if n is None:
        n = sum(len(block) for block in blocks)
    return LinkPattern(tuple(blocks), n)


def column_index(pattern: LinkPattern, i: int) -> int:
    """Minimal c >= 1 with pred^c(i) = none: the position of i inside its block."""
    if not 1 <= i <= pattern.n:
        raise ValidationError(f"Index {i} out of range 1..{pattern.n}")
    c = 1
    while pattern.pred(i, c) != NONE:
        c += 1
    return c


def tableau_of_pattern(pattern: LinkPattern) -> StandardTableau:
    """T_pi: entry i sits in column c_pi(i), columns filled in increasing order."""
    return tableau_from_columns([column_index(pattern, i) for i in range(1, pattern.n + 1)])


def arcs(pattern: LinkPattern) -> List[Tuple[int, int]]:
    """All arcs (pred(i), i), sorted by right endpoint."""
    return [(pattern.pred(i), i) for i in range(1, pattern.n + 1) if pattern.pred(i) != NONE]


def crossings(pattern: LinkPattern) -> List[Tuple[int, int]]:
    """Pairs (i, j) with none < pred(j) < pred(i) < j < i."""
    found = []
    for i in range(1, pattern.n + 1):
        pi = pattern.pred(i)
        if pi == NONE:
            continue
        for j in range(pi + 1, i):
            pj = pattern.pred(j)
            if NONE < pj < pi:
                found.append((i, j))
    return found


def nesting_violations(pattern: LinkPattern) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Block pairs (I_j, I_k) with I_j inside ]min I_k, max I_k[ and |I_j| < |I_k|."""
    found = []
    for inner in pattern.blocks:
        for outer in pattern.blocks:
            if len(inner) < len(outer) and outer[0] < inner[0] and inner[-1] < outer[-1]:
                found.append((inner, outer))
    return found


def in_pi1(pattern: LinkPattern) -> bool:
    """Crossingless and free of nesting violations."""
    return not crossings(pattern) and not nesting_violations(pattern)


def is_standard(pattern: LinkPattern) -> bool:
    """Every block is an interval, i.e. pred(i) is none or i - 1."""
    return all(pattern.pred(i) in (NONE, i - 1) for i in range(1, pattern.n + 1))


def composition_to_pattern(pi: PartsLike) -> LinkPattern:
    """
    Standard pattern with consecutive blocks of sizes pi_1, pi_2, ...

    Examples:
        >>> str(composition_to_pattern((2, 3, 1, 2)))
        '3 4 5 | 1 2 | 7 8 | 6'
    """
    pi = as_composition(pi)
    blocks = []
    start = 1
    for size in pi:
        blocks.append(tuple(range(start, start + size)))
        start += size
    return LinkPattern(tuple(blocks), pi.n)


def pattern_to_composition(pattern: LinkPattern):
    """Block sizes of a standard pattern read left to right."""
    if not is_standard(pattern):
        raise NotApplicableError(f"Pattern {pattern} is not standard")
    ordered = sorted(pattern.blocks, key=lambda b: b[0])
    return as_composition(tuple(len(block) for block in ordered))


def mirror(pattern: LinkPattern) -> LinkPattern:
    """Reflect every label i to n - i + 1."""
    n = pattern.n
    return LinkPattern(tuple(tuple(n - i + 1 for i in block) for block in pattern.blocks), n)


def _relabel(blocks: Sequence[Sequence[int]]) -> LinkPattern:
    """Order-preserving relabeling of the remaining elements onto 1..m."""
    labels = sorted(x for block in blocks for x in block)
    rank = {x: k for k, x in enumerate(labels, start=1)}
    return LinkPattern(tuple(tuple(rank[x] for x in block) for block in blocks if block), len(labels))


def remove_last(pattern: LinkPattern) -> LinkPattern:
    """Delete n from its block, dropping the block if it empties."""
    if pattern.n < 1:
        raise ValidationError("Cannot remove a vertex from the empty pattern")
    n = pattern.n
    blocks = [tuple(x for x in block if x != n) for block in pattern.blocks]
    return LinkPattern(tuple(b for b in blocks if b), n - 1)


def remove_first(pattern: LinkPattern) -> LinkPattern:
    """Delete 1 from its block and shift every remaining label down by one."""
    if pattern.n < 1:
        raise ValidationError("Cannot remove a vertex from the empty pattern")
    blocks = [tuple(x - 1 for x in block if x != 1) for block in pattern.blocks]
    return LinkPattern(tuple(b for b in blocks if b), pattern.n - 1)


def remove_block(pattern: LinkPattern, block_index: int) -> LinkPattern:
    """
    Delete the block at block_index (canonical order, 0-based) and relabel
    the rest onto 1..n - |block|.
    """
    if not 0 <= block_index < len(pattern.blocks):
        raise ValidationError(
            f"Block index {block_index} out of range for {len(pattern.blocks)} blocks")
    rest = [block for k, block in enumerate(pattern.blocks) if k != block_index]
    return _relabel(rest)


def split_at_first_block(pattern: LinkPattern) -> Tuple[LinkPattern, LinkPattern]:
    """
    Split a crossingless pattern at m = max of the block containing 1.

    Returns the sub-patterns on [1, m] and on [m + 1, n], the latter shifted
    down by m.

    Raises:
        NotApplicableError: if 1 and n share a block or [1, m] is not a union of blocks
    """
    if pattern.n == 0:
        raise NotApplicableError("Cannot split the empty pattern")
    m = pattern.block_of(1)[-1]
    if m == pattern.n:
        raise NotApplicableError(f"1 and {pattern.n} lie in the same block of {pattern}")
    left, right = [], []
    for block in pattern.blocks:
        if block[-1] <= m:
            left.append(block)
        elif block[0] > m:
            right.append(tuple(x - m for x in block))
        else:
            raise NotApplicableError(f"Block {block} straddles {m} in {pattern}")
    return LinkPattern(tuple(left), m), LinkPattern(tuple(right), pattern.n - m)


def _set_partitions_of_type(n: int, sizes: Dict[int, int]) -> List[Tuple[Tuple[int, ...], ...]]:
    """Set partitions of 1..n with the given block-size multiplicities."""
    results = []

    def build(remaining: Tuple[int, ...], blocks: List[Tuple[int, ...]]):
        if not remaining:
            results.append(tuple(blocks))
            return
        first, rest = remaining[0], remaining[1:]
        for size in sorted(sizes):
            if not sizes[size] or size - 1 > len(rest):
                continue
            sizes[size] -= 1
            for others in combinations(rest, size - 1):
                block = (first,) + others
                left = tuple(x for x in rest if x not in others)
                blocks.append(block)
                build(left, blocks)
                blocks.pop()
            sizes[size] += 1

    build(tuple(range(1, n + 1)), [])
    return results


def enumerate_patterns(lam: PartsLike, filter: Union[PatternFilter, str] = PatternFilter.ALL,
                       bound: Optional[int] = None) -> List[LinkPattern]:
    """
    Elements of Pi_u (or of Pi_u^0 / Pi_u^1) for the Jordan type lam.

    Args:
        lam: Jordan type
        filter: 'all', 'pi0' (standard patterns) or 'pi1'
        bound: Maximum n; defaults to config.MAX_N

    Returns:
        Patterns sorted by canonical block listing

    Raises:
        SizeBoundError: if n exceeds the bound
    """
    lam = as_partition(lam)
    filter = PatternFilter(filter)
    check_bound('enumerate_patterns', lam.n, config.MAX_N if bound is None else bound)

    if filter is PatternFilter.PI0:
        patterns = [composition_to_pattern(pi) for pi in distinct_permutations(lam)]
    else:
        sizes: Dict[int, int] = {}
        for p in lam:
            sizes[p] = sizes.get(p, 0) + 1
        patterns = [LinkPattern(blocks, lam.n) for blocks in _set_partitions_of_type(lam.n, sizes)]
        if filter is PatternFilter.PI1:
            patterns = [p for p in patterns if in_pi1(p)]
    if lam.n == 0:
        patterns = [EMPTY_PATTERN]
    patterns.sort(key=lambda p: p.blocks)
    return patterns


def patterns_of_tableau(tableau: StandardTableau, pi1_only: bool = False,
                        bound: Optional[int] = None) -> List[LinkPattern]:
    """
    Every pattern pi with tableau_of_pattern(pi) = tableau.

    Entry i must sit at position column(i) of its block, so an entry of column
    c > 1 extends a block currently of length c - 1. With pi1_only the search
    refuses arcs crossing an earlier arc and abandons a branch as soon as a
    block is shut inside an arc of a longer block.

    Raises:
        SizeBoundError: if n exceeds the bound (config.TABLEAU_MAX_N by default)
    """
    n = tableau.n
    check_bound('patterns_of_tableau', n, config.TABLEAU_MAX_N if bound is None else bound)
    column_of = [0] * (n + 1)
    for r, row in enumerate(tableau.rows):
        for c, x in enumerate(row, start=1):
            column_of[x] = c

    found: List[LinkPattern] = []
    blocks: List[List[int]] = []
    placed_arcs: List[Tuple[int, int, int]] = []

    def buried() -> bool:
        # a block whose last element lies under an arc can no longer grow
        for a, b, k in placed_arcs:
            outer = len(blocks[k])
            for block in blocks:
                if a < block[0] and block[-1] < b and len(block) < outer:
                    return True
        return False

    def extend(i: int):
        if pi1_only and buried():
            return
        if i > n:
            pattern = LinkPattern(tuple(tuple(b) for b in blocks), n)
            if not pi1_only or not nesting_violations(pattern):
                found.append(pattern)
            return
        c = column_of[i]
        if c == 1:
            blocks.append([i])
            extend(i + 1)
            blocks.pop()
            return
        for k, block in enumerate(blocks):
            if len(block) != c - 1:
                continue
            p = block[-1]
            if pi1_only and any(a < p < b for a, b, _ in placed_arcs):
                continue
            block.append(i)
            placed_arcs.append((p, i, k))
            extend(i + 1)
            placed_arcs.pop()
            block.pop()

    extend(1)
    found.sort(key=lambda p: p.blocks)
    return found
