"""
Partitions, compositions and Young-diagram arithmetic.

A Partition doubles as a Young diagram and as the Jordan type of a nilpotent
endomorphism. A Composition is an ordered sequence of positive integers: a
permutation of a Jordan type, of its conjugate, or an arbitrary pattern for
the containment order.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from src.errors import ValidationError


@dataclass(frozen=True)
class Composition:
    """Ordered sequence of positive integers."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(int(p) for p in self.parts))
        for p in self.parts:
            if p < 1:
                raise ValidationError(f"Composition parts must be positive, got {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, key):
        return self.parts[key]

    def __str__(self):
        return ','.join(str(p) for p in self.parts)

    def sorted_partition(self) -> 'Partition':
        """The partition with the same multiset of parts."""
        return Partition(tuple(sorted(self.parts, reverse=True)))

    def reverse(self) -> 'Composition':
        return Composition(self.parts[::-1])

    def to_list(self) -> List[int]:
        return list(self.parts)


@dataclass(frozen=True)
class Partition(Composition):
    """Weakly decreasing composition; empty tuple stands for n = 0."""

    def __post_init__(self):
        super().__post_init__()
        for a, b in zip(self.parts, self.parts[1:]):
            if b > a:
                raise ValidationError(f"Partition {self.parts} is not in decreasing order.")

    def conjugate(self) -> 'Partition':
        return conjugate(self)


PartsLike = Union[Composition, Sequence[int]]


def as_partition(value: PartsLike) -> Partition:
    if isinstance(value, Partition):
        return value
    return Partition(tuple(value))


def as_composition(value: PartsLike) -> Composition:
    if isinstance(value, Composition):
        return Composition(value.parts)
    return Composition(tuple(value))


def is_partition(parts: Sequence[int]) -> bool:
    """True if parts is a weakly decreasing sequence of positive integers."""
    if any(p < 1 for p in parts):
        return False
    return all(a >= b for a, b in zip(parts, parts[1:]))


def conjugate(lam: PartsLike) -> Partition:
    """
    Conjugate partition: the column lengths of the Young diagram.

    Examples:
        >>> conjugate((3, 2, 2, 1)).parts
        (4, 3, 1)
    """
    lam = as_partition(lam)
    if not lam.parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


def dim_springer_fiber(lam: PartsLike) -> int:
    """dim B_u = sum over columns of lambda*_j (lambda*_j - 1) / 2."""
    return sum(c * (c - 1) // 2 for c in conjugate(lam).parts)


def dim_stabilizer(lam: PartsLike) -> int:
    """dim Z_u = sum over columns of (lambda*_k)^2."""
    return sum(c * c for c in conjugate(lam).parts)


def row_sum(lam: PartsLike, mu: PartsLike) -> Tuple[int, ...]:
    """Row-wise sum of two diagrams; the result need not be a partition."""
    a, b = list(lam), list(mu)
    length = max(len(a), len(b))
    a += [0] * (length - len(a))
    b += [0] * (length - len(b))
    return tuple(x + y for x, y in zip(a, b))


def pattern_witness(pi: PartsLike, rho: PartsLike) -> Optional[Tuple[int, ...]]:
    """
    Find 1-based indices i_1 < ... < i_k with pi[i_l] >= rho[l], or None.

    Matching each entry of rho to the earliest admissible position is optimal,
    so a single left-to-right scan decides containment.
    """
    pi, rho = list(pi), list(rho)
    witness = []
    pos = 0
    for target in rho:
        while pos < len(pi) and pi[pos] < target:
            pos += 1
        if pos == len(pi):
            return None
        witness.append(pos + 1)
        pos += 1
    return tuple(witness)


def contains_pattern(pi: PartsLike, rho: PartsLike) -> bool:
    """Containment order pi >= rho."""
    return pattern_witness(pi, rho) is not None


def jordan_type_all_smooth(lam: PartsLike) -> bool:
    """
    True exactly in the four Jordan types where every component is smooth:
    hook, two rows, three rows with a trivial third block, and (2,2,2).
    """
    parts = as_partition(lam).parts
    if sum(1 for p in parts if p >= 2) <= 1:
        return True
    if len(parts) <= 2:
        return True
    if len(parts) == 3 and parts[2] == 1:
        return True
    return parts == (2, 2, 2)


SINGULAR_SHAPES = ((2, 2, 1, 1), (3, 2, 2))


def has_singular_component(lam: PartsLike) -> bool:
    lam = as_partition(lam)
    return any(contains_pattern(lam, rho) for rho in SINGULAR_SHAPES)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def partitions(n: int) -> List[Partition]:
    """All partitions of n in reverse lexicographic order, e.g. (4), (3,1), (2,2), ..."""
    if n < 0:
        raise ValidationError(f"n must be nonnegative, got {n}")
    return [Partition(p) for p in _partitions(n, n)]


def distinct_permutations(lam: PartsLike) -> Iterator[Composition]:
    """Distinct rearrangements of the parts (the set Lambda_u), in lexicographic order."""
    counts = Counter(lam)
    values = sorted(counts)
    total = sum(counts.values())

    def build(prefix: List[int]):
        if len(prefix) == total:
            yield Composition(tuple(prefix))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from build(prefix)
                prefix.pop()
                counts[v] += 1

    if total == 0:
        return
    yield from build([])


def count_distinct_permutations(lam: PartsLike) -> int:
    counts = Counter(lam)
    result = factorial(sum(counts.values()))
    for c in counts.values():
        result //= factorial(c)
    return result
