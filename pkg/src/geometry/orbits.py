"""
Jordan orbits in a Springer fiber component.

For a link pattern pi the set A(pi) counts the stabilizer of the standard flag
of a pi-basis inside Z_u; the orbit Z_pi then has dimension
dim Z_u - |A(pi)| and is dense in its component exactly when this equals
dim B_u.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from src.combinatorics.linkpatterns import LinkPattern, remove_last
from src.combinatorics.shapes import dim_springer_fiber, dim_stabilizer
from src.errors import ValidationError


@lru_cache(maxsize=None)
def _dims(parts: Tuple[int, ...]) -> Tuple[int, int]:
    """(dim Z_u, dim B_u) for a Jordan type."""
    return dim_stabilizer(parts), dim_springer_fiber(parts)


def _chain_below(pattern: LinkPattern, i: int, k: int) -> bool:
    """pred^l(i) <= pred^l(k) for every l >= 0."""
    for l in range(pattern.n + 1):
        a, b = pattern.pred(i, l), pattern.pred(k, l)
        if a > b:
            return False
        if a == 0 and b == 0:
            break
    return True


def a_set(pattern: LinkPattern) -> FrozenSet[Tuple[int, int]]:
    """
    Pairs (i, j), j a 1-based canonical block index, with pred^l(i) <= pred^l(k_j)
    for all l, where k_j is the largest element of block j.

    Examples:
        >>> sorted(a_set(from_blocks([{1}, {2}], 2)))
        [(1, 1), (1, 2), (2, 2)]
    """
    pairs = set()
    for j, block in enumerate(pattern.blocks, start=1):
        k = block[-1]
        for i in range(1, pattern.n + 1):
            if _chain_below(pattern, i, k):
                pairs.add((i, j))
    return frozenset(pairs)


@dataclass(frozen=True)
class OrbitAnalysis:
    """Dimension data of the Jordan orbit Z_pi."""
    pattern: LinkPattern
    a_set: FrozenSet[Tuple[int, int]]
    stab_dim: int
    orbit_dim: int
    springer_dim: int
    dense: bool

    @property
    def codimension(self) -> int:
        """dim B_u - dim Z_pi; zero exactly for dense orbits."""
        return self.springer_dim - self.orbit_dim

    def to_dict(self) -> Dict:
        return {
            'pattern': self.pattern.to_dict(),
            'stab_dim': self.stab_dim,
            'orbit_dim': self.orbit_dim,
            'springer_dim': self.springer_dim,
            'codimension': self.codimension,
            'dense': self.dense,
        }


def analyze_orbit(pattern: LinkPattern) -> OrbitAnalysis:
    pairs = a_set(pattern)
    z_dim, b_dim = _dims(pattern.jordan_type.parts)
    orbit_dim = z_dim - len(pairs)
    return OrbitAnalysis(
        pattern=pattern,
        a_set=pairs,
        stab_dim=len(pairs),
        orbit_dim=orbit_dim,
        springer_dim=b_dim,
        dense=orbit_dim == b_dim,
    )


@dataclass(frozen=True)
class InductiveReport:
    """
    Comparison of A(pi) with A(pi') for pi' = pi with its last vertex removed.

    j0 is the number of blocks at least as large as the block containing n.
    witness is (j, i, l): a block j > j0 in the order placing n's block last
    among its size class, an element i of it and a level l with
    pred^(l+1)(i) < pred^(l+1)(n) < pred^l(i) < pred^l(n).
    """
    pattern: LinkPattern
    j0: int
    a_pi: int
    a_pi_prime: int
    equality: bool
    witness: Optional[Tuple[int, int, int]]
    stabilizer_identity: bool
    springer_identity: bool
    codim_pi: int
    codim_pi_prime: int

    @property
    def gap(self) -> int:
        return self.a_pi - self.a_pi_prime - self.j0

    def to_dict(self) -> Dict:
        return {
            'pattern': self.pattern.to_dict(),
            'j0': self.j0,
            'a_pi': self.a_pi,
            'a_pi_prime': self.a_pi_prime,
            'gap': self.gap,
            'equality': self.equality,
            'witness': list(self.witness) if self.witness else None,
            'stabilizer_identity': self.stabilizer_identity,
            'springer_identity': self.springer_identity,
            'codim_pi': self.codim_pi,
            'codim_pi_prime': self.codim_pi_prime,
        }


def _order_with_last_block(pattern: LinkPattern) -> List[Tuple[int, ...]]:
    """Canonical order, except the block containing n goes last within its size class."""
    n = pattern.n
    return sorted(pattern.blocks, key=lambda b: (-len(b), n in b, b[0]))


def find_witness(pattern: LinkPattern) -> Optional[Tuple[int, int, int]]:
    n = pattern.n
    ordered = _order_with_last_block(pattern)
    j0 = next(j for j, block in enumerate(ordered, start=1) if n in block)
    for j, block in enumerate(ordered[j0:], start=j0 + 1):
        for i in block:
            for l in range(n):
                if (pattern.pred(i, l + 1) < pattern.pred(n, l + 1)
                        < pattern.pred(i, l) < pattern.pred(n, l)):
                    return j, i, l
    return None


def inductive_report(pattern: LinkPattern) -> InductiveReport:
    """
    Check |A(pi)| >= |A(pi')| + j0 and the dimension identities
    dim Z_u' = dim Z_u - 2 j0 + 1 and dim B_u' = dim B_u - j0 + 1.
    """
    if pattern.n < 2:
        raise ValidationError(f"inductive_report needs n >= 2, got n={pattern.n}")
    n = pattern.n
    size_n = len(pattern.block_of(n))
    j0 = sum(1 for block in pattern.blocks if len(block) >= size_n)

    prime = remove_last(pattern)
    full = analyze_orbit(pattern)
    reduced = analyze_orbit(prime)
    z_dim, b_dim = _dims(pattern.jordan_type.parts)
    z_prime, b_prime = _dims(prime.jordan_type.parts)
    equality = full.stab_dim == reduced.stab_dim + j0

    return InductiveReport(
        pattern=pattern,
        j0=j0,
        a_pi=full.stab_dim,
        a_pi_prime=reduced.stab_dim,
        equality=equality,
        witness=find_witness(pattern),
        stabilizer_identity=z_prime == z_dim - 2 * j0 + 1,
        springer_identity=b_prime == b_dim - j0 + 1,
        codim_pi=full.codimension,
        codim_pi_prime=reduced.codimension,
    )
