"""
Brute-force dimension oracle on explicit nilpotent matrices.

A link pattern pi fixes a basis e_1..e_n with u(e_i) = e_pred(i) (0 when i
starts a block). The commutant of u, the stabilizer of the standard flag
inside it and the Jordan types of u restricted to each span(e_1..e_i) are
computed by exact linear algebra, independently of the closed formulas.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

import config
from src.combinatorics.linkpatterns import NONE, LinkPattern, composition_to_pattern
from src.combinatorics.shapes import Partition, PartsLike, as_partition, conjugate
from src.errors import ValidationError, check_bound
from src.oracle.exact_linalg import bareiss_rank


@dataclass(frozen=True)
class NilpotentRealization:
    """Matrix of u in a pi-basis; column i holds a single 1 at row pred(i)."""
    pattern: LinkPattern
    matrix: np.ndarray

    @property
    def n(self) -> int:
        return self.pattern.n

    def jordan_type(self) -> Partition:
        return _jordan_type(self.matrix)


def realize(pattern: LinkPattern) -> NilpotentRealization:
    n = pattern.n
    matrix = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n + 1):
        p = pattern.pred(i)
        if p != NONE:
            matrix[p - 1, i - 1] = 1
    if n and np.any(np.linalg.matrix_power(matrix, n)):
        raise ValidationError(f"Realization of {pattern} is not nilpotent")
    return NilpotentRealization(pattern, matrix)


def commutator_system(u: np.ndarray) -> np.ndarray:
    """
    Matrix of x -> xu - ux acting on column-major vec(x).

    The unknown x_ab sits at column a + b * n.
    """
    n = u.shape[0]
    identity = np.eye(n, dtype=np.int64)
    return np.kron(u.T, identity) - np.kron(identity, u)


def commutant_dim(lam: PartsLike, bound: Optional[int] = None) -> int:
    """dim {x : xu = ux} for u of Jordan type lam."""
    lam = as_partition(lam)
    check_bound('commutant_dim', lam.n, config.COMMUTANT_MAX_N if bound is None else bound)
    if lam.n == 0:
        return 0
    u = realize(composition_to_pattern(lam)).matrix
    return lam.n ** 2 - bareiss_rank(commutator_system(u))


def flag_stabilizer_dim(pattern: LinkPattern, bound: Optional[int] = None) -> int:
    """dim {x in Z_u : x(e_i) in span(e_1..e_i) for all i}."""
    check_bound('flag_stabilizer_dim', pattern.n, config.FLAG_MAX_N if bound is None else bound)
    n = pattern.n
    if n == 0:
        return 0
    system = commutator_system(realize(pattern).matrix)
    # upper triangular unknowns only
    kept = [a + b * n for b in range(n) for a in range(b + 1)]
    return len(kept) - bareiss_rank(system[:, kept])


def _jordan_type(u: np.ndarray) -> Partition:
    """Jordan type from ranks: the k-th column length is rank(u^(k-1)) - rank(u^k)."""
    size = u.shape[0]
    ranks = [size]
    power = np.eye(size, dtype=np.int64)
    while ranks[-1] > 0:
        power = power @ u
        ranks.append(bareiss_rank(power))
    columns = [a - b for a, b in zip(ranks, ranks[1:])]
    return conjugate(tuple(c for c in columns if c > 0))


def jordan_type_chain(pattern: LinkPattern, bound: Optional[int] = None) -> List[Partition]:
    """Jordan types of u restricted to span(e_1..e_i), i = 1..n."""
    check_bound('jordan_type_chain', pattern.n, config.FLAG_MAX_N if bound is None else bound)
    u = realize(pattern).matrix
    return [_jordan_type(u[:i, :i]) for i in range(1, pattern.n + 1)]
