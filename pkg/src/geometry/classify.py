"""
Component classification.

Every component of a Springer fiber B_u is indexed by a standard tableau T.
This module decides whether T is Bala-Carter, Richardson, or one of their
generalized versions, and reports a singularity verdict with its provenance:

- Bala-Carter components are singular exactly when their composition contains
  (1,2,2,1) or (2,3,2)
- Richardson components and components of an all-smooth Jordan type are smooth
- generalized Richardson components are iterated bundles over projective
  spaces, hence smooth
- every other component is reported unknown
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import config
from src.combinatorics.linkpatterns import (
    LinkPattern, is_standard, pattern_to_composition, patterns_of_tableau,
)
from src.combinatorics.shapes import (
    Composition, Partition, PartsLike, as_composition, as_partition, conjugate,
    contains_pattern, dim_springer_fiber, distinct_permutations, has_singular_component,
    jordan_type_all_smooth, pattern_witness,
)
from src.combinatorics.tableaux import (
    StandardTableau, enumerate_standard, tableau_sum, transpose,
)
from src.errors import VerificationError, check_bound
from src.geometry.bundles import fiber_bundle_base

SINGULAR_PATTERNS = ((1, 2, 2, 1), (2, 3, 2))


class Verdict(Enum):
    SINGULAR = 'singular'
    SMOOTH = 'smooth'
    UNKNOWN = 'unknown'


class Provenance(Enum):
    """Why a verdict was reached."""
    BALA_CARTER = 'bala-carter criterion'
    RICHARDSON = 'richardson'
    SHAPE = 'jordan type'
    ITERATED_BUNDLE = 'iterated bundle'
    NONE = 'unclassified'


@dataclass(frozen=True)
class SingularityVerdict:
    verdict: Verdict
    provenance: Provenance
    witness: Optional[Dict] = None

    @property
    def is_singular(self) -> bool:
        return self.verdict is Verdict.SINGULAR

    def to_dict(self) -> Dict:
        return {
            'verdict': self.verdict.value,
            'provenance': self.provenance.value,
            'witness': self.witness,
        }


def bc_is_singular(pi: PartsLike) -> SingularityVerdict:
    """
    Singularity of the Bala-Carter component of a composition.

    The witness names the contained pattern and the 1-based positions matching it.

    Examples:
        >>> bc_is_singular((2, 3, 2)).witness
        {'pattern': [2, 3, 2], 'indices': [1, 2, 3]}
    """
    pi = as_composition(pi)
    for rho in SINGULAR_PATTERNS:
        indices = pattern_witness(pi, rho)
        if indices is not None:
            return SingularityVerdict(Verdict.SINGULAR, Provenance.BALA_CARTER,
                                      {'pattern': list(rho), 'indices': list(indices)})
    return SingularityVerdict(Verdict.SMOOTH, Provenance.BALA_CARTER)


def all_bc_singular(lam: PartsLike) -> bool:
    """True if every Bala-Carter component of B_u is singular."""
    return all(bc_is_singular(pi).is_singular for pi in distinct_permutations(as_partition(lam)))


def corollary_all_singular(lam: PartsLike) -> bool:
    """Sufficient condition lam >= (2,2,2,2) or lam >= (3,3,3) for all_bc_singular."""
    lam = as_partition(lam)
    return contains_pattern(lam, (2, 2, 2, 2)) or contains_pattern(lam, (3, 3, 3))


def first_part_decrement(pi: PartsLike) -> Composition:
    """(pi_1 - 1, pi_2, ...), dropping the first part if it reaches 0."""
    parts = list(as_composition(pi))
    parts[0] -= 1
    return Composition(tuple(p for p in parts if p > 0))


def last_part_decrement(pi: PartsLike) -> Composition:
    """(..., pi_{r-1}, pi_r - 1), dropping the last part if it reaches 0."""
    parts = list(as_composition(pi))
    parts[-1] -= 1
    return Composition(tuple(p for p in parts if p > 0))


def bala_carter_composition(tableau: StandardTableau, bound: Optional[int] = None) -> Optional[Composition]:
    """
    The composition pi with T_pi = tableau, if any.

    T_pi is the tableau of the standard pattern of pi, so pi is read off the
    dense pattern of the tableau when that pattern is standard.
    """
    return _standard_composition(find_dense_pattern(tableau, bound))


def _standard_composition(pattern: Optional[LinkPattern]) -> Optional[Composition]:
    if pattern is None or not is_standard(pattern):
        return None
    return pattern_to_composition(pattern)


def find_dense_pattern(tableau: StandardTableau, bound: Optional[int] = None) -> Optional[LinkPattern]:
    """The unique pi in Pi_u^1 with T_pi = tableau, or None."""
    found = patterns_of_tableau(tableau, pi1_only=True, bound=bound)
    if len(found) > 1:
        raise VerificationError(f"Tableau {tableau} has {len(found)} dense patterns: "
                                f"{[str(p) for p in found]}")
    return found[0] if found else None


@dataclass(frozen=True)
class ComponentReport:
    """Classification of the component K^T."""
    tableau: StandardTableau
    shape: Partition
    dim: int
    is_bala_carter: bool
    bc_composition: Optional[Composition]
    is_richardson: bool
    richardson_composition: Optional[Composition]
    is_generalized_bc: bool
    gen_bc_pattern: Optional[LinkPattern]
    is_generalized_richardson: bool
    gen_richardson_pattern: Optional[LinkPattern]
    singular: SingularityVerdict
    bundle_base: Optional[Tuple[int, ...]] = None

    @property
    def classes(self) -> List[str]:
        flags = [('BC', self.is_bala_carter), ('R', self.is_richardson),
                 ('genBC', self.is_generalized_bc), ('genR', self.is_generalized_richardson)]
        return [name for name, flag in flags if flag]

    def to_dict(self) -> Dict:
        return {
            'tableau': self.tableau.to_list(),
            'shape': self.shape.to_list(),
            'dim': self.dim,
            'class': self.classes,
            'bc_composition': self.bc_composition.to_list() if self.bc_composition else None,
            'richardson_composition': (self.richardson_composition.to_list()
                                       if self.richardson_composition else None),
            'gen_bc_pattern': self.gen_bc_pattern.to_dict() if self.gen_bc_pattern else None,
            'singular': self.singular.to_dict(),
            'bundle_base': list(self.bundle_base) if self.bundle_base is not None else None,
        }


def classify_tableau(tableau: StandardTableau, bound: Optional[int] = None) -> ComponentReport:
    """
    Classify one component.

    Args:
        tableau: Standard tableau indexing the component
        bound: Maximum n; defaults to config.MAX_N

    Returns:
        ComponentReport with classes, singularity verdict and bundle base
    """
    check_bound('classify_tableau', tableau.n, config.MAX_N if bound is None else bound)
    shape = tableau.shape
    dual = transpose(tableau)

    gen_bc = find_dense_pattern(tableau, bound=tableau.n)
    gen_r = find_dense_pattern(dual, bound=tableau.n)
    bc = _standard_composition(gen_bc)
    richardson = _standard_composition(gen_r)

    if bc is not None:
        singular = bc_is_singular(bc)
    elif richardson is not None:
        singular = SingularityVerdict(Verdict.SMOOTH, Provenance.RICHARDSON)
    elif jordan_type_all_smooth(shape):
        singular = SingularityVerdict(Verdict.SMOOTH, Provenance.SHAPE)
    elif gen_r is not None:
        singular = SingularityVerdict(Verdict.SMOOTH, Provenance.ITERATED_BUNDLE)
    else:
        singular = SingularityVerdict(Verdict.UNKNOWN, Provenance.NONE)

    return ComponentReport(
        tableau=tableau,
        shape=shape,
        dim=dim_springer_fiber(shape),
        is_bala_carter=bc is not None,
        bc_composition=bc,
        is_richardson=richardson is not None,
        richardson_composition=richardson,
        is_generalized_bc=gen_bc is not None,
        gen_bc_pattern=gen_bc,
        is_generalized_richardson=gen_r is not None,
        gen_richardson_pattern=gen_r,
        singular=singular,
        bundle_base=tuple(fiber_bundle_base(tableau, check=False)) if gen_r is not None else None,
    )


@dataclass
class ShapeClassification:
    """All component reports of one Jordan type, in enumeration order."""
    shape: Partition
    reports: List[ComponentReport] = field(default_factory=list)

    @property
    def summary(self) -> Dict:
        counts = {
            'components': len(self.reports),
            'BC': sum(r.is_bala_carter for r in self.reports),
            'R': sum(r.is_richardson for r in self.reports),
            'genBC': sum(r.is_generalized_bc for r in self.reports),
            'genR': sum(r.is_generalized_richardson for r in self.reports),
            'singular': sum(r.singular.verdict is Verdict.SINGULAR for r in self.reports),
            'smooth': sum(r.singular.verdict is Verdict.SMOOTH for r in self.reports),
            'unknown': sum(r.singular.verdict is Verdict.UNKNOWN for r in self.reports),
        }
        counts['exists_singular'] = has_singular_component(self.shape)
        return counts


def classify_shape(lam: PartsLike, bound: Optional[int] = None, jobs: int = 1) -> ShapeClassification:
    """
    Classify every component of B_u for the Jordan type lam.

    Args:
        lam: Jordan type
        bound: Maximum n; defaults to config.MAX_N
        jobs: Worker processes; results keep enumeration order
    """
    lam = as_partition(lam)
    limit = config.MAX_N if bound is None else bound
    check_bound('classify_shape', lam.n, limit)
    tableaux = enumerate_standard(lam, bound=max(limit, lam.n))
    if jobs > 1 and len(tableaux) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(classify_tableau, tableaux, [limit] * len(tableaux)))
    else:
        reports = [classify_tableau(t, limit) for t in tableaux]
    return ShapeClassification(lam, reports)


def sum_component_dims(first: StandardTableau, second: StandardTableau) -> int:
    """
    Dimension of K^(T1 + T2), checked against dim K^T1 + dim K^T2.

    Raises:
        ShapeMismatchError: if the sum is not defined
        VerificationError: if the dimensions do not add up
    """
    total = dim_springer_fiber(tableau_sum(first, second).shape)
    parts = dim_springer_fiber(first.shape) + dim_springer_fiber(second.shape)
    if total != parts:
        raise VerificationError(f"dim of {first} + {second} is {total}, expected {parts}")
    return total


def singular_families(max_part: int = 4, max_ones: int = 2) -> Dict[str, Tuple[bool, List[Composition]]]:
    """
    Compositions of the known families, with whether their Bala-Carter
    component is singular.
    """
    parts = range(2, max_part + 1)
    ones = range(0, max_ones + 1)

    def run(k: int) -> Tuple[int, ...]:
        return (1,) * k

    families = {
        'one_p_q_one': (True, [(1, p, q, 1) for p in parts for q in parts]),
        'two_p_two': (True, [(2, p, 2) for p in parts if p >= 3]),
        'two_rows': (False, [(p, q) for p in range(1, max_part + 1) for q in range(1, max_part + 1)]),
        'hook': (False, [run(a) + (p,) + run(b) for p in parts for a in ones for b in ones]),
        'p_ones_two_ones_q': (False, [(p,) + run(a) + (2,) + run(b) + (q,)
                                      for p in parts for q in parts for a in ones for b in ones]),
        'ones_p_ones_q': (False, [run(a) + (p,) + run(b) + (q,)
                                  for p in parts for q in parts for a in ones for b in ones]),
    }
    return {name: (singular, [Composition(c) for c in comps])
            for name, (singular, comps) in families.items()}
