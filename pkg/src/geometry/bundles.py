"""
Iterated fiber bundle structure of generalized Richardson components.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional

from src.combinatorics.linkpatterns import (
    LinkPattern, in_pi1, patterns_of_tableau, remove_last, split_at_first_block, tableau_of_pattern,
)
from src.combinatorics.shapes import conjugate
from src.combinatorics.tableaux import StandardTableau, last_column_contains_max, restrict, transpose
from src.errors import NotApplicableError, VerificationError


def fiber_bundle_base(tableau: StandardTableau, check: bool = True) -> List[int]:
    """
    Projective-space dimensions of the iterated bundle over a generalized
    Richardson component: 1..c-1 for each column length c of the tableau.

    Args:
        tableau: Generalized Richardson tableau
        check: Search for the dense pattern of the transpose first. Callers
            holding a Richardson tableau can skip it: the transpose of
            transpose(T_pi) is T_pi, whose standard pattern lies in Pi_u^1.

    Raises:
        NotApplicableError: if the transpose has no dense Jordan orbit of Pi_u^1
        SizeBoundError: if check is set and n exceeds config.TABLEAU_MAX_N
    """
    if check and not patterns_of_tableau(transpose(tableau), pi1_only=True):
        raise NotApplicableError(f"Tableau {tableau} is not generalized Richardson")
    base = []
    for c in conjugate(tableau.shape).parts:
        base.extend(range(1, c))
    return base


@dataclass(frozen=True)
class BundleStep:
    """
    One step of the tower.

    'lemma' steps peel off the last vertex of a pattern whose first block also
    holds n, adding a bundle with base P^(base_dim) whose fiber is the component
    of the restricted tableau. 'sum' steps split the pattern at the end of its
    first block into a product of two components.
    """
    provenance: str
    pattern: LinkPattern
    base_dim: Optional[int] = None
    fiber: Optional[StandardTableau] = None

    def to_dict(self) -> Dict:
        return {'provenance': self.provenance, 'pattern': str(self.pattern), 'base_dim': self.base_dim,
                'fiber': self.fiber.to_list() if self.fiber is not None else None}


def derive_bundle_tower(pattern: LinkPattern) -> List[BundleStep]:
    """
    Inductive tower for the component transpose(T_pi), pi in Pi_u^1.

    The base dimensions of the 'lemma' steps form the same multiset as
    fiber_bundle_base of that component.
    """
    if not in_pi1(pattern):
        raise NotApplicableError(f"Pattern {pattern} is not in Pi_u^1")
    steps: List[BundleStep] = []
    _descend(pattern, steps)
    return steps


def _descend(pattern: LinkPattern, steps: List[BundleStep]):
    while pattern.n > 1:
        first = pattern.block_of(1)
        if first[-1] == pattern.n:
            component = transpose(tableau_of_pattern(pattern))
            if not last_column_contains_max(component):
                raise VerificationError(f"{pattern.n} is not in the last column of {component}")
            steps.append(BundleStep('lemma', pattern, len(first) - 1, restrict(component, pattern.n - 1)))
            pattern = remove_last(pattern)
        else:
            left, right = split_at_first_block(pattern)
            steps.append(BundleStep('sum', pattern))
            _descend(left, steps)
            pattern = right


def tower_base(steps: List[BundleStep]) -> List[int]:
    """Sorted base dimensions of a tower."""
    return sorted(step.base_dim for step in steps if step.provenance == 'lemma')
