"""
Property sweeps cross-checking the closed formulas against the oracle and
against each other, over every Jordan type up to a given size.

Suites:
- dims: commutant and flag-stabilizer dimensions, Jordan type chains
- orbits: density criterion, inductive estimate, mirror invariance
- duality: Richardson / Bala-Carter duality, bundle bases, singular shapes
- evacuation: involution and the mirror symmetry of dense patterns
"""

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd

import config
from src.combinatorics.linkpatterns import (
    PatternFilter, enumerate_patterns, in_pi1, mirror, tableau_of_pattern,
)
from src.combinatorics.shapes import (
    Partition, conjugate, dim_springer_fiber, dim_stabilizer, distinct_permutations,
    has_singular_component, jordan_type_all_smooth, partitions,
)
from src.combinatorics.tableaux import (
    enumerate_standard, evacuation, shape_chain, tableau_from_cocomposition,
    tableau_from_composition, transpose,
)
from src.errors import ValidationError, check_bound
from src.geometry.bundles import derive_bundle_tower, tower_base
from src.geometry.classify import (
    all_bc_singular, bc_is_singular, classify_shape, corollary_all_singular, singular_families,
)
from src.geometry.orbits import analyze_orbit, inductive_report
from src.oracle.realization import commutant_dim, flag_stabilizer_dim, jordan_type_chain

SUITES = ('dims', 'orbits', 'duality', 'evacuation')


@dataclass
class SuiteResult:
    """Outcome of one suite over one Jordan type."""
    suite: str
    shape: Tuple[int, ...]
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    def check(self, condition: bool, message: Callable[[], str]):
        self.checks += 1
        if not condition:
            self.failures.append(message())


def _dims(lam: Partition) -> SuiteResult:
    result = SuiteResult('dims', lam.parts)
    if lam.n <= config.COMMUTANT_MAX_N:
        got = commutant_dim(lam)
        result.check(got == dim_stabilizer(lam),
                     lambda: f"commutant_dim{lam.parts} = {got}, formula gives {dim_stabilizer(lam)}")
    if lam.n <= config.FLAG_MAX_N:
        for pattern in enumerate_patterns(lam):
            stab = flag_stabilizer_dim(pattern)
            a = len(analyze_orbit(pattern).a_set)
            result.check(stab == a, lambda: f"flag_stabilizer_dim({pattern}) = {stab}, |A| = {a}")
            chain = jordan_type_chain(pattern)
            expected = shape_chain(tableau_of_pattern(pattern))
            result.check([p.parts for p in chain] == [p.parts for p in expected],
                         lambda: f"jordan_type_chain({pattern}) = {[p.parts for p in chain]}, "
                                 f"shape chain {[p.parts for p in expected]}")
    return result


def _orbits(lam: Partition) -> SuiteResult:
    result = SuiteResult('orbits', lam.parts)
    for pattern in enumerate_patterns(lam):
        info = analyze_orbit(pattern)
        result.check(info.orbit_dim <= info.springer_dim,
                     lambda: f"orbit_dim({pattern}) = {info.orbit_dim} > dim B = {info.springer_dim}")
        result.check(info.dense == in_pi1(pattern),
                     lambda: f"dense({pattern}) = {info.dense} but in_pi1 = {in_pi1(pattern)}")
        mirrored = analyze_orbit(mirror(pattern)).orbit_dim
        result.check(mirrored == info.orbit_dim,
                     lambda: f"orbit_dim changes under mirror of {pattern}: {info.orbit_dim} -> {mirrored}")
        if pattern.n < 2:
            continue
        rep = inductive_report(pattern)
        result.check(rep.a_pi >= rep.a_pi_prime + rep.j0,
                     lambda: f"|A({pattern})| = {rep.a_pi} < {rep.a_pi_prime} + j0 = {rep.j0}")
        result.check(rep.equality == (rep.witness is None),
                     lambda: f"equality {rep.equality} but witness {rep.witness} for {pattern}")
        result.check(rep.stabilizer_identity and rep.springer_identity,
                     lambda: f"dimension identities fail for {pattern} with j0 = {rep.j0}")
        result.check(rep.codim_pi >= rep.codim_pi_prime,
                     lambda: f"codimension drops from {rep.codim_pi_prime} to {rep.codim_pi} at {pattern}")
    return result


def _duality(lam: Partition) -> SuiteResult:
    result = SuiteResult('duality', lam.parts)
    dual = conjugate(lam)

    bc_tableaux = {tableau_from_composition(pi) for pi in distinct_permutations(lam)}
    richardson = {tableau_from_cocomposition(pi) for pi in distinct_permutations(dual)}
    result.check(richardson == {transpose(t) for t in
                                {tableau_from_composition(pi) for pi in distinct_permutations(dual)}},
                 lambda: f"Richardson tableaux of {lam.parts} are not the transposed Bala-Carter ones")

    classification = classify_shape(lam)
    for report in classification.reports:
        t = report.tableau
        result.check(report.is_bala_carter == (t in bc_tableaux),
                     lambda: f"Bala-Carter flag of {t} disagrees with the composition builder")
        result.check(report.is_richardson == (t in richardson),
                     lambda: f"Richardson flag of {t} disagrees with the cocomposition builder")
        result.check(not report.is_bala_carter or report.is_generalized_bc,
                     lambda: f"{t} is Bala-Carter but not generalized Bala-Carter")
        result.check(not report.is_richardson or report.is_generalized_richardson,
                     lambda: f"{t} is Richardson but not generalized Richardson")
        if report.is_generalized_richardson:
            base = report.bundle_base
            result.check(sum(base) == report.dim,
                         lambda: f"bundle base {base} of {t} does not sum to dim {report.dim}")
            tower = tower_base(derive_bundle_tower(report.gen_richardson_pattern))
            result.check(tower == sorted(base),
                         lambda: f"bundle tower {tower} of {t} differs from base {sorted(base)}")

    pi1_tableaux = [tableau_of_pattern(p) for p in enumerate_patterns(lam, PatternFilter.PI1)]
    result.check(len(set(pi1_tableaux)) == len(pi1_tableaux),
                 lambda: f"tableau_of_pattern is not injective on Pi^1 for {lam.parts}")

    some_singular = any(bc_is_singular(pi).is_singular for pi in distinct_permutations(lam))
    exists = has_singular_component(lam)
    result.check(exists == some_singular == (not jordan_type_all_smooth(lam)),
                 lambda: f"singular-component criteria disagree for {lam.parts}")
    result.check(not corollary_all_singular(lam) or all_bc_singular(lam),
                 lambda: f"{lam.parts} dominates (2,2,2,2) or (3,3,3) but has a smooth Bala-Carter component")
    for name, (singular, compositions) in singular_families().items():
        for pi in compositions:
            if pi.sorted_partition() != lam:
                continue
            got = bc_is_singular(pi).is_singular
            result.check(got == singular, lambda: f"{pi.parts} of family {name} has singular = {got}")
    return result


def _evacuation(lam: Partition) -> SuiteResult:
    result = SuiteResult('evacuation', lam.parts)
    for t in enumerate_standard(lam):
        once = evacuation(t)
        result.check(once.shape == t.shape and evacuation(once) == t,
                     lambda: f"evacuation is not an involution at {t}")
    for pattern in enumerate_patterns(lam, PatternFilter.PI1):
        got = evacuation(tableau_of_pattern(pattern))
        expected = tableau_of_pattern(mirror(pattern))
        result.check(got == expected,
                     lambda: f"evacuation(T_pi) = {got} but T_mirror = {expected} for {pattern}")
    return result


SUITE_RUNNERS: Dict[str, Callable[[Partition], SuiteResult]] = {
    'dims': _dims,
    'orbits': _orbits,
    'duality': _duality,
    'evacuation': _evacuation,
}


def _run_task(task: Tuple[str, Tuple[int, ...]]) -> SuiteResult:
    suite, parts = task
    return SUITE_RUNNERS[suite](Partition(parts))


@dataclass
class VerificationSummary:
    results: List[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(not r.failures for r in self.results)

    @property
    def first_counterexample(self) -> Optional[str]:
        for r in self.results:
            if r.failures:
                return r.failures[0]
        return None

    def frame(self) -> pd.DataFrame:
        """Per-suite totals."""
        rows = [{'suite': r.suite, 'shapes': 1, 'checks': r.checks, 'failures': len(r.failures)}
                for r in self.results]
        df = pd.DataFrame(rows, columns=['suite', 'shapes', 'checks', 'failures'])
        if df.empty:
            return df
        order = [s for s in SUITES if s in set(df['suite'])]
        totals = df.groupby('suite', sort=False)[['shapes', 'checks', 'failures']].sum()
        return totals.reindex(order).reset_index()

    def to_dict(self) -> Dict:
        return {
            'passed': self.passed,
            'first_counterexample': self.first_counterexample,
            'suites': [{k: (int(v) if k != 'suite' else v) for k, v in row.items()}
                       for row in self.frame().to_dict(orient='records')],
        }


def resolve_suites(suite: str) -> Sequence[str]:
    if suite == 'all':
        return SUITES
    if suite not in SUITES:
        raise ValidationError(f"Unknown suite {suite!r}, expected one of {SUITES + ('all',)}")
    return (suite,)


def run_verification(suite: str = 'all', max_n: int = 6, jobs: int = 1,
                     verbose: bool = False, bound: Optional[int] = None) -> VerificationSummary:
    """
    Run the selected suites over every partition of 1..max_n.

    Results are merged in (suite, n, partition) order regardless of jobs.
    """
    check_bound('verify', max_n, config.MAX_N if bound is None else bound)
    tasks = [(s, lam.parts) for s in resolve_suites(suite)
             for n in range(1, max_n + 1) for lam in partitions(n)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = []
        for task in tasks:
            results.append(_run_task(task))
            if verbose:
                r = results[-1]
                print(f"{'✓' if not r.failures else '✗'} {r.suite} {r.shape}: {r.checks} checks",
                      file=sys.stderr)
    return VerificationSummary(results)
