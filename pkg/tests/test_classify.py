from itertools import product

import pytest

from src.combinatorics.linkpatterns import (
    PatternFilter, enumerate_patterns, from_blocks, tableau_of_pattern,
)
from src.combinatorics.shapes import (
    Composition, conjugate, count_distinct_permutations, dim_springer_fiber, distinct_permutations,
    has_singular_component, jordan_type_all_smooth, partitions,
)
from src.combinatorics.tableaux import (
    StandardTableau, enumerate_standard, tableau_from_cocomposition, tableau_from_composition,
)
from src.errors import SizeBoundError
from src.geometry.classify import (
    Provenance, Verdict, all_bc_singular, bala_carter_composition, bc_is_singular,
    classify_shape, classify_tableau, corollary_all_singular, find_dense_pattern,
    first_part_decrement, last_part_decrement, singular_families, sum_component_dims,
)

SMALL_COMPOSITIONS = [c for k in range(1, 6) for c in product(range(1, 5), repeat=k)]


class TestBalaCarterCriterion:
    @pytest.mark.parametrize('pi', [(1, 2, 2, 1), (2, 3, 2), (1, 3, 2, 1), (2, 1, 3, 1, 2), (3, 3, 3)])
    def test_singular(self, pi):
        assert bc_is_singular(pi).is_singular

    @pytest.mark.parametrize('pi', [(2, 2, 1, 1), (3, 2, 2), (1, 1, 2, 2), (2, 2, 2), (5,), (1, 1, 1)])
    def test_smooth(self, pi):
        verdict = bc_is_singular(pi)
        assert verdict.verdict is Verdict.SMOOTH
        assert verdict.provenance is Provenance.BALA_CARTER
        assert verdict.witness is None

    def test_witness(self):
        verdict = bc_is_singular((2, 3, 1, 2))
        assert verdict.witness == {'pattern': [2, 3, 2], 'indices': [1, 2, 4]}
        assert verdict.to_dict()['verdict'] == 'singular'

    def test_families(self):
        for name, (singular, compositions) in singular_families().items():
            assert compositions, name
            for pi in compositions:
                assert bc_is_singular(pi).is_singular is singular, (name, pi)

    def test_reverse_symmetry(self):
        for pi in SMALL_COMPOSITIONS:
            assert bc_is_singular(pi).is_singular == bc_is_singular(pi[::-1]).is_singular

    def test_smooth_closed_under_decrements(self):
        for pi in SMALL_COMPOSITIONS:
            if bc_is_singular(pi).is_singular:
                continue
            assert not bc_is_singular(first_part_decrement(pi)).is_singular or len(pi) == 1
            assert not bc_is_singular(last_part_decrement(pi)).is_singular or len(pi) == 1
            for k in range(len(pi)):
                rest = pi[:k] + pi[k + 1:]
                if rest:
                    assert not bc_is_singular(rest).is_singular

    def test_decrement_at_maximal_part_preserves_verdict(self):
        for pi in SMALL_COMPOSITIONS:
            if sum(pi) == 1:
                continue
            singular = bc_is_singular(pi).is_singular
            if pi[-1] == max(pi):
                assert bc_is_singular(last_part_decrement(pi)).is_singular == singular, pi
            if pi[0] == max(pi):
                assert bc_is_singular(first_part_decrement(pi)).is_singular == singular, pi

    def test_decrements(self):
        assert first_part_decrement((1, 2, 3)).parts == (2, 3)
        assert last_part_decrement((1, 2, 3)).parts == (1, 2, 2)


class TestAllSingular:
    @pytest.mark.parametrize('lam, expected', [
        ((2, 2, 2, 2), True),
        ((3, 3, 3), True),
        ((2, 2, 1, 1), False),
        ((3, 2, 2), False),
        ((4, 4, 4, 1), True),
    ])
    def test_all_bc_singular(self, lam, expected):
        assert all_bc_singular(lam) is expected

    @pytest.mark.parametrize('n', range(1, 9))
    def test_singular_component_criteria_agree(self, n):
        for lam in partitions(n):
            some_bc_singular = any(bc_is_singular(pi).is_singular for pi in distinct_permutations(lam))
            assert has_singular_component(lam) == some_bc_singular, lam
            assert some_bc_singular == (not jordan_type_all_smooth(lam)), lam

    @pytest.mark.parametrize('n', range(1, 10))
    def test_corollary_is_sufficient(self, n):
        for lam in partitions(n):
            if corollary_all_singular(lam):
                assert all_bc_singular(lam)


class TestClassifyTableau:
    def test_bala_carter(self):
        report = classify_tableau(tableau_from_composition((1, 2, 2, 1)))
        assert report.is_bala_carter
        assert report.is_generalized_bc
        assert report.bc_composition == Composition((1, 2, 2, 1))
        assert report.singular.is_singular
        assert report.dim == 7
        assert 'BC' in report.classes

    def test_richardson_is_smooth(self):
        t = tableau_from_cocomposition((1, 2, 2, 1))
        report = classify_tableau(t)
        assert report.is_richardson
        assert report.is_generalized_richardson
        if not report.is_bala_carter:
            assert report.singular.provenance is Provenance.RICHARDSON
        assert report.singular.verdict is Verdict.SMOOTH
        assert report.bundle_base is not None

    def test_bala_carter_composition_recovers(self):
        for pi in [(2, 3, 1, 2), (1, 2, 2, 1), (3,), (1, 1, 2)]:
            assert bala_carter_composition(tableau_from_composition(pi)).parts == pi

    @pytest.mark.parametrize('n', range(1, 7))
    def test_bala_carter_composition_matches_builder(self, n):
        for lam in partitions(n):
            built = {tableau_from_composition(pi): pi for pi in distinct_permutations(lam)}
            for t in enumerate_standard(lam):
                found = bala_carter_composition(t)
                if t in built:
                    assert found == built[t]
                else:
                    assert found is None

    def test_not_bala_carter(self):
        assert bala_carter_composition(StandardTableau(((1, 2, 4), (3,)))) is None

    @pytest.mark.parametrize('n', range(1, 7))
    def test_class_implications(self, n):
        for lam in partitions(n):
            for t in enumerate_standard(lam):
                report = classify_tableau(t)
                assert report.dim == dim_springer_fiber(lam)
                if report.is_bala_carter:
                    assert report.is_generalized_bc
                    assert report.singular.provenance is Provenance.BALA_CARTER
                if report.is_richardson:
                    assert report.is_generalized_richardson
                if report.singular.is_singular:
                    assert report.is_bala_carter
                if report.is_generalized_richardson:
                    assert report.singular.verdict is not Verdict.UNKNOWN or report.is_bala_carter
                    assert sum(report.bundle_base) == report.dim
                if jordan_type_all_smooth(lam):
                    assert report.singular.verdict is Verdict.SMOOTH

    def test_to_dict_keys(self):
        data = classify_tableau(tableau_from_composition((2, 1))).to_dict()
        assert set(data) == {'tableau', 'shape', 'dim', 'class', 'bc_composition',
                             'richardson_composition', 'gen_bc_pattern', 'singular', 'bundle_base'}

    def test_bound(self):
        with pytest.raises(SizeBoundError):
            classify_tableau(tableau_from_composition((3, 2)), bound=4)


class TestFindDensePattern:
    def test_recovers_pattern(self):
        for n in range(1, 7):
            for lam in partitions(n):
                for pattern in enumerate_patterns(lam, PatternFilter.PI1):
                    assert find_dense_pattern(tableau_of_pattern(pattern)) == pattern

    def test_none(self):
        assert find_dense_pattern(StandardTableau(((1, 2, 4), (3,)))) is None

    def test_example(self):
        t = tableau_of_pattern(from_blocks([{1, 5}, {2, 3, 4}], 5))
        assert find_dense_pattern(t) == from_blocks([{1, 5}, {2, 3, 4}], 5)


class TestClassifyShape:
    @pytest.mark.parametrize('lam, bc, singular', [((2, 2, 1, 1), 6, 1), ((3, 2, 2), 3, 1)])
    def test_singular_counts(self, lam, bc, singular):
        summary = classify_shape(lam).summary
        assert summary['BC'] == bc
        assert summary['singular'] == singular
        assert summary['exists_singular']

    def test_all_smooth_shape(self):
        summary = classify_shape((3, 3, 1)).summary
        assert summary['singular'] == 0
        assert summary['unknown'] == 0
        assert not summary['exists_singular']

    @pytest.mark.parametrize('n', range(1, 8))
    def test_counts(self, n):
        for lam in partitions(n):
            classification = classify_shape(lam)
            summary = classification.summary
            assert summary['components'] == len(enumerate_standard(lam))
            assert summary['BC'] == count_distinct_permutations(lam)
            assert summary['R'] == count_distinct_permutations(conjugate(lam))
            assert summary['genBC'] == len(enumerate_patterns(lam, PatternFilter.PI1))
            assert summary['genR'] == len(enumerate_patterns(conjugate(lam), PatternFilter.PI1))
            assert summary['singular'] + summary['smooth'] + summary['unknown'] == summary['components']
            assert (summary['singular'] > 0) == has_singular_component(lam)

    def test_parallel_matches_serial(self):
        serial = classify_shape((3, 2, 1))
        parallel = classify_shape((3, 2, 1), jobs=2)
        assert parallel.reports == serial.reports

    def test_bound(self):
        with pytest.raises(SizeBoundError):
            classify_shape((3, 2), bound=4)


class TestSumComponents:
    def test_worked_example(self):
        t1 = StandardTableau(((1, 2), (3,), (4,), (5,)))
        t2 = StandardTableau(((1, 3), (2, 4)))
        assert sum_component_dims(t1, t2) == 8

    def test_small(self):
        t1 = StandardTableau(((1, 2), (3,), (4,)))
        t2 = StandardTableau(((1,), (2,)))
        assert sum_component_dims(t1, t2) == 4

    def test_additive(self):
        for t1 in enumerate_standard((2, 1)):
            for t2 in enumerate_standard((2, 2)):
                assert sum_component_dims(t1, t2) == dim_springer_fiber((2, 1)) + dim_springer_fiber((2, 2))
