import pytest

from src.combinatorics.linkpatterns import PatternFilter, enumerate_patterns, mirror, tableau_of_pattern
from src.combinatorics.shapes import conjugate, distinct_permutations, partitions
from src.combinatorics.tableaux import (
    EMPTY_TABLEAU, StandardTableau, count_standard, enumerate_standard, evacuation,
    last_column_contains_max, restrict, row_word, shape_chain, tableau_from_cocomposition,
    tableau_from_composition, tableau_sum, transpose,
)
from src.errors import SizeBoundError, ValidationError


def rows(*r):
    return StandardTableau(tuple(tuple(x) for x in r))


class TestStandardTableau:
    def test_valid(self):
        t = rows((1, 2, 5), (3, 4), (6, 8), (7,))
        assert t.n == 8
        assert t.shape.parts == (3, 2, 2, 1)
        assert str(t) == '1 2 5 / 3 4 / 6 8 / 7'

    @pytest.mark.parametrize('bad', [
        ((1, 3), (2, 2)),
        ((2, 1),),
        ((1, 3), (2,), (4, 5)),
        ((1, 2), (2, 3)),
        ((1, 4), (3, 2)),
    ])
    def test_invalid(self, bad):
        with pytest.raises(ValidationError):
            StandardTableau(bad)

    def test_position_and_columns(self):
        t = rows((1, 3, 8), (2, 5), (4, 6), (7,))
        assert t.position(5) == (1, 1)
        assert t.columns() == [(1, 2, 4, 7), (3, 5, 6), (8,)]


class TestEnumeration:
    @pytest.mark.parametrize('lam, expected', [((1, 1, 1), 1), ((2, 1), 2), ((2, 2), 2), ((3, 2, 1), 16)])
    def test_counts(self, lam, expected):
        assert len(enumerate_standard(lam)) == expected
        assert count_standard(lam) == expected

    @pytest.mark.parametrize('n', range(1, 9))
    def test_count_matches_recursion(self, n):
        for lam in partitions(n):
            tableaux = enumerate_standard(lam)
            assert len(tableaux) == count_standard(lam)
            assert len(set(tableaux)) == len(tableaux)
            assert all(t.shape == lam for t in tableaux)

    @pytest.mark.parametrize('n', range(1, 9))
    def test_conjugate_shape_has_same_count(self, n):
        for lam in partitions(n):
            assert count_standard(lam) == count_standard(conjugate(lam))

    def test_order_is_row_word(self):
        tableaux = enumerate_standard((3, 2))
        words = [row_word(t) for t in tableaux]
        assert words == sorted(words)
        assert tableaux[0] == rows((1, 2, 3), (4, 5))

    def test_bound(self):
        with pytest.raises(SizeBoundError):
            enumerate_standard((3, 2), bound=4)


class TestTranspose:
    def test_worked_example(self):
        t = rows((1, 3, 8), (2, 5), (4, 6), (7,))
        assert transpose(t) == rows((1, 2, 4, 7), (3, 5, 6), (8,))

    def test_row_to_column(self):
        assert transpose(rows((1, 2, 3))) == rows((1,), (2,), (3,))

    def test_involution(self):
        for t in enumerate_standard((3, 2, 2, 1)):
            assert transpose(transpose(t)) == t


class TestBuilders:
    @pytest.mark.parametrize('pi, expected', [
        ((2, 3, 1, 2), ((1, 2, 5), (3, 4), (6, 8), (7,))),
        ((1, 2, 2, 1), ((1, 3), (2, 5), (4,), (6,))),
        ((2, 3, 2), ((1, 2, 5), (3, 4), (6, 7))),
        ((4,), ((1, 2, 3, 4),)),
    ])
    def test_from_composition(self, pi, expected):
        assert tableau_from_composition(pi) == rows(*expected)

    def test_str_of_worked_example(self):
        assert str(tableau_from_composition((2, 3, 1, 2))) == '1 2 5 / 3 4 / 6 8 / 7'

    def test_from_cocomposition_trivial(self):
        assert tableau_from_cocomposition((1, 1, 1, 1)) == rows((1, 2, 3, 4))
        assert tableau_from_cocomposition((3,)) == rows((1,), (2,), (3,))

    @pytest.mark.parametrize('n', range(1, 9))
    def test_duality(self, n):
        for lam in partitions(n):
            for pi in distinct_permutations(lam):
                assert tableau_from_cocomposition(pi) == transpose(tableau_from_composition(pi))

    @pytest.mark.parametrize('n', range(1, 9))
    def test_richardson_set_is_transposed_bala_carter_set(self, n):
        for lam in partitions(n):
            dual = conjugate(lam)
            richardson = {tableau_from_cocomposition(pi) for pi in distinct_permutations(dual)}
            bc = {transpose(tableau_from_composition(pi)) for pi in distinct_permutations(dual)}
            assert richardson == bc
            assert all(t.shape == lam for t in richardson)


class TestShapeChain:
    def test_single_row(self):
        assert [p.parts for p in shape_chain(rows((1, 2, 3)))] == [(1,), (2,), (3,)]

    def test_small(self):
        assert [p.parts for p in shape_chain(rows((1, 3), (2,)))] == [(1,), (1, 1), (2, 1)]

    @pytest.mark.parametrize('lam', [(3, 2, 1), (4, 2, 2), (2, 2, 2, 1)])
    def test_ends_at_shape(self, lam):
        for t in enumerate_standard(lam):
            chain = shape_chain(t)
            assert len(chain) == t.n
            assert chain[-1] == t.shape
            assert all(b.n == a.n + 1 for a, b in zip(chain, chain[1:]))


class TestSum:
    def test_worked_example(self):
        t1 = rows((1, 2), (3,), (4,), (5,))
        t2 = rows((1, 3), (2, 4))
        assert tableau_sum(t1, t2) == rows((1, 2, 6, 8), (3, 7, 9), (4,), (5,))

    def test_empty(self):
        t = rows((1, 3), (2,))
        assert tableau_sum(t, EMPTY_TABLEAU) == t
        assert tableau_sum(EMPTY_TABLEAU, t) == t

    def test_all_small_pairs(self):
        shapes = [lam for n in range(1, 5) for lam in partitions(n)]
        for lam in shapes:
            for mu in shapes:
                for t1 in enumerate_standard(lam):
                    for t2 in enumerate_standard(mu):
                        total = tableau_sum(t1, t2)
                        assert total.n == t1.n + t2.n
                        assert restrict(total, t1.n) == t1

    def test_shape_is_row_sum(self):
        for t1 in enumerate_standard((2, 1, 1)):
            for t2 in enumerate_standard((2, 1)):
                assert tableau_sum(t1, t2).shape.parts == (4, 2, 1)


class TestEvacuation:
    def test_small(self):
        assert evacuation(rows((1, 2), (3,))) == rows((1, 3), (2,))

    def test_row_and_column(self):
        assert evacuation(rows((1, 2, 3))) == rows((1, 2, 3))
        assert evacuation(rows((1,), (2,), (3,))) == rows((1,), (2,), (3,))

    def test_involution(self):
        for t in enumerate_standard((3, 2, 1)):
            assert evacuation(t).shape == t.shape
            assert evacuation(evacuation(t)) == t

    @pytest.mark.parametrize('n', range(1, 8))
    def test_matches_mirror_on_dense_patterns(self, n):
        for lam in partitions(n):
            for pattern in enumerate_patterns(lam, PatternFilter.PI1):
                assert evacuation(tableau_of_pattern(pattern)) == tableau_of_pattern(mirror(pattern))

    def test_self_mirror_pattern_outside_pi1_is_not_fixed(self):
        t = rows((1, 3), (2,))
        assert evacuation(t) != t


class TestHelpers:
    def test_restrict(self):
        t = rows((1, 2, 5), (3, 4), (6, 8), (7,))
        assert restrict(t, 5) == rows((1, 2, 5), (3, 4))

    def test_last_column_contains_max(self):
        assert last_column_contains_max(rows((1, 2), (3, 4)))
        assert not last_column_contains_max(rows((1, 2), (3,)))
