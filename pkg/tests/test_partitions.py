import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shufflecalc import (
    CumulantTable,
    DomainError,
    MomentTable,
    SetPartition,
    Word,
    adjoint_sum_lower,
    adjoint_sum_upper,
    boolean_moment_sum,
    cfree_moment_sum,
    classify_blocks,
    enumerate_boolean,
    enumerate_nc,
    enumerate_nc_irreducible,
    free_moment_sum,
    monotone_moment_sum,
    nesting_forest,
    tree_factorial,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


class TestSetPartition:
    def test_canonical_block_order(self):
        p = SetPartition(4, [[3, 4], [2, 1]])
        assert p.blocks == ((1, 2), (3, 4))

    def test_validation(self):
        with pytest.raises(DomainError):
            SetPartition(3, [[1, 2]])
        with pytest.raises(DomainError):
            SetPartition(3, [[1, 2], [2, 3]])
        with pytest.raises(DomainError):
            SetPartition(2, [[1, 2], []])

    def test_noncrossing_detection(self):
        assert SetPartition(4, [[1, 4], [2, 3]]).is_noncrossing()
        assert not SetPartition(4, [[1, 3], [2, 4]]).is_noncrossing()
        assert SetPartition(6, [[1, 6], [2, 3], [4, 5]]).is_noncrossing()
        assert not SetPartition(6, [[1, 4], [2, 6], [3], [5]]).is_noncrossing()

    def test_interval_detection(self):
        assert SetPartition(4, [[1, 2], [3, 4]]).is_interval()
        assert not SetPartition(4, [[1, 4], [2, 3]]).is_interval()

    def test_json(self):
        assert SetPartition(3, [[1, 3], [2]]).to_json() == [[1, 3], [2]]


class TestEnumeration:
    def test_catalan_counts(self):
        for n in range(1, 9):
            assert len(enumerate_nc(n)) == CATALAN[n]

    def test_boolean_counts(self):
        for n in range(1, 13):
            assert len(enumerate_boolean(n)) == 2 ** (n - 1)

    def test_irreducible_counts_shift_catalan(self):
        # partitions with 1 and n joined biject with NC(n-1)
        for n in range(2, 9):
            assert len(enumerate_nc_irreducible(n)) == CATALAN[n - 1]

    def test_no_duplicates(self):
        ps = enumerate_nc(6)
        assert len(set(ps)) == len(ps)

    def test_boolean_inside_noncrossing(self):
        for n in range(1, 8):
            assert set(enumerate_boolean(n)) <= set(enumerate_nc(n))

    def test_order_guard(self):
        with pytest.raises(DomainError):
            enumerate_nc(0)
        with pytest.raises(DomainError):
            enumerate_nc(15)


@given(st.integers(min_value=1, max_value=7))
def test_enumerated_partitions_are_noncrossing(n):
    for p in enumerate_nc(n):
        assert p.n == n
        assert p.is_noncrossing()


@given(st.integers(min_value=1, max_value=10))
def test_interval_partitions_are_intervals(n):
    for p in enumerate_boolean(n):
        assert p.is_interval()


@given(st.integers(min_value=2, max_value=7))
def test_irreducible_partitions_join_endpoints(n):
    for p in enumerate_nc_irreducible(n):
        first = next(b for b in p.blocks if 1 in b)
        assert n in first


class TestNesting:
    def test_classify_blocks(self):
        p = SetPartition(4, [[1, 4], [2, 3]])
        assert classify_blocks(p) == ["outer", "inner"]
        q = SetPartition(4, [[1, 2], [3, 4]])
        assert classify_blocks(q) == ["outer", "outer"]

    def test_nesting_forest_parents(self):
        p = SetPartition(6, [[1, 6], [2, 5], [3, 4]])
        assert nesting_forest(p) == [None, 0, 1]

    def test_nesting_forest_picks_minimal_parent(self):
        p = SetPartition(5, [[1, 5], [2, 4], [3]])
        assert nesting_forest(p) == [None, 0, 1]

    def test_tree_factorial_examples(self):
        assert tree_factorial(SetPartition(3, [[1, 3], [2]])) == 2
        assert tree_factorial(SetPartition(6, [[1, 6], [2, 3], [4, 5]])) == 3
        assert tree_factorial(SetPartition(6, [[1, 6], [2, 5], [3, 4]])) == 6
        assert tree_factorial(SetPartition(4, [[1, 2], [3, 4]])) == 1

    def test_crossing_rejected(self):
        with pytest.raises(DomainError):
            tree_factorial(SetPartition(4, [[1, 3], [2, 4]]))


@given(st.integers(min_value=1, max_value=7))
def test_tree_factorial_divides_factorial_of_block_count(n):
    import math

    for p in enumerate_nc(n):
        k = len(p.blocks)
        assert math.factorial(k) % tree_factorial(p) == 0


class TestMomentSums:
    """Closed-form univariate checks at low degree."""

    def setup_method(self):
        rng = random.Random(5)
        self.k = CumulantTable.random(["a"], 3, rng)
        self.k1 = self.k.lookup(Word("a"))
        self.k2 = self.k.lookup(Word("aa"))
        self.k3 = self.k.lookup(Word("aaa"))

    def test_free(self):
        assert free_moment_sum(self.k, Word("aaa")) == (
            self.k3 + 3 * self.k1 * self.k2 + self.k1**3
        )

    def test_boolean(self):
        assert boolean_moment_sum(self.k, Word("aaa")) == (
            self.k3 + 2 * self.k1 * self.k2 + self.k1**3
        )

    def test_monotone(self):
        assert monotone_moment_sum(self.k, Word("aaa")) == (
            self.k3 + Fraction(5, 2) * self.k1 * self.k2 + self.k1**3
        )

    def test_cfree_weights_outer_by_r_and_inner_by_kappa(self):
        rng = random.Random(6)
        r = CumulantTable.random(["a"], 3, rng)
        kpsi = CumulantTable.random(["a"], 3, rng)
        # only {1,3}{2} has an inner block at n = 3
        expected = (
            r.lookup(Word("aaa"))
            + 2 * r.lookup(Word("a")) * r.lookup(Word("aa"))
            + r.lookup(Word("a")) ** 3
            + r.lookup(Word("aa")) * kpsi.lookup(Word("a"))
        )
        assert cfree_moment_sum(r, kpsi, Word("aaa")) == expected

    def test_multivariate_positions_drive_lookups(self):
        rng = random.Random(7)
        k = CumulantTable.random(["a", "b"], 2, rng)
        expected = k.lookup(Word("ab")) + k.lookup(Word("a")) * k.lookup(Word("b"))
        assert free_moment_sum(k, Word("ab")) == expected


class TestAdjointSums:
    def setup_method(self):
        rng = random.Random(8)
        self.mu = CumulantTable.random(["a", "b"], 4, rng)
        self.psi = MomentTable.random(["a", "b"], 4, rng)
        self.tau = CumulantTable.random(["a", "b"], 4, rng)

    def test_low_degree_fixed_points(self):
        for text in ("a", "b", "ab", "ba", "aa"):
            w = Word(text)
            assert adjoint_sum_lower(self.mu, self.psi, w) == self.mu.lookup(w)

    def test_lower_degree_three_expansion(self):
        w = Word("aba")
        expected = self.mu.lookup(w) + self.mu.lookup(Word("aa")) * self.psi.lookup(
            Word("b")
        )
        assert adjoint_sum_lower(self.mu, self.psi, w) == expected

    def test_upper_degree_three_expansion(self):
        w = Word("aba")
        expected = self.mu.lookup(w) - self.mu.lookup(Word("aa")) * self.tau.lookup(
            Word("b")
        )
        assert adjoint_sum_upper(self.mu, self.tau, w) == expected
