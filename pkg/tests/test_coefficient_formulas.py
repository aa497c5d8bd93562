"""
係数公式のテスト
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algorithms.coefficient_formulas import (
    coeff_arrays,
    coeff_binomial,
    coeff_comtet,
    coeff_recurrence,
    lower_triangular_arrays,
)
from src.algorithms.universal_polynomials import candidate_partitions
from src.data.partition import EMPTY, Partition
from src.exceptions import DomainError, EnumerationLimitError

# 既知の c^n_λ（n ≤ 5）
KNOWN_COEFFICIENTS = {
    1: {(): 1},
    2: {(): 1, (1,): 1},
    3: {(): 1, (1,): 3, (2,): 1, (1, 1): 1},
    4: {(): 1, (1,): 6, (2,): 4, (1, 1): 7, (3,): 1, (2, 1): 4, (1, 1, 1): 1},
    5: {
        (): 1,
        (1,): 10,
        (2,): 10,
        (1, 1): 25,
        (3,): 5,
        (2, 1): 30,
        (1, 1, 1): 15,
        (4,): 1,
        (3, 1): 7,
        (2, 2): 4,
        (2, 1, 1): 11,
        (1, 1, 1, 1): 1,
    },
}

# c^{3,3}_λ
KNOWN_C33 = {
    (): 1,
    (1,): 9,
    (1, 1): 15,
    (2,): 18,
    (2, 1): 42,
    (3,): 21,
    (3, 1): 33,
    (2, 2): 18,
    (4,): 15,
    (4, 1): 15,
    (3, 2): 15,
    (5,): 6,
    (6,): 1,
    (5, 1): 3,
    (4, 2): 3,
    (3, 3): 1,
}

KNOWN_CASES = [
    (n, parts, value) for n, table in KNOWN_COEFFICIENTS.items() for parts, value in table.items()
]


class TestKnownCoefficients:
    """既知の係数表との照合"""

    @pytest.mark.parametrize("n, parts, value", KNOWN_CASES)
    def test_recurrence(self, n, parts, value, limits):
        """漸化式による既知の係数"""
        assert coeff_recurrence(n, Partition(parts), limits) == value

    @pytest.mark.parametrize("n, parts, value", KNOWN_CASES)
    def test_binomial(self, n, parts, value):
        """二項係数の積和による既知の係数"""
        assert coeff_binomial(n, 1, Partition(parts)) == value

    @pytest.mark.parametrize("n, parts, value", KNOWN_CASES)
    def test_comtet(self, n, parts, value):
        """Comtet 型の公式による既知の係数"""
        assert coeff_comtet(n, 1, Partition(parts)) == value

    @pytest.mark.parametrize("n, parts, value", KNOWN_CASES)
    def test_arrays(self, n, parts, value):
        """下三角配列の数え上げによる既知の係数"""
        assert coeff_arrays(n, 1, Partition(parts)) == value

    @pytest.mark.parametrize("formula", [coeff_binomial, coeff_comtet, coeff_arrays])
    def test_c33(self, formula):
        """c^{3,3}_λ の表と総和 (3!)^3 = 216"""
        values = {parts: formula(3, 3, Partition(parts)) for parts in KNOWN_C33}

        assert values == KNOWN_C33
        assert sum(values.values()) == 216

    @pytest.mark.parametrize("n", range(1, 7))
    def test_row_sums_are_factorials(self, n, limits):
        """Σ_λ c^n_λ = n!"""
        total = sum(coeff_recurrence(n, p, limits) for p in candidate_partitions(n, 1))
        assert total == math.factorial(n)


class TestFormulaAgreement:
    """公式どうしの一致"""

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 5), st.integers(1, 3), st.data())
    def test_binomial_comtet_arrays_agree(self, n, d, data):
        """三つの閉公式が任意の λ で一致"""
        partition = data.draw(st.sampled_from(list(candidate_partitions(n, d))))

        value = coeff_binomial(n, d, partition)
        assert coeff_comtet(n, d, partition) == value
        assert coeff_arrays(n, d, partition) == value

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 8), st.data())
    def test_recurrence_matches_binomial(self, n, data):
        """漸化式と二項係数の積和が一致"""
        partition = data.draw(st.sampled_from(list(candidate_partitions(n, 1))))
        assert coeff_recurrence(n, partition) == coeff_binomial(n, 1, partition)

    def test_out_of_range_partitions_vanish(self, limits):
        """|λ| ≥ n や ℓ(λ) ≥ n の係数は 0"""
        assert coeff_recurrence(3, Partition((3,)), limits) == 0
        assert coeff_binomial(3, 1, Partition((1, 1, 1))) == 0
        assert coeff_binomial(2, 2, Partition((3,))) == 0
        assert coeff_arrays(2, 2, Partition((3,))) == 0


class TestFormulaErrors:
    """前提条件違反"""

    def test_comtet_requires_k_at_least_d(self):
        """k < d は拒否"""
        with pytest.raises(DomainError, match="k ≥ d"):
            coeff_comtet(2, 1, Partition((2,)))
        with pytest.raises(DomainError):
            coeff_comtet(2, 2, Partition((3,)))

    @pytest.mark.parametrize("formula", [coeff_binomial, coeff_comtet, coeff_arrays])
    def test_non_positive_parameters(self, formula):
        """n < 1 や d < 1 は拒否"""
        with pytest.raises(DomainError):
            formula(0, 1, EMPTY)
        with pytest.raises(DomainError):
            formula(2, 0, EMPTY)

    def test_recurrence_limit(self, tight_limits):
        """max_recurrence_n を超える n は明示的に拒否する"""
        assert coeff_recurrence(5, EMPTY, tight_limits) == 1
        with pytest.raises(EnumerationLimitError) as excinfo:
            coeff_recurrence(6, EMPTY, tight_limits)
        assert excinfo.value.limit == 5

    def test_recurrence_requires_positive_n(self):
        """漸化式は n ≥ 1 が必要"""
        with pytest.raises(DomainError):
            coeff_recurrence(0, EMPTY)


class TestLowerTriangularArrays:
    """下三角配列の列挙"""

    def test_single_entry(self):
        """1 列だけの配列"""
        assert list(lower_triangular_arrays(2, [1], 1)) == [{(2, 1): 1}]
        assert list(lower_triangular_arrays(2, [2], 1)) == []

    def test_row_cap(self):
        """列和 (1, 1)、行和 ≤ 1 の 3×3 下三角配列"""
        arrays = list(lower_triangular_arrays(3, [1, 1], 1))
        assert {(2, 1): 1, (3, 2): 1} in arrays
        assert all(sum(v for (i, _), v in a.items() if i == 3) <= 1 for a in arrays)
        assert len(arrays) == 1

    def test_column_count_mismatch(self):
        """列和の個数が合わない場合はエラー"""
        with pytest.raises(ValueError):
            list(lower_triangular_arrays(3, [1], 1))
