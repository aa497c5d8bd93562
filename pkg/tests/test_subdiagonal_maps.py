"""
部分対角写像の列挙のテスト
"""

import math

import pytest

from src.algorithms.universal_polynomials import coeff_table, u_poly, u_poly_d
from src.data.normal_polynomial import NormalMonomial, NormalPolynomial
from src.data.partition import Partition
from src.enumerators.subdiagonal_maps import (
    PartialSubdiagonalMap,
    SubdiagonalMap,
    count_pd_by_type,
    count_pd_by_types,
    enumerate_pd,
    enumerate_sd,
    u_d_from_partial_maps,
    u_from_subdiagonal,
    u_from_umbral,
)
from src.exceptions import DomainError, EnumerationLimitError


class TestSubdiagonalMap:
    """SD_n のテスト"""

    def test_validation(self):
        """f(i) < i でない写像は拒否"""
        SubdiagonalMap((0, 1, 2))
        with pytest.raises(ValueError):
            SubdiagonalMap((0, 1, 3))
        with pytest.raises(ValueError):
            SubdiagonalMap((1,))

    def test_monomial(self):
        """f = (0, 0, 1): ファイバーは 0 に 2 個、1 に 1 個"""
        f = SubdiagonalMap((0, 0, 1))

        assert f(3) == 1
        assert f.fiber_sizes() == {0: 2, 1: 1}
        assert f.monomial() == NormalMonomial.of({0: 2, 1: 1}, 2)

    @pytest.mark.parametrize("n", range(0, 6))
    def test_count(self, n, limits):
        """|SD_n| = n!"""
        maps = list(enumerate_sd(n, limits))
        assert len(maps) == math.factorial(n)
        assert len(set(maps)) == len(maps)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_u_from_subdiagonal(self, n, limits):
        """部分対角写像の和は U_n"""
        assert u_from_subdiagonal(n, limits) == u_poly(n)

    def test_limit(self, tight_limits):
        """上限を超える n は列挙前に拒否"""
        with pytest.raises(EnumerationLimitError) as excinfo:
            list(enumerate_sd(4, tight_limits))
        assert excinfo.value.kind == "subdiagonal_maps"
        assert excinfo.value.count == 24

    def test_negative_n(self):
        """負の n は拒否"""
        with pytest.raises(DomainError):
            list(enumerate_sd(-1))


class TestPartialSubdiagonalMap:
    """PD_{n,d} のテスト"""

    def test_validation(self):
        """長さや値域が合わない写像は拒否"""
        with pytest.raises(ValueError, match="長さ"):
            PartialSubdiagonalMap(2, 1, (None,))
        with pytest.raises(ValueError):
            PartialSubdiagonalMap(2, 1, (None, 2))
        with pytest.raises(ValueError):
            PartialSubdiagonalMap(2, 1, (1, None))

    def test_monomial_and_type(self):
        """g(2,1) = 1, g(3,1) = 1, g(3,2) = 2 の場合"""
        g = PartialSubdiagonalMap(3, 2, (None, None, 1, None, 1, 2))

        assert g(3, 2) == 2
        assert g.domain_size() == 3
        assert g.type() == Partition((2, 1))
        assert g.monomial() == NormalMonomial.of({0: 1, 1: 1, 2: 1}, 3)

    @pytest.mark.parametrize("n, d", [(1, 1), (2, 2), (3, 1), (3, 2), (2, 3)])
    def test_count(self, n, d, limits):
        """(n!)^d 個ある"""
        assert sum(1 for _ in enumerate_pd(n, d, limits)) == math.factorial(n) ** d

    @pytest.mark.parametrize("n, d", [(1, 2), (2, 2), (3, 2), (3, 3), (4, 1)])
    def test_u_d_from_partial_maps(self, n, d, limits):
        """部分写像の和は U_{n,d}"""
        assert u_d_from_partial_maps(n, d, limits) == u_poly_d(n, d)

    def test_type_counts_are_coefficients(self, limits):
        """型 λ の個数は c^{n,d}_λ"""
        assert count_pd_by_types(3, 3, limits) == coeff_table(3, 3, "binomial").coefficients()
        assert count_pd_by_type(3, 2, Partition((2,)), limits) == (
            coeff_table(3, 2, "binomial").coefficient(Partition((2,)))
        )

    def test_limit(self, tight_limits):
        """件数が上限を超えると拒否"""
        with pytest.raises(EnumerationLimitError):
            list(enumerate_pd(4, 2, tight_limits))

    def test_domain_errors(self):
        """d < 1 は拒否"""
        with pytest.raises(DomainError):
            list(enumerate_pd(2, 0))


class TestUmbral:
    """積 Π (x_i + … + x_0)^d の展開"""

    @pytest.mark.parametrize("n", range(0, 5))
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_matches_u_poly_d(self, n, d):
        """同じ y 単項式に移る x 単項式の係数は合算される"""
        assert u_from_umbral(n, d) == u_poly_d(n, d)

    def test_zero(self):
        """空の積は 1"""
        assert u_from_umbral(0) == NormalPolynomial.one()

    def test_domain_errors(self):
        """d < 1 は拒否"""
        with pytest.raises(DomainError):
            u_from_umbral(2, 0)
