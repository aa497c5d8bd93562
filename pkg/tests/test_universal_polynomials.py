"""
普遍多項式 U_n, U_{n,d}, V_n と係数表の組み立てのテスト
"""

import math

import pytest

from src.algorithms.universal_polynomials import (
    CoefficientMethod,
    candidate_partitions,
    coeff_table,
    compare_tables,
    u_poly,
    u_poly_d,
    v_poly,
)
from src.data.coeff_table import CoeffTable
from src.data.nc_polynomial import NCPolynomial
from src.data.normal_polynomial import NormalMonomial, NormalPolynomial
from src.data.partition import EMPTY, Partition
from src.exceptions import (
    DomainError,
    EnumerationLimitError,
    FormulaMismatchError,
    UnsupportedMethodError,
)


class TestUPoly:
    """U_n, U_{n,d} のテスト"""

    def test_small_cases(self):
        """U_0 から U_3"""
        assert u_poly(0) == NormalPolynomial.one()
        assert u_poly(1).render() == "y0 t"
        assert u_poly(2).render() == "y0 y1 t + y0^2 t^2"
        assert u_poly(3).render() == "y0 y1^2 t + y0^2 y2 t + 3·y0^2 y1 t^2 + y0^3 t^3"

    def test_u_2_2(self):
        """U_{2,2} = y0 y2 t² + 2 y0 y1 t³ + y0² t⁴"""
        expected = NormalPolynomial(
            {
                NormalMonomial.of({0: 1, 2: 1}, 2): 1,
                NormalMonomial.of({0: 1, 1: 1}, 3): 2,
                NormalMonomial.of({0: 2}, 4): 1,
            }
        )
        assert u_poly_d(2, 2) == expected

    @pytest.mark.parametrize("n", range(0, 6))
    @pytest.mark.parametrize("d", range(1, 4))
    def test_coefficient_sum(self, n, d):
        """U_{n,d}(1, 1, …; 1) = (n!)^d"""
        assert u_poly_d(n, d).coefficient_sum() == math.factorial(n) ** d

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("d", range(1, 4))
    def test_homogeneity(self, n, d):
        """各項は y 次数 n、重み nd、y_0 の指数は n − ℓ(λ)"""
        for monomial, coeff in u_poly_d(n, d).terms.items():
            assert coeff > 0
            assert monomial.y_degree() == n
            assert monomial.weight() == n * d
            assert monomial.exponent(0) == n - monomial.y_partition().length()
            assert d <= monomial.t_power <= n * d

    def test_recursive_definition(self):
        """U_{n+1,d} = y_0 (Δ + ρ_t)^d U_{n,d}"""
        previous = u_poly_d(3, 2)
        step = previous.delta() + previous.mul_t()
        step = step.delta() + step.mul_t()
        assert u_poly_d(4, 2) == step.mul_y0()

    def test_domain_errors(self):
        """負の n と d = 0 は拒否"""
        with pytest.raises(DomainError):
            u_poly_d(-1, 1)
        with pytest.raises(DomainError, match="U_\\{n,0\\}"):
            u_poly_d(2, 0)


class TestVPoly:
    """非可換版 V_n のテスト"""

    def test_v3(self):
        """V_3 の展開"""
        expected = (
            NCPolynomial.word((0, 1, 1), 1)
            + NCPolynomial.word((0, 0, 2), 1)
            + NCPolynomial.word((0, 0, 1), 2, coefficient=2)
            + NCPolynomial.word((0, 1, 0), 2)
            + NCPolynomial.word((0, 0, 0), 3)
        )
        assert v_poly(3) == expected

    @pytest.mark.parametrize("n", range(0, 7))
    def test_abelianizes_to_u(self, n):
        """V_n を可換化すると U_n"""
        assert v_poly(n).abelianize() == u_poly(n)

    def test_negative_n(self):
        """負の n は拒否"""
        with pytest.raises(DomainError):
            v_poly(-1)


class TestCoeffTable:
    """係数表の組み立て"""

    ALL_METHODS = [m.value for m in CoefficientMethod]

    @pytest.mark.parametrize("n", range(1, 5))
    def test_all_methods_agree_for_d1(self, n, limits):
        """d = 1 ではすべての計算方法が一致"""
        tables = [coeff_table(n, 1, method, limits) for method in self.ALL_METHODS]
        compare_tables(*tables)
        assert tables[0].total() == math.factorial(n)

    @pytest.mark.parametrize("n, d", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)])
    def test_methods_agree_for_higher_d(self, n, d, limits):
        """d ≥ 2 でも漸化式以外の方法が一致"""
        methods = [m for m in self.ALL_METHODS if m != "recurrence"]
        compare_tables(*(coeff_table(n, d, method, limits) for method in methods))

    def test_c33_total(self):
        """c^{3,3} の合計と個別の値"""
        table = coeff_table(3, 3, "binomial")
        assert table.total() == 216
        assert table.coefficient(Partition((2, 1))) == 42
        assert table.coefficient(EMPTY) == 1

    def test_recurrence_only_for_d1(self):
        """漸化式は d = 1 のみ"""
        with pytest.raises(UnsupportedMethodError, match="d = 1"):
            coeff_table(3, 2, "recurrence")

    def test_unknown_method(self):
        """未知の計算方法は拒否"""
        with pytest.raises(UnsupportedMethodError, match="未知の計算方法"):
            coeff_table(3, 1, "magic")

    def test_domain_errors(self):
        """n < 1 や d < 1 は拒否"""
        with pytest.raises(DomainError):
            coeff_table(0, 1)
        with pytest.raises(DomainError):
            coeff_table(2, 0)

    def test_method_parse(self):
        """文字列と列挙値から計算方法を解釈"""
        assert CoefficientMethod.parse("BINOMIAL") is CoefficientMethod.BINOMIAL
        assert CoefficientMethod.parse(CoefficientMethod.ARRAYS) is CoefficientMethod.ARRAYS

    def test_compare_tables_detects_mismatch(self):
        """一致しない表を検出"""
        good = coeff_table(3, 1)
        bad = CoeffTable.from_coefficients(3, 1, {**good.coefficients(), EMPTY: 2})

        compare_tables()
        compare_tables(good, good)
        with pytest.raises(FormulaMismatchError):
            compare_tables(good, bad)

    def test_candidate_partitions(self):
        """|λ| ≤ (n−1)d かつ ℓ(λ) ≤ n−1"""
        candidates = list(candidate_partitions(3, 2))
        assert all(p.size() <= 4 and p.length() <= 2 for p in candidates)
        assert Partition((2, 2)) in candidates
        assert Partition((1, 1, 1)) not in candidates

    def test_partition_limit(self, tight_limits):
        """走査する分割の個数が上限を超える表は計算前に拒否する"""
        assert len(list(candidate_partitions(6, 1, tight_limits))) == 19

        with pytest.raises(EnumerationLimitError) as excinfo:
            coeff_table(7, 1, "binomial", tight_limits)
        assert excinfo.value.kind == "partitions"
        assert excinfo.value.count > tight_limits.max_partitions

        with pytest.raises(EnumerationLimitError, match="partitions"):
            coeff_table(7, 1, "recurrence", tight_limits)
