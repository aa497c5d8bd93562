"""
普遍多項式 U_n, U_{n,d}, V_n の計算

U_{n+1,d} = y_0 (Δ + ρ_t)^d U_{n,d}, U_{0,d} = 1 による再帰的定義と、
各種計算方法から係数表を組み立てる処理を提供する。
"""

import logging
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, Optional

from src.algorithms.coefficient_formulas import (
    coeff_arrays,
    coeff_binomial,
    coeff_comtet,
    coeff_recurrence,
)
from src.config.engine_config import EnumerationConfig, resolve_enumeration_config
from src.data.coeff_table import CoeffTable
from src.data.nc_polynomial import NCPolynomial
from src.data.normal_polynomial import NormalPolynomial
from src.data.partition import Partition, count_partitions_up_to, partitions_up_to
from src.enumerators.subdiagonal_maps import u_d_from_partial_maps
from src.exceptions import DomainError, FormulaMismatchError, UnsupportedMethodError
from src.operators.skew_polynomial import coeff_table_from_operator
from src.utils.common_utils import ensure_within_limit

logger = logging.getLogger(__name__)


class CoefficientMethod(Enum):
    """係数表の計算方法"""

    EXTRACTION = "extraction"  # u_poly_d の展開から抽出
    RECURRENCE = "recurrence"  # 漸化式（d = 1 のみ）
    BINOMIAL = "binomial"
    COMTET = "comtet"
    ARRAYS = "arrays"
    ENUMERATION = "enumeration"  # PD_{n,d} の列挙
    OPERATOR = "operator"  # ℤ[y][z;Δ] での (y_0 z^d)^n

    @classmethod
    def parse(cls, value: "str | CoefficientMethod") -> "CoefficientMethod":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError as e:
            choices = ", ".join(m.value for m in cls)
            raise UnsupportedMethodError(f"未知の計算方法: {value}（{choices}）") from e


def _check_n(n: int) -> None:
    if n < 0:
        raise DomainError(f"n は非負である必要があります: {n}")


def _check_d(d: int) -> None:
    if d < 1:
        raise DomainError(f"d は 1 以上である必要があります（U_{{n,0}} は定義しない）: {d}")


@lru_cache(maxsize=None)
def _u_poly_d(n: int, d: int) -> NormalPolynomial:
    if n == 0:
        return NormalPolynomial.one()
    current = _u_poly_d(n - 1, d)
    for _ in range(d):
        current = current.delta() + current.mul_t()
    return current.mul_y0()


def u_poly_d(n: int, d: int) -> NormalPolynomial:
    """U_{n,d}

    Args:
        n: 非負整数
        d: 1 以上の整数

    Returns:
        U_{n,d}（U_{0,d} = 1）

    Raises:
        DomainError: n < 0 または d < 1 の場合
    """
    _check_n(n)
    _check_d(d)
    for m in range(n):
        _u_poly_d(m, d)
    result = _u_poly_d(n, d)
    logger.debug(f"U_{{{n},{d}}} computed with {len(result)} terms")
    return result


def u_poly(n: int) -> NormalPolynomial:
    """U_n = U_{n,1}"""
    return u_poly_d(n, 1)


@lru_cache(maxsize=None)
def _v_poly(n: int) -> NCPolynomial:
    if n == 0:
        return NCPolynomial.one()
    previous = _v_poly(n - 1)
    return (previous.delta() + previous.mul_t()).mul_y0()


def v_poly(n: int) -> NCPolynomial:
    """非可換版 V_{n+1} = y_0 (Δ + ρ_t) V_n, V_0 = 1"""
    _check_n(n)
    for m in range(n):
        _v_poly(m)
    return _v_poly(n)


def candidate_partitions(n: int, d: int, config: Optional[EnumerationConfig] = None):
    """c^{n,d}_λ が非零になりうる λ（|λ| ≤ (n−1)d, ℓ(λ) ≤ n−1）

    Raises:
        EnumerationLimitError: 分割の個数が max_partitions を超える場合
    """
    limits = resolve_enumeration_config(config)
    max_size, max_length = (n - 1) * d, n - 1
    count = count_partitions_up_to(max_size, max_length, stop_above=limits.max_partitions)
    ensure_within_limit("partitions", count, limits.max_partitions, count)
    return partitions_up_to(max_size, max_length)


def _table_from_formula(
    n: int,
    d: int,
    formula: Callable[[int, int, Partition], int],
    config: Optional[EnumerationConfig] = None,
) -> CoeffTable:
    coefficients: Dict[Partition, int] = {}
    for partition in candidate_partitions(n, d, config):
        coefficients[partition] = formula(n, d, partition)
    return CoeffTable.from_coefficients(n, d, coefficients)


def coeff_table(
    n: int,
    d: int = 1,
    method: "str | CoefficientMethod" = CoefficientMethod.EXTRACTION,
    config: Optional[EnumerationConfig] = None,
) -> CoeffTable:
    """指定した方法で係数表 c^{n,d}_λ を組み立てる

    Args:
        n: 1 以上の整数
        d: 1 以上の整数
        method: 計算方法
        config: 列挙上限（enumeration / recurrence と分割の走査で使用）

    Returns:
        係数表

    Raises:
        DomainError: n < 1 または d < 1 の場合
        UnsupportedMethodError: recurrence を d ≠ 1 で指定した場合など
        EnumerationLimitError: 走査する分割や列挙が上限を超える場合
    """
    method = CoefficientMethod.parse(method)
    if n < 1:
        raise DomainError(f"係数表は n ≥ 1 が必要です: {n}")
    _check_d(d)

    if method is CoefficientMethod.EXTRACTION:
        table = CoeffTable.from_polynomial(u_poly_d(n, d), n, d)
    elif method is CoefficientMethod.RECURRENCE:
        if d != 1:
            raise UnsupportedMethodError(f"漸化式は d = 1 のみ対応しています: d={d}")
        coefficients = {
            p: coeff_recurrence(n, p, config) for p in candidate_partitions(n, 1, config)
        }
        table = CoeffTable.from_coefficients(n, 1, coefficients)
    elif method is CoefficientMethod.BINOMIAL:
        table = _table_from_formula(n, d, coeff_binomial, config)
    elif method is CoefficientMethod.COMTET:
        table = _table_from_formula(n, d, coeff_comtet, config)
    elif method is CoefficientMethod.ARRAYS:
        table = _table_from_formula(n, d, coeff_arrays, config)
    elif method is CoefficientMethod.ENUMERATION:
        table = CoeffTable.from_polynomial(u_d_from_partial_maps(n, d, config), n, d)
    else:
        table = coeff_table_from_operator(n, d)

    logger.info(f"coeff_table(n={n}, d={d}, method={method.value}): {len(table.entries)} entries")
    return table


def compare_tables(*tables: CoeffTable) -> None:
    """すべての係数表が一致することを確認

    Raises:
        FormulaMismatchError: 一つでも異なる場合
    """
    if not tables:
        return
    reference = tables[0]
    for other in tables[1:]:
        if other != reference:
            diff = set(reference.entries.items()) ^ set(other.entries.items())
            logger.error(f"coefficient tables disagree on {sorted(diff, key=str)[:5]}")
            raise FormulaMismatchError(
                f"係数表が一致しません (n={reference.n}, d={reference.d}): {len(diff)} 項目"
            )
