"""
一般化 Stirling 数 S(n,k)_{q,d}

(x^q ∂^d)^n の正規形の係数。q ≥ d では
(x^q ∂^d)^n = x^{(q−d)n} Σ_k S(n,k)_{q,d} x^k ∂^k、
q < d では (x^q ∂^d)^n = Σ_k S(n,k)_{q,d} x^k ∂^{k+(d−q)n} と読む（q と d について対称）。
"""

import logging
from enum import Enum
from typing import Optional

from src.algorithms.coefficient_formulas import coeff_arrays, coeff_binomial
from src.config.engine_config import EnumerationConfig
from src.data.integer_triangle import IntegerTriangle
from src.data.partition import partitions_of
from src.enumerators.partial_bijections import count_partial_bijections, staircase_rook_numbers
from src.exceptions import DomainError, UnsupportedMethodError
from src.operators.coefficient_rings import X_RING, IntPolynomial
from src.operators.skew_polynomial import power_h_zd
from src.utils.common_utils import falling_factorial

logger = logging.getLogger(__name__)


class StirlingMethod(Enum):
    """一般化 Stirling 数の計算方法"""

    AUTO = "auto"
    COEFFICIENTS = "coefficients"  # Σ c^{n,d}_λ Π (q)_{λ_i}（q ≥ d のみ）
    ARRAYS = "arrays"  # 対称な下三角配列の和
    OPERATOR = "operator"  # ℤ[x][z;∂_x] で (x^q z^d)^n を展開
    ROOKS = "rooks"  # Ferrers 盤のルーク数
    BIJECTIONS = "bijections"  # 部分全単射の総当たり

    @classmethod
    def parse(cls, value: "str | StirlingMethod") -> "StirlingMethod":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError as e:
            raise UnsupportedMethodError(f"未知の計算方法: {value}") from e


def _falling_product(q: int, parts) -> int:
    product = 1
    for part in parts:
        product *= falling_factorial(q, part)
    return product


def _by_coefficients(n: int, k: int, q: int, d: int) -> int:
    if q < d:
        raise UnsupportedMethodError(f"係数の和による公式は q ≥ d のみ: q={q}, d={d}")
    size = n * d - k
    if size < 0:
        return 0
    return sum(
        coeff_binomial(n, d, p) * _falling_product(q, p.parts)
        for p in partitions_of(size, n - 1)
    )


def _by_arrays(n: int, k: int, q: int, d: int) -> int:
    size = n * min(q, d) - k
    if size < 0:
        return 0
    return sum(
        coeff_arrays(n, d, p) * _falling_product(q, p.parts)
        for p in partitions_of(size, n - 1)
        if not p.parts or p.parts[0] <= q
    )


def _by_operator(n: int, k: int, q: int, d: int) -> int:
    power = power_h_zd(IntPolynomial.x(q), d, n, X_RING)
    z_power = k + max(d - q, 0) * n
    x_power = k + max(q - d, 0) * n
    coefficient = power.coefficient(z_power)
    if coefficient.is_zero():
        return 0
    if coefficient.coefficients != tuple([0] * x_power + [coefficient.coefficient(x_power)]):
        raise DomainError(f"z^{z_power} の係数が単項式 x^{x_power} になりません: {coefficient}")
    return coefficient.coefficient(x_power)


def gen_stirling(
    n: int,
    k: int,
    q: int,
    d: int,
    method: "str | StirlingMethod" = StirlingMethod.AUTO,
    config: Optional[EnumerationConfig] = None,
) -> int:
    """一般化 Stirling 数 S(n,k)_{q,d}

    Args:
        n: 1 以上
        k: 添字（範囲外は 0）
        q: 0 以上
        d: 1 以上
        method: 計算方法（auto は q ≥ d なら coefficients、そうでなければ arrays）
        config: 列挙上限（bijections で使用）

    Raises:
        DomainError: n < 1, q < 0, d < 1 の場合
        UnsupportedMethodError: coefficients を q < d で指定した場合
    """
    if n < 1 or q < 0 or d < 1:
        raise DomainError(f"n ≥ 1, q ≥ 0, d ≥ 1 が必要です: n={n}, q={q}, d={d}")
    if k < 0:
        return 0
    method = StirlingMethod.parse(method)
    if method is StirlingMethod.AUTO:
        method = StirlingMethod.COEFFICIENTS if q >= d else StirlingMethod.ARRAYS

    if method is StirlingMethod.COEFFICIENTS:
        return _by_coefficients(n, k, q, d)
    if method is StirlingMethod.ARRAYS:
        return _by_arrays(n, k, q, d)
    if method is StirlingMethod.OPERATOR:
        return _by_operator(n, k, q, d)
    if method is StirlingMethod.ROOKS:
        numbers = staircase_rook_numbers(n, q, d)
        m = n * min(q, d) - k
        return numbers[m] if 0 <= m < len(numbers) else 0
    return count_partial_bijections(n, k, q, d, config)


def gen_stirling_triangle(
    q: int, d: int, max_n: int, method: "str | StirlingMethod" = StirlingMethod.AUTO
) -> IntegerTriangle:
    """n = 1..max_n の S(n,k)_{q,d}"""
    entries = {}
    for n in range(1, max_n + 1):
        for k in range(n * min(q, d) + 1):
            value = gen_stirling(n, k, q, d, method)
            if value:
                entries[(n, k)] = value
    return IntegerTriangle(name="gen_stirling", entries=entries, parameters={"q": q, "d": d})
