"""
Euler 数

A(n, k) = Σ_{ℓ(λ)=k−1} c^n_λ と Euler 多項式の二通りの特殊化
"""

import logging
from typing import List, Optional

from src.algorithms.coefficient_formulas import coeff_recurrence
from src.algorithms.universal_polynomials import u_poly
from src.config.engine_config import EnumerationConfig
from src.data.integer_triangle import IntegerTriangle
from src.data.partition import partitions_up_to
from src.exceptions import DomainError, IdentityViolationError

logger = logging.getLogger(__name__)


def eulerian_row(n: int, config: Optional[EnumerationConfig] = None) -> List[int]:
    """[A(n,1), …, A(n,n)]（回文性を確認する）

    Raises:
        DomainError: n < 1 の場合
        IdentityViolationError: A(n,k) ≠ A(n,n+1−k) となった場合
    """
    if n < 1:
        raise DomainError(f"n は 1 以上である必要があります: {n}")
    row = [0] * n
    for partition in partitions_up_to(n - 1, n - 1):
        row[partition.length()] += coeff_recurrence(n, partition, config)
    if row != row[::-1]:
        logger.error(f"Eulerian row {n} is not palindromic: {row}")
        raise IdentityViolationError(f"A({n}, k) が回文になりません: {row}")
    return row


def eulerian(n: int, k: int, config: Optional[EnumerationConfig] = None) -> int:
    """Euler 数 A(n,k)（範囲外は 0）"""
    if n < 1 or not 1 <= k <= n:
        return 0
    return eulerian_row(n, config)[k - 1]


def eulerian_polynomial(n: int, variant: str = "y0") -> List[int]:
    """Euler 多項式 A_n(q) の q^m の係数（m = 0..n）

    Args:
        variant: "y0" は U_n(q, 1, 1, …; 1)、"shifted" は q·U_n(1, q, q, …; 1)
    """
    if n < 1:
        raise DomainError(f"n は 1 以上である必要があります: {n}")
    coefficients = [0] * (n + 1)
    for monomial, coeff in u_poly(n).terms.items():
        y0_power = monomial.exponent(0)
        if variant == "y0":
            coefficients[y0_power] += coeff
        elif variant == "shifted":
            # y_i (i ≥ 1) の総次数 = n − y_0 の指数
            coefficients[n - y0_power + 1] += coeff
        else:
            raise DomainError(f"未知の variant: {variant}")
    return coefficients


def eulerian_triangle(max_n: int, config: Optional[EnumerationConfig] = None) -> IntegerTriangle:
    entries = {
        (n, k): value
        for n in range(1, max_n + 1)
        for k, value in enumerate(eulerian_row(n, config), start=1)
    }
    return IntegerTriangle(name="eulerian", entries=entries)
