"""
Stirling 数と Bell 数

すべて係数 c^n_λ の部分和・特殊化として計算する。
"""

import itertools
import logging
from typing import Callable, Dict, List, Optional

from src.algorithms.coefficient_formulas import coeff_recurrence
from src.algorithms.universal_polynomials import u_poly
from src.config.engine_config import EnumerationConfig
from src.data.integer_triangle import IntegerTriangle
from src.data.normal_polynomial import NormalPolynomial
from src.data.partition import Partition, partitions_of
from src.exceptions import DomainError

logger = logging.getLogger(__name__)


def t_coefficients(u: NormalPolynomial, y: Callable[[int], int]) -> List[int]:
    """y_i ↦ y(i) と特殊化した多項式の t^k の係数を k 昇順で"""
    coefficients: Dict[int, int] = {}
    for k, part in u.by_t_power().items():
        coefficients[k] = part.evaluate(y)
    if not coefficients:
        return []
    return [coefficients.get(k, 0) for k in range(max(coefficients) + 1)]


def stirling_first(n: int, k: int, config: Optional[EnumerationConfig] = None) -> int:
    """符号なし第一種 Stirling 数 c(n,k) = Σ_{λ⊢n−k} c^n_λ（c(0,0) = 1）"""
    if n < 0:
        raise DomainError(f"n は非負である必要があります: {n}")
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    return sum(coeff_recurrence(n, p, config) for p in partitions_of(n - k, n - 1))


def stirling_second(n: int, k: int, config: Optional[EnumerationConfig] = None) -> int:
    """第二種 Stirling 数 S{n,k} = c^n_{1^{n−k}}（S{0,0} = 1）"""
    if n < 0:
        raise DomainError(f"n は非負である必要があります: {n}")
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    return coeff_recurrence(n, Partition((1,) * (n - k)), config)


def stirling_second_positional(n: int, k: int) -> int:
    """S{n,k} = Σ_{1≤a_1<…<a_{n−k}≤n−1} Π_s (a_s − (s−1))"""
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    total = 0
    for positions in itertools.combinations(range(1, n), n - k):
        term = 1
        for s, a in enumerate(positions):
            term *= a - s
        total += term
    return total


def bell(n: int, config: Optional[EnumerationConfig] = None) -> int:
    """Bell 数 B_n = Σ_k S{n,k}"""
    return sum(stirling_second(n, k, config) for k in range(n + 1))


def rising_factorial_polynomial(n: int) -> List[int]:
    """U_n(1, 1, …; t) の t^k の係数（= t(t+1)…(t+n−1)）"""
    return t_coefficients(u_poly(n), lambda i: 1)


def touchard_polynomial(n: int) -> List[int]:
    """U_n(1, 1, 0, 0, …; t) の t^k の係数（= Σ_k S{n,k} t^k）"""
    return t_coefficients(u_poly(n), lambda i: 1 if i <= 1 else 0)


def stirling_triangle(
    kind: int, max_n: int, config: Optional[EnumerationConfig] = None
) -> IntegerTriangle:
    """n = 0..max_n の Stirling 数の三角配列

    Args:
        kind: 1（第一種）または 2（第二種）
    """
    if kind not in (1, 2):
        raise DomainError(f"kind は 1 または 2 です: {kind}")
    function = stirling_first if kind == 1 else stirling_second
    entries = {
        (n, k): function(n, k, config)
        for n in range(max_n + 1)
        for k in range(n + 1)
    }
    return IntegerTriangle(
        name=f"stirling{kind}",
        entries={key: value for key, value in entries.items() if value},
    )
