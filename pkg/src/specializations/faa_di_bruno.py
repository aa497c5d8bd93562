"""
Faà di Bruno 多項式

F_n = (Δ + t·y_1)^n(1)。y_i を y^{(i)}(u)、t^k を x^{(k)}(y(u)) と読むと
F_n は合成 z = x∘y の n 階導関数 z^{(n)} を与える。
"""

import logging
from functools import lru_cache
from typing import List, Optional

import sympy

from src.data.normal_polynomial import NormalPolynomial
from src.exceptions import DomainError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _faa_di_bruno(n: int) -> NormalPolynomial:
    if n == 0:
        return NormalPolynomial.one()
    previous = _faa_di_bruno(n - 1)
    return previous.delta() + previous.mul_y(1).mul_t()


def faa_di_bruno(n: int) -> NormalPolynomial:
    """F_n を返す

    Raises:
        DomainError: n < 0 の場合
    """
    if n < 0:
        raise DomainError(f"n は非負である必要があります: {n}")
    return _faa_di_bruno(n)


def composite_derivative(
    n: int, x: sympy.Expr, y: sympy.Expr, u: sympy.Symbol, v: sympy.Symbol
) -> sympy.Expr:
    """F_n を x(v), y(u) で評価した式（z^{(n)}(u) と一致するはず）"""
    result = sympy.Integer(0)
    for k, part in faa_di_bruno(n).by_t_power().items():
        outer = sympy.diff(x, v, k).subs(v, y)
        result += part.evaluate(lambda i: sympy.diff(y, u, i)) * outer
    return sympy.expand(result)


def verify_faa_di_bruno(
    max_n: int, x: Optional[sympy.Expr] = None, y: Optional[sympy.Expr] = None
) -> List[int]:
    """n = 0..max_n で F_n と直接微分を比べ、食い違う n のリストを返す

    既定は x(v) = v³, y(u) = u + u²。
    """
    u, v = sympy.symbols("u v")
    if x is None:
        x = v**3
    if y is None:
        y = u + u**2
    composite = x.subs(v, y)
    mismatches: List[int] = []
    for n in range(max_n + 1):
        expected = sympy.expand(sympy.diff(composite, u, n))
        if sympy.expand(composite_derivative(n, x, y, u, v) - expected) != 0:
            mismatches.append(n)
    if mismatches:
        logger.warning(f"Faa di Bruno check failed for n in {mismatches}")
    else:
        logger.info(f"Faa di Bruno check passed up to n={max_n}")
    return mismatches
