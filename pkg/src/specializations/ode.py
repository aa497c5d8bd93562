"""
微分方程式 x′(u) = y(x(u)) の形式解

y(v) = Σ y_i v^i / i! に対し x(u) = Σ_{n≥1} x_n u^n / n! の係数は
U_{n−1} の t^k を y_k に置き換えた値になる。
"""

import logging
from typing import Any, List, Sequence

import sympy

from src.algorithms.universal_polynomials import u_poly
from src.exceptions import DomainError

logger = logging.getLogger(__name__)


def _lookup(y: Sequence[Any], i: int) -> Any:
    return y[i] if i < len(y) else 0


def ode_coefficients(y: Sequence[Any], order: int) -> List[Any]:
    """x_1, …, x_order を返す（y の不足分は 0）

    Raises:
        DomainError: order < 1 の場合
    """
    if order < 1:
        raise DomainError(f"order は 1 以上である必要があります: {order}")
    result = []
    for n in range(1, order + 1):
        value: Any = 0
        for monomial, coeff in u_poly(n - 1).terms.items():
            term: Any = coeff * _lookup(y, monomial.t_power)
            for i, e in monomial.y_exponents:
                term = term * _lookup(y, i) ** e
            value = value + term
        result.append(value)
    return result


def verify_ode_solution(y: Sequence[Any], order: int) -> List[int]:
    """x′(u) − y(x(u)) の u^m（m < order）の係数が 0 でない次数のリスト

    係数は sympy の厳密な有理数で比較する。
    """
    u, v = sympy.symbols("u v")
    xs = ode_coefficients(y, order)
    x_series = sum(
        (sympy.Rational(x) * u**n / sympy.factorial(n) for n, x in enumerate(xs, start=1)),
        sympy.Integer(0),
    )
    y_series = sum(
        (sympy.Rational(c) * v**i / sympy.factorial(i) for i, c in enumerate(y)),
        sympy.Integer(0),
    )
    composed = sympy.expand(y_series.subs(v, x_series))
    difference = sympy.expand(sympy.diff(x_series, u) - composed)
    poly = sympy.Poly(difference, u)
    mismatches = [m for m in range(order) if poly.coeff_monomial(u**m) != 0]
    if mismatches:
        logger.warning(f"ODE series check failed at orders {mismatches}")
    return mismatches
