"""
係数エンジンから導かれる恒等式の検査

各関数は成立しなかった添字のリストを返す（空なら成立）。
"""

import logging
from typing import List, Optional, Tuple

import sympy

from src.algorithms.coefficient_formulas import coeff_recurrence
from src.algorithms.universal_polynomials import u_poly
from src.config.engine_config import EnumerationConfig
from src.data.partition import partitions_of
from src.exceptions import DomainError
from src.specializations.generalized_stirling import gen_stirling
from src.specializations.stirling import (
    rising_factorial_polynomial,
    stirling_first,
    stirling_second,
    stirling_second_positional,
    touchard_polynomial,
)
from src.utils.common_utils import binomial, falling_factorial

logger = logging.getLogger(__name__)


def q_homogeneity(n: int) -> bool:
    """U_n(1, q, q², …; t) = q^n U_n(1, 1, …; t/q) を有理式として確認"""
    if n < 0:
        raise DomainError(f"n は非負である必要があります: {n}")
    q, t = sympy.symbols("q t")
    u = u_poly(n)
    left = u.evaluate(lambda i: q**i, t)
    right = q**n * u.evaluate(lambda i: sympy.Integer(1), t / q)
    return sympy.cancel(left - right) == 0


def rising_factorial_violations(max_n: int) -> List[int]:
    """U_n(1, 1, …; t) ≠ t(t+1)…(t+n−1) となる n"""
    t = sympy.symbols("t")
    failures = []
    for n in range(1, max_n + 1):
        expected = sympy.Poly(sympy.rf(t, n), t).all_coeffs()[::-1]
        if rising_factorial_polynomial(n) != [int(c) for c in expected]:
            failures.append(n)
    return failures


def touchard_violations(max_n: int, config: Optional[EnumerationConfig] = None) -> List[int]:
    """U_n(1, 1, 0, 0, …; t) ≠ Σ_k S{n,k} t^k となる n"""
    return [
        n
        for n in range(1, max_n + 1)
        if touchard_polynomial(n) != [stirling_second(n, k, config) for k in range(n + 1)]
    ]


def stirling_recurrence_violations(
    max_n: int, config: Optional[EnumerationConfig] = None
) -> List[Tuple[int, int]]:
    """S{n,k} = S{n−1,k−1} + k·S{n−1,k} と c(n,k) = c(n−1,k−1) + (n−1)·c(n−1,k) を確認"""
    failures = []
    for n in range(2, max_n + 1):
        for k in range(1, n + 1):
            second = stirling_second(n - 1, k - 1, config) + k * stirling_second(n - 1, k, config)
            first = stirling_first(n - 1, k - 1, config) + (n - 1) * stirling_first(
                n - 1, k, config
            )
            if stirling_second(n, k, config) != second or stirling_first(n, k, config) != first:
                failures.append((n, k))
    return failures


def positional_stirling_violations(max_n: int) -> List[Tuple[int, int]]:
    """係数による S{n,k} と位置の積和による S{n,k} の食い違い"""
    return [
        (n, k)
        for n in range(1, max_n + 1)
        for k in range(1, n + 1)
        if stirling_second(n, k) != stirling_second_positional(n, k)
    ]


def knuth_identity_violations(max_n: int) -> List[Tuple[int, int]]:
    """S{n+1,k+1} = Σ_j C(n,j) S{j,k} が成り立たない (n, k)"""
    failures = []
    for n in range(max_n + 1):
        for k in range(n + 1):
            total = sum(binomial(n, j) * stirling_second(j, k) for j in range(n + 1))
            if stirling_second(n + 1, k + 1) != total:
                failures.append((n, k))
    return failures


def stirling_q1_violations(
    max_q: int, max_n: int, config: Optional[EnumerationConfig] = None
) -> List[Tuple[int, int, int]]:
    """S(n,k)_{q,1} = Σ_{λ⊢n−k} c^n_λ Π (q)_{λ_i} を gen_stirling と比べる"""
    failures = []
    for q in range(1, max_q + 1):
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                total = 0
                for partition in partitions_of(n - k, n - 1):
                    product = 1
                    for part in partition.parts:
                        product *= falling_factorial(q, part)
                    total += coeff_recurrence(n, partition, config) * product
                if total != gen_stirling(n, k, q, 1, "arrays"):
                    failures.append((q, n, k))
    if failures:
        logger.warning(f"S(n,k)_(q,1) specialization failed at {failures[:5]}")
    return failures
