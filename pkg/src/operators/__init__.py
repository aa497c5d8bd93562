"""
形式的微分作用素環パッケージ

A[z;∂] の正規形計算による普遍多項式の検証オラクル
"""

from src.operators.basis_transitions import TransitionMatrices, ah_transitions
from src.operators.coefficient_rings import X_RING, Y_RING, IntPolynomial, XRing, YRing
from src.operators.skew_polynomial import (
    SkewPolynomial,
    apply,
    coeff_table_from_operator,
    eval_u,
    power_h_zd,
    skew_mul,
)

__all__ = [
    "IntPolynomial",
    "SkewPolynomial",
    "TransitionMatrices",
    "XRing",
    "X_RING",
    "YRing",
    "Y_RING",
    "ah_transitions",
    "apply",
    "coeff_table_from_operator",
    "eval_u",
    "power_h_zd",
    "skew_mul",
]
