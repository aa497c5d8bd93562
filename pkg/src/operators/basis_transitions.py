"""
代数 A_h の三つの基底の間の変換行列

ℤ[x][y;∂_x] で h と y から ŷ = yh を作り、基底 (ŷ^k), ((hy)^k), (h^k y^k) を比較する。
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List

from src.exceptions import DomainError
from src.operators.coefficient_rings import X_RING, IntPolynomial
from src.operators.skew_polynomial import SkewPolynomial, skew_mul

logger = logging.getLogger(__name__)

Matrix = List[List[IntPolynomial]]


@dataclass(frozen=True)
class TransitionMatrices:
    """下三角の変換行列（行 k, 列 j ≤ k）

    行 k が k 乗の展開を表すので、三つの行列は A·B = C を満たす。

    Attributes:
        a: ŷ^k = Σ_i a[k][i] (hy)^i（h = x では二項係数 C(k, i)）
        b: (hy)^k = Σ_j b[k][j] h^j y^j
        c: ŷ^k = Σ_j c[k][j] h^j y^j
    """

    a: Matrix
    b: Matrix
    c: Matrix

    def to_dict(self) -> Dict[str, Any]:
        """行ごとに多項式の文字列で表した辞書"""
        return {
            name: [[entry.render() for entry in row] for row in getattr(self, name)]
            for name in ("a", "b", "c")
        }


def _in_h_power_basis(element: SkewPolynomial, h: IntPolynomial, k: int) -> List[IntPolynomial]:
    """Σ_j a_j y^j を Σ_j (a_j / h^j) h^j y^j と読み、j = 0..k の係数を返す"""
    row = []
    h_power = IntPolynomial.constant(1)
    for j in range(k + 1):
        row.append(element.coefficient(j).exact_divide(h_power))
        h_power = h_power * h
    return row


def matrix_product(left: Matrix, right: Matrix) -> Matrix:
    """下三角行列の積"""
    size = len(left)
    product: Matrix = []
    for k in range(size):
        row = []
        for i in range(k + 1):
            total = IntPolynomial()
            for j in range(i, k + 1):
                total = total + left[k][j] * right[j][i]
            row.append(total)
        product.append(row)
    return product


def ah_transitions(n: int, h: IntPolynomial) -> TransitionMatrices:
    """次数 n までの基底変換行列

    Args:
        n: 最大の冪
        h: ℤ[x] の非零元

    Returns:
        B = ((hy)^k の展開), C = (ŷ^k の展開), A = C B^{-1}

    Raises:
        DomainError: h = 0 または n < 0 の場合
    """
    if h.is_zero():
        raise DomainError("h = 0 では A_h の基底を作れません")
    if n < 0:
        raise DomainError(f"n は非負である必要があります: {n}")

    y = SkewPolynomial.z(X_RING)
    h_op = SkewPolynomial.constant(X_RING, h)
    hy = skew_mul(h_op, y)
    y_hat = skew_mul(y, h_op)

    b: Matrix = []
    c: Matrix = []
    hy_power = SkewPolynomial.one(X_RING)
    y_hat_power = SkewPolynomial.one(X_RING)
    for k in range(n + 1):
        b.append(_in_h_power_basis(hy_power, h, k))
        c.append(_in_h_power_basis(y_hat_power, h, k))
        hy_power = skew_mul(hy_power, hy)
        y_hat_power = skew_mul(y_hat_power, y_hat)

    # B は対角成分 1 の下三角なので各行を右から後退代入で解ける
    a: Matrix = []
    for k in range(n + 1):
        row = [IntPolynomial()] * (k + 1)
        for j in range(k, -1, -1):
            value = c[k][j]
            for i in range(j + 1, k + 1):
                value = value - row[i] * b[i][j]
            row[j] = value
        a.append(row)

    logger.debug(f"ah_transitions(n={n}, h={h}) computed")
    return TransitionMatrices(a=a, b=b, c=c)
