"""
形式的微分作用素環 A[z;∂] の正規形

元を Σ a_k z^k（係数は左、z は右）で保持し、za = az + ∂(a) に従って積をとる。
普遍多項式の検証用の総当たりオラクルとして使う。
"""

import logging
from typing import Any, Dict, Mapping, Optional

from src.data.coeff_table import CoeffTable
from src.data.normal_polynomial import NormalMonomial, NormalPolynomial
from src.exceptions import DomainError
from src.operators.coefficient_rings import (
    X_RING,
    Y_RING,
    CoefficientRing,
    Element,
    IntPolynomial,
    XRing,
    YRing,
)
from src.utils.common_utils import binomial

logger = logging.getLogger(__name__)


class SkewPolynomial:
    """A[z;∂] の元 Σ a_k z^k

    Attributes:
        ring: 係数環
        coefficients: z の次数 k → a_k（零は保持しない）
    """

    __slots__ = ("ring", "coefficients")

    def __init__(self, ring: CoefficientRing, coefficients: Optional[Mapping[int, Element]] = None):
        self.ring = ring
        self.coefficients: Dict[int, Element] = {
            k: ring.coerce(a)
            for k, a in sorted((coefficients or {}).items())
            if not ring.is_zero(ring.coerce(a))
        }
        if any(k < 0 for k in self.coefficients):
            raise ValueError(f"z の次数は非負である必要があります: {list(self.coefficients)}")

    @classmethod
    def z(cls, ring: CoefficientRing, power: int = 1) -> "SkewPolynomial":
        return cls(ring, {power: ring.one()})

    @classmethod
    def constant(cls, ring: CoefficientRing, value: Any) -> "SkewPolynomial":
        return cls(ring, {0: value})

    @classmethod
    def one(cls, ring: CoefficientRing) -> "SkewPolynomial":
        return cls(ring, {0: ring.one()})

    def coefficient(self, k: int) -> Element:
        return self.coefficients.get(k, self.ring.zero())

    def degree(self) -> int:
        return max(self.coefficients, default=-1)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        result = dict(self.coefficients)
        for k, a in other.coefficients.items():
            result[k] = result[k] + a if k in result else a
        return SkewPolynomial(self.ring, result)

    def __neg__(self) -> "SkewPolynomial":
        return SkewPolynomial(self.ring, {k: a * -1 for k, a in self.coefficients.items()})

    def __sub__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        return self + (-other)

    def __mul__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        return skew_mul(self, other)

    def __pow__(self, exponent: int) -> "SkewPolynomial":
        result = SkewPolynomial.one(self.ring)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return type(self.ring) is type(other.ring) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((type(self.ring), frozenset(self.coefficients.items())))

    def render(self) -> str:
        """"(a_k)·z^k" を z の降冪順に連結"""
        if self.is_zero():
            return "0"
        pieces = []
        for k in sorted(self.coefficients, reverse=True):
            body = self.ring.render(self.coefficients[k])
            if k == 0:
                pieces.append(f"({body})")
            elif k == 1:
                pieces.append(f"({body})·z")
            else:
                pieces.append(f"({body})·z^{k}")
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SkewPolynomial[{self.ring.name}]({self.render()!r})"


def skew_mul(p: SkewPolynomial, q: SkewPolynomial) -> SkewPolynomial:
    """正規形での積

    z^i b = Σ_m C(i, m) ∂^m(b) z^{i−m} を用いて (a_i z^i)(b_j z^j) を展開する。
    """
    if type(p.ring) is not type(q.ring):
        raise DomainError(f"係数環が異なります: {p.ring.name} と {q.ring.name}")
    ring = p.ring
    max_i = p.degree()
    result: Dict[int, Element] = {}
    for j, b in q.coefficients.items():
        derivatives = ring.derivatives(b, max(max_i, 0))
        for i, a in p.coefficients.items():
            for m in range(i + 1):
                if ring.is_zero(derivatives[m]):
                    break
                term = a * derivatives[m] * binomial(i, m)
                power = i - m + j
                result[power] = result[power] + term if power in result else term
    return SkewPolynomial(ring, result)


def power_h_zd(h: Any, d: int, n: int, ring: CoefficientRing = X_RING) -> SkewPolynomial:
    """(h z^d)^n を正規形で計算

    Raises:
        DomainError: d < 1 または n < 0 の場合
    """
    if d < 1 or n < 0:
        raise DomainError(f"d ≥ 1, n ≥ 0 が必要です: d={d}, n={n}")
    factor = SkewPolynomial(ring, {d: h})
    result = SkewPolynomial.one(ring)
    for _ in range(n):
        result = result * factor
    logger.debug(f"power_h_zd over {ring.name}: degree {result.degree()}")
    return result


def eval_u(u: NormalPolynomial, h: Any, ring: CoefficientRing = X_RING) -> SkewPolynomial:
    """U の y_i に ∂^i(h)、t に z を代入した A[z;∂] の元"""
    h = ring.coerce(h)
    max_index = max((i for m in u.terms for i, _ in m.y_exponents), default=0)
    derivatives = ring.derivatives(h, max_index)
    result: Dict[int, Element] = {}
    for monomial, coeff in u.terms.items():
        value = ring.one() * coeff
        for i, e in monomial.y_exponents:
            value = value * derivatives[i] ** e
        k = monomial.t_power
        result[k] = result[k] + value if k in result else value
    return SkewPolynomial(ring, result)


def apply(p: SkewPolynomial, f: IntPolynomial) -> IntPolynomial:
    """作用素 Σ a_k ∂_x^k を ℤ[x] の多項式 f に作用させる

    Raises:
        DomainError: 係数環が ℤ[x] でない場合
    """
    if not isinstance(p.ring, XRing):
        raise DomainError("apply は ℤ[x] 上の作用素のみ対応しています")
    derivatives = X_RING.derivatives(f, max(p.degree(), 0))
    result = IntPolynomial()
    for k, a in p.coefficients.items():
        result = result + a * derivatives[k]
    return result


def to_normal_polynomial(p: SkewPolynomial) -> NormalPolynomial:
    """ℤ[y][z;Δ] の元を z ↦ t として正規形多項式に戻す"""
    if not isinstance(p.ring, YRing):
        raise DomainError("ℤ[y] 上の元のみ変換できます")
    terms: Dict[NormalMonomial, int] = {}
    for k, a in p.coefficients.items():
        for monomial, coeff in a.terms.items():
            terms[NormalMonomial(monomial.y_exponents, k)] = coeff
    return NormalPolynomial(terms)


def coeff_table_from_operator(n: int, d: int) -> CoeffTable:
    """ℤ[y][z;Δ] で (y_0 z^d)^n を展開して係数表を得る"""
    power = power_h_zd(NormalPolynomial.y(0), d, n, Y_RING)
    return CoeffTable.from_polynomial(to_normal_polynomial(power), n, d)
