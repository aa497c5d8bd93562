"""
形式的微分作用素環の係数環

ℤ[x]（微分 ∂_x）と ℤ[y_0, y_1, …]（微分 Δ）の二つの具体例を提供する。
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, Sequence, Tuple, Union

from src.data.normal_polynomial import NormalPolynomial
from src.exceptions import DomainError, IntegralityError


@dataclass(frozen=True)
class IntPolynomial:
    """整数係数の一変数多項式（密な係数列、低次から）

    Attributes:
        coefficients: coefficients[i] が x^i の係数（末尾の 0 は持たない）
    """

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = list(self.coefficients)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coefficients", tuple(trimmed))

    @classmethod
    def of(cls, coefficients: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(coefficients))

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def x(cls, power: int = 1) -> "IntPolynomial":
        """x^power"""
        return cls((0,) * power + (1,))

    def degree(self) -> int:
        """次数（零多項式は −1）"""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, power: int) -> int:
        return self.coefficients[power] if 0 <= power < len(self.coefficients) else 0

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return IntPolynomial(tuple(product))

    def __rmul__(self, other: int) -> "IntPolynomial":
        return self * other

    def __pow__(self, exponent: int) -> "IntPolynomial":
        result = IntPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self) -> "IntPolynomial":
        """∂_x"""
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i > 0))

    def exact_divide(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """ℤ[x] での割り算（割り切れない場合はエラー）

        Raises:
            DomainError: divisor が零多項式の場合
            IntegralityError: 余りが出る、または商が整数係数にならない場合
        """
        if divisor.is_zero():
            raise DomainError("零多項式では割れません")
        remainder = list(self.coefficients)
        lead = divisor.coefficients[-1]
        shift = len(remainder) - len(divisor.coefficients)
        quotient = [0] * max(shift + 1, 0)
        for position in range(shift, -1, -1):
            top = remainder[position + divisor.degree()]
            if top % lead:
                raise IntegralityError(f"{self} は {divisor} で整数係数のまま割り切れません")
            factor = top // lead
            quotient[position] = factor
            if factor:
                for i, c in enumerate(divisor.coefficients):
                    remainder[position + i] -= factor * c
        if any(remainder):
            raise IntegralityError(f"{self} は {divisor} で割り切れません")
        return IntPolynomial(tuple(quotient))

    def evaluate(self, value: Any) -> Any:
        result: Any = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def render(self) -> str:
        """降冪順の "2x^3 + x - 1" 形式"""
        if self.is_zero():
            return "0"
        pieces = []
        for power in range(self.degree(), -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            if power == 0:
                body = str(abs(c))
            else:
                monomial = "x" if power == 1 else f"x^{power}"
                body = monomial if abs(c) == 1 else f"{abs(c)}{monomial}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()


Element = Union[IntPolynomial, NormalPolynomial]


class CoefficientRing(ABC):
    """微分付き可換係数環の抽象基底クラス"""

    name: str = ""

    @abstractmethod
    def zero(self) -> Any:
        pass

    @abstractmethod
    def one(self) -> Any:
        pass

    @abstractmethod
    def derivative(self, element: Any) -> Any:
        """環の微分 ∂"""
        pass

    @abstractmethod
    def render(self, element: Any) -> str:
        pass

    def is_zero(self, element: Any) -> bool:
        return element.is_zero()

    def coerce(self, value: Any) -> Any:
        """整数を環の元に変換"""
        if isinstance(value, int):
            return self.one() * value
        return value

    def derivatives(self, element: Any, count: int) -> Sequence[Any]:
        """[a, ∂a, ∂²a, …, ∂^count a]"""
        result = [element]
        for _ in range(count):
            result.append(self.derivative(result[-1]))
        return result


class XRing(CoefficientRing):
    """ℤ[x] と ∂_x"""

    name = "Z[x]"

    def zero(self) -> IntPolynomial:
        return IntPolynomial()

    def one(self) -> IntPolynomial:
        return IntPolynomial.constant(1)

    def derivative(self, element: IntPolynomial) -> IntPolynomial:
        return element.derivative()

    def render(self, element: IntPolynomial) -> str:
        return element.render()


class YRing(CoefficientRing):
    """ℤ[y_0, y_1, …] と Δ（∂^i(y_0) = y_i）"""

    name = "Z[y]"

    def zero(self) -> NormalPolynomial:
        return NormalPolynomial.zero()

    def one(self) -> NormalPolynomial:
        return NormalPolynomial.one()

    def derivative(self, element: NormalPolynomial) -> NormalPolynomial:
        return element.delta()

    def render(self, element: NormalPolynomial) -> str:
        return element.render()

    def coerce(self, value: Any) -> Any:
        element = super().coerce(value)
        if any(m.t_power for m in element.terms):
            raise DomainError(f"ℤ[y] の元は t を含みません: {element}")
        return element


X_RING = XRing()
Y_RING = YRing()
