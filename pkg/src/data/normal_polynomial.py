"""
正規形多項式のデータクラス

可換変数 y_0, y_1, ... の単項式に t の冪を右から掛けた項の
任意精度整数係数の有限和（⊕_k R t^k の元）を扱う。
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Callable, Dict, Iterator, Mapping, Sequence, Tuple, Union

from src.data.partition import Partition
from src.exceptions import CorruptedPolynomialError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalMonomial:
    """単項式 y_0^{a_0} y_1^{a_1} ... t^k

    Attributes:
        y_exponents: (添字, 正の指数) の添字昇順タプル
        t_power: t の指数
    """

    y_exponents: Tuple[Tuple[int, int], ...] = ()
    t_power: int = 0

    def __post_init__(self):
        if self.t_power < 0:
            raise ValueError(f"t の指数は非負である必要があります: {self.t_power}")
        indices = [i for i, _ in self.y_exponents]
        if any(e <= 0 for _, e in self.y_exponents) or any(i < 0 for i in indices):
            raise ValueError(f"不正な指数表現: {self.y_exponents}")
        if indices != sorted(set(indices)):
            raise ValueError(f"添字は昇順かつ重複なしである必要があります: {self.y_exponents}")

    @classmethod
    def of(cls, exponents: Mapping[int, int], t_power: int = 0) -> "NormalMonomial":
        """{添字: 指数} から作成（指数 0 は捨てる）"""
        return cls(tuple(sorted((i, e) for i, e in exponents.items() if e != 0)), t_power)

    @classmethod
    def from_parts(cls, y0_power: int, partition: Partition, t_power: int) -> "NormalMonomial":
        """y_0^{a} y_λ t^k を作成"""
        exponents: Dict[int, int] = dict(partition.multiplicities())
        if y0_power:
            exponents[0] = y0_power
        return cls.of(exponents, t_power)

    def exponent(self, index: int) -> int:
        for i, e in self.y_exponents:
            if i == index:
                return e
        return 0

    def exponent_map(self) -> Dict[int, int]:
        return dict(self.y_exponents)

    def y_degree(self) -> int:
        """y_i を次数 1、t を次数 0 とする次数"""
        return sum(e for _, e in self.y_exponents)

    def weight(self) -> int:
        """y_i を次数 i、t を次数 1 とする次数"""
        return sum(i * e for i, e in self.y_exponents) + self.t_power

    def y_partition(self) -> Partition:
        """添字 1 以上の変数が定める分割（y_λ の λ）"""
        return Partition.of(i for i, e in self.y_exponents if i > 0 for _ in range(e))

    def __mul__(self, other: "NormalMonomial") -> "NormalMonomial":
        exponents = self.exponent_map()
        for i, e in other.y_exponents:
            exponents[i] = exponents.get(i, 0) + e
        return NormalMonomial.of(exponents, self.t_power + other.t_power)

    def sort_key(self) -> Tuple[int, Tuple[int, ...], int]:
        """標準の項順序：t の指数昇順、分割の辞書式昇順、y_0 の指数昇順"""
        return (self.t_power, self.y_partition().parts, self.exponent(0))

    def render(self) -> str:
        """"y0^2 y1 t^2" 形式の文字列（指数 1 は省略）"""
        factors = [f"y{i}" if e == 1 else f"y{i}^{e}" for i, e in self.y_exponents]
        if self.t_power == 1:
            factors.append("t")
        elif self.t_power > 1:
            factors.append(f"t^{self.t_power}")
        return " ".join(factors)

    def __str__(self) -> str:
        return self.render() or "1"


ONE_MONOMIAL = NormalMonomial()


def canonical_split(monomial: NormalMonomial, n: int) -> Tuple[Partition, int]:
    """U_{n,d} の項を y_0^{n−ℓ(λ)} y_λ t^k に分解する

    Args:
        monomial: U_{n,d} に現れる単項式
        n: 多項式の添字 n

    Returns:
        (λ, k) のタプル

    Raises:
        CorruptedPolynomialError: y_0 の指数が n − ℓ(λ) と一致しない場合
    """
    partition = monomial.y_partition()
    expected = n - partition.length()
    actual = monomial.exponent(0)
    if actual != expected:
        logger.error(f"canonical_split failed: {monomial} with n={n}")
        raise CorruptedPolynomialError(
            f"y0 の指数 {actual} が n − ℓ(λ) = {expected} と一致しません: {monomial}"
        )
    return partition, monomial.t_power


Scalar = int


class NormalPolynomial:
    """正規形多項式 Σ c · y^a t^k（係数は任意精度整数、零係数は保持しない）"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[NormalMonomial, int], None] = None):
        cleaned = {m: c for m, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "_terms", MappingProxyType(cleaned))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("NormalPolynomial is immutable")

    # ===== 生成 =====
    @classmethod
    def zero(cls) -> "NormalPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "NormalPolynomial":
        return cls({ONE_MONOMIAL: 1})

    @classmethod
    def constant(cls, value: int) -> "NormalPolynomial":
        return cls({ONE_MONOMIAL: value})

    @classmethod
    def y(cls, index: int, exponent: int = 1) -> "NormalPolynomial":
        return cls({NormalMonomial.of({index: exponent}): 1})

    @classmethod
    def t(cls, power: int = 1) -> "NormalPolynomial":
        return cls({NormalMonomial((), power): 1})

    @classmethod
    def monomial(cls, monomial: NormalMonomial, coefficient: int = 1) -> "NormalPolynomial":
        return cls({monomial: coefficient})

    # ===== 参照 =====
    @property
    def terms(self) -> Mapping[NormalMonomial, int]:
        return self._terms

    def coefficient(self, monomial: NormalMonomial) -> int:
        return self._terms.get(monomial, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[NormalMonomial, int]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> Tuple[Tuple[NormalMonomial, int], ...]:
        """標準の項順序で並べた (単項式, 係数) の列"""
        return tuple(sorted(self._terms.items(), key=lambda item: item[0].sort_key()))

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def by_t_power(self) -> Dict[int, "NormalPolynomial"]:
        """t の指数ごとに t を含まない係数多項式へ分ける"""
        grouped: Dict[int, Dict[NormalMonomial, int]] = defaultdict(dict)
        for m, c in self._terms.items():
            grouped[m.t_power][NormalMonomial(m.y_exponents, 0)] = c
        return {k: NormalPolynomial(v) for k, v in sorted(grouped.items())}

    # ===== 演算 =====
    def __add__(self, other: "NormalPolynomial") -> "NormalPolynomial":
        if isinstance(other, int):
            other = NormalPolynomial.constant(other)
        result = dict(self._terms)
        for m, c in other._terms.items():
            result[m] = result.get(m, 0) + c
        return NormalPolynomial(result)

    __radd__ = __add__

    def __neg__(self) -> "NormalPolynomial":
        return NormalPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "NormalPolynomial") -> "NormalPolynomial":
        return self + (-other)

    def scale(self, scalar: Scalar) -> "NormalPolynomial":
        return NormalPolynomial({m: scalar * c for m, c in self._terms.items()})

    def __mul__(self, other: Union["NormalPolynomial", int]) -> "NormalPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        result: Dict[NormalMonomial, int] = defaultdict(int)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                result[m1 * m2] += c1 * c2
        return NormalPolynomial(result)

    def __rmul__(self, other: int) -> "NormalPolynomial":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "NormalPolynomial":
        result = NormalPolynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def mul_t(self, power: int = 1) -> "NormalPolynomial":
        """右から t^power を掛ける（ρ_t）"""
        return NormalPolynomial(
            {NormalMonomial(m.y_exponents, m.t_power + power): c for m, c in self._terms.items()}
        )

    def mul_y(self, index: int, exponent: int = 1) -> "NormalPolynomial":
        """左から y_index^exponent を掛ける"""
        factor = NormalMonomial.of({index: exponent})
        return NormalPolynomial({factor * m: c for m, c in self._terms.items()})

    def mul_y0(self) -> "NormalPolynomial":
        return self.mul_y(0)

    def delta(self) -> "NormalPolynomial":
        """微分 Δ = Σ y_{i+1} ∂/∂y_i（t の指数は保たれる）"""
        result: Dict[NormalMonomial, int] = defaultdict(int)
        for m, c in self._terms.items():
            exponents = m.exponent_map()
            for i, e in m.y_exponents:
                shifted = dict(exponents)
                shifted[i] -= 1
                shifted[i + 1] = shifted.get(i + 1, 0) + 1
                result[NormalMonomial.of(shifted, m.t_power)] += c * e
        return NormalPolynomial(result)

    def evaluate(self, y: Union[Sequence[Any], Callable[[int], Any]], t: Any = 1) -> Any:
        """y_i ↦ y(i), t ↦ t を代入した値（int・Fraction・sympy式など）"""
        lookup = y if callable(y) else (lambda i: y[i] if i < len(y) else 0)
        total: Any = 0
        for m, c in self._terms.items():
            value: Any = c
            for i, e in m.y_exponents:
                value = value * lookup(i) ** e
            total = total + value * t ** m.t_power
        return total

    # ===== 比較・表示 =====
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = NormalPolynomial.constant(other)
        if not isinstance(other, NormalPolynomial):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        """項を " + " で連結した文字列（係数 1 は省略）"""
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            body = m.render()
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{c}·{body}")
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"NormalPolynomial({self.render()!r})"


def delta(p: NormalPolynomial) -> NormalPolynomial:
    """Δ(p)"""
    return p.delta()
