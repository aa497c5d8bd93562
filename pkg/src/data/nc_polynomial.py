"""
非可換正規形多項式のデータクラス

文字 y_0, y_1, ... の語（順序を保つ）に t の冪を右から掛けた項を扱う。
V_n の格納先。
"""

from collections import defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Dict, Iterator, Mapping, Tuple, Union

from src.data.normal_polynomial import NormalMonomial, NormalPolynomial


@dataclass(frozen=True)
class NCWord:
    """語 y_{i_1} y_{i_2} ... y_{i_r} t^k

    Attributes:
        letters: 文字の添字列（左から順）
        t_power: 語全体の右に置かれる t の指数
    """

    letters: Tuple[int, ...] = ()
    t_power: int = 0

    def __post_init__(self):
        if self.t_power < 0 or any(i < 0 for i in self.letters):
            raise ValueError(f"不正な語: {self.letters} t^{self.t_power}")

    def __mul__(self, other: "NCWord") -> "NCWord":
        # t は右端に集める
        return NCWord(self.letters + other.letters, self.t_power + other.t_power)

    def abelianize(self) -> NormalMonomial:
        """文字を可換とみなした単項式"""
        exponents: Dict[int, int] = defaultdict(int)
        for i in self.letters:
            exponents[i] += 1
        return NormalMonomial.of(exponents, self.t_power)

    def sort_key(self) -> Tuple[int, Tuple[int, ...], int, Tuple[int, ...]]:
        """可換化した単項式の標準順序、同順位は語の辞書式"""
        return self.abelianize().sort_key() + (self.letters,)

    def render(self) -> str:
        """連続する同じ文字は冪にまとめる（"y0 y1^2 t"）"""
        factors = []
        position = 0
        while position < len(self.letters):
            letter = self.letters[position]
            run = 1
            while position + run < len(self.letters) and self.letters[position + run] == letter:
                run += 1
            factors.append(f"y{letter}" if run == 1 else f"y{letter}^{run}")
            position += run
        if self.t_power == 1:
            factors.append("t")
        elif self.t_power > 1:
            factors.append(f"t^{self.t_power}")
        return " ".join(factors)

    def __str__(self) -> str:
        return self.render() or "1"


EMPTY_WORD = NCWord()


class NCPolynomial:
    """非可換多項式 Σ c · w（係数は整数、零係数は保持しない）"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[NCWord, int], None] = None):
        cleaned = {w: c for w, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "_terms", MappingProxyType(cleaned))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("NCPolynomial is immutable")

    @classmethod
    def zero(cls) -> "NCPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "NCPolynomial":
        return cls({EMPTY_WORD: 1})

    @classmethod
    def letter(cls, index: int) -> "NCPolynomial":
        return cls({NCWord((index,)): 1})

    @classmethod
    def word(
        cls, letters: Tuple[int, ...], t_power: int = 0, coefficient: int = 1
    ) -> "NCPolynomial":
        return cls({NCWord(tuple(letters), t_power): coefficient})

    @property
    def terms(self) -> Mapping[NCWord, int]:
        return self._terms

    def coefficient(self, word: NCWord) -> int:
        return self._terms.get(word, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[NCWord, int]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> Tuple[Tuple[NCWord, int], ...]:
        return tuple(sorted(self._terms.items(), key=lambda item: item[0].sort_key()))

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        result = dict(self._terms)
        for w, c in other._terms.items():
            result[w] = result.get(w, 0) + c
        return NCPolynomial(result)

    def __neg__(self) -> "NCPolynomial":
        return NCPolynomial({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "NCPolynomial") -> "NCPolynomial":
        return self + (-other)

    def scale(self, scalar: int) -> "NCPolynomial":
        return NCPolynomial({w: scalar * c for w, c in self._terms.items()})

    def __mul__(self, other: Union["NCPolynomial", int]) -> "NCPolynomial":
        """語の連結による積（t の冪は加算して右端に置く）"""
        if isinstance(other, int):
            return self.scale(other)
        result: Dict[NCWord, int] = defaultdict(int)
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                result[w1 * w2] += c1 * c2
        return NCPolynomial(result)

    def __rmul__(self, other: int) -> "NCPolynomial":
        return self.scale(other)

    def mul_t(self, power: int = 1) -> "NCPolynomial":
        """右から t^power を掛ける"""
        return NCPolynomial(
            {NCWord(w.letters, w.t_power + power): c for w, c in self._terms.items()}
        )

    def mul_y(self, index: int) -> "NCPolynomial":
        """左から文字 y_index を掛ける"""
        return NCPolynomial(
            {NCWord((index,) + w.letters, w.t_power): c for w, c in self._terms.items()}
        )

    def mul_y0(self) -> "NCPolynomial":
        return self.mul_y(0)

    def delta(self) -> "NCPolynomial":
        """Δ = Σ_i D_i（位置 i の文字を一つ進める）"""
        result: Dict[NCWord, int] = defaultdict(int)
        for w, c in self._terms.items():
            for position, letter in enumerate(w.letters):
                shifted = w.letters[:position] + (letter + 1,) + w.letters[position + 1 :]
                result[NCWord(shifted, w.t_power)] += c
        return NCPolynomial(result)

    def abelianize(self) -> NormalPolynomial:
        """文字を可換化した正規形多項式"""
        result: Dict[NormalMonomial, int] = defaultdict(int)
        for w, c in self._terms.items():
            result[w.abelianize()] += c
        return NormalPolynomial(result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for w, c in self.sorted_terms():
            body = w.render()
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
        return f"NCPolynomial({self.render()!r})"


def delta_nc(p: NCPolynomial) -> NCPolynomial:
    """非可換版 Δ(p)"""
    return p.delta()


def abelianize(p: NCPolynomial) -> NormalPolynomial:
    return p.abelianize()
