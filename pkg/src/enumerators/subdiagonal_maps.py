"""
部分対角写像の列挙

SD_n（f(i) < i を満たす [n] → {0, …, n−1} の写像）と
PD_{n,d}（g(i,a) < i を満たす [n]×[d] から [n] への部分写像）を列挙し、
ファイバーの大きさから U_n, U_{n,d} を組み立てる。
"""

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple

import sympy

from src.config.engine_config import EnumerationConfig, resolve_enumeration_config
from src.data.normal_polynomial import NormalMonomial, NormalPolynomial
from src.data.partition import Partition
from src.exceptions import DomainError
from src.utils.common_utils import ensure_within_limit

logger = logging.getLogger(__name__)


def _fiber_monomial(fibers: Dict[int, int], n: int, t_power: int) -> NormalMonomial:
    """Π_{i=1}^n y_{#fiber(i)} · t^{t_power}"""
    exponents: Dict[int, int] = Counter(fibers.get(i, 0) for i in range(1, n + 1))
    return NormalMonomial.of(exponents, t_power)


@dataclass(frozen=True)
class SubdiagonalMap:
    """部分対角写像 f: [n] → {0, …, n−1}, f(i) < i

    Attributes:
        image: image[i−1] = f(i)
    """

    image: Tuple[int, ...]

    def __post_init__(self):
        for i, value in enumerate(self.image, start=1):
            if not 0 <= value < i:
                raise ValueError(f"f({i}) = {value} は 0 ≤ f(i) < i を満たしません")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def fiber_sizes(self) -> Dict[int, int]:
        """j → #f^{-1}({j})"""
        return dict(Counter(self.image))

    def monomial(self) -> NormalMonomial:
        """Π_{i=1}^n y_{#f^{-1}(i)} · t^{#f^{-1}(0)}"""
        fibers = self.fiber_sizes()
        return _fiber_monomial(fibers, self.n, fibers.get(0, 0))


@dataclass(frozen=True)
class PartialSubdiagonalMap:
    """部分写像 g: [n]×[d] ⇀ [n], g(i,a) < i

    Attributes:
        n: 定義域の第一成分の範囲
        d: 定義域の第二成分の範囲
        values: 位置 (i−1)·d + (a−1) に g(i,a)（未定義なら None）
    """

    n: int
    d: int
    values: Tuple[Optional[int], ...]

    def __post_init__(self):
        if len(self.values) != self.n * self.d:
            raise ValueError(f"values の長さは nd = {self.n * self.d} である必要があります")
        for position, value in enumerate(self.values):
            i = position // self.d + 1
            if value is not None and not 1 <= value < i:
                raise ValueError(f"g({i}, {position % self.d + 1}) = {value} は 1 ≤ g < i を満たしません")

    def __call__(self, i: int, a: int) -> Optional[int]:
        return self.values[(i - 1) * self.d + (a - 1)]

    def domain_size(self) -> int:
        """#Dom(g)"""
        return sum(1 for value in self.values if value is not None)

    def fiber_sizes(self) -> Dict[int, int]:
        return dict(Counter(value for value in self.values if value is not None))

    def type(self) -> Partition:
        """ファイバーの大きさのなす分割"""
        return Partition.of(self.fiber_sizes().values())

    def monomial(self) -> NormalMonomial:
        """Π_{i=1}^n y_{#g^{-1}(i)} · t^{nd − #Dom(g)}"""
        return _fiber_monomial(self.fiber_sizes(), self.n, self.n * self.d - self.domain_size())


def enumerate_sd(n: int, config: Optional[EnumerationConfig] = None) -> Iterator[SubdiagonalMap]:
    """SD_n を像の辞書式順に列挙（n! 件）

    Raises:
        DomainError: n < 0 の場合
        EnumerationLimitError: n が max_labeled_n を超える場合
    """
    if n < 0:
        raise DomainError(f"n は非負である必要があります: {n}")
    limits = resolve_enumeration_config(config)
    ensure_within_limit("subdiagonal_maps", n, limits.max_labeled_n, math.factorial(n))
    for image in itertools.product(*(range(i) for i in range(1, n + 1))):
        yield SubdiagonalMap(image)


def enumerate_pd(
    n: int, d: int = 1, config: Optional[EnumerationConfig] = None
) -> Iterator[PartialSubdiagonalMap]:
    """PD_{n,d} を値の辞書式順（未定義を最小）に列挙（(n!)^d 件）

    Raises:
        DomainError: n < 0 または d < 1 の場合
        EnumerationLimitError: (n!)^d が max_items を超える場合
    """
    if n < 0 or d < 1:
        raise DomainError(f"n ≥ 0, d ≥ 1 が必要です: n={n}, d={d}")
    count = math.factorial(n) ** d
    limits = resolve_enumeration_config(config)
    ensure_within_limit("partial_subdiagonal_maps", count, limits.max_items, count)
    choices = [
        (None,) + tuple(range(1, i))
        for i in range(1, n + 1)
        for _ in range(d)
    ]
    for values in itertools.product(*choices):
        yield PartialSubdiagonalMap(n, d, values)


def u_from_subdiagonal(n: int, config: Optional[EnumerationConfig] = None) -> NormalPolynomial:
    """U_n = Σ_{f ∈ SD_n} Π y_{#f^{-1}(i)} t^{#f^{-1}(0)}"""
    counts: Counter = Counter(f.monomial() for f in enumerate_sd(n, config))
    return NormalPolynomial(counts)


def u_d_from_partial_maps(
    n: int, d: int = 1, config: Optional[EnumerationConfig] = None
) -> NormalPolynomial:
    """U_{n,d} = Σ_{g ∈ PD_{n,d}} Π y_{#g^{-1}(i)} t^{nd − #Dom g}"""
    counts: Counter = Counter(g.monomial() for g in enumerate_pd(n, d, config))
    logger.debug(f"u_d_from_partial_maps(n={n}, d={d}): {sum(counts.values())} maps")
    return NormalPolynomial(counts)


def count_pd_by_type(
    n: int, d: int, partition: Partition, config: Optional[EnumerationConfig] = None
) -> int:
    """型が λ である PD_{n,d} の元の個数（= c^{n,d}_λ）"""
    return sum(1 for g in enumerate_pd(n, d, config) if g.type() == partition)


def count_pd_by_types(
    n: int, d: int, config: Optional[EnumerationConfig] = None
) -> Dict[Partition, int]:
    """PD_{n,d} を一度だけ列挙して型ごとの個数を返す"""
    return dict(Counter(g.type() for g in enumerate_pd(n, d, config)))


def u_from_umbral(n: int, d: int = 1) -> NormalPolynomial:
    """Π_{i=0}^{n−1} (x_i + … + x_0)^d を展開し x_n^{a_n}…x_1^{a_1} x_0^k ↦ y_{a_n}…y_{a_1} t^k

    Raises:
        DomainError: n < 0 または d < 1 の場合
    """
    if n < 0 or d < 1:
        raise DomainError(f"n ≥ 0, d ≥ 1 が必要です: n={n}, d={d}")
    if n == 0:
        return NormalPolynomial.one()
    xs = sympy.symbols(f"x0:{n + 1}")
    product = sympy.Integer(1)
    for i in range(n):
        product *= sum(xs[: i + 1]) ** d
    terms: Counter[NormalMonomial] = Counter()
    for exponents, coeff in sympy.Poly(sympy.expand(product), *xs).terms():
        y_exponents = Counter(exponents[1:])
        terms[NormalMonomial.of(y_exponents, exponents[0])] += int(coeff)
    return NormalPolynomial(terms)
