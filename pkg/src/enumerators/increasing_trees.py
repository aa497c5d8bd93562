"""
増加木の列挙

頂点集合 {0, 1, …, n}、根 0 で、根から葉へのラベルが増加する木 T_n を扱う。
親配列 parent[j−1] < j による表現は部分対角写像の像と同じデータである。
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from src.config.engine_config import EnumerationConfig, resolve_enumeration_config
from src.data.nc_polynomial import NCPolynomial, NCWord
from src.data.normal_polynomial import NormalMonomial, NormalPolynomial
from src.enumerators.subdiagonal_maps import SubdiagonalMap, enumerate_sd
from src.exceptions import DomainError
from src.utils.common_utils import ensure_within_limit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IncreasingTree:
    """増加木

    Attributes:
        parent: parent[j−1] = 頂点 j の親（< j）
    """

    parent: Tuple[int, ...]

    def __post_init__(self):
        for j, p in enumerate(self.parent, start=1):
            if not 0 <= p < j:
                raise ValueError(f"頂点 {j} の親 {p} は 0 ≤ parent < {j} を満たしません")

    @property
    def n(self) -> int:
        return len(self.parent)

    def children(self, i: int) -> List[int]:
        return [j for j, p in enumerate(self.parent, start=1) if p == i]

    def out_degrees(self) -> List[int]:
        """ch(i; T) を i = 0..n の順に"""
        degrees = [0] * (self.n + 1)
        for p in self.parent:
            degrees[p] += 1
        return degrees

    def ch(self, i: int) -> int:
        return self.out_degrees()[i]

    def monomial(self) -> NormalMonomial:
        """Π_{i=1}^n y_{ch(i;T)} · t^{ch(0;T)}"""
        degrees = self.out_degrees()
        return NormalMonomial.of(Counter(degrees[1:]), degrees[0])

    def word(self) -> NCWord:
        """y_{ch(n;T)} … y_{ch(1;T)} t^{ch(0;T)}"""
        degrees = self.out_degrees()
        return NCWord(tuple(reversed(degrees[1:])), degrees[0])


def sd_to_tree(f: SubdiagonalMap) -> IncreasingTree:
    """f(i) を頂点 i の親とする増加木"""
    return IncreasingTree(f.image)


def tree_to_sd(tree: IncreasingTree) -> SubdiagonalMap:
    return SubdiagonalMap(tree.parent)


def enumerate_trees(n: int, config: Optional[EnumerationConfig] = None) -> Iterator[IncreasingTree]:
    """T_n を親配列の辞書式順に列挙（n! 件）"""
    for f in enumerate_sd(n, config):
        yield sd_to_tree(f)


def u_from_trees(n: int, config: Optional[EnumerationConfig] = None) -> NormalPolynomial:
    """U_n = Σ_{T ∈ T_n} Π_{i=1}^n y_{ch(i;T)} t^{ch(0;T)}"""
    return NormalPolynomial(Counter(tree.monomial() for tree in enumerate_trees(n, config)))


def v_from_trees(n: int, config: Optional[EnumerationConfig] = None) -> NCPolynomial:
    """V_n = Σ_{T ∈ T_n} y_{ch(n;T)} … y_{ch(1;T)} t^{ch(0;T)}"""
    return NCPolynomial(Counter(tree.word() for tree in enumerate_trees(n, config)))


def u_d_from_tree_tuples(
    n: int, d: int, config: Optional[EnumerationConfig] = None
) -> NormalPolynomial:
    """U_{n,d} を d 個組 F = (T_1, …, T_d) ∈ T_n^d の和として計算

    ch(i; F) = Σ_j ch(i; T_j) とし、Π_{i=1}^n y_{ch(i;F)} t^{ch(0;F)} を足し上げる。

    Raises:
        DomainError: n < 0 または d < 1 の場合
        EnumerationLimitError: (n!)^d が max_items を超える場合
    """
    if n < 0 or d < 1:
        raise DomainError(f"n ≥ 0, d ≥ 1 が必要です: n={n}, d={d}")
    limits = resolve_enumeration_config(config)
    count = math.factorial(n) ** d
    ensure_within_limit("increasing_tree_tuples", count, limits.max_items, count)

    # 出次数ベクトルの多重度だけを組み合わせる
    degree_counts = Counter(tuple(t.out_degrees()) for t in enumerate_trees(n, config))
    combined: Dict[Tuple[int, ...], int] = {tuple([0] * (n + 1)): 1}
    for _ in range(d):
        next_combined: Dict[Tuple[int, ...], int] = Counter()
        for total, weight in combined.items():
            for degrees, multiplicity in degree_counts.items():
                key = tuple(a + b for a, b in zip(total, degrees))
                next_combined[key] += weight * multiplicity
        combined = next_combined

    terms: Dict[NormalMonomial, int] = Counter()
    for degrees, weight in combined.items():
        terms[NormalMonomial.of(Counter(degrees[1:]), degrees[0])] += weight
    logger.debug(f"u_d_from_tree_tuples(n={n}, d={d}): {count} tuples")
    return NormalPolynomial(terms)


def root_degree_counts(n: int, config: Optional[EnumerationConfig] = None) -> Dict[int, int]:
    """根の出次数 k ごとの増加木の個数（= 符号なし第一種 Stirling 数 c(n, k)）"""
    return dict(Counter(tree.ch(0) for tree in enumerate_trees(n, config)))
