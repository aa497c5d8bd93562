"""
非ラベル根付き木（木の形）の列挙と Connes–Moscovici 係数

木は子の多重集合として正規形で保持し、子は (頂点数, 再帰的な正規キー) の順に並べる。
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from src.config.engine_config import EnumerationConfig, resolve_enumeration_config
from src.data.normal_polynomial import NormalMonomial, NormalPolynomial
from src.enumerators.increasing_trees import IncreasingTree, enumerate_trees
from src.exceptions import DomainError
from src.utils.common_utils import ensure_within_limit

logger = logging.getLogger(__name__)

CanonicalKey = Tuple[int, Tuple]


@dataclass(frozen=True)
class RootedTree:
    """非ラベル根付き木

    Attributes:
        children: 根の子を根とする部分木（正規順序）
        size: 頂点数
    """

    children: Tuple["RootedTree", ...] = ()
    size: int = field(default=1, init=False, compare=False)

    def __post_init__(self):
        ordered = tuple(sorted(self.children, key=lambda child: child.canonical_key()))
        object.__setattr__(self, "children", ordered)
        object.__setattr__(self, "size", 1 + sum(child.size for child in ordered))

    @classmethod
    def leaf(cls) -> "RootedTree":
        return cls(())

    @classmethod
    def path(cls, vertices: int) -> "RootedTree":
        """頂点数 vertices の道"""
        tree = cls.leaf()
        for _ in range(vertices - 1):
            tree = cls((tree,))
        return tree

    def canonical_key(self) -> CanonicalKey:
        return (self.size, tuple(child.canonical_key() for child in self.children))

    def branch_multiplicities(self) -> Dict["RootedTree", int]:
        """主枝 b ごとの重複度 m_T(b)"""
        return dict(Counter(self.children))

    def out_degrees(self) -> Tuple[int, List[int]]:
        """(根の出次数, 根以外の頂点の出次数のリスト)"""
        others: List[int] = []
        stack = list(self.children)
        while stack:
            node = stack.pop()
            others.append(len(node.children))
            stack.extend(node.children)
        return len(self.children), others

    def monomial(self) -> NormalMonomial:
        """Π_{v ≠ 根} y_{ch(v)} · t^{ch(根)}"""
        root_degree, others = self.out_degrees()
        return NormalMonomial.of(Counter(others), root_degree)

    def __str__(self) -> str:
        return "[" + ",".join(str(child) for child in self.children) + "]"


def alpha(tree: RootedTree) -> int:
    """形 T の増加ラベル付けの個数 α(T)

    n = #T − 1 として
    α(T) = n! / Π_b (m(b)! · (#b)!^{m(b)}) · Π_b α(b)^{m(b)}
    （b は相異なる主枝、m(b) はその重複度）。
    """
    return _alpha(tree)


@lru_cache(maxsize=None)
def _alpha(tree: RootedTree) -> int:
    n = tree.size - 1
    numerator = math.factorial(n)
    denominator = 1
    for branch, multiplicity in tree.branch_multiplicities().items():
        numerator *= _alpha(branch) ** multiplicity
        denominator *= math.factorial(multiplicity) * math.factorial(branch.size) ** multiplicity
    return numerator // denominator


@lru_cache(maxsize=None)
def _shapes_by_vertices(vertices: int) -> Tuple[RootedTree, ...]:
    """頂点数 vertices の木の形をすべて（正規キー順）"""
    if vertices == 1:
        return (RootedTree.leaf(),)
    # 小さい木から並べた候補の非増加な添字列として子の多重集合を作る
    candidates: List[RootedTree] = [
        shape for size in range(1, vertices) for shape in _shapes_by_vertices(size)
    ]
    result: List[RootedTree] = []

    def forests(remaining: int, max_index: int, chosen: List[RootedTree]):
        if remaining == 0:
            result.append(RootedTree(tuple(chosen)))
            return
        for index in range(max_index, -1, -1):
            shape = candidates[index]
            if shape.size <= remaining:
                chosen.append(shape)
                forests(remaining - shape.size, index, chosen)
                chosen.pop()

    forests(vertices - 1, len(candidates) - 1, [])
    return tuple(sorted(result, key=lambda tree: tree.canonical_key()))


def enumerate_shapes(n: int, config: Optional[EnumerationConfig] = None) -> Iterator[RootedTree]:
    """UT_n（頂点数 n+1 の木の形）を正規キー順に列挙

    Raises:
        DomainError: n < 0 の場合
        EnumerationLimitError: n が max_shape_n を超える場合
    """
    if n < 0:
        raise DomainError(f"n は非負である必要があります: {n}")
    limits = resolve_enumeration_config(config)
    ensure_within_limit("tree_shapes", n, limits.max_shape_n, count_shapes(n))
    yield from _shapes_by_vertices(n + 1)


def count_shapes(n: int) -> int:
    """頂点数 n+1 の根付き木の個数（Euler 変換による漸化式）"""
    counts = [0, 1]
    for m in range(1, n + 1):
        total = 0
        for k in range(1, m + 1):
            divisor_sum = sum(d * counts[d] for d in range(1, k + 1) if k % d == 0)
            total += divisor_sum * counts[m + 1 - k]
        counts.append(total // m)
    return counts[n + 1]


def u_from_shapes(n: int, config: Optional[EnumerationConfig] = None) -> NormalPolynomial:
    """U_n = Σ_{T ∈ UT_n} α(T) Π_{v≠0_T} y_{ch(v;T)} t^{ch(0_T;T)}"""
    terms: Dict[NormalMonomial, int] = Counter()
    for shape in enumerate_shapes(n, config):
        terms[shape.monomial()] += alpha(shape)
    return NormalPolynomial(terms)


def shape_of(tree: IncreasingTree) -> RootedTree:
    """増加木のラベルを忘れた形"""

    def build(vertex: int) -> RootedTree:
        return RootedTree(tuple(build(child) for child in tree.children(vertex)))

    return build(0)


def labelings_by_shape(n: int, config: Optional[EnumerationConfig] = None) -> Dict[RootedTree, int]:
    """T_n をラベルを忘れて形ごとに数えた個数（α(T) の検証用）"""
    return dict(Counter(shape_of(tree) for tree in enumerate_trees(n, config)))
