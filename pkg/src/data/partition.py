"""
整数分割のデータクラス

係数 c^n_λ, c^{n,d}_λ の添字となる広義単調減少な正整数列を扱う
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from sympy import npartitions
from sympy.utilities.iterables import multiset_permutations
from sympy.utilities.iterables import partitions as sympy_partitions

from src.exceptions import InvalidPartitionError


@dataclass(frozen=True)
class Partition:
    """整数分割 λ

    Attributes:
        parts: 広義単調減少な正整数のタプル（空タプルは空分割）
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        """分割としての妥当性を検証"""
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise InvalidPartitionError(f"分割の各部分は正整数である必要があります: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidPartitionError(f"分割は広義単調減少である必要があります: {self.parts}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Partition":
        """任意の順序の正整数列から分割を作成（0 は無視）"""
        return cls(tuple(sorted((v for v in values if v != 0), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """"2,1" 形式の文字列から分割を作成"""
        text = text.strip()
        if not text or text in ("()", "∅", "empty"):
            return cls()
        try:
            values = [int(v) for v in text.strip("()[]").split(",") if v.strip()]
        except ValueError as e:
            raise InvalidPartitionError(f"分割を解析できません: {text!r}") from e
        return cls(tuple(values))

    @classmethod
    def from_multiplicities(cls, multiplicities: Dict[int, int]) -> "Partition":
        """{部分の大きさ: 重複度} から分割を作成"""
        return cls.of(size for size, count in multiplicities.items() for _ in range(count))

    def size(self) -> int:
        """|λ|"""
        return sum(self.parts)

    def length(self) -> int:
        """ℓ(λ)"""
        return len(self.parts)

    def multiplicity(self, j: int) -> int:
        """部分 j の重複度 β_j"""
        return self.parts.count(j)

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    def scaled(self, d: int) -> "Partition":
        """各部分を d 倍した分割 d·λ"""
        return Partition(tuple(d * p for p in self.parts))

    def decrement_part(self, i: int) -> "Partition":
        """大きさ i の部分を一つ 1 減らした分割 λ_i（i が部分でなければエラー）"""
        if i not in self.parts:
            raise InvalidPartitionError(f"{i} は {self.parts} の部分ではありません")
        values = list(self.parts)
        values.remove(i)
        values.append(i - 1)
        return Partition.of(values)

    def arrangements(self, length: int) -> Iterator[Tuple[int, ...]]:
        """0 を補って長さ length にした列の相異なる並べ替え

        等しい部分は区別しないので、各列はちょうど一度ずつ生成される。
        """
        if self.length() > length:
            return
        padded: List[int] = list(self.parts) + [0] * (length - self.length())
        if not padded:
            yield ()
            return
        for perm in multiset_permutations(sorted(padded)):
            yield tuple(perm)

    def to_list(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = Partition()


@lru_cache(maxsize=None)
def partitions_of(size: int, max_length: int = -1) -> Tuple[Partition, ...]:
    """size の分割を逆辞書式順にすべて返す

    Args:
        size: 分割する整数
        max_length: 部分の個数の上限（負なら無制限）

    Returns:
        分割のタプル
    """
    if size < 0:
        return ()
    if size == 0:
        return (EMPTY,)
    if max_length == 0:
        return ()
    result = []
    for mult in sympy_partitions(size, m=max_length if max_length >= 0 else None):
        result.append(Partition.from_multiplicities(mult))
    result.sort(key=lambda p: p.parts, reverse=True)
    return tuple(result)


def partitions_up_to(max_size: int, max_length: int = -1) -> Iterator[Partition]:
    """大きさ 0..max_size の分割を大きさ順に列挙"""
    for size in range(max_size + 1):
        yield from partitions_of(size, max_length)


def count_partitions_up_to(
    max_size: int, max_length: int = -1, stop_above: Optional[int] = None
) -> int:
    """partitions_up_to(max_size, max_length) が生成する分割の個数

    Args:
        max_size: 分割の大きさの上限
        max_length: 部分の個数の上限（負なら無制限）
        stop_above: 個数がこれを超えると分かった時点で打ち切る

    Returns:
        分割の個数（打ち切った場合はその時点で分かっている下限）
    """
    if max_size < 0:
        return 0
    longest = max_size if max_length < 0 else min(max_length, max_size)
    if stop_above is not None:
        # 1 部分の分割 (s) と大きさ longest の全分割はどちらも数える対象に含まれる
        if longest >= 1 and max_size + 1 > stop_above:
            return max_size + 1
        lower = int(npartitions(longest))
        if lower > stop_above:
            return lower

    # 部分の個数が longest 以下 ⇔ 共役をとって最大部分が longest 以下
    counts = [1] + [0] * max_size
    total = 1
    for part in range(1, longest + 1):
        for size in range(part, max_size + 1):
            counts[size] += counts[size - part]
        total = sum(counts)
        if stop_above is not None and total > stop_above:
            break
    return total
