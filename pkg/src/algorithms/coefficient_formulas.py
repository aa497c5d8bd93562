"""
係数 c^n_λ, c^{n,d}_λ の計算公式

漸化式・二項係数の積和・Comtet 型公式・下三角配列の和の四通りを提供する。
有理数を経由する公式は結果が整数であることを確認してから返す。
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.config.engine_config import EnumerationConfig, resolve_enumeration_config
from src.data.partition import Partition
from src.exceptions import DomainError
from src.utils.common_utils import as_integer, binomial, ensure_within_limit, falling_factorial

logger = logging.getLogger(__name__)


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise DomainError(f"{name} は 1 以上である必要があります: {name}={value}")


# ===== 漸化式 =====
@lru_cache(maxsize=None)
def _recurrence(n: int, partition: Partition) -> int:
    if partition.size() >= n:
        return 0
    if n == 1:
        return 1  # c^1_∅
    previous = n - 1
    total = _recurrence(previous, partition)
    multiplicities = partition.multiplicities()
    for i in sorted(multiplicities):
        beta = previous - partition.length() if i == 1 else multiplicities.get(i - 1, 0)
        total += (beta + 1) * _recurrence(previous, partition.decrement_part(i))
    return total


def coeff_recurrence(
    n: int, partition: Partition, config: Optional[EnumerationConfig] = None
) -> int:
    """漸化式 c^{n+1}_λ = c^n_λ + Σ_i (β_{i−1}+1) c^n_{λ_i} による c^n_λ

    i は λ の相異なる部分の大きさを動き、β_0 = n − ℓ(λ) とする。

    Args:
        n: 1 以上の整数
        partition: 分割 λ
        config: 列挙上限（max_recurrence_n を使用）

    Returns:
        c^n_λ（|λ| ≥ n なら 0）

    Raises:
        DomainError: n < 1 の場合
        EnumerationLimitError: n が max_recurrence_n を超える場合
    """
    _require_positive(n=n)
    limits = resolve_enumeration_config(config)
    ensure_within_limit("recurrence", n, limits.max_recurrence_n, n)
    # 小さい n から順に埋めて再帰を浅く保つ
    for m in range(1, n):
        _recurrence(m, partition)
    return _recurrence(n, partition)


# ===== 二項係数の積和 =====
def coeff_binomial(n: int, d: int, partition: Partition) -> int:
    """c^{n,d}_λ = Σ Π_{j=1}^{n−1} C(jd − i_1 − … − i_{j−1}, i_j)

    和は 0 を補って長さ n−1 にした λ の相異なる並べ替え (i_1, …, i_{n−1}) を動く。

    Raises:
        DomainError: n < 1 または d < 1 の場合
    """
    _require_positive(n=n, d=d)
    total = 0
    for sequence in partition.arrangements(n - 1):
        term = 1
        prefix = 0
        for j, part in enumerate(sequence, start=1):
            term *= binomial(j * d - prefix, part)
            if term == 0:
                break
            prefix += part
        total += term
    return total


# ===== Comtet 型公式 =====
def coeff_comtet(n: int, d: int, partition: Partition) -> int:
    """Comtet 型公式による c^{n,d}_λ

    c = 1/((k−d)! Π λ_i!) · Σ Π_{j=1}^{n−1} (jd − i_1 − … − i_{j−1})_d
    （(m)_d は下降階乗、和は i_1+…+i_j ≤ jd を満たす並べ替えを動く）。
    d = 1 では古典的な Comtet の公式そのものになる。

    Raises:
        DomainError: n, d < 1 または k = nd − |λ| < d の場合
        IntegralityError: 結果が整数にならない場合
    """
    _require_positive(n=n, d=d)
    k = n * d - partition.size()
    if k < d:
        raise DomainError(f"Comtet 型公式は k ≥ d でのみ定義されます: k={k}, d={d}")

    numerator = 0
    for sequence in partition.arrangements(n - 1):
        term = 1
        prefix = 0
        for j, part in enumerate(sequence, start=1):
            if prefix + part > j * d:
                term = 0
                break
            term *= falling_factorial(j * d - prefix, d)
            prefix += part
        numerator += term

    denominator = math.factorial(k - d)
    for part in partition.parts:
        denominator *= math.factorial(part)
    return as_integer(Fraction(numerator, denominator), f"coeff_comtet({n}, {d}, {partition})")


# ===== 下三角配列の和 =====
def _bounded_compositions(total: int, caps: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """各成分が caps 以下で和が total になる非負整数列"""
    if not caps:
        if total == 0:
            yield ()
        return
    head_cap = min(total, caps[0])
    rest_capacity = sum(caps[1:])
    for head in range(max(0, total - rest_capacity), head_cap + 1):
        for tail in _bounded_compositions(total - head, caps[1:]):
            yield (head,) + tail


def lower_triangular_arrays(
    n: int, column_sums: Sequence[int], row_cap: int
) -> Iterator[Dict[Tuple[int, int], int]]:
    """列和が column_sums、各行和が row_cap 以下の下三角配列 (a_{i,j})_{1≤j<i≤n}

    Args:
        n: 配列の大きさ
        column_sums: 列 j = 1..n−1 の和
        row_cap: 行 i = 2..n の和の上限

    Yields:
        {(i, j): a_{i,j}}（零成分は含まない）
    """
    if len(column_sums) != n - 1:
        raise ValueError(f"列和の個数は n−1 である必要があります: {column_sums}")

    def walk(j: int, row_sums: List[int], array: Dict[Tuple[int, int], int]):
        if j == n:
            yield dict(array)
            return
        rows = list(range(j + 1, n + 1))
        caps = [row_cap - row_sums[i] for i in rows]
        for composition in _bounded_compositions(column_sums[j - 1], caps):
            for i, value in zip(rows, composition):
                if value:
                    array[(i, j)] = value
                    row_sums[i] += value
            yield from walk(j + 1, row_sums, array)
            for i, value in zip(rows, composition):
                if value:
                    del array[(i, j)]
                    row_sums[i] -= value

    yield from walk(1, [0] * (n + 1), {})


def _array_weight(array: Dict[Tuple[int, int], int], n: int, d: int) -> Fraction:
    """Π_i (d)_{r_i(a)} / Π_{i,j} a_{i,j}!"""
    row_sums = [0] * (n + 1)
    denominator = 1
    for (i, _), value in array.items():
        row_sums[i] += value
        denominator *= math.factorial(value)
    numerator = 1
    for i in range(2, n + 1):
        numerator *= falling_factorial(d, row_sums[i])
    return Fraction(numerator, denominator)


def coeff_arrays(n: int, d: int, partition: Partition) -> int:
    """下三角配列の和による c^{n,d}_λ

    c = Σ_a Π_i (d)_{r_i(a)} / Π a_{i,j}!（非零の列和が λ の部分に一致する配列 a を動く）

    Raises:
        DomainError: n < 1 または d < 1 の場合
        IntegralityError: 結果が整数にならない場合
    """
    _require_positive(n=n, d=d)
    total = Fraction(0)
    for columns in partition.arrangements(n - 1):
        for array in lower_triangular_arrays(n, columns, d):
            total += _array_weight(array, n, d)
    return as_integer(total, f"coeff_arrays({n}, {d}, {partition})")
