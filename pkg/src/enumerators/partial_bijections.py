"""
部分全単射とルーク配置

[n]×[d] から [n]×[q] への部分全単射 g で g(i,a) = (j,b) ⇒ j < i を満たすものを数える。
行 (i,a) の使える列は (j,b), j < i の (i−1)q 個なので、
行の長さ 0, q, …, (n−1)q をそれぞれ d 回繰り返した Ferrers 盤へのルーク配置と同じである。
"""

import logging
from typing import List, Optional

from src.config.engine_config import EnumerationConfig, resolve_enumeration_config
from src.exceptions import DomainError
from src.utils.common_utils import ensure_within_limit

logger = logging.getLogger(__name__)


def _check_arguments(n: int, q: int, d: int) -> None:
    if n < 0 or q < 0 or d < 1:
        raise DomainError(f"n ≥ 0, q ≥ 0, d ≥ 1 が必要です: n={n}, q={q}, d={d}")


def board_rows(n: int, q: int, d: int) -> List[int]:
    """盤の各行の長さ（行 (i,a) は (i−1)q）"""
    return [(i - 1) * q for i in range(1, n + 1) for _ in range(d)]


def domain_size_for(n: int, k: int, q: int, d: int) -> int:
    """S(n,k)_{q,d} に対応する #Dom(g) = n·min(q,d) − k"""
    return n * min(q, d) - k


def partial_bijection_counts(
    n: int, q: int, d: int, config: Optional[EnumerationConfig] = None
) -> List[int]:
    """#Dom(g) = m ごとの部分全単射の個数を総当たりで数える

    Returns:
        添字 m の要素が #Dom(g) = m の個数

    Raises:
        EnumerationLimitError: 探索木の大きさの上界が max_items を超える場合
    """
    _check_arguments(n, q, d)
    rows = board_rows(n, q, d)
    bound = 1
    for length in rows:
        bound *= length + 1
    limits = resolve_enumeration_config(config)
    ensure_within_limit("partial_bijections", bound, limits.max_items, bound)

    counts = [0] * (len(rows) + 1)

    # 列 (j,b) は整数 (j−1)q + (b−1) で表し、使用済みの列をビット集合で持つ
    def place(row: int, used: int, placed: int) -> None:
        if row == len(rows):
            counts[placed] += 1
            return
        place(row + 1, used, placed)
        for column in range(rows[row]):
            bit = 1 << column
            if not used & bit:
                place(row + 1, used | bit, placed + 1)

    place(0, 0, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def count_partial_bijections(
    n: int, k: int, q: int, d: int, config: Optional[EnumerationConfig] = None
) -> int:
    """#Dom(g) = n·min(q,d) − k となる部分全単射の個数（= S(n,k)_{q,d}）"""
    m = domain_size_for(n, k, q, d)
    counts = partial_bijection_counts(n, q, d, config)
    if m < 0 or m >= len(counts):
        return 0
    return counts[m]


def staircase_rook_numbers(n: int, q: int, d: int) -> List[int]:
    """Ferrers 盤（行の長さ 0, q, …, (n−1)q を各 d 回）のルーク数 r_0, r_1, …

    行を短い順に処理し、既に r 個置かれた後の長さ b の行には b − r 通りで置ける。
    """
    _check_arguments(n, q, d)
    numbers = [1]
    for length in sorted(board_rows(n, q, d)):
        updated = numbers + [0]
        for placed, value in enumerate(numbers):
            choices = length - placed
            if choices > 0:
                updated[placed + 1] += value * choices
        numbers = updated
    while len(numbers) > 1 and numbers[-1] == 0:
        numbers.pop()
    return numbers
