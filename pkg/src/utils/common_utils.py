"""共通ユーティリティ関数"""

import logging
import math
from fractions import Fraction
from typing import Union

from src.exceptions import EnumerationLimitError, IntegralityError

logger = logging.getLogger(__name__)


def falling_factorial(x: int, k: int) -> int:
    """下降階乗 (x)_k = x(x−1)…(x−k+1)

    Args:
        x: 整数（負でもよい）
        k: 非負整数

    Returns:
        (x)_k（0 ≤ x < k なら 0、k = 0 なら 1）
    """
    if k < 0:
        raise ValueError(f"k は非負である必要があります: {k}")
    if x >= 0:
        return math.perm(x, k)
    result = 1
    for i in range(k):
        result *= x - i
    return result


def binomial(n: int, k: int) -> int:
    """二項係数 C(n, k)（範囲外は 0）"""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_integer(value: Union[Fraction, int], context: str) -> int:
    """厳密な有理数が整数であることを確認して int に変換

    Raises:
        IntegralityError: 分母が 1 でない場合
    """
    fraction = Fraction(value)
    if fraction.denominator != 1:
        logger.error(f"non-integral result in {context}: {fraction}")
        raise IntegralityError(f"{context} の結果が整数になりません: {fraction}")
    return fraction.numerator


def ensure_within_limit(kind: str, requested: int, limit: int, count: int) -> None:
    """列挙の実行可能性上限を確認

    Args:
        kind: 列挙対象の名前
        requested: 要求パラメータ（n や件数）
        limit: 上限
        count: 生成されるはずの件数

    Raises:
        EnumerationLimitError: requested が limit を超える場合
    """
    if requested > limit:
        logger.warning(f"{kind}: refused enumeration of {count} items (cap {limit})")
        raise EnumerationLimitError(kind, requested, limit, count)
