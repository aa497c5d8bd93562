"""
部分全単射とルーク配置のテスト
"""

import pytest
from sympy.functions.combinatorial.numbers import stirling

from src.enumerators.partial_bijections import (
    board_rows,
    count_partial_bijections,
    domain_size_for,
    partial_bijection_counts,
    staircase_rook_numbers,
)
from src.exceptions import DomainError, EnumerationLimitError


class TestBoard:
    """盤の形"""

    def test_board_rows(self):
        """行の長さは (i−1)q を d 回ずつ繰り返す"""
        assert board_rows(2, 1, 2) == [0, 0, 1, 1]
        assert board_rows(3, 2, 1) == [0, 2, 4]

    def test_domain_size(self):
        """t の指数から定義域の大きさを求める"""
        assert domain_size_for(3, 1, 1, 1) == 2
        assert domain_size_for(2, 1, 3, 2) == 3

    def test_rook_numbers(self):
        """階段状の盤の rook 数"""
        assert staircase_rook_numbers(3, 1, 1) == [1, 3, 1]
        assert staircase_rook_numbers(4, 1, 1) == [1, 6, 7, 1]
        assert staircase_rook_numbers(1, 2, 2) == [1]


class TestPartialBijections:
    """総当たりの個数"""

    @pytest.mark.parametrize("n, q, d", [(3, 1, 1), (3, 2, 1), (2, 2, 2), (3, 1, 2), (2, 3, 2)])
    def test_counts_match_rook_numbers(self, n, q, d, limits):
        """部分全単射の個数と rook 数が一致"""
        assert partial_bijection_counts(n, q, d, limits) == staircase_rook_numbers(n, q, d)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_q1_d1_gives_stirling_second(self, n, limits):
        """q = d = 1 では S(n, k)"""
        for k in range(1, n + 1):
            assert count_partial_bijections(n, k, 1, 1, limits) == stirling(n, k)

    def test_out_of_range(self, limits):
        """範囲外の k は 0"""
        assert count_partial_bijections(3, 5, 1, 1, limits) == 0

    def test_domain_errors(self):
        """d < 1 などは拒否"""
        with pytest.raises(DomainError):
            partial_bijection_counts(2, 1, 0)
        with pytest.raises(DomainError):
            staircase_rook_numbers(-1, 1, 1)

    def test_limit(self, tight_limits):
        """盤が大きすぎる場合は上限超過"""
        with pytest.raises(EnumerationLimitError) as excinfo:
            partial_bijection_counts(4, 2, 2, tight_limits)
        assert excinfo.value.kind == "partial_bijections"
