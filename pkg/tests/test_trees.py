"""
増加木・非ラベル根付き木の列挙のテスト
"""

import math

import pytest

from src.algorithms.universal_polynomials import u_poly, u_poly_d, v_poly
from src.data.nc_polynomial import NCWord
from src.data.normal_polynomial import NormalMonomial
from src.enumerators.increasing_trees import (
    IncreasingTree,
    enumerate_trees,
    root_degree_counts,
    sd_to_tree,
    tree_to_sd,
    u_d_from_tree_tuples,
    u_from_trees,
    v_from_trees,
)
from src.enumerators.rooted_trees import (
    RootedTree,
    alpha,
    count_shapes,
    enumerate_shapes,
    labelings_by_shape,
    shape_of,
    u_from_shapes,
)
from src.enumerators.subdiagonal_maps import enumerate_sd
from src.exceptions import DomainError, EnumerationLimitError

# 頂点数 n+1 の根付き木の個数（n = 0..9）
ROOTED_TREE_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]

LEAF = RootedTree.leaf()


class TestIncreasingTree:
    """増加木のテスト"""

    def test_out_degrees(self):
        """各頂点の子の数"""
        tree = IncreasingTree((0, 0, 1))

        assert tree.out_degrees() == [2, 1, 0, 0]
        assert tree.children(0) == [1, 2]
        assert tree.ch(1) == 1
        assert tree.monomial() == NormalMonomial.of({0: 2, 1: 1}, 2)
        assert tree.word() == NCWord((0, 0, 1), 2)

    def test_validation(self):
        """親のラベルが子より小さくない木は拒否"""
        with pytest.raises(ValueError):
            IncreasingTree((0, 2))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_bijection_with_subdiagonal_maps(self, n, limits):
        """SD_n と T_n の全単射"""
        maps = list(enumerate_sd(n, limits))
        trees = [sd_to_tree(f) for f in maps]

        assert [tree_to_sd(t) for t in trees] == maps
        assert len(set(trees)) == math.factorial(n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_u_from_trees(self, n, limits):
        """増加木の和は U_n"""
        assert u_from_trees(n, limits) == u_poly(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_v_from_trees(self, n, limits):
        """増加木から V_n を組み立てる"""
        assert v_from_trees(n, limits) == v_poly(n)

    @pytest.mark.parametrize("n, d", [(1, 3), (2, 2), (3, 2), (3, 3), (4, 2)])
    def test_tree_tuples(self, n, d, limits):
        """増加木の d 組の和は U_{n,d}"""
        assert u_d_from_tree_tuples(n, d, limits) == u_poly_d(n, d)

    def test_root_degrees_follow_stirling_first(self, limits):
        """根の出次数 k の増加木は c(4, k) 個"""
        assert root_degree_counts(4, limits) == {1: 6, 2: 11, 3: 6, 4: 1}

    def test_tree_tuple_limit(self, tight_limits):
        """d 組の件数が上限を超えると拒否"""
        with pytest.raises(EnumerationLimitError):
            u_d_from_tree_tuples(3, 3, tight_limits)

    def test_tree_tuple_domain(self):
        """d < 1 は拒否"""
        with pytest.raises(DomainError):
            u_d_from_tree_tuples(2, 0)


class TestRootedTree:
    """非ラベル根付き木のテスト"""

    def test_canonical_form(self):
        """子の順序によらず同じ木"""
        path = RootedTree.path(2)

        assert RootedTree((LEAF, path)) == RootedTree((path, LEAF))
        assert RootedTree((LEAF, path)).size == 4
        assert str(RootedTree((LEAF, LEAF))) == "[[],[]]"

    def test_monomial(self):
        """木の形に対応する単項式"""
        star = RootedTree((LEAF, LEAF, LEAF))
        assert star.monomial() == NormalMonomial.of({0: 3}, 3)
        assert RootedTree.path(3).monomial() == NormalMonomial.of({0: 1, 1: 1}, 1)

    def test_alpha(self):
        """α(T) は増加ラベル付けの個数"""
        assert alpha(RootedTree.path(5)) == 1
        assert alpha(RootedTree((LEAF,) * 4)) == 1
        assert alpha(RootedTree((LEAF, RootedTree.path(2)))) == 3
        assert alpha(RootedTree((RootedTree.path(2), RootedTree.path(2)))) == 3

    @pytest.mark.parametrize("n", range(0, 10))
    def test_count_shapes(self, n):
        """非ラベル根付き木の個数"""
        assert count_shapes(n) == ROOTED_TREE_COUNTS[n]

    @pytest.mark.parametrize("n", range(0, 8))
    def test_enumerate_shapes(self, n, limits):
        """形を重複なく列挙"""
        shapes = list(enumerate_shapes(n, limits))

        assert len(shapes) == ROOTED_TREE_COUNTS[n]
        assert len(set(shapes)) == len(shapes)
        assert all(shape.size == n + 1 for shape in shapes)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_alpha_counts_labelings(self, n, limits):
        """α(T) はラベル付けの個数"""
        by_shape = labelings_by_shape(n, limits)

        assert all(alpha(shape) == by_shape[shape] for shape in enumerate_shapes(n, limits))
        assert sum(alpha(shape) for shape in enumerate_shapes(n, limits)) == math.factorial(n)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_u_from_shapes(self, n, limits):
        """α で重み付けた形の和は U_n"""
        assert u_from_shapes(n, limits) == u_poly(n)

    def test_shape_of(self):
        """ラベルを忘れた形"""
        tree = IncreasingTree((0, 0, 1))
        assert shape_of(tree) == RootedTree((LEAF, RootedTree.path(2)))

    def test_limits(self, tight_limits):
        """上限超過と負の n"""
        with pytest.raises(EnumerationLimitError):
            list(enumerate_shapes(4, tight_limits))
        with pytest.raises(DomainError):
            list(enumerate_shapes(-1))

    def test_enumerate_trees_count(self, limits):
        """|T_5| = 5!"""
        assert sum(1 for _ in enumerate_trees(5, limits)) == 120
