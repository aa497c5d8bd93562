"""
組合せ論的列挙パッケージ

部分対角写像・増加木・非ラベル木・部分全単射による U_n, U_{n,d} の独立な計算
"""

from src.enumerators.increasing_trees import (
    IncreasingTree,
    enumerate_trees,
    sd_to_tree,
    tree_to_sd,
    u_d_from_tree_tuples,
    u_from_trees,
    v_from_trees,
)
from src.enumerators.partial_bijections import count_partial_bijections, staircase_rook_numbers
from src.enumerators.rooted_trees import (
    RootedTree,
    alpha,
    enumerate_shapes,
    labelings_by_shape,
    shape_of,
    u_from_shapes,
)
from src.enumerators.subdiagonal_maps import (
    PartialSubdiagonalMap,
    SubdiagonalMap,
    count_pd_by_type,
    enumerate_pd,
    enumerate_sd,
    u_d_from_partial_maps,
    u_from_subdiagonal,
    u_from_umbral,
)

__all__ = [
    "IncreasingTree",
    "PartialSubdiagonalMap",
    "RootedTree",
    "SubdiagonalMap",
    "alpha",
    "count_partial_bijections",
    "count_pd_by_type",
    "enumerate_pd",
    "enumerate_sd",
    "enumerate_shapes",
    "enumerate_trees",
    "labelings_by_shape",
    "sd_to_tree",
    "shape_of",
    "staircase_rook_numbers",
    "tree_to_sd",
    "u_d_from_partial_maps",
    "u_d_from_tree_tuples",
    "u_from_shapes",
    "u_from_subdiagonal",
    "u_from_trees",
    "u_from_umbral",
    "v_from_trees",
]
