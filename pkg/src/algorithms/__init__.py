"""
アルゴリズムパッケージ

普遍多項式 U_n, U_{n,d}, V_n と係数 c^{n,d}_λ の計算
"""

from src.algorithms.coefficient_formulas import (
    coeff_arrays,
    coeff_binomial,
    coeff_comtet,
    coeff_recurrence,
)
from src.algorithms.universal_polynomials import (
    CoefficientMethod,
    coeff_table,
    compare_tables,
    u_poly,
    u_poly_d,
    v_poly,
)

__all__ = [
    "CoefficientMethod",
    "coeff_arrays",
    "coeff_binomial",
    "coeff_comtet",
    "coeff_recurrence",
    "coeff_table",
    "compare_tables",
    "u_poly",
    "u_poly_d",
    "v_poly",
]
