"""
特殊化パッケージ

Stirling 数・Bell 数・Euler 数・一般化 Stirling 数、微分方程式の形式解、
Faà di Bruno 多項式、素数を法とする合同式の検証
"""

from src.specializations.eulerian import (
    eulerian,
    eulerian_polynomial,
    eulerian_row,
    eulerian_triangle,
)
from src.specializations.faa_di_bruno import (
    composite_derivative,
    faa_di_bruno,
    verify_faa_di_bruno,
)
from src.specializations.generalized_stirling import (
    StirlingMethod,
    gen_stirling,
    gen_stirling_triangle,
)
from src.specializations.modular import ModularReport, verify_modp, verify_modp_d
from src.specializations.ode import ode_coefficients, verify_ode_solution
from src.specializations.stirling import (
    bell,
    rising_factorial_polynomial,
    stirling_first,
    stirling_second,
    stirling_second_positional,
    stirling_triangle,
    touchard_polynomial,
)

__all__ = [
    "ModularReport",
    "StirlingMethod",
    "bell",
    "composite_derivative",
    "eulerian",
    "eulerian_polynomial",
    "eulerian_row",
    "eulerian_triangle",
    "faa_di_bruno",
    "gen_stirling",
    "gen_stirling_triangle",
    "ode_coefficients",
    "rising_factorial_polynomial",
    "stirling_first",
    "stirling_second",
    "stirling_second_positional",
    "stirling_triangle",
    "touchard_polynomial",
    "verify_faa_di_bruno",
    "verify_modp",
    "verify_modp_d",
    "verify_ode_solution",
]
