"""
検証ワークフロー

計算方法の一致・特殊化の恒等式・合同式・作用素による検算を名前付きスイートとして実行する。
各スイートは実行時間を計測し、違反を SuiteResult に集める（例外にはしない）。
"""

import logging
import math
import time
from dataclasses import dataclass, field
from functools import wraps
from typing import Any, Callable, Dict, List, Optional, Tuple

import sympy
from sympy.functions.combinatorial.numbers import stirling

from src.algorithms.universal_polynomials import (
    coeff_table,
    compare_tables,
    u_poly,
    u_poly_d,
    v_poly,
)
from src.config.engine_config import EnumerationConfig, resolve_enumeration_config
from src.data.coeff_table import CoeffTable
from src.data.nc_polynomial import NCPolynomial
from src.data.partition import Partition, partitions_up_to
from src.enumerators.increasing_trees import (
    enumerate_trees,
    root_degree_counts,
    sd_to_tree,
    tree_to_sd,
    u_d_from_tree_tuples,
    u_from_trees,
    v_from_trees,
)
from src.enumerators.rooted_trees import (
    alpha,
    count_shapes,
    enumerate_shapes,
    labelings_by_shape,
    u_from_shapes,
)
from src.enumerators.subdiagonal_maps import (
    count_pd_by_types,
    enumerate_sd,
    u_from_subdiagonal,
    u_from_umbral,
)
from src.exceptions import (
    CorruptedPolynomialError,
    DomainError,
    FormulaMismatchError,
    IdentityViolationError,
    IntegralityError,
    UnsupportedMethodError,
)
from src.operators.basis_transitions import ah_transitions, matrix_product
from src.operators.coefficient_rings import X_RING, IntPolynomial
from src.operators.skew_polynomial import SkewPolynomial, apply, eval_u, power_h_zd
from src.specializations.eulerian import eulerian_polynomial, eulerian_row
from src.specializations.faa_di_bruno import verify_faa_di_bruno
from src.specializations.generalized_stirling import StirlingMethod, gen_stirling
from src.specializations.identities import (
    knuth_identity_violations,
    positional_stirling_violations,
    q_homogeneity,
    rising_factorial_violations,
    stirling_q1_violations,
    stirling_recurrence_violations,
    touchard_violations,
)
from src.specializations.modular import verify_modp, verify_modp_d
from src.specializations.ode import ode_coefficients, verify_ode_solution
from src.specializations.stirling import bell, stirling_first, stirling_second
from src.utils.common_utils import binomial

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 10

# 既知の係数表（n ≤ 5）
TABLE_ONE: Dict[int, Dict[Tuple[int, ...], int]] = {
    1: {(): 1},
    2: {(): 1, (1,): 1},
    3: {(): 1, (1,): 3, (2,): 1, (1, 1): 1},
    4: {(): 1, (1,): 6, (2,): 4, (1, 1): 7, (3,): 1, (2, 1): 4, (1, 1, 1): 1},
    5: {
        (): 1,
        (1,): 10,
        (2,): 10,
        (1, 1): 25,
        (3,): 5,
        (2, 1): 30,
        (1, 1, 1): 15,
        (4,): 1,
        (3, 1): 7,
        (2, 2): 4,
        (2, 1, 1): 11,
        (1, 1, 1, 1): 1,
    },
}

# c^{3,3}_λ
TABLE_C33: Dict[Tuple[int, ...], int] = {
    (): 1,
    (1,): 9,
    (1, 1): 15,
    (2,): 18,
    (2, 1): 42,
    (3,): 21,
    (3, 1): 33,
    (2, 2): 18,
    (4,): 15,
    (4, 1): 15,
    (3, 2): 15,
    (5,): 6,
    (6,): 1,
    (5, 1): 3,
    (4, 2): 3,
    (3, 3): 1,
}

ORACLE_H = [
    IntPolynomial.x(1),
    IntPolynomial.x(2),
    IntPolynomial.x(3),
    IntPolynomial.of([1, 1]),
    IntPolynomial.of([0, 1, 2]),
]

MODP_CASES = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)]
MODP_D_CASES = [(2, 1, 4), (3, 1, 3), (2, 2, 3)]  # (p, e, n の上限)

ODE_SEEDS = [
    [1, 2, 0, -1, 3, 1],
    [2, -1, 1, 0, 0, 4],
    [0, 1, 1, 1, 1, 1],
    [3, 0, -2, 1, 1, 0],
]


@dataclass
class SuiteResult:
    """検証スイートの結果

    Attributes:
        name: スイート名
        checks: 実行した検査の数
        violations: 失敗した検査の説明
        elapsed_ms: 実行時間（ミリ秒）
    """

    name: str
    checks: int = 0
    violations: List[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def check(self, condition: bool, description: str) -> None:
        self.checks += 1
        if not condition:
            self.violations.append(description)

    def extend(self, failures: List[Any], description: str) -> None:
        """失敗した添字のリストを一つの検査として記録"""
        self.check(not failures, f"{description}: {failures[:5]}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "checks": self.checks,
            "violations": list(self.violations),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


SuiteFunction = Callable[[SuiteResult, int, EnumerationConfig], None]
SuiteRunner = Callable[[int, EnumerationConfig], SuiteResult]


def timed_suite(name: str) -> Callable[[SuiteFunction], SuiteRunner]:
    """スイートの実行時間を計測し、整合性エラーを違反として記録するデコレーター"""

    def decorator(suite_func: SuiteFunction) -> SuiteRunner:
        @wraps(suite_func)
        def wrapper(max_n: int, config: EnumerationConfig) -> SuiteResult:
            result = SuiteResult(name=name)
            start_time = time.perf_counter()
            try:
                suite_func(result, max_n, config)
            except (
                FormulaMismatchError,
                IdentityViolationError,
                IntegralityError,
                CorruptedPolynomialError,
            ) as e:
                logger.error(f"suite {name}: {e}")
                result.violations.append(f"{type(e).__name__}: {e}")
            result.elapsed_ms = (time.perf_counter() - start_time) * 1000
            logger.info(
                f"suite {name}: checks={result.checks}, violations={len(result.violations)}, "
                f"elapsed={result.elapsed_ms:.1f}ms"
            )
            return result

        return wrapper

    return decorator


def _table_from_known(n: int, d: int, known: Dict[Tuple[int, ...], int]) -> CoeffTable:
    return CoeffTable.from_coefficients(n, d, {Partition(parts): c for parts, c in known.items()})


@timed_suite("tables")
def _tables_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    for n in range(1, min(max_n, 5) + 1):
        expected = _table_from_known(n, 1, TABLE_ONE[n])
        for method in ("extraction", "recurrence", "binomial", "comtet", "arrays", "enumeration"):
            table = coeff_table(n, 1, method, config)
            result.check(table == expected, f"c^{n} by {method} differs from the known table")
        result.check(
            len(expected.entries) == sum(1 for _ in partitions_up_to(n - 1)),
            f"c^{n} should have one entry per partition of size ≤ {n - 1}",
        )

    if max_n >= 3:
        expected = _table_from_known(3, 3, TABLE_C33)
        result.check(expected.total() == 216, "c^{3,3} should sum to (3!)^3")
        for method in ("extraction", "binomial", "comtet", "arrays", "enumeration", "operator"):
            table = coeff_table(3, 3, method, config)
            result.check(table == expected, f"c^(3,3) by {method} differs from the known table")
        from_tuples = CoeffTable.from_polynomial(u_d_from_tree_tuples(3, 3, config), 3, 3)
        result.check(from_tuples == expected, "c^(3,3) from tree triples differs")


@timed_suite("methods")
def _methods_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    for n in range(1, min(max_n, 7) + 1):
        u = u_poly(n)
        result.check(u_from_subdiagonal(n, config) == u, f"U_{n} from subdiagonal maps differs")
        result.check(u_from_trees(n, config) == u, f"U_{n} from increasing trees differs")
        result.check(u_from_shapes(n, config) == u, f"U_{n} from unlabeled trees differs")
    for n in range(1, min(max_n, 4) + 1):
        for d in range(1, 4):
            u = u_poly_d(n, d)
            result.check(
                u_d_from_tree_tuples(n, d, config) == u, f"U_({n},{d}) from tree tuples differs"
            )
            if n <= 3:
                result.check(
                    u_from_umbral(n, d) == u, f"U_({n},{d}) from the umbral product differs"
                )
    for n in range(1, min(max_n, 5) + 1):
        methods = ("extraction", "binomial", "comtet", "arrays")
        compare_tables(*(coeff_table(n, 2, m, config) for m in methods))
        result.checks += 1


@timed_suite("trees")
def _trees_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    for n in range(1, min(max_n, 7) + 1):
        by_shape = labelings_by_shape(n, config)
        shapes = list(enumerate_shapes(n, config))
        result.check(len(shapes) == count_shapes(n), f"UT_{n} has the wrong size")
        result.check(
            all(alpha(shape) == by_shape.get(shape, 0) for shape in shapes),
            f"alpha disagrees with labeled tree counts for n={n}",
        )
        result.check(
            sum(by_shape.values()) == math.factorial(n), f"|T_{n}| should be {n}!"
        )
        roots = root_degree_counts(n, config)
        result.check(
            all(roots.get(k, 0) == stirling_first(n, k) for k in range(1, n + 1)),
            f"root degrees of T_{n} should follow c({n}, k)",
        )
    for n in range(1, min(max_n, 5) + 1):
        result.check(
            all(tree_to_sd(sd_to_tree(f)) == f for f in enumerate_sd(n, config)),
            f"SD_{n} ↔ T_{n} bijection is not invertible",
        )
        result.check(
            len({sd_to_tree(f) for f in enumerate_sd(n, config)})
            == sum(1 for _ in enumerate_trees(n, config)),
            f"SD_{n} → T_{n} is not injective",
        )


@timed_suite("pd")
def _pd_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    for n in range(1, min(max_n, 3) + 1):
        for d in range(1, 4):
            counts = count_pd_by_types(n, d, config)
            expected = coeff_table(n, d, "binomial").coefficients()
            result.check(counts == expected, f"PD_({n},{d}) type counts differ from c^({n},{d})")
            result.check(
                sum(counts.values()) == math.factorial(n) ** d,
                f"|PD_({n},{d})| should be ({n}!)^{d}",
            )
    for n in range(4, min(max_n, 5) + 1):
        counts = count_pd_by_types(n, 1, config)
        result.check(
            counts == coeff_table(n, 1, "recurrence", config).coefficients(),
            f"PD_({n},1) type counts differ from c^{n}",
        )


@timed_suite("specializations")
def _specializations_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    top = min(max_n, 10)
    result.extend(rising_factorial_violations(top), "rising factorial")
    result.extend(touchard_violations(top, config), "Touchard polynomial")
    result.extend(stirling_recurrence_violations(top, config), "Stirling recurrences")
    result.extend(positional_stirling_violations(min(max_n, 8)), "positional Stirling formula")
    for n in range(0, top + 1):
        result.check(bell(n, config) == int(sympy.bell(n)), f"B_{n} differs from sympy")
        for k in range(0, n + 1):
            result.check(
                stirling_second(n, k, config) == int(stirling(n, k)),
                f"S({n},{k}) differs from sympy",
            )
    for n in range(1, min(max_n, 8) + 1):
        row = eulerian_row(n, config)
        result.check(sum(row) == math.factorial(n), f"sum_k A({n},k) should be {n}!")
        result.check(
            eulerian_polynomial(n, "y0") == eulerian_polynomial(n, "shifted"),
            f"Eulerian specializations of U_{n} disagree",
        )
        result.check(q_homogeneity(n), f"q-homogeneity fails for U_{n}")
    result.extend(stirling_q1_violations(5, min(max_n, 6), config), "S(n,k)_(q,1) specialization")


@timed_suite("knuth52")
def _knuth_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    top = min(max_n, 10)
    result.extend(knuth_identity_violations(top), "S{n+1,k+1} = sum_j C(n,j) S{j,k}")
    matrices = ah_transitions(top, IntPolynomial.x())
    result.check(
        matrix_product(matrices.a, matrices.b) == matrices.c, f"A·B ≠ C for h = x up to {top}"
    )
    for k in range(top + 1):
        for j in range(k + 1):
            result.check(
                matrices.a[k][j] == IntPolynomial.constant(binomial(k, j))
                and matrices.b[k][j] == IntPolynomial.constant(stirling_second(k, j))
                and matrices.c[k][j] == IntPolynomial.constant(stirling_second(k + 1, j + 1)),
                f"transition entries for h = x at ({k}, {j})",
            )


@timed_suite("modp")
def _modp_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    for p, m in MODP_CASES:
        if p**m > max(max_n, 2):
            continue
        report = verify_modp(p, m, config)
        result.check(
            report.is_clean,
            f"c^n mod {p} for n = {p}^{m}: {report.to_dict()['violations'][:3]}",
        )
    for p, e, n_max in MODP_D_CASES:
        for n in range(1, min(max_n, n_max) + 1):
            report = verify_modp_d(p, e, n, config)
            result.check(
                report.is_clean,
                f"c^(n,d) mod {p} for d = {p}^{e}, n = {n}: {report.to_dict()['violations'][:3]}",
            )


@timed_suite("oracle")
def _oracle_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    for h in ORACLE_H:
        for n in range(0, min(max_n, 4) + 1):
            for d in range(1, 4):
                result.check(
                    power_h_zd(h, d, n) == eval_u(u_poly_d(n, d), h),
                    f"(h z^{d})^{n} ≠ U_({n},{d}) at h = {h.render()}",
                )
    for n in range(1, min(max_n, 4) + 1):
        for d in (1, 2):
            result.check(
                coeff_table(n, d, "operator") == coeff_table(n, d, "binomial"),
                f"(y0 z^{d})^{n} does not reproduce c^({n},{d})",
            )
    euler_operator = SkewPolynomial(X_RING, {1: IntPolynomial.x()})
    for n in range(0, min(max_n, 5) + 1):
        power = power_h_zd(IntPolynomial.x(), 1, n)
        result.check(power == euler_operator**n, f"(xz)^{n} by skew powers differs")
        for m in range(4):
            result.check(
                apply(power, IntPolynomial.x(m)) == IntPolynomial.x(m) * (m**n),
                f"(x∂)^{n} x^{m} should be {m}^{n} x^{m}",
            )


@timed_suite("genstirling")
def _genstirling_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    methods = [m for m in StirlingMethod if m is not StirlingMethod.AUTO]
    for n in range(1, min(max_n, 3) + 1):
        for q in range(0, 4):
            for d in range(1, 4):
                for k in range(0, n * min(q, d) + 1):
                    usable = [m for m in methods if q >= d or m is not StirlingMethod.COEFFICIENTS]
                    values = {m.value: gen_stirling(n, k, q, d, m, config) for m in usable}
                    result.check(
                        len(set(values.values())) == 1,
                        f"S({n},{k})_({q},{d}) methods disagree: {values}",
                    )
    for n in range(1, min(max_n, 4) + 1):
        for q in range(1, 5):
            for d in range(1, 5):
                for k in range(0, n * min(q, d) + 1):
                    result.check(
                        gen_stirling(n, k, q, d, "arrays") == gen_stirling(n, k, d, q, "arrays"),
                        f"S({n},{k})_({q},{d}) ≠ S({n},{k})_({d},{q})",
                    )
        for k in range(0, n + 1):
            result.check(
                gen_stirling(n, k, 1, 1) == stirling_second(n, k, config),
                f"S({n},{k})_(1,1) should be S({n},{k})",
            )


@timed_suite("ode")
def _ode_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    order = min(max_n, 8)
    xs = ode_coefficients([1] * order, order)
    result.check(
        xs == [math.factorial(n - 1) for n in range(1, order + 1)],
        "x' = e^x should give x_n = (n-1)!",
    )
    result.check(
        ode_coefficients([1], order) == [1] + [0] * (order - 1), "x' = 1 should give x = u"
    )
    for seed in ODE_SEEDS:
        result.extend(verify_ode_solution(seed, min(order, 6)), f"series check for y = {seed}")


@timed_suite("faa")
def _faa_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    result.extend(verify_faa_di_bruno(min(max_n, 5)), "Faa di Bruno composite derivatives")


@timed_suite("vn")
def _vn_suite(result: SuiteResult, max_n: int, config: EnumerationConfig) -> None:
    for n in range(1, min(max_n, 7) + 1):
        v = v_poly(n)
        result.check(v.abelianize() == u_poly(n), f"abelianized V_{n} ≠ U_{n}")
        if n <= 6:
            result.check(v_from_trees(n, config) == v, f"V_{n} from increasing trees differs")
    if max_n >= 3:
        expected = (
            NCPolynomial.word((0, 1, 1), 1)
            + NCPolynomial.word((0, 0, 2), 1)
            + NCPolynomial.word((0, 0, 1), 2, coefficient=2)
            + NCPolynomial.word((0, 1, 0), 2)
            + NCPolynomial.word((0, 0, 0), 3)
        )
        result.check(v_poly(3) == expected, "V_3 differs from its known expansion")


SUITES: Dict[str, Callable[[int, EnumerationConfig], SuiteResult]] = {
    "tables": _tables_suite,
    "methods": _methods_suite,
    "trees": _trees_suite,
    "pd": _pd_suite,
    "specializations": _specializations_suite,
    "knuth52": _knuth_suite,
    "modp": _modp_suite,
    "oracle": _oracle_suite,
    "genstirling": _genstirling_suite,
    "ode": _ode_suite,
    "faa": _faa_suite,
    "vn": _vn_suite,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_verification(
    suite: str = "all",
    max_n: int = DEFAULT_MAX_N,
    config: Optional[EnumerationConfig] = None,
) -> List[SuiteResult]:
    """検証スイートを実行

    Args:
        suite: スイート名または "all"
        max_n: 各スイートの n の上限（スイートごとの実行可能範囲に切り詰める）
        config: 列挙上限

    Returns:
        スイート順に並んだ結果

    Raises:
        UnsupportedMethodError: 未知のスイート名の場合
        DomainError: max_n < 1 の場合
    """

    if suite not in SUITE_NAMES:
        raise UnsupportedMethodError(f"未知の検証スイート: {suite}（{', '.join(SUITE_NAMES)}）")
    if max_n < 1:
        raise DomainError(f"max_n は 1 以上である必要があります: {max_n}")
    limits = resolve_enumeration_config(config)
    names = list(SUITES) if suite == "all" else [suite]
    results = [SUITES[name](max_n, limits) for name in names]
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.warning(f"verification failed: {failed}")
    else:
        logger.info(f"verification passed: {names}")
    return results


__all__ = ["SUITES", "SUITE_NAMES", "SuiteResult", "run_verification", "timed_suite"]
