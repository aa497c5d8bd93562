"""
コマンドラインインターフェース

普遍多項式・係数表・三角配列の計算と出力、検証スイートの実行を行う。

終了コード:
    0: 成功
    1: 前提条件違反（DomainError）または列挙上限超過
    2: 検証の失敗（違反を含むレポート）
    64: 引数の誤り
"""

import argparse
import dataclasses
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.algorithms.universal_polynomials import CoefficientMethod, coeff_table, u_poly_d, v_poly
from src.cli.formatters import (
    OUTPUT_FORMATS,
    format_coeff_table,
    format_polynomial,
    format_triangle,
    format_values,
)
from src.config.engine_config import EnumerationConfig, get_config
from src.data.normal_polynomial import NormalPolynomial
from src.data.partition import Partition
from src.enumerators.increasing_trees import u_d_from_tree_tuples, u_from_trees, v_from_trees
from src.enumerators.rooted_trees import u_from_shapes
from src.enumerators.subdiagonal_maps import (
    u_d_from_partial_maps,
    u_from_subdiagonal,
    u_from_umbral,
)
from src.exceptions import ConfigurationError, DomainError, EnumerationLimitError
from src.operators.basis_transitions import ah_transitions, matrix_product
from src.operators.coefficient_rings import IntPolynomial
from src.operators.skew_polynomial import eval_u, power_h_zd
from src.specializations.eulerian import (
    eulerian,
    eulerian_polynomial,
    eulerian_row,
    eulerian_triangle,
)
from src.specializations.faa_di_bruno import faa_di_bruno, verify_faa_di_bruno
from src.specializations.generalized_stirling import (
    StirlingMethod,
    gen_stirling,
    gen_stirling_triangle,
)
from src.specializations.modular import verify_modp, verify_modp_d
from src.specializations.ode import ode_coefficients, verify_ode_solution
from src.specializations.stirling import (
    bell,
    stirling_first,
    stirling_second,
    stirling_second_positional,
    stirling_triangle,
)
from src.workflows.verification_workflow import DEFAULT_MAX_N, SUITE_NAMES, run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_VERIFICATION_FAILED = 2
EXIT_USAGE = 64


class CommandParser(argparse.ArgumentParser):
    """引数の誤りを終了コード 64 で報告するパーサー"""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"整数のカンマ区切りが必要です: {text!r}") from e


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


POLY_METHODS: Dict[str, Callable[[int, int, EnumerationConfig], NormalPolynomial]] = {
    "recursive": lambda n, d, config: u_poly_d(n, d),
    "subdiagonal": lambda n, d, config: u_from_subdiagonal(n, config),
    "trees": lambda n, d, config: u_from_trees(n, config),
    "shapes": lambda n, d, config: u_from_shapes(n, config),
    "partial-maps": lambda n, d, config: u_d_from_partial_maps(n, d, config),
    "tree-tuples": lambda n, d, config: u_d_from_tree_tuples(n, d, config),
    "umbral": lambda n, d, config: u_from_umbral(n, d),
}
SINGLE_D_METHODS = ("subdiagonal", "trees", "shapes")


# ===== サブコマンド =====
def _cmd_poly(args: argparse.Namespace, config: EnumerationConfig) -> int:
    if args.noncommutative:
        if args.d != 1:
            raise DomainError("V_n は d = 1 のみ定義されています")
        poly = v_from_trees(args.n, config) if args.method == "trees" else v_poly(args.n)
    else:
        if args.method in SINGLE_D_METHODS and args.d != 1:
            raise DomainError(f"{args.method} は d = 1 のみ対応しています")
        poly = POLY_METHODS[args.method](args.n, args.d, config)
    print(format_polynomial(poly, args.format))
    return EXIT_OK


def _cmd_coeffs(args: argparse.Namespace, config: EnumerationConfig) -> int:
    table = coeff_table(args.n, args.d, args.method, config)
    if args.partition is not None:
        value = table.coefficient(args.partition)
        values = {
            "n": args.n,
            "d": args.d,
            "partition": args.partition.to_list(),
            "coeff": str(value),
        }
        print(format_values(values, args.format))
    else:
        print(format_coeff_table(table, args.format))
    return EXIT_OK


def _cmd_triangle(args: argparse.Namespace, config: EnumerationConfig) -> int:
    if args.name == "stirling1":
        triangle = stirling_triangle(1, args.max_n, config)
    elif args.name == "stirling2":
        triangle = stirling_triangle(2, args.max_n, config)
    elif args.name == "eulerian":
        triangle = eulerian_triangle(args.max_n, config)
    else:
        triangle = gen_stirling_triangle(args.q, args.d, args.max_n)
    print(format_triangle(triangle, args.format))
    return EXIT_OK


def _cmd_stirling(args: argparse.Namespace, config: EnumerationConfig) -> int:
    if args.kind == 1:
        value = stirling_first(args.n, args.k, config)
    elif args.positional:
        value = stirling_second_positional(args.n, args.k)
    else:
        value = stirling_second(args.n, args.k, config)
    values = {"kind": args.kind, "n": args.n, "k": args.k, "value": str(value)}
    print(format_values(values, args.format))
    return EXIT_OK


def _cmd_eulerian(args: argparse.Namespace, config: EnumerationConfig) -> int:
    values: Dict[str, Any] = {"n": args.n}
    if args.polynomial:
        values["variant"] = args.polynomial
        values["coefficients"] = [str(c) for c in eulerian_polynomial(args.n, args.polynomial)]
    elif args.k is not None:
        values["k"] = args.k
        values["value"] = str(eulerian(args.n, args.k, config))
    else:
        values["row"] = [str(v) for v in eulerian_row(args.n, config)]
    print(format_values(values, args.format))
    return EXIT_OK


def _cmd_bell(args: argparse.Namespace, config: EnumerationConfig) -> int:
    if args.n < 0:
        raise DomainError(f"n は非負である必要があります: {args.n}")
    print(format_values({"n": args.n, "value": str(bell(args.n, config))}, args.format))
    return EXIT_OK


def _cmd_genstirling(args: argparse.Namespace, config: EnumerationConfig) -> int:
    value = gen_stirling(args.n, args.k, args.q, args.d, args.method, config)
    print(
        format_values(
            {"n": args.n, "k": args.k, "q": args.q, "d": args.d, "value": str(value)}, args.format
        )
    )
    return EXIT_OK


def _cmd_modp(args: argparse.Namespace, config: EnumerationConfig) -> int:
    if args.e is not None:
        if args.n is None:
            raise DomainError("--e を指定する場合は --n も必要です")
        report = verify_modp_d(args.p, args.e, args.n, config)
    else:
        if args.m is None:
            raise DomainError("--m または --e を指定してください")
        report = verify_modp(args.p, args.m, config)
    print(format_values(report.to_dict(), args.format))
    return EXIT_OK if report.is_clean else EXIT_VERIFICATION_FAILED


def _cmd_oracle(args: argparse.Namespace, config: EnumerationConfig) -> int:
    h = IntPolynomial.of(args.h)
    if args.transitions:
        matrices = ah_transitions(args.n, h)
        consistent = matrix_product(matrices.a, matrices.b) == matrices.c
        values: Dict[str, Any] = {"h": h.render(), "n": args.n, **matrices.to_dict()}
        values["consistent"] = consistent
        print(format_values(values, args.format))
        return EXIT_OK if consistent else EXIT_VERIFICATION_FAILED

    direct = power_h_zd(h, args.d, args.n)
    via_u = eval_u(u_poly_d(args.n, args.d), h)
    values = {
        "h": h.render(),
        "d": args.d,
        "n": args.n,
        "normal_form": direct.render(),
        "matches_universal_polynomial": direct == via_u,
    }
    print(format_values(values, args.format))
    return EXIT_OK if direct == via_u else EXIT_VERIFICATION_FAILED


def _cmd_verify(args: argparse.Namespace, config: EnumerationConfig) -> int:
    results = run_verification(args.suite, args.max_n, config)
    if args.format == "json" or args.format == "csv":
        print(format_values({r.name: r.to_dict() for r in results}, args.format))
    else:
        for r in results:
            status = "ok" if r.passed else "FAILED"
            print(f"{r.name}: {status} ({r.checks} checks)")
            for violation in r.violations:
                print(f"  - {violation}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFICATION_FAILED


def _cmd_ode(args: argparse.Namespace, config: EnumerationConfig) -> int:
    xs = ode_coefficients(args.y, args.order)
    mismatches = verify_ode_solution(args.y, args.order)
    values = {
        "y": args.y,
        "order": args.order,
        "x": [str(x) for x in xs],
        "series_check": not mismatches,
    }
    print(format_values(values, args.format))
    return EXIT_OK if not mismatches else EXIT_VERIFICATION_FAILED


def _cmd_faa(args: argparse.Namespace, config: EnumerationConfig) -> int:
    mismatches = verify_faa_di_bruno(args.n) if args.check else []
    print(format_polynomial(faa_di_bruno(args.n), args.format))
    return EXIT_VERIFICATION_FAILED if mismatches else EXIT_OK


# ===== パーサー =====
def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default="text", help="出力形式")
    common.add_argument("--cap-trees", type=int, help="SD_n / T_n を列挙する最大 n")
    common.add_argument("--cap-shapes", type=int, help="非ラベル木を列挙する最大 n")
    common.add_argument("--cap-items", type=int, help="直積型列挙の最大件数")
    common.add_argument(
        "--cap-partitions", type=int, help="係数表・合同式で走査する分割の最大個数"
    )
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="ログレベル（既定は LOG_LEVEL 環境変数）",
    )
    return common


def build_parser() -> CommandParser:
    """サブコマンドを含むパーサーを構築"""
    common = _common_options()
    parser = CommandParser(prog="normord", description="普遍正規順序多項式の計算と検証")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)

    poly = subparsers.add_parser("poly", parents=[common], help="U_n, U_{n,d}, V_n を表示")
    poly.add_argument("--n", type=int, required=True)
    poly.add_argument("--d", type=int, default=1)
    poly.add_argument("--method", choices=sorted(POLY_METHODS), default="recursive")
    poly.add_argument("--noncommutative", action="store_true", help="V_n を表示")
    poly.set_defaults(handler=_cmd_poly)

    coeffs = subparsers.add_parser("coeffs", parents=[common], help="係数表 c^{n,d}_λ")
    coeffs.add_argument("--n", type=int, required=True)
    coeffs.add_argument("--d", type=int, default=1)
    coeffs.add_argument(
        "--method",
        choices=[m.value for m in CoefficientMethod],
        default=CoefficientMethod.EXTRACTION.value,
    )
    coeffs.add_argument("--partition", type=_partition, help="単一の係数（例: 2,1）")
    coeffs.set_defaults(handler=_cmd_coeffs)

    triangle = subparsers.add_parser("triangle", parents=[common], help="三角配列")
    triangle.add_argument(
        "--name",
        choices=["stirling1", "stirling2", "eulerian", "gen_stirling"],
        default="stirling2",
    )
    triangle.add_argument("--max-n", type=int, default=8)
    triangle.add_argument("--q", type=int, default=2)
    triangle.add_argument("--d", type=int, default=1)
    triangle.set_defaults(handler=_cmd_triangle)

    stirling = subparsers.add_parser("stirling", parents=[common], help="Stirling 数")
    stirling.add_argument("--kind", type=int, choices=[1, 2], default=2)
    stirling.add_argument("--n", type=int, required=True)
    stirling.add_argument("--k", type=int, required=True)
    stirling.add_argument("--positional", action="store_true", help="位置の積和で計算（第二種）")
    stirling.set_defaults(handler=_cmd_stirling)

    euler = subparsers.add_parser("eulerian", parents=[common], help="Euler 数")
    euler.add_argument("--n", type=int, required=True)
    euler.add_argument("--k", type=int)
    euler.add_argument("--polynomial", choices=["y0", "shifted"], help="Euler 多項式の特殊化")
    euler.set_defaults(handler=_cmd_eulerian)

    bell_parser = subparsers.add_parser("bell", parents=[common], help="Bell 数")
    bell_parser.add_argument("--n", type=int, required=True)
    bell_parser.set_defaults(handler=_cmd_bell)

    gen = subparsers.add_parser("genstirling", parents=[common], help="一般化 Stirling 数")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--q", type=int, required=True)
    gen.add_argument("--d", type=int, default=1)
    gen.add_argument("--method", choices=[m.value for m in StirlingMethod], default="auto")
    gen.set_defaults(handler=_cmd_genstirling)

    modp = subparsers.add_parser("modp", parents=[common], help="素数を法とする合同式の検証")
    modp.add_argument("--p", type=int, required=True)
    modp.add_argument("--m", type=int, help="n = p^m")
    modp.add_argument("--e", type=int, help="d = p^e（--n と併用）")
    modp.add_argument("--n", type=int)
    modp.set_defaults(handler=_cmd_modp)

    oracle = subparsers.add_parser("oracle", parents=[common], help="(h z^d)^n の正規形")
    oracle.add_argument(
        "--h", type=_int_list, default=[0, 1], help="h の係数（低次から、例: 0,0,1 は x^2）"
    )
    oracle.add_argument("--n", type=int, required=True)
    oracle.add_argument("--d", type=int, default=1)
    oracle.add_argument("--transitions", action="store_true", help="A_h の基底変換行列を表示")
    oracle.set_defaults(handler=_cmd_oracle)

    verify = subparsers.add_parser("verify", parents=[common], help="検証スイートを実行")
    verify.add_argument("suite", nargs="?", choices=SUITE_NAMES, default="all")
    verify.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    verify.set_defaults(handler=_cmd_verify)

    ode = subparsers.add_parser("ode", parents=[common], help="x′ = y(x) の形式解の係数")
    ode.add_argument("--y", type=_int_list, required=True, help="y_0,y_1,…")
    ode.add_argument("--order", type=int, required=True)
    ode.set_defaults(handler=_cmd_ode)

    faa = subparsers.add_parser("faa", parents=[common], help="Faà di Bruno 多項式 F_n")
    faa.add_argument("--n", type=int, required=True)
    faa.add_argument("--check", action="store_true", help="合成関数の微分と照合")
    faa.set_defaults(handler=_cmd_faa)

    return parser


def _enumeration_config(args: argparse.Namespace) -> EnumerationConfig:
    """--cap-* の指定を反映した列挙上限"""
    base = get_config().enumeration
    overrides = {
        name: value
        for name, value in (
            ("max_labeled_n", args.cap_trees),
            ("max_shape_n", args.cap_shapes),
            ("max_items", args.cap_items),
            ("max_partitions", args.cap_partitions),
        )
        if value is not None
    }
    if not overrides:
        return base
    return dataclasses.replace(base, read_environment=False, **overrides)


def _configure_logging(level_name: Optional[str]) -> None:
    level = level_name or get_config().log_level
    logging.basicConfig(
        level=getattr(logging, level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """CLI を実行して終了コードを返す"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        _configure_logging(args.log_level)
        config = _enumeration_config(args)
        logger.debug(f"command={args.command}, limits={config.to_dict()}")
        return args.handler(args, config)
    except (DomainError, EnumerationLimitError, ConfigurationError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_DOMAIN_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
