"""
コマンドラインインターフェースと出力フォーマッターのテスト
"""

import importlib

import orjson
import pytest

from src.algorithms.universal_polynomials import coeff_table, u_poly, v_poly
from src.cli.formatters import (
    format_coeff_table,
    format_polynomial,
    format_triangle,
    format_values,
)
from src.cli.main import (
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    run,
)
from src.exceptions import UnsupportedMethodError
from src.specializations.stirling import stirling_triangle
from src.workflows.verification_workflow import SuiteResult

U3_TEXT = "y0 y1^2 t + y0^2 y2 t + 3·y0^2 y1 t^2 + y0^3 t^3"


class TestFormatters:
    """出力フォーマッターのテスト"""

    def test_polynomial_formats(self):
        """テキスト・LaTeX・CSV・JSON で多項式を出力"""
        poly = u_poly(2)

        assert format_polynomial(poly) == "y0 y1 t + y0^2 t^2"
        assert format_polynomial(poly, "latex") == "$y_{0} y_{1} t + y_{0}^{2} t^{2}$"
        assert format_polynomial(poly, "csv").splitlines() == [
            "term,coeff",
            "y0 y1 t,1",
            "y0^2 t^2,1",
        ]
        data = orjson.loads(format_polynomial(poly, "json"))
        assert data["polynomial"] == "y0 y1 t + y0^2 t^2"
        assert len(data["terms"]) == 2

    def test_noncommutative_latex(self):
        """同じ文字の並びは冪にまとめる"""
        assert format_polynomial(v_poly(2), "latex") == "$y_{0} y_{1} t + y_{0}^{2} t^{2}$"

    def test_coeff_table_text(self):
        """係数表のテキスト出力は見出し行から始まる"""
        lines = format_coeff_table(coeff_table(3, 1)).splitlines()

        assert lines[0] == "n=3 d=1 entries=4 total=6"
        assert lines[-1].startswith("∅")

    def test_coeff_table_csv(self):
        """係数表の CSV 出力"""
        assert format_coeff_table(coeff_table(2, 1), "csv").splitlines() == [
            "partition,k,coeff",
            "1,1,1",
            ",2,1",
        ]

    def test_triangle_text(self):
        """三角配列のテキスト出力"""
        text = format_triangle(stirling_triangle(2, 3))
        assert text.splitlines() == ["stirling2", "0: 0:1", "1: 1:1", "2: 1:1 2:1", "3: 1:1 2:3 3:1"]

    def test_large_integers_in_json(self):
        """64 ビットを超える整数は JSON で文字列になる"""
        data = orjson.loads(format_values({"value": 2**70, "small": 3}, "json"))
        assert data == {"small": 3, "value": str(2**70)}

    def test_unknown_format(self):
        """未知の出力形式はエラー"""
        with pytest.raises(UnsupportedMethodError):
            format_polynomial(u_poly(1), "yaml")


class TestCli:
    """run() の終了コードと出力"""

    def test_poly(self, capsys):
        """poly --n 3 は U_3 を表示"""
        assert run(["poly", "--n", "3"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == U3_TEXT

    @pytest.mark.parametrize("method", ["subdiagonal", "trees", "shapes", "umbral"])
    def test_poly_methods_agree(self, method, capsys):
        """計算方法によらず同じ U_3 を表示"""
        assert run(["poly", "--n", "3", "--method", method]) == EXIT_OK
        assert capsys.readouterr().out.strip() == U3_TEXT

    def test_poly_noncommutative(self, capsys):
        """--noncommutative は V_n を表示"""
        assert run(["poly", "--n", "2", "--noncommutative"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == v_poly(2).render()

    def test_coeffs_json(self, capsys):
        """c^{3,3} の JSON 出力の係数和は (3!)^3"""
        assert run(["coeffs", "--n", "3", "--d", "3", "--format", "json"]) == EXIT_OK
        data = orjson.loads(capsys.readouterr().out)

        assert sum(int(e["coeff"]) for e in data["entries"]) == 216

    def test_single_coefficient(self, capsys):
        """--partition で単一の係数を出力"""
        assert run(["coeffs", "--n", "3", "--d", "3", "--partition", "2,1", "--format", "json"]) == 0
        assert orjson.loads(capsys.readouterr().out)["coeff"] == "42"

    def test_stirling_and_bell(self, capsys):
        """Stirling 数と Bell 数の出力"""
        assert run(["stirling", "--kind", "1", "--n", "4", "--k", "2", "--format", "json"]) == 0
        assert orjson.loads(capsys.readouterr().out)["value"] == "11"
        assert run(["bell", "--n", "5", "--format", "json"]) == 0
        assert orjson.loads(capsys.readouterr().out)["value"] == "52"

    def test_genstirling(self, capsys):
        """一般化 Stirling 数の出力"""
        args = ["genstirling", "--n", "2", "--k", "3", "--q", "2", "--d", "3", "--format", "json"]
        assert run(args) == EXIT_OK
        assert orjson.loads(capsys.readouterr().out)["value"] == "6"

    def test_oracle_transitions(self, capsys):
        """h = x の基底変換行列を出力"""
        assert run(["oracle", "--n", "3", "--transitions", "--format", "json"]) == EXIT_OK
        data = orjson.loads(capsys.readouterr().out)

        assert data["consistent"] is True
        assert data["b"][3] == ["0", "1", "3", "1"]

    def test_oracle_power(self, capsys):
        """(x² z)² の正規形を出力"""
        assert run(["oracle", "--h", "0,0,1", "--n", "2", "--format", "json"]) == EXIT_OK
        data = orjson.loads(capsys.readouterr().out)

        assert data["matches_universal_polynomial"] is True
        assert data["normal_form"] == "(x^4)·z^2 + (2x^3)·z"

    def test_modp(self, capsys):
        """合同式の検査と素数でない p の拒否"""
        assert run(["modp", "--p", "2", "--m", "2"]) == EXIT_OK
        assert run(["modp", "--p", "2", "--e", "1", "--n", "3"]) == EXIT_OK
        assert run(["modp", "--p", "4", "--m", "1"]) == EXIT_DOMAIN_ERROR

    def test_domain_error_exit_code(self, capsys):
        """前提条件違反は終了コード 1"""
        assert run(["poly", "--n", "-1"]) == EXIT_DOMAIN_ERROR
        assert "error:" in capsys.readouterr().err

    def test_enumeration_cap(self, capsys):
        """--cap-trees を超える列挙は終了コード 1"""
        assert run(["poly", "--n", "5", "--method", "trees", "--cap-trees", "4"]) == (
            EXIT_DOMAIN_ERROR
        )

    def test_partition_cap(self, capsys):
        """分割数が上限を超える入力は長時間走らずに終了コード 1 で拒否する"""
        assert run(["modp", "--p", "2", "--m", "6"]) == EXIT_DOMAIN_ERROR
        assert "partitions" in capsys.readouterr().err
        args = ["coeffs", "--n", "7", "--method", "recurrence", "--cap-partitions", "20"]
        assert run(args) == EXIT_DOMAIN_ERROR
        assert run(["coeffs", "--n", "6", "--method", "recurrence", "--cap-partitions", "20"]) == 0

    def test_usage_errors(self):
        """引数の誤りは終了コード 64"""
        assert run(["poly"]) == EXIT_USAGE
        assert run(["unknown"]) == EXIT_USAGE
        assert run(["coeffs", "--n", "3", "--partition", "a,b"]) == EXIT_USAGE

    def test_verify(self, capsys):
        """検証スイートの成功を表示"""
        assert run(["verify", "tables", "--max-n", "3"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("tables: ok")

    def test_verify_failure(self, mocker, capsys):
        """検証の失敗は終了コード 2 で違反を表示"""
        failing = SuiteResult(name="tables", checks=2, violations=["c^3 by comtet differs"])
        # src.cli パッケージは main 関数を再エクスポートしてサブモジュール名を覆うため、モジュールを直接指定する
        mocker.patch.object(
            importlib.import_module("src.cli.main"), "run_verification", return_value=[failing]
        )

        assert run(["verify", "tables"]) == EXIT_VERIFICATION_FAILED
        output = capsys.readouterr().out
        assert "tables: FAILED (2 checks)" in output
        assert "c^3 by comtet differs" in output

    def test_ode_and_faa(self, capsys):
        """ode と faa サブコマンド"""
        assert run(["ode", "--y", "1,1,1,1", "--order", "4", "--format", "json"]) == EXIT_OK
        assert orjson.loads(capsys.readouterr().out)["x"] == ["1", "1", "2", "6"]
        assert run(["faa", "--n", "2", "--check"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "y2 t + y1^2 t^2"
