"""
出力フォーマッター

text / json / csv / latex の四形式で多項式・係数表・三角配列・レポートを文字列にする。
同じ入力には常に同じバイト列を返す。
"""

import csv
import io
import logging
from typing import Any, Dict, Iterable, List, Sequence, Union

import orjson

from src.data.coeff_table import CoeffTable
from src.data.integer_triangle import IntegerTriangle
from src.data.nc_polynomial import NCPolynomial, NCWord
from src.data.normal_polynomial import NormalMonomial, NormalPolynomial
from src.exceptions import UnsupportedMethodError

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json", "csv", "latex")

Polynomial = Union[NormalPolynomial, NCPolynomial]


def _check_format(fmt: str) -> None:
    if fmt not in OUTPUT_FORMATS:
        raise UnsupportedMethodError(f"未知の出力形式: {fmt}（{', '.join(OUTPUT_FORMATS)}）")


_INT64_LIMIT = 2**63


def _jsonable(value: Any) -> Any:
    """orjson が扱えない 64 ビット超の整数を10進文字列にする"""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= _INT64_LIMIT else value
    if isinstance(value, dict):
        return {str(key): _jsonable(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _dump_json(data: Any) -> str:
    return orjson.dumps(_jsonable(data), option=orjson.OPT_SORT_KEYS).decode()


def _dump_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue().rstrip("\n")


def _latex_power(base: str, exponent: int) -> str:
    return base if exponent == 1 else f"{base}^{{{exponent}}}"


def _latex_factors(letters: Sequence[Any], t_power: int) -> str:
    factors = [_latex_power(f"y_{{{i}}}", e) for i, e in letters]
    if t_power:
        factors.append(_latex_power("t", t_power))
    return " ".join(factors)


def _latex_term(term: Union[NormalMonomial, NCWord]) -> str:
    if isinstance(term, NCWord):
        runs: List[List[int]] = []
        for letter in term.letters:
            if runs and runs[-1][0] == letter:
                runs[-1][1] += 1
            else:
                runs.append([letter, 1])
        return _latex_factors(runs, term.t_power)
    return _latex_factors(term.y_exponents, term.t_power)


def _latex_polynomial(poly: Polynomial) -> str:
    if poly.is_zero():
        return "0"
    pieces = []
    for term, coeff in poly.sorted_terms():
        body = _latex_term(term)
        if not body:
            pieces.append(str(coeff))
        elif coeff == 1:
            pieces.append(body)
        elif coeff == -1:
            pieces.append(f"-{body}")
        else:
            pieces.append(f"{coeff} {body}")
    return " + ".join(pieces)


def format_polynomial(poly: Polynomial, fmt: str = "text") -> str:
    """多項式を標準の項順序で出力"""
    _check_format(fmt)
    if fmt == "text":
        return poly.render()
    if fmt == "latex":
        return f"${_latex_polynomial(poly)}$"
    rows = [(str(term), str(coeff)) for term, coeff in poly.sorted_terms()]
    if fmt == "csv":
        return _dump_csv(("term", "coeff"), rows)
    return _dump_json(
        {
            "polynomial": poly.render(),
            "terms": [{"term": term, "coeff": coeff} for term, coeff in rows],
        }
    )


def _partition_label(parts: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")" if parts else "∅"


def format_coeff_table(table: CoeffTable, fmt: str = "text") -> str:
    """係数表 c^{n,d}_λ を出力（json はスキーマ検証済み）"""
    _check_format(fmt)
    entries = table.sorted_entries()
    if fmt == "json":
        return table.to_json().decode()
    if fmt == "csv":
        return _dump_csv(
            ("partition", "k", "coeff"),
            ((" ".join(str(p) for p in partition.parts), k, c) for partition, k, c in entries),
        )
    if fmt == "latex":
        header = " & ".join(
            "\\emptyset" if not partition.parts else _partition_label(partition.parts)
            for partition, _, _ in entries
        )
        values = " & ".join(str(c) for _, _, c in entries)
        superscript = f"{table.n}" if table.d == 1 else f"{table.n},{table.d}"
        label = f"c^{{{superscript}}}_{{\\lambda}}"
        return "\n".join(
            [
                f"\\begin{{array}}{{c|*{{{len(entries)}}}{{c}}}}",
                f"\\lambda & {header}\\\\",
                "\\hline",
                f"{label} & {values}",
                "\\end{array}",
            ]
        )
    width = max((len(_partition_label(p.parts)) for p, _, _ in entries), default=1)
    lines = [f"n={table.n} d={table.d} entries={len(entries)} total={table.total()}"]
    for partition, k, c in entries:
        lines.append(f"{_partition_label(partition.parts):<{width}}  k={k:<3} {c}")
    return "\n".join(lines)


def format_triangle(triangle: IntegerTriangle, fmt: str = "text") -> str:
    """三角配列を行ごとに出力"""
    _check_format(fmt)
    if fmt == "json":
        return triangle.to_json().decode()
    if fmt == "csv":
        return _dump_csv(("n", "k", "value"), triangle.sorted_entries())
    rows = sorted({n for n, _ in triangle.entries})
    if fmt == "latex":
        columns = range(max((k for _, k in triangle.entries), default=0) + 1)
        lines = [
            f"\\begin{{array}}{{r|*{{{len(columns)}}}{{r}}}}",
            "n \\backslash k & " + " & ".join(str(k) for k in columns) + "\\\\",
            "\\hline",
        ]
        for n in rows:
            cells = [str(triangle.get(n, k)) if triangle.get(n, k) else "" for k in columns]
            lines.append(f"{n} & " + " & ".join(cells) + "\\\\")
        lines.append("\\end{array}")
        return "\n".join(lines)
    parameters = " ".join(f"{key}={value}" for key, value in sorted(triangle.parameters.items()))
    lines = [f"{triangle.name} {parameters}".rstrip()]
    for n in rows:
        ks = sorted(k for m, k in triangle.entries if m == n)
        lines.append(f"{n}: " + " ".join(f"{k}:{triangle.get(n, k)}" for k in ks))
    return "\n".join(lines)


def format_values(values: Dict[str, Any], fmt: str = "text") -> str:
    """名前付きの値（単一の数や検証レポート）を出力"""
    _check_format(fmt)
    if fmt == "json":
        return _dump_json(values)
    if fmt == "csv":
        return _dump_csv(
            ("key", "value"), ((key, _flatten(value)) for key, value in values.items())
        )
    if fmt == "latex":
        return "\n".join(
            [
                "\\begin{tabular}{ll}",
                *(f"{key} & {_flatten(value)}\\\\" for key, value in values.items()),
                "\\end{tabular}",
            ]
        )
    return "\n".join(f"{key}: {_flatten(value)}" for key, value in values.items())


def _flatten(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(_flatten(v) for v in value)
    if isinstance(value, dict):
        return _dump_json(value)
    return str(value)
