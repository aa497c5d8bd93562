"""
係数表・三角配列のデータクラスのテスト
"""

import jsonschema
import orjson
import pytest

from src.algorithms.universal_polynomials import u_poly, u_poly_d
from src.data.coeff_table import CoeffTable
from src.data.integer_triangle import IntegerTriangle
from src.data.partition import EMPTY, Partition


class TestCoeffTable:
    """CoeffTable のテスト"""

    def test_from_polynomial(self):
        """U_3 = y0 y1² t + y0² y2 t + 3 y0² y1 t² + y0³ t³"""
        table = CoeffTable.from_polynomial(u_poly(3), 3, 1)

        assert table.coefficient(EMPTY) == 1
        assert table.coefficient(Partition((1,))) == 3
        assert table.coefficient(Partition((2,))) == 1
        assert table.coefficient(Partition((1, 1))) == 1
        assert table.coefficient(Partition((3,))) == 0
        assert table.total() == 6

    def test_sorted_entries(self):
        """k 昇順、同じ k では分割の辞書式昇順"""
        table = CoeffTable.from_polynomial(u_poly(3), 3, 1)

        assert [(p.parts, k, c) for p, k, c in table.sorted_entries()] == [
            ((1, 1), 1, 1),
            ((2,), 1, 1),
            ((1,), 2, 3),
            ((), 3, 1),
        ]

    def test_to_polynomial_restores(self):
        """係数表から元の多項式を復元できる"""
        poly = u_poly_d(3, 2)
        assert CoeffTable.from_polynomial(poly, 3, 2).to_polynomial() == poly

    def test_validation(self):
        """係数表の不変条件"""
        with pytest.raises(ValueError, match="n ≥ 1"):
            CoeffTable(n=0, d=1)
        with pytest.raises(ValueError, match="nd − k"):
            CoeffTable(n=2, d=1, entries={(Partition((1,)), 2): 1})
        with pytest.raises(ValueError, match="ℓ"):
            CoeffTable(n=2, d=2, entries={(Partition((1, 1)), 2): 1})
        with pytest.raises(ValueError, match="正"):
            CoeffTable(n=2, d=1, entries={(Partition((1,)), 1): -1})

    def test_from_coefficients_drops_zero(self):
        """零係数は保持しない"""
        table = CoeffTable.from_coefficients(
            2, 1, {EMPTY: 1, Partition((1,)): 1, Partition((2,)): 0}
        )
        assert len(table.entries) == 2
        assert (EMPTY, 2) in table.entries

    def test_json(self):
        """JSON 出力はスキーマに従い、係数は10進文字列"""
        table = CoeffTable.from_polynomial(u_poly(3), 3, 1)
        data = orjson.loads(table.to_json())

        assert data["n"] == 3
        assert data["d"] == 1
        assert data["entries"][0] == {"partition": [1, 1], "k": 1, "coeff": "1"}
        assert sum(int(e["coeff"]) for e in data["entries"]) == 6
        assert CoeffTable.from_dict(data) == table

    def test_from_dict_rejects_invalid(self):
        """スキーマに反する JSON は読み込めない"""
        bad = {"n": 1, "d": 1, "entries": [{"partition": [], "k": 1, "coeff": "one"}]}
        with pytest.raises(jsonschema.ValidationError):
            CoeffTable.from_dict(bad)

    def test_equality_and_hash(self):
        """同じ内容の表は等しくハッシュも一致"""
        a = CoeffTable.from_polynomial(u_poly(4), 4, 1)
        b = CoeffTable.from_polynomial(u_poly(4), 4, 1)

        assert a == b
        assert hash(a) == hash(b)
        assert a != CoeffTable.from_polynomial(u_poly(3), 3, 1)


class TestIntegerTriangle:
    """IntegerTriangle のテスト"""

    def test_rows(self):
        """行の取得"""
        triangle = IntegerTriangle(name="stirling2", entries={(3, 1): 1, (3, 2): 3, (3, 3): 1})

        assert triangle.row(3) == [1, 3, 1]
        assert triangle.row(4) == []
        assert triangle.row_sum(3) == 5
        assert triangle.get(3, 0) == 0

    def test_unknown_name(self):
        """未知の名前は拒否"""
        with pytest.raises(ValueError, match="未知の三角配列名"):
            IntegerTriangle(name="pascal")

    def test_json(self):
        """JSON 出力に名前とパラメータを含む"""
        triangle = IntegerTriangle(
            name="gen_stirling", entries={(1, 1): 1, (2, 2): 2}, parameters={"q": 2, "d": 1}
        )
        data = orjson.loads(triangle.to_json())

        assert data["parameters"] == {"q": 2, "d": 1}
        assert data["entries"] == [
            {"n": 1, "k": 1, "coeff": "1"},
            {"n": 2, "k": 2, "coeff": "2"},
        ]
