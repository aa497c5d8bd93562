"""
整数三角配列のデータクラス

Stirling 数・Euler 数・一般化 Stirling 数などの (n, k) 添字の表を保持する
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Tuple

import jsonschema
import orjson
from pydantic import BaseModel

TRIANGLE_NAMES = ("stirling1", "stirling2", "eulerian", "gen_stirling")


class TriangleEntryModel(BaseModel):
    n: int
    k: int
    coeff: str


class TriangleModel(BaseModel):
    """三角配列（JSON出力用）"""

    name: str
    parameters: Dict[str, int]
    entries: List[TriangleEntryModel]


TRIANGLE_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "name": {"type": "string", "enum": list(TRIANGLE_NAMES)},
        "parameters": {"type": "object", "additionalProperties": {"type": "integer"}},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "n": {"type": "integer", "minimum": 0},
                    "k": {"type": "integer", "minimum": 0},
                    "coeff": {"type": "string", "pattern": "^-?[0-9]+$"},
                },
                "required": ["n", "k", "coeff"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["name", "parameters", "entries"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class IntegerTriangle:
    """整数三角配列

    Attributes:
        name: 配列の種類（stirling1 / stirling2 / eulerian / gen_stirling）
        entries: (n, k) → 値（零は保持しない）
        parameters: gen_stirling の q, d など
    """

    name: str
    entries: Mapping[Tuple[int, int], int] = field(default_factory=dict)
    parameters: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in TRIANGLE_NAMES:
            raise ValueError(f"未知の三角配列名: {self.name}")

    def get(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def row(self, n: int) -> List[int]:
        """行 n の値を k 昇順で（範囲内の 0 を含む）"""
        ks = [k for (m, k) in self.entries if m == n]
        if not ks:
            return []
        return [self.get(n, k) for k in range(min(ks), max(ks) + 1)]

    def row_sum(self, n: int) -> int:
        return sum(c for (m, _), c in self.entries.items() if m == n)

    def sorted_entries(self) -> List[Tuple[int, int, int]]:
        return sorted((n, k, c) for (n, k), c in self.entries.items())

    def to_model(self) -> TriangleModel:
        return TriangleModel(
            name=self.name,
            parameters=dict(self.parameters),
            entries=[
                TriangleEntryModel(n=n, k=k, coeff=str(c)) for n, k, c in self.sorted_entries()
            ],
        )

    def to_dict(self) -> Dict[str, Any]:
        return self.to_model().model_dump()

    def to_json(self) -> bytes:
        data = self.to_dict()
        jsonschema.validate(data, TRIANGLE_SCHEMA)
        return orjson.dumps(data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerTriangle):
            return NotImplemented
        return (self.name, dict(self.entries), dict(self.parameters)) == (
            other.name,
            dict(other.entries),
            dict(other.parameters),
        )

    def __hash__(self) -> int:
        return hash(
            (self.name, frozenset(self.entries.items()), frozenset(self.parameters.items()))
        )
