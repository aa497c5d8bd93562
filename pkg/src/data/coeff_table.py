"""
係数表のデータクラス

U_{n,d} = Σ c^{n,d}_λ y_0^{n−ℓ(λ)} y_λ t^k の係数 c^{n,d}_λ を (λ, k) ごとに保持する
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Tuple

import jsonschema
import orjson
from pydantic import BaseModel

from src.data.normal_polynomial import NormalMonomial, NormalPolynomial, canonical_split
from src.data.partition import Partition

logger = logging.getLogger(__name__)


class CoeffEntryModel(BaseModel):
    """係数表の一項目（JSON出力用）"""

    partition: List[int]
    k: int
    coeff: str


class CoeffTableModel(BaseModel):
    """係数表（JSON出力用）"""

    n: int
    d: int
    entries: List[CoeffEntryModel]


COEFF_TABLE_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "d": {"type": "integer", "minimum": 1},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "partition": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "k": {"type": "integer", "minimum": 0},
                    "coeff": {"type": "string", "pattern": "^-?[0-9]+$"},
                },
                "required": ["partition", "k", "coeff"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["n", "d", "entries"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class CoeffTable:
    """係数表 c^{n,d}_λ

    Attributes:
        n: 冪の指数 n
        d: 微分の階数 d
        entries: (λ, k) → 係数
    """

    n: int
    d: int
    entries: Mapping[Tuple[Partition, int], int] = field(default_factory=dict)

    def __post_init__(self):
        """係数表の不変条件を検証"""
        if self.n < 1 or self.d < 1:
            raise ValueError(f"係数表は n ≥ 1, d ≥ 1 が必要です: n={self.n}, d={self.d}")
        for (partition, k), coeff in self.entries.items():
            if partition.size() != self.n * self.d - k:
                raise ValueError(f"|λ| = nd − k を満たしません: {partition}, k={k}")
            if not self.d <= k <= self.n * self.d:
                raise ValueError(f"k が範囲外です: k={k}")
            if partition.length() > self.n - 1:
                raise ValueError(f"ℓ(λ) ≤ n−1 を満たしません: {partition}")
            if coeff <= 0:
                raise ValueError(f"係数は正である必要があります: {partition} → {coeff}")

    @classmethod
    def from_coefficients(
        cls, n: int, d: int, coefficients: Mapping[Partition, int]
    ) -> "CoeffTable":
        """λ → 係数 から作成（k は nd − |λ|、零係数は除く）"""
        return cls(
            n=n,
            d=d,
            entries={(p, n * d - p.size()): c for p, c in coefficients.items() if c != 0},
        )

    @classmethod
    def from_polynomial(cls, polynomial: NormalPolynomial, n: int, d: int) -> "CoeffTable":
        """U_{n,d} の項を canonical_split で分解して係数表を作成"""
        entries: Dict[Tuple[Partition, int], int] = {}
        for monomial, coeff in polynomial.terms.items():
            entries[canonical_split(monomial, n)] = coeff
        return cls(n=n, d=d, entries=entries)

    def coefficient(self, partition: Partition) -> int:
        """c^{n,d}_λ（表にない場合は 0）"""
        return self.entries.get((partition, self.n * self.d - partition.size()), 0)

    def coefficients(self) -> Dict[Partition, int]:
        return {p: c for (p, _), c in self.entries.items()}

    def total(self) -> int:
        """係数の総和"""
        return sum(self.entries.values())

    def sorted_entries(self) -> List[Tuple[Partition, int, int]]:
        """(λ, k, 係数) を標準の項順序（k 昇順、λ の辞書式昇順）で返す"""
        return sorted(
            ((p, k, c) for (p, k), c in self.entries.items()),
            key=lambda item: (item[1], item[0].parts),
        )

    def to_polynomial(self) -> NormalPolynomial:
        """係数表から U_{n,d} を再構成"""
        return NormalPolynomial(
            {
                NormalMonomial.from_parts(self.n - p.length(), p, k): c
                for (p, k), c in self.entries.items()
            }
        )

    def to_model(self) -> CoeffTableModel:
        return CoeffTableModel(
            n=self.n,
            d=self.d,
            entries=[
                CoeffEntryModel(partition=p.to_list(), k=k, coeff=str(c))
                for p, k, c in self.sorted_entries()
            ],
        )

    def to_dict(self) -> Dict[str, Any]:
        """辞書形式に変換"""
        return self.to_model().model_dump()

    def to_json(self) -> bytes:
        """スキーマ検証済みのJSONバイト列"""
        data = self.to_dict()
        jsonschema.validate(data, COEFF_TABLE_SCHEMA)
        return orjson.dumps(data)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CoeffTable":
        """辞書から作成（スキーマ検証あり）"""
        jsonschema.validate(data, COEFF_TABLE_SCHEMA)
        model = CoeffTableModel.model_validate(data)
        return cls(
            n=model.n,
            d=model.d,
            entries={(Partition(tuple(e.partition)), e.k): int(e.coeff) for e in model.entries},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoeffTable):
            return NotImplemented
        return (self.n, self.d, dict(self.entries)) == (other.n, other.d, dict(other.entries))

    def __hash__(self) -> int:
        return hash((self.n, self.d, frozenset(self.entries.items())))
