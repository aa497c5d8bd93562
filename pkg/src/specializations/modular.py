"""
係数の素数 p を法とする合同式の検証

- n = p^m のとき、|λ| ≠ n−1 かつ p ∤ |λ| なら c^n_λ ≡ 0 (mod p)
- d = p^e のとき、c^{n,d}_{d·λ} ≡ c^n_λ、d·λ の形でない μ では c^{n,d}_μ ≡ 0 (mod p)

違反は例外にせず ModularReport に列挙する。
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from sympy import isprime

from src.algorithms.coefficient_formulas import coeff_binomial, coeff_recurrence
from src.algorithms.universal_polynomials import candidate_partitions
from src.config.engine_config import EnumerationConfig
from src.data.partition import Partition
from src.exceptions import DomainError, NonPrimeError
from src.specializations.stirling import stirling_first, stirling_second

logger = logging.getLogger(__name__)


@dataclass
class ModularViolation:
    """合同式を満たさなかった係数"""

    partition: Partition
    value: int
    expected_residue: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "partition": self.partition.to_list(),
            "value": str(self.value),
            "expected_residue": self.expected_residue,
        }


@dataclass
class ModularReport:
    """合同式の検証結果

    Attributes:
        p: 素数
        parameters: 検証したパラメータ（n, m, d, e など）
        checked: 検査した係数の個数
        violations: 違反の一覧
    """

    p: int
    parameters: Dict[str, int]
    checked: int = 0
    violations: List[ModularViolation] = field(default_factory=list)

    @property
    def is_clean(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "parameters": dict(self.parameters),
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
        }


def _require_prime(p: int) -> None:
    if p < 2 or not isprime(p):
        raise NonPrimeError(f"p は素数である必要があります: {p}")


def verify_modp(p: int, m: int, config: Optional[EnumerationConfig] = None) -> ModularReport:
    """n = p^m の係数 c^n_λ の消滅を検証

    Args:
        p: 素数
        m: 1 以上の指数
        config: 列挙上限（漸化式の max_recurrence_n と分割数の max_partitions）

    Raises:
        NonPrimeError: p が素数でない場合
        DomainError: m < 1 の場合
        EnumerationLimitError: 検査する分割が max_partitions を超える場合
    """
    _require_prime(p)
    if m < 1:
        raise DomainError(f"m は 1 以上である必要があります: {m}")
    n = p**m
    report = ModularReport(p=p, parameters={"m": m, "n": n})
    for partition in candidate_partitions(n, 1, config):
        size = partition.size()
        if size == n - 1 or size % p == 0:
            continue
        value = coeff_recurrence(n, partition, config)
        report.checked += 1
        if value % p != 0:
            report.violations.append(ModularViolation(partition, value, 0))

    logger.info(
        f"verify_modp(p={p}, m={m}): checked={report.checked}, "
        f"violations={len(report.violations)}"
    )
    return report


def _divide_parts(partition: Partition, d: int) -> Optional[Partition]:
    """μ = d·λ なら λ、そうでなければ None"""
    if any(part % d for part in partition.parts):
        return None
    return Partition(tuple(part // d for part in partition.parts))


def verify_modp_d(
    p: int, e: int, n: int, config: Optional[EnumerationConfig] = None
) -> ModularReport:
    """d = p^e の係数 c^{n,d}_μ を c^n_λ と法 p で比較

    Args:
        p: 素数
        e: 1 以上の指数
        n: 1 以上

    Raises:
        NonPrimeError: p が素数でない場合
        DomainError: e < 1 または n < 1 の場合
    """
    _require_prime(p)
    if e < 1 or n < 1:
        raise DomainError(f"e, n は 1 以上である必要があります: e={e}, n={n}")
    d = p**e
    report = ModularReport(p=p, parameters={"e": e, "d": d, "n": n})
    for mu in candidate_partitions(n, d, config):
        value = coeff_binomial(n, d, mu)
        base = _divide_parts(mu, d)
        expected = coeff_recurrence(n, base, config) % p if base is not None else 0
        report.checked += 1
        if value % p != expected:
            report.violations.append(ModularViolation(mu, value, expected))

    logger.info(
        f"verify_modp_d(p={p}, d={d}, n={n}): checked={report.checked}, "
        f"violations={len(report.violations)}"
    )
    return report


def stirling_residues(p: int) -> List[Tuple[int, int, int]]:
    """(k, c(p,k) mod p, S{p,k} mod p) の一覧（1 < k < p はすべて 0 になる）"""
    _require_prime(p)
    return [(k, stirling_first(p, k) % p, stirling_second(p, k) % p) for k in range(1, p + 1)]
