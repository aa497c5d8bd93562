"""
テスト共通のフィクスチャ
"""

import pytest

from src.config.engine_config import EnumerationConfig


@pytest.fixture
def limits() -> EnumerationConfig:
    """環境変数に左右されない既定の列挙上限"""
    return EnumerationConfig(read_environment=False)


@pytest.fixture
def tight_limits() -> EnumerationConfig:
    """上限超過を確認するための小さな列挙上限"""
    return EnumerationConfig(
        max_labeled_n=3,
        max_shape_n=3,
        max_items=100,
        max_recurrence_n=5,
        max_partitions=20,
        read_environment=False,
    )


@pytest.fixture(autouse=True)
def clear_limit_environment(monkeypatch):
    """列挙上限の環境変数を毎回取り除く"""
    for name in (
        "NORMORD_CAP_TREES",
        "NORMORD_CAP_SHAPES",
        "NORMORD_CAP_ITEMS",
        "NORMORD_MAX_RECURRENCE_N",
        "NORMORD_CAP_PARTITIONS",
    ):
        monkeypatch.delenv(name, raising=False)
