"""
計算エンジンの設定管理

YAMLの既定値と環境変数を統合して列挙上限・ログ設定を管理する
"""

import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from src.config.config_loader import get_enumeration_limits
from src.exceptions import ConfigurationError


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigurationError(f"{name}は整数である必要があります: {raw!r}") from e


@dataclass
class EnumerationConfig:
    """列挙の実行可能性上限

    Attributes:
        max_labeled_n: 部分対角写像・増加木の列挙を許す最大 n
        max_shape_n: 非ラベル木の列挙を許す最大 n
        max_items: 直積型列挙（PD_{n,d}, T_n^d, 部分全単射）の最大件数
        max_recurrence_n: 係数漸化式で扱う最大 n
        max_partitions: 係数表・合同式の検査で走査する分割の最大個数
    """

    max_labeled_n: int = field(default=9)
    max_shape_n: int = field(default=15)
    max_items: int = field(default=2_000_000)
    max_recurrence_n: int = field(default=200)
    max_partitions: int = field(default=100_000)
    read_environment: bool = field(default=True, repr=False)

    def __post_init__(self):
        """環境変数からの読み込みと設定の検証"""
        if self.read_environment:
            self.max_labeled_n = _env_int("NORMORD_CAP_TREES", self.max_labeled_n)
            self.max_shape_n = _env_int("NORMORD_CAP_SHAPES", self.max_shape_n)
            self.max_items = _env_int("NORMORD_CAP_ITEMS", self.max_items)
            self.max_recurrence_n = _env_int("NORMORD_MAX_RECURRENCE_N", self.max_recurrence_n)
            self.max_partitions = _env_int("NORMORD_CAP_PARTITIONS", self.max_partitions)

        for name in (
            "max_labeled_n",
            "max_shape_n",
            "max_items",
            "max_recurrence_n",
            "max_partitions",
        ):
            if getattr(self, name) <= 0:
                raise ConfigurationError(f"{name}は1以上である必要があります")

    @classmethod
    def from_yaml(cls, read_environment: bool = True) -> "EnumerationConfig":
        """config/enumeration_limits.yaml の既定値から作成"""
        limits = get_enumeration_limits()
        return cls(
            max_labeled_n=limits["labeled"]["max_labeled_n"],
            max_shape_n=limits["shapes"]["max_shape_n"],
            max_items=limits["products"]["max_items"],
            max_recurrence_n=limits["recurrence"]["max_recurrence_n"],
            max_partitions=limits["partitions"]["max_partitions"],
            read_environment=read_environment,
        )

    def to_dict(self) -> Dict[str, Any]:
        """辞書形式に変換"""
        return {
            "max_labeled_n": self.max_labeled_n,
            "max_shape_n": self.max_shape_n,
            "max_items": self.max_items,
            "max_recurrence_n": self.max_recurrence_n,
            "max_partitions": self.max_partitions,
        }


@dataclass
class AppConfig:
    """アプリケーション全体の設定クラス

    Attributes:
        enumeration: 列挙上限
        debug_mode: デバッグモード
        log_level: ログレベル
    """

    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig.from_yaml)
    debug_mode: bool = field(default=False)
    log_level: str = field(default="WARNING")

    def __post_init__(self):
        """環境変数から設定を読み込む"""
        default_debug = "true" if self.debug_mode else "false"
        self.debug_mode = os.getenv("DEBUG", default_debug).lower() == "true"
        self.log_level = os.getenv("LOG_LEVEL", self.log_level).upper()

        valid_log_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if self.log_level not in valid_log_levels:
            raise ConfigurationError(f"無効なログレベル: {self.log_level}")

    def to_dict(self) -> Dict[str, Any]:
        """辞書形式に変換"""
        return {
            "enumeration": self.enumeration.to_dict(),
            "debug_mode": self.debug_mode,
            "log_level": self.log_level,
        }


# グローバル設定インスタンス
_config: Optional[AppConfig] = None
_env_loaded = False


def get_config() -> AppConfig:
    """グローバル設定インスタンスを取得"""
    global _config, _env_loaded
    if not _env_loaded:
        load_dotenv()
        _env_loaded = True
    if _config is None:
        _config = AppConfig()
    return _config


def reload_config() -> AppConfig:
    """設定を再読み込み"""
    global _config, _env_loaded
    load_dotenv(override=True)
    _env_loaded = True
    _config = AppConfig()
    return _config


def resolve_enumeration_config(config: Optional[EnumerationConfig]) -> EnumerationConfig:
    """明示指定がなければグローバル設定の列挙上限を返す"""
    return config if config is not None else get_config().enumeration
