"""設定ファイルの読み込みユーティリティ"""

import logging
import os
from typing import Any, Dict

import jsonschema
import yaml

from src.exceptions import ConfigurationError

logger = logging.getLogger(__name__)
_config_cache: Dict[str, Dict[str, Any]] = {}

_POSITIVE_INT = {"type": "integer", "minimum": 1}

# 設定スキーマ
CONFIG_SCHEMAS: Dict[str, Dict[str, Any]] = {
    "enumeration_limits": {
        "type": "object",
        "properties": {
            "labeled": {
                "type": "object",
                "properties": {"max_labeled_n": _POSITIVE_INT},
                "required": ["max_labeled_n"],
            },
            "shapes": {
                "type": "object",
                "properties": {"max_shape_n": _POSITIVE_INT},
                "required": ["max_shape_n"],
            },
            "products": {
                "type": "object",
                "properties": {"max_items": _POSITIVE_INT},
                "required": ["max_items"],
            },
            "recurrence": {
                "type": "object",
                "properties": {"max_recurrence_n": _POSITIVE_INT},
                "required": ["max_recurrence_n"],
            },
            "partitions": {
                "type": "object",
                "properties": {"max_partitions": _POSITIVE_INT},
                "required": ["max_partitions"],
            },
        },
        "required": ["labeled", "shapes", "products", "recurrence", "partitions"],
    }
}


def _config_dir() -> str:
    return os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(__file__))), "config")


def load_config(config_name: str, validate: bool = True) -> Dict[str, Any]:
    """YAMLファイルから設定を読み込む

    Args:
        config_name: 設定ファイル名（拡張子なし）
        validate: スキーマ検証を行うかどうか

    Returns:
        設定の辞書

    Raises:
        ConfigurationError: ファイルが存在しない、YAML解析失敗、スキーマ検証失敗の場合
    """
    if config_name in _config_cache:
        return _config_cache[config_name]

    config_path = os.path.join(_config_dir(), f"{config_name}.yaml")

    if not os.path.exists(config_path):
        raise ConfigurationError(f"Config file not found: {config_path}")

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f)
    except yaml.YAMLError as e:
        logger.error(f"YAML parsing error in {config_path}: {e}")
        raise ConfigurationError(f"YAML parsing error in {config_path}") from e

    if validate and not validate_config(config_name, config):
        raise ConfigurationError(f"Invalid config {config_name}: {config_path}")

    _config_cache[config_name] = config
    return config


def validate_config(config_name: str, config_data: Dict[str, Any]) -> bool:
    """設定データの検証

    Args:
        config_name: 設定名
        config_data: 検証する設定データ

    Returns:
        検証結果（True: 成功, False: 失敗）
    """
    if config_name not in CONFIG_SCHEMAS:
        logger.warning(f"No schema defined for config: {config_name}")
        return True

    try:
        jsonschema.validate(config_data, CONFIG_SCHEMAS[config_name])
        logger.debug(f"Config validation successful for {config_name}")
        return True
    except jsonschema.ValidationError as e:
        logger.error(f"Config validation failed for {config_name}: {e.message}")
        return False


def get_enumeration_limits() -> Dict[str, Any]:
    """列挙上限の設定を取得"""
    return load_config("enumeration_limits")
