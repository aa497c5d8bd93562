"""
ワークフローパッケージ

名前付き検証スイートの実行
"""

from src.workflows.verification_workflow import SUITE_NAMES, SuiteResult, run_verification

__all__ = ["SUITE_NAMES", "SuiteResult", "run_verification"]
