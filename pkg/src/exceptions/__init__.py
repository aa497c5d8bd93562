"""カスタム例外クラス定義"""


class NormalOrderingError(Exception):
    """ライブラリ全体のベース例外"""
    pass


# 入力・前提条件関連のエラー
class DomainError(NormalOrderingError):
    """前提条件（n, d, k, p などの範囲）を満たさない入力の例外"""
    pass


class UnsupportedMethodError(DomainError):
    """計算方法と引数の組み合わせがサポートされていない場合の例外"""
    pass


class NonPrimeError(DomainError):
    """素数が要求される箇所に合成数が渡された場合の例外"""
    pass


class InvalidPartitionError(DomainError):
    """分割が広義単調減少な正整数列でない場合の例外"""
    pass


class EnumerationLimitError(NormalOrderingError):
    """列挙件数が設定上限を超える場合の例外

    Attributes:
        kind: 列挙対象（"subdiagonal_maps" など）
        requested: 要求されたパラメータ
        limit: 設定上限
        count: 生成されるはずだった件数
    """

    def __init__(self, kind: str, requested: int, limit: int, count: int):
        self.kind = kind
        self.requested = requested
        self.limit = limit
        self.count = count
        super().__init__(
            f"{kind}: {requested} exceeds cap {limit} (would generate {count} items)"
        )


# 計算結果の整合性に関するエラー
class IntegralityError(NormalOrderingError):
    """有理数公式の結果が整数にならなかった場合の例外（実装バグの兆候）"""
    pass


class FormulaMismatchError(NormalOrderingError):
    """一致すべき二つの計算方法が食い違った場合の例外"""
    pass


class CorruptedPolynomialError(NormalOrderingError):
    """多項式の項が標準分解と矛盾する場合の例外"""
    pass


class IdentityViolationError(NormalOrderingError):
    """成立すべき恒等式が破れた場合の例外"""
    pass


class ConfigurationError(Exception):
    """設定関連のエラー"""
    pass
