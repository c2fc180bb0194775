"""Exception classes for recoverybound."""


class RecoveryBoundError(Exception):
    """Base exception"""


class DimensionError(RecoveryBoundError):
    """维度不匹配或超出上限"""


class NotCPTPError(RecoveryBoundError):
    """映射不满足 CPTP 条件"""


class StateError(RecoveryBoundError):
    """输入不是合法的密度矩阵"""


class DomainError(RecoveryBoundError):
    """参数超出定义域"""


class QFIDivergenceError(DomainError):
    """量子 Fisher 信息在端点发散"""


class ChannelFormatError(RecoveryBoundError):
    """信道 JSON 格式错误"""


class ConfigError(RecoveryBoundError):
    """配置错误"""
