"""
Error hierarchy shared by every bullwhip module
"""


class BullwhipError(Exception):
    """Base class for all toolkit errors"""


class ParameterError(BullwhipError):
    """Model parameters violate their invariants"""


class EmptySeriesError(BullwhipError):
    """A generator was asked for zero periods"""


class OutOfHistoryError(BullwhipError):
    """A forecast needs observations the history does not hold"""


class ConfigurationError(BullwhipError):
    """Simulation or experiment inputs are inconsistent with each other"""


class DomainError(BullwhipError):
    """An analytic formula was evaluated outside its domain"""


class MisuseError(BullwhipError):
    """A special-case formula was called outside its special case"""


class ConfigError(BullwhipError):
    """A run configuration failed to load or validate"""
