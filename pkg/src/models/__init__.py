from .errors import (
    BullwhipError,
    ParameterError,
    EmptySeriesError,
    OutOfHistoryError,
    ConfigurationError,
    DomainError,
    MisuseError,
    ConfigError
)
from .params import (
    DemandParams,
    LeadTimeDist,
    StreamPurpose,
    SeededStream,
    ForecastConfig,
    CostParams,
    BmInputs
)
from .results import (
    BmMethod,
    BmResult,
    AppendixTerms,
    StationaryPointReport,
    StationaryPoint,
    McSettings,
    McEstimate,
    SweepSpec,
    BmCurvePoint,
    ValidationRow,
    ValidationReport,
    TraceSummary
)
from .trace import TraceColumns, OrderRecord, SimTrace

__all__ = [
    'BullwhipError', 'ParameterError', 'EmptySeriesError', 'OutOfHistoryError',
    'ConfigurationError', 'DomainError', 'MisuseError', 'ConfigError',
    'DemandParams', 'LeadTimeDist', 'StreamPurpose', 'SeededStream',
    'ForecastConfig', 'CostParams', 'BmInputs',
    'BmMethod', 'BmResult', 'AppendixTerms', 'StationaryPointReport', 'StationaryPoint',
    'McSettings', 'McEstimate', 'SweepSpec', 'BmCurvePoint', 'ValidationRow',
    'ValidationReport', 'TraceSummary',
    'TraceColumns', 'OrderRecord', 'SimTrace'
]
