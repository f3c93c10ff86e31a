from .policy import run_out_policy, orders_from_levels
from .inventory import (
    TNS_MIN_LENGTH,
    tns_empirical,
    realized_leadtime_demand,
    forecast_error_variance,
    count_crossovers,
    summarize_trace
)
from .export import trace_to_frame, write_trace_csv

__all__ = [
    'run_out_policy',
    'orders_from_levels',
    'TNS_MIN_LENGTH',
    'tns_empirical',
    'realized_leadtime_demand',
    'forecast_error_variance',
    'count_crossovers',
    'summarize_trace',
    'trace_to_frame',
    'write_trace_csv'
]
