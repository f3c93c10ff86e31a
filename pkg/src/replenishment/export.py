"""
Trace export
"""
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np
import pandas as pd

from src.models import SimTrace, TraceColumns
from src.utils.csv_writer import write_frame


def trace_to_frame(trace: SimTrace) -> pd.DataFrame:
    """One row per period, columns in TraceColumns.TRACE order"""
    columns = {
        TraceColumns.T: np.arange(len(trace)),
        TraceColumns.DEMAND: trace.demand,
        TraceColumns.LEAD_TIME: trace.lead_time,
        TraceColumns.LTD_FORECAST: trace.ltd_forecast,
        TraceColumns.ORDER: trace.order,
        TraceColumns.RECEIPTS: trace.receipts,
        TraceColumns.NET_STOCK: trace.net_stock,
        TraceColumns.DEMAND_FORECAST: trace.demand_forecast,
        TraceColumns.LEADTIME_FORECAST: trace.leadtime_forecast,
        TraceColumns.MEASURED: trace.measured.astype(int),
    }
    return pd.DataFrame(columns, columns=TraceColumns.TRACE)


def write_trace_csv(
    trace: SimTrace,
    path: Union[str, Path],
    header: Optional[Iterable[str]] = None
) -> Path:
    return write_frame(trace_to_frame(trace), path, header)
