"""
Simulation trace and order records
"""
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.errors import ParameterError
from src.models.params import ForecastConfig


class TraceColumns:
    """CSV column names for exported traces and curves"""

    # Trace columns
    T = "t"
    DEMAND = "demand"
    LEAD_TIME = "lead_time"
    DEMAND_FORECAST = "demand_forecast"
    LEADTIME_FORECAST = "leadtime_forecast"
    LTD_FORECAST = "ltd_forecast"
    ORDER = "order"
    RECEIPTS = "receipts"
    NET_STOCK = "net_stock"
    MEASURED = "measured"

    # Curve / validation columns
    RHO = "rho"
    N = "n"
    M = "m"
    BM_ANALYTIC = "bm_analytic"
    BM_APPENDIX = "bm_appendix"
    BM_MC = "bm_mc"
    BM_MC_SE = "bm_mc_se"
    Z_SCORE = "z_score"
    DUAL_PATH_REL_ERROR = "dual_path_rel_error"
    MC_REL_ERROR = "mc_rel_error"
    PASSED = "passed"

    TRACE = [T, DEMAND, LEAD_TIME, LTD_FORECAST, ORDER, RECEIPTS, NET_STOCK,
             DEMAND_FORECAST, LEADTIME_FORECAST, MEASURED]
    CURVE = [RHO, N, M, BM_ANALYTIC, BM_APPENDIX, BM_MC, BM_MC_SE, Z_SCORE]
    VALIDATION = CURVE + [DUAL_PATH_REL_ERROR, MC_REL_ERROR, PASSED]


class OrderRecord(BaseModel):
    """A placed order and the period it is received in"""

    model_config = ConfigDict(frozen=True)

    placed_at: int = Field(ge=0)
    quantity: float
    lead_time: int = Field(ge=0)
    arrives_at: int

    @model_validator(mode="after")
    def _check_arrival(self) -> "OrderRecord":
        if self.arrives_at != self.placed_at + self.lead_time:
            raise ParameterError("arrives_at must equal placed_at + lead_time")
        return self


@dataclass(frozen=True)
class SimTrace:
    """
    Per-period series of one order-up-to run, aligned on absolute period index.

    Forecast columns are NaN before cfg.history_start; orders placed before
    first_policy_period are pipeline seeds. Only periods flagged in
    `measured` enter statistics.
    """

    demand: np.ndarray
    lead_time: np.ndarray
    demand_forecast: np.ndarray
    leadtime_forecast: np.ndarray
    ltd_forecast: np.ndarray
    order: np.ndarray
    receipts: np.ndarray
    net_stock: np.ndarray
    measured: np.ndarray
    tns: float
    first_policy_period: int
    cfg: ForecastConfig

    def __len__(self) -> int:
        return len(self.demand)

    @property
    def arrives_at(self) -> np.ndarray:
        return np.arange(len(self)) + self.lead_time

    @property
    def first_measured_period(self) -> int:
        return int(np.argmax(self.measured))

    def window(self, series: np.ndarray) -> np.ndarray:
        """Restrict a per-period series to the measured periods"""
        return series[self.measured]

    def order_records(self, measured_only: bool = False) -> Iterator[OrderRecord]:
        periods = np.flatnonzero(self.measured) if measured_only else range(len(self))
        for t in periods:
            yield OrderRecord(
                placed_at=int(t),
                quantity=float(self.order[t]),
                lead_time=int(self.lead_time[t]),
                arrives_at=int(t + self.lead_time[t])
            )
