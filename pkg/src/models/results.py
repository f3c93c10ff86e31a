"""
Result and report models
"""
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.errors import ParameterError
from src.models.params import BmInputs, LeadTimeDist


class BmMethod(Enum):
    """Which expression produced a bullwhip value"""
    CLOSED_FORM = "closed_form"
    LIMIT_RHO_1 = "limit_rho1"
    LIMIT_RHO_MINUS_1 = "limit_rho-1"


class BmResult(BaseModel):
    """
    Closed-form bullwhip measure with its three summands.

    components = (lead-time variability / forecast interaction,
                  lead-time forecasting, demand forecasting)
    """

    model_config = ConfigDict(frozen=True)

    value: float
    components: Tuple[float, float, float]
    method: BmMethod = BmMethod.CLOSED_FORM

    @property
    def leadtime_share(self) -> float:
        """Part of the amplification caused by lead-time forecasting"""
        return self.components[0] + self.components[1]


class AppendixTerms(BaseModel):
    """Law-of-total-variance pieces of Var q"""

    model_config = ConfigDict(frozen=True)

    var_E_q_given_L: float
    E_C1_sq: float
    sum_E_C2k_sq: float
    var_q: float
    sigma_D2: float
    sigma_eps2: float


class StationaryPointReport(BaseModel):
    """Sufficient conditions for interior stationary points in rho"""

    model_config = ConfigDict(frozen=True)

    positive_extremum_bound: float
    negative_extremum_bound: float
    positive_region_sufficient: bool
    negative_region_sufficient: bool
    constant_leadtime_iid_exceeds_rho1: Optional[bool] = None


class StationaryPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    rho: float
    kind: str
    bm: float


class McSettings(BaseModel):
    """Monte Carlo effort"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    T: int = Field(default=200_000, ge=10_000)
    replications: int = Field(default=16, ge=2)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    workers: int = Field(default=1, ge=1)
    burn_in: Optional[int] = Field(default=None, ge=0)


class McEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    bm_mc: float
    se: float
    replications: int
    per_replication: Tuple[float, ...]
    mean_order: float


class SweepSpec(BaseModel):
    """
    A rho sweep around fixed base parameters.

    base.demand.rho is ignored; every grid point substitutes its own rho.
    With hold_sigma_D_constant=False the innovation standard deviation is
    held at base.sigma_D instead.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    rho_grid: List[float]
    base: BmInputs
    mc: Optional[McSettings] = None
    hold_sigma_D_constant: bool = True
    leadtime_dist: Optional[LeadTimeDist] = None

    @model_validator(mode="after")
    def _check_grid(self) -> "SweepSpec":
        if not self.rho_grid:
            raise ParameterError("rho grid is empty")
        if any(not -1.0 < rho < 1.0 for rho in self.rho_grid):
            raise ParameterError("rho grid must lie strictly inside (-1, 1)")
        return self


class BmCurvePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    rho: float
    n: int
    m: int
    bm_analytic: float
    bm_appendix: float
    components: Tuple[float, float, float]
    bm_mc: Optional[float] = None
    bm_mc_se: Optional[float] = None

    @model_validator(mode="after")
    def _check_se(self) -> "BmCurvePoint":
        if self.bm_mc is not None and not (self.bm_mc_se is not None and self.bm_mc_se > 0.0):
            raise ParameterError("a Monte Carlo estimate needs a positive standard error")
        return self

    @property
    def z_score(self) -> Optional[float]:
        if self.bm_mc is None:
            return None
        return (self.bm_mc - self.bm_analytic) / self.bm_mc_se


class ValidationRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    rho: float
    n: int
    m: int
    bm_analytic: float
    bm_appendix: float
    dual_path_rel_error: float
    bm_mc: Optional[float] = None
    bm_mc_se: Optional[float] = None
    z_score: Optional[float] = None
    mc_rel_error: Optional[float] = None
    passed: bool


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[ValidationRow]
    z_threshold: float
    dual_path_tolerance: float

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> List[ValidationRow]:
        return [row for row in self.rows if not row.passed]


class TraceSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    periods: int
    mean_order: float
    var_order: float
    var_demand: float
    bm_estimate: float
    net_stock_variance_ratio: float
    crossovers: int
    forecast_error_variance: float
    tns: Optional[float] = None
