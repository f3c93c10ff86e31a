"""
Model parameters: demand process, lead-time distribution, forecasting windows and costs
"""
import math
from enum import IntEnum
from typing import Any, Dict, List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.models.errors import ParameterError

PMF_TOLERANCE = 1e-12


class DemandParams(BaseModel):
    """Stationary AR(1) demand parameterized by its stationary standard deviation"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    mu_D: float
    rho: float
    sigma_D: float

    @field_validator("rho")
    @classmethod
    def _check_rho(cls, value: float) -> float:
        if not -1.0 < value < 1.0:
            raise ParameterError(f"rho must lie strictly inside (-1, 1), got {value}")
        return value

    @field_validator("sigma_D")
    @classmethod
    def _check_sigma(cls, value: float) -> float:
        if not value > 0.0:
            raise ParameterError(f"sigma_D must be positive, got {value}")
        return value

    @property
    def sigma_eps(self) -> float:
        """Innovation standard deviation sigma_D * sqrt(1 - rho^2)"""
        return self.sigma_D * math.sqrt(1.0 - self.rho ** 2)

    @classmethod
    def from_innovation(cls, mu_D: float, rho: float, sigma_eps: float) -> "DemandParams":
        """Build params from the innovation standard deviation instead"""
        if not -1.0 < rho < 1.0:
            raise ParameterError(f"rho must lie strictly inside (-1, 1), got {rho}")
        return cls(mu_D=mu_D, rho=rho, sigma_D=sigma_eps / math.sqrt(1.0 - rho ** 2))

    def at_rho(self, rho: float) -> "DemandParams":
        return DemandParams(mu_D=self.mu_D, rho=rho, sigma_D=self.sigma_D)


class LeadTimeDist(BaseModel):
    """
    Bounded discrete lead-time distribution on {0..L_plus}.

    Moments are recomputed from the pmf on every access.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    pmf: Dict[int, float]
    L_plus: int

    @model_validator(mode="before")
    @classmethod
    def _resolve_support(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data

        pmf = {int(k): float(v) for k, v in dict(data.get("pmf") or {}).items()}
        if not pmf:
            raise ParameterError("lead-time pmf is empty")
        if min(pmf) < 0:
            raise ParameterError("lead times must be non-negative integers")
        if any(p < 0.0 for p in pmf.values()):
            raise ParameterError("lead-time probabilities must be non-negative")

        total = math.fsum(pmf.values())
        if abs(total - 1.0) > PMF_TOLERANCE:
            raise ParameterError(f"lead-time pmf is not normalized (sums to {total!r})")

        L_plus = data.get("L_plus")
        if L_plus is None:
            L_plus = max(pmf)
            if pmf[L_plus] == 0.0:
                raise ParameterError(
                    "largest lead time has zero probability; declare L_plus explicitly"
                )
        elif max(pmf) > int(L_plus):
            raise ParameterError(f"pmf support exceeds L_plus={L_plus}")

        return {**data, "pmf": pmf, "L_plus": int(L_plus)}

    @property
    def probabilities(self) -> np.ndarray:
        """Dense probability vector indexed by lead time 0..L_plus"""
        dense = np.zeros(self.L_plus + 1)
        for i, p in self.pmf.items():
            dense[i] = p
        return dense

    @property
    def support(self) -> List[int]:
        return sorted(i for i, p in self.pmf.items() if p > 0.0)

    @property
    def mu_L(self) -> float:
        return math.fsum(i * p for i, p in self.pmf.items())

    @property
    def sigma_L2(self) -> float:
        mu = self.mu_L
        return math.fsum(p * (i - mu) ** 2 for i, p in self.pmf.items())


class StreamPurpose(IntEnum):
    """Independent sub-streams drawn from one seeded replication"""
    DEMAND = 0
    LEAD_TIME = 1


class SeededStream(BaseModel):
    """Seed plus replication index; identical pairs give identical series"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    seed: int = Field(ge=0, lt=2 ** 64)
    stream_id: int = Field(default=0, ge=0)

    def generator(self, purpose: StreamPurpose) -> np.random.Generator:
        sequence = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id, int(purpose)))
        return np.random.default_rng(sequence)


class ForecastConfig(BaseModel):
    """Moving-average windows and the lead-time observation lag"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(ge=1)
    m: int = Field(ge=1)
    L_plus: int = Field(ge=0)

    @property
    def history_start(self) -> int:
        """First period with a full forecast history"""
        return max(self.n, self.m + self.L_plus)

    @property
    def default_burn_in(self) -> int:
        return 10 * (self.n + self.m + self.L_plus) + 1000


class CostParams(BaseModel):
    """Unit holding and backlog costs per period"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    h: float = Field(ge=0.0)
    b: float = Field(ge=0.0)

    @model_validator(mode="after")
    def _check_total(self) -> "CostParams":
        if self.b + self.h <= 0.0:
            raise ParameterError("holding and backlog costs cannot both be zero")
        return self

    @property
    def critical_fractile(self) -> float:
        return self.b / (self.b + self.h)


class BmInputs(BaseModel):
    """Every symbol the closed-form bullwhip measure depends on"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    demand: DemandParams
    mu_L: float = Field(ge=0.0)
    sigma_L2: float = Field(ge=0.0)
    n: int = Field(ge=1)
    m: int = Field(ge=1)

    @classmethod
    def from_moments(
        cls,
        mu_D: float,
        sigma_D: float,
        rho: float,
        mu_L: float,
        sigma_L: float,
        n: int,
        m: int
    ) -> "BmInputs":
        return cls(
            demand=DemandParams(mu_D=mu_D, rho=rho, sigma_D=sigma_D),
            mu_L=mu_L,
            sigma_L2=sigma_L ** 2,
            n=n,
            m=m
        )

    @property
    def rho(self) -> float:
        return self.demand.rho

    @property
    def mu_D(self) -> float:
        return self.demand.mu_D

    @property
    def sigma_D(self) -> float:
        return self.demand.sigma_D

    def at_rho(self, rho: float) -> "BmInputs":
        return self.model_copy(update={"demand": self.demand.at_rho(rho)})

    def with_windows(self, n: int = None, m: int = None) -> "BmInputs":
        return BmInputs(
            demand=self.demand,
            mu_L=self.mu_L,
            sigma_L2=self.sigma_L2,
            n=self.n if n is None else n,
            m=self.m if m is None else m
        )
