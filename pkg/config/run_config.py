"""
Run configuration: preset <- JSON file <- command-line flags
"""
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from config.presets import (
    PRESET_MAX_MC_REL_ERROR,
    PRESET_NAMES,
    PRESET_WINDOWS,
    SCENARIO_PARAMETERS,
    covers_all_scenarios,
    preset_windows
)
from config.settings import default_seed, default_workers, output_dir
from src.analytics import check_rho
from src.models import BmInputs, ConfigError, CostParams, ForecastConfig, LeadTimeDist, McSettings
from src.processes import make_explicit_dist, make_two_point_dist

logger = logging.getLogger(__name__)


class RunConfig(BaseModel):
    """Everything a subcommand needs; unknown keys are rejected"""

    model_config = ConfigDict(extra="forbid")

    preset: Optional[str] = None

    # demand
    mu_D: float = SCENARIO_PARAMETERS["mu_D"]
    sigma_D: float = SCENARIO_PARAMETERS["sigma_D"]
    rho: float = 0.0
    limit: Optional[Literal["rho1", "rho-1"]] = None

    # lead times: explicit pmf, or two-point moments
    mu_L: float = SCENARIO_PARAMETERS["mu_L"]
    sigma_L: float = Field(default=SCENARIO_PARAMETERS["sigma_L"], ge=0.0)
    leadtime_pmf: Optional[Dict[int, float]] = None
    L_plus: Optional[int] = Field(default=None, ge=0)

    # forecasting windows
    n: int = Field(default=5, ge=1)
    m: int = Field(default=2, ge=1)

    # sweeps and extrema
    rho_grid: Optional[List[float]] = None
    grid_points: int = Field(default=201, ge=2)
    hold_sigma_D_constant: bool = True
    region: Tuple[float, float] = (-1.0, 1.0)

    # simulation
    monte_carlo: bool = False
    T: int = Field(default=200_000, ge=10_000)
    replications: int = Field(default=16, ge=2)
    workers: int = Field(default_factory=default_workers, ge=1)
    burn_in: Optional[int] = Field(default=None, ge=0)
    h: Optional[float] = Field(default=None, ge=0.0)
    b: Optional[float] = Field(default=None, ge=0.0)

    # validation
    z_threshold: float = Field(default=4.0, gt=0.0)
    max_mc_rel_error: Optional[float] = Field(default=None, gt=0.0)

    seed: int = Field(default_factory=default_seed, ge=0, lt=2 ** 64)
    output: Optional[str] = None
    output_dir: str = Field(default_factory=output_dir)

    def leadtime_dist(self) -> LeadTimeDist:
        if self.leadtime_pmf is not None:
            return make_explicit_dist(self.leadtime_pmf, self.L_plus)
        return make_two_point_dist(self.mu_L, self.sigma_L)

    def leadtime_moments(self) -> Tuple[float, float]:
        """(mu_L, sigma_L^2); an explicit pmf takes precedence over mu_L, sigma_L"""
        if self.leadtime_pmf is not None:
            dist = self.leadtime_dist()
            return dist.mu_L, dist.sigma_L2
        return self.mu_L, self.sigma_L ** 2

    def bm_inputs(self, n: Optional[int] = None, m: Optional[int] = None, rho: Optional[float] = None) -> BmInputs:
        rho = check_rho(self.rho if rho is None else rho)
        mu_L, sigma_L2 = self.leadtime_moments()
        return BmInputs.from_moments(
            mu_D=self.mu_D,
            sigma_D=self.sigma_D,
            rho=rho,
            mu_L=mu_L,
            sigma_L=math.sqrt(sigma_L2),
            n=self.n if n is None else n,
            m=self.m if m is None else m
        )

    def windows(self) -> List[Tuple[int, int]]:
        """(n, m) scenarios the run covers"""
        if covers_all_scenarios(self.preset):
            return preset_windows(self.preset)
        return [(self.n, self.m)]

    def scenarios(self, rho: Optional[float] = None) -> List[BmInputs]:
        return [self.bm_inputs(n=n, m=m, rho=rho) for n, m in self.windows()]

    def scenario_label(self, n: int, m: int) -> str:
        for name, window in PRESET_WINDOWS.items():
            if window == (n, m) and (self.preset == name or covers_all_scenarios(self.preset)):
                return name
        return f"n{n}_m{m}"

    def forecast_config(self) -> ForecastConfig:
        return ForecastConfig(n=self.n, m=self.m, L_plus=self.leadtime_dist().L_plus)

    def mc_settings(self) -> McSettings:
        return McSettings(
            T=self.T,
            replications=self.replications,
            seed=self.seed,
            workers=self.workers,
            burn_in=self.burn_in
        )

    def costs(self) -> Optional[CostParams]:
        if self.h is None and self.b is None:
            return None
        return CostParams(h=self.h or 0.0, b=self.b or 0.0)

    def header_lines(self) -> List[str]:
        """Resolved config for CSV headers"""
        return [f"config: {self.model_dump_json()}"]


def _preset_values(name: Optional[str]) -> Dict[str, Any]:
    if name is None:
        return {}
    if name not in PRESET_NAMES:
        raise ConfigError(f"unknown preset '{name}', expected one of {PRESET_NAMES}")
    values = {**SCENARIO_PARAMETERS, "preset": name, "max_mc_rel_error": PRESET_MAX_MC_REL_ERROR}
    if name in PRESET_WINDOWS:
        values["n"], values["m"] = PRESET_WINDOWS[name]
    return values


def _read_file(path: Optional[str]) -> Dict[str, Any]:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    return data


def load_run_config(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """
    Merge preset values, then the JSON file, then non-None overrides.

    Field-level problems are raised as ConfigError carrying pydantic's messages.
    """
    file_values = _read_file(path)
    flag_values = {key: value for key, value in (overrides or {}).items() if value is not None}

    preset = flag_values.get("preset", file_values.get("preset"))
    merged = {**_preset_values(preset), **file_values, **flag_values}

    try:
        config = RunConfig.model_validate(merged)
    except ValidationError as e:
        raise ConfigError(f"invalid run configuration: {e}") from e

    logger.debug(f"Resolved run configuration: {config.model_dump_json()}")
    return config


def dump_run_config(config: RunConfig, path: str) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(config.model_dump_json(indent=2))
    return target
