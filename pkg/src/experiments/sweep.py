"""
Bullwhip curves over the demand autocorrelation rho
"""
import logging
import math
from typing import List, Optional, Sequence

import numpy as np

from src.analytics import bm_analytic, var_q_appendix
from src.experiments.monte_carlo import estimate_from_settings
from src.models import BmCurvePoint, BmInputs, DemandParams, LeadTimeDist, ParameterError, SweepSpec
from src.processes import make_two_point_dist

logger = logging.getLogger(__name__)

DEFAULT_GRID_POINTS = 201
DEFAULT_GRID_BOUND = 0.99

FLATNESS_COMPONENTS = ("total", "leadtime", "demand")


def default_rho_grid(points: int = DEFAULT_GRID_POINTS, bound: float = DEFAULT_GRID_BOUND) -> List[float]:
    return [float(rho) for rho in np.linspace(-bound, bound, points)]


def inputs_at(base: BmInputs, rho: float, hold_sigma_D_constant: bool = True) -> BmInputs:
    """
    Substitute rho into `base`.

    Holding sigma_D fixed lets the innovation variance shrink as |rho| grows;
    otherwise base.sigma_D is read as the innovation standard deviation.
    """
    if hold_sigma_D_constant:
        return base.at_rho(rho)
    demand = DemandParams.from_innovation(base.mu_D, rho, base.sigma_D)
    return base.model_copy(update={"demand": demand})


def sweep_rho(spec: SweepSpec) -> List[BmCurvePoint]:
    """Analytic, appendix and optional Monte Carlo values at every grid point, sorted by rho"""
    dist: Optional[LeadTimeDist] = None
    if spec.mc is not None:
        dist = spec.leadtime_dist or make_two_point_dist(spec.base.mu_L, math.sqrt(spec.base.sigma_L2))

    points = []
    for index, rho in enumerate(spec.rho_grid):
        inputs = inputs_at(spec.base, rho, spec.hold_sigma_D_constant)
        analytic = bm_analytic(inputs)

        bm_mc = bm_mc_se = None
        if spec.mc is not None:
            estimate = estimate_from_settings(
                inputs, dist, spec.mc, stream_offset=index * spec.mc.replications
            )
            bm_mc, bm_mc_se = estimate.bm_mc, estimate.se

        points.append(BmCurvePoint(
            rho=rho,
            n=inputs.n,
            m=inputs.m,
            bm_analytic=analytic.value,
            bm_appendix=var_q_appendix(inputs) / inputs.sigma_D ** 2,
            components=analytic.components,
            bm_mc=bm_mc,
            bm_mc_se=bm_mc_se
        ))

    points.sort(key=lambda point: point.rho)
    logger.info(
        f"Swept {len(points)} rho values for n={spec.base.n}, m={spec.base.m}"
        f"{' with Monte Carlo' if spec.mc else ''}"
    )
    return points


def _curve_values(points: Sequence[BmCurvePoint], component: str) -> np.ndarray:
    if component == "total":
        return np.array([p.bm_analytic for p in points])
    if component == "leadtime":
        return np.array([p.components[0] + p.components[1] for p in points])
    return np.array([p.components[2] for p in points])


def curve_flatness(
    points: Sequence[BmCurvePoint],
    lo: float = -0.8,
    hi: float = 0.8,
    component: str = "total"
) -> float:
    """
    (max - min) / mean over the points with lo <= rho <= hi.

    The spread of `component` is taken relative to the mean of the whole
    curve, so summands can be compared against the total.
    """
    if component not in FLATNESS_COMPONENTS:
        raise ParameterError(f"component must be one of {FLATNESS_COMPONENTS}, got '{component}'")
    window = [p for p in points if lo <= p.rho <= hi]
    if not window:
        raise ParameterError(f"no curve points inside [{lo}, {hi}]")

    values = _curve_values(window, component)
    total_mean = float(np.mean(_curve_values(window, "total")))
    return float((values.max() - values.min()) / total_mean)
