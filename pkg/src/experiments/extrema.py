"""
Numeric location of interior stationary points of BM(rho)
"""
import logging
from typing import List, Tuple

import numpy as np
from scipy.optimize import bisect

from src.analytics import bm_analytic
from src.models import BmInputs, DomainError, StationaryPoint

logger = logging.getLogger(__name__)

GRID_STEP = 1e-3
DIFF_STEP = 1e-5
CURVATURE_STEP = 1e-4
BISECT_XTOL = 1e-7


def _bm(inputs: BmInputs, rho: float) -> float:
    return bm_analytic(inputs.at_rho(rho)).value


def _slope(inputs: BmInputs, rho: float) -> float:
    return (_bm(inputs, rho + DIFF_STEP) - _bm(inputs, rho - DIFF_STEP)) / (2 * DIFF_STEP)


def _scan_bounds(region: Tuple[float, float]) -> Tuple[float, float]:
    lo, hi = region
    if not -1.0 <= lo < hi <= 1.0:
        raise DomainError(f"region must satisfy -1 <= lo < hi <= 1, got ({lo}, {hi})")
    return max(lo, -1.0 + GRID_STEP), min(hi, 1.0 - GRID_STEP)


def find_stationary_points(inputs: BmInputs, region: Tuple[float, float] = (-1.0, 1.0)) -> List[StationaryPoint]:
    """
    Sign changes of a central-difference dBM/drho on a 1e-3 grid, refined by bisection.

    Grid ends stay 1e-3 inside +-1. Each root is classified by the sign of
    the second difference of BM.
    """
    lo, hi = _scan_bounds(region)
    if inputs.n == 1:
        # linear in rho
        return []

    grid = np.linspace(lo, hi, int(round((hi - lo) / GRID_STEP)) + 1)
    slopes = np.array([_slope(inputs, rho) for rho in grid])

    points = []
    for i in range(len(grid) - 1):
        left, right = slopes[i], slopes[i + 1]
        if left == 0.0:
            root = float(grid[i])
        elif left * right < 0.0:
            root = bisect(lambda rho: _slope(inputs, rho), grid[i], grid[i + 1], xtol=BISECT_XTOL)
        else:
            continue

        bm = _bm(inputs, root)
        curvature = _bm(inputs, root + CURVATURE_STEP) - 2 * bm + _bm(inputs, root - CURVATURE_STEP)
        kind = "max" if curvature < 0 else "min"
        points.append(StationaryPoint(rho=float(root), kind=kind, bm=bm))

    logger.info(
        f"Found {len(points)} stationary points in ({lo:g}, {hi:g}) for n={inputs.n}, m={inputs.m}"
    )
    return points
