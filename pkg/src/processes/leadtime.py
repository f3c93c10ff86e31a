"""
Bounded discrete lead-time distributions and iid lead-time generation
"""
import logging
from typing import Dict, Optional

import numpy as np

from src.models import EmptySeriesError, LeadTimeDist, ParameterError, SeededStream, StreamPurpose

logger = logging.getLogger(__name__)

INTEGER_TOLERANCE = 1e-9


def make_explicit_dist(pmf: Dict[int, float], L_plus: Optional[int] = None) -> LeadTimeDist:
    return LeadTimeDist(pmf=pmf, L_plus=L_plus)


def make_two_point_dist(mu_L: float, sigma_L: float) -> LeadTimeDist:
    """
    Moment-matched pmf {mu_L - sigma_L: 0.5, mu_L + sigma_L: 0.5}.

    Any pmf with the same mean and variance yields the same analytic
    bullwhip measure, so this is the default for simulation.
    """
    if sigma_L < 0:
        raise ParameterError(f"sigma_L must be non-negative, got {sigma_L}")

    low, high = mu_L - sigma_L, mu_L + sigma_L
    if low < 0:
        raise ParameterError(
            f"two-point support {low:g} is negative; lead times must be non-negative"
        )
    for point in (low, high):
        if abs(point - round(point)) > INTEGER_TOLERANCE:
            raise ParameterError(
                f"two-point support {point:g} is not an integer; supply an explicit pmf instead"
            )

    if sigma_L == 0:
        return LeadTimeDist(pmf={int(round(mu_L)): 1.0}, L_plus=None)
    return LeadTimeDist(pmf={int(round(low)): 0.5, int(round(high)): 0.5}, L_plus=None)


def gen_leadtimes(dist: LeadTimeDist, T: int, stream: SeededStream) -> np.ndarray:
    """Draw T iid lead times by inverse CDF over the explicit pmf"""
    if T < 1:
        raise EmptySeriesError(f"lead-time series length must be at least 1, got {T}")

    rng = stream.generator(StreamPurpose.LEAD_TIME)

    cdf = np.cumsum(dist.probabilities)
    draws = np.searchsorted(cdf, rng.random(T), side="right")
    # guards u above a cdf that sums to 1 - ulp
    lead_times = np.minimum(draws, dist.support[-1]).astype(np.int64)

    logger.debug(f"Generated {T} lead times on support {dist.support}")
    return lead_times
