"""
Stationary AR(1) demand generation
"""
import logging
import math
from typing import Callable

import numpy as np
from scipy.signal import lfilter

from src.models import DemandParams, EmptySeriesError, ParameterError, SeededStream, StreamPurpose

logger = logging.getLogger(__name__)

DEFAULT_WARMUP = 1000

# (rng, size, scale) -> zero-mean innovations with standard deviation `scale`
InnovationSampler = Callable[[np.random.Generator, int, float], np.ndarray]


def gaussian_innovations(rng: np.random.Generator, size: int, scale: float) -> np.ndarray:
    return rng.normal(0.0, scale, size)


def uniform_innovations(rng: np.random.Generator, size: int, scale: float) -> np.ndarray:
    """Uniform innovations with the same variance as N(0, scale^2)"""
    half_width = scale * math.sqrt(3.0)
    return rng.uniform(-half_width, half_width, size)


def gen_demand(
    params: DemandParams,
    T: int,
    stream: SeededStream,
    warmup: int = DEFAULT_WARMUP,
    innovations: InnovationSampler = gaussian_innovations
) -> np.ndarray:
    """
    Generate T periods of D_t = mu_D + rho (D_{t-1} - mu_D) + eps_t.

    D_0 is drawn from the stationary law N(mu_D, sigma_D^2) and `warmup`
    steps are discarded before the first emitted period. Draws are not
    truncated, so negative demands can occur.
    """
    if T < 1:
        raise EmptySeriesError(f"demand series length must be at least 1, got {T}")
    if warmup < 0:
        raise ParameterError(f"warmup must be non-negative, got {warmup}")

    rng = stream.generator(StreamPurpose.DEMAND)

    start = rng.normal(0.0, params.sigma_D)
    eps = innovations(rng, warmup + T, params.sigma_eps)

    # x_t = rho x_{t-1} + eps_t on deviations from the mean
    deviations, _ = lfilter([1.0], [1.0, -params.rho], eps, zi=[params.rho * start])

    logger.debug(f"Generated {T} AR(1) demands (rho={params.rho}, warmup={warmup})")
    return params.mu_D + deviations[warmup:]
