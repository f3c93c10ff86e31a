"""
Second computation path for Var q: the law-of-total-variance decomposition over
the lead-time observations (L_{t-1-L+}, ..., L_{t-1-m-L+}) that enter an order.

Var q = Var E(q | L) + sigma_D^2 E C1^2 + sigma^2 sum_k E C2k^2

with sigma^2 = sigma_D^2 (1 - rho^2) the innovation variance.
enumerate_appendix_moments computes the same expectations by brute force
over every lead-time tuple.
"""
import itertools
import logging
import math
from typing import Tuple

from src.analytics.bullwhip import check_rho, one_minus_rho_pow
from src.models import AppendixTerms, BmInputs, ConfigurationError, LeadTimeDist

logger = logging.getLogger(__name__)

MAX_ENUMERATION_WINDOW = 6


def var_E_q_given_L(inputs: BmInputs) -> float:
    return 2 * inputs.sigma_L2 * inputs.mu_D ** 2 / inputs.m ** 2


def expected_C1_sq(inputs: BmInputs) -> float:
    """E C1^2 = Var C1 + (E C1)^2, C1 being the loading of D_{t-1-n}"""
    rho = check_rho(inputs.rho)
    n, m = inputs.n, inputs.m
    mu_L, sigma_L2 = inputs.mu_L, inputs.sigma_L2
    decay = one_minus_rho_pow(rho, n)

    var_C1 = decay ** 2 * sigma_L2 / (n ** 2 * m ** 2) * (m + 2 * rho / (1 - rho) ** 2)
    mean_C1 = (mu_L / n + 1) * rho ** n - mu_L / n
    return var_C1 + mean_C1 ** 2


def sum_expected_C2k_sq(inputs: BmInputs) -> float:
    """sum_{k=1..n} E C2k^2, C2k being the loading of the innovation eps_{t-k}"""
    rho = check_rho(inputs.rho)
    n, m = inputs.n, inputs.m
    mu_L, sigma_L2 = inputs.mu_L, inputs.sigma_L2
    scale = n ** 2 * m ** 2 * (1 - rho) ** 2

    geometric = (
        sigma_L2 * (m - 1) / (n ** 2 * m ** 2)
        + (mu_L / n + 1) ** 2
        + sigma_L2 * (rho ** 2 + 1) / scale
    ) * one_minus_rho_pow(rho ** 2, n) / (1 - rho ** 2)
    linear = 2 * sigma_L2 * (rho + 1) / scale * one_minus_rho_pow(rho, n) / (1 - rho)
    constant = 2 * sigma_L2 / (n * m ** 2 * (1 - rho) ** 2)
    return geometric - linear + constant


def var_q_appendix(inputs: BmInputs) -> float:
    return appendix_terms(inputs).var_q


def appendix_terms(inputs: BmInputs) -> AppendixTerms:
    sigma_D2 = inputs.sigma_D ** 2
    sigma_eps2 = sigma_D2 * (1 - inputs.rho ** 2)

    between = var_E_q_given_L(inputs)
    c1 = expected_C1_sq(inputs)
    c2 = sum_expected_C2k_sq(inputs)
    return AppendixTerms(
        var_E_q_given_L=between,
        E_C1_sq=c1,
        sum_E_C2k_sq=c2,
        var_q=between + sigma_D2 * c1 + sigma_eps2 * c2,
        sigma_D2=sigma_D2,
        sigma_eps2=sigma_eps2
    )


def _loadings(window: Tuple[int, ...], rho: float, n: int, m: int) -> Tuple[float, float, float]:
    """
    Conditional mean shift and the loadings C1, sum_k C2k^2 for one lead-time tuple.

    window[i] is L_{t-1-i-L+} for i = 0..m.
    """
    current = sum(window[:m]) / m
    previous = sum(window[1:]) / m
    delta = window[0] - window[m]

    c1 = (current / n + 1) * rho ** n + delta * rho * (1 - rho ** (n - 1)) / (n * m * (1 - rho)) - previous / n
    c2_sq = 0.0
    for k in range(1, n + 1):
        c2k = (current / n + 1) * rho ** (k - 1) + delta * (1 - rho ** (k - 1)) / (n * m * (1 - rho))
        c2_sq += c2k ** 2
    return delta / m, c1, c2_sq


def enumerate_appendix_moments(inputs: BmInputs, dist: LeadTimeDist, max_m: int = MAX_ENUMERATION_WINDOW) -> AppendixTerms:
    """
    Brute-force E C1^2, sum_k E C2k^2 and Var E(q | L) over all (m+1)-tuples of lead times.

    Exponential in m, hence the cap.
    """
    rho = check_rho(inputs.rho)
    n, m = inputs.n, inputs.m
    if m > max_m:
        raise ConfigurationError(f"enumeration is capped at m <= {max_m}, got m = {m}")
    if abs(dist.mu_L - inputs.mu_L) > 1e-9 or abs(dist.sigma_L2 - inputs.sigma_L2) > 1e-9:
        raise ConfigurationError("lead-time distribution moments differ from the inputs")

    support = dist.support
    probabilities = dist.pmf

    e_shift = e_shift_sq = e_c1_sq = e_c2_sq = 0.0
    for window in itertools.product(support, repeat=m + 1):
        weight = math.prod(probabilities[i] for i in window)
        shift, c1, c2_sq = _loadings(window, rho, n, m)
        e_shift += weight * shift
        e_shift_sq += weight * shift ** 2
        e_c1_sq += weight * c1 ** 2
        e_c2_sq += weight * c2_sq

    sigma_D2 = inputs.sigma_D ** 2
    sigma_eps2 = sigma_D2 * (1 - rho ** 2)
    # E(q | L) = mu_D (1 + shift)
    between = inputs.mu_D ** 2 * (e_shift_sq - e_shift ** 2)

    logger.debug(f"Enumerated {len(support) ** (m + 1)} lead-time tuples for n={n}, m={m}")
    return AppendixTerms(
        var_E_q_given_L=between,
        E_C1_sq=e_c1_sq,
        sum_E_C2k_sq=e_c2_sq,
        var_q=between + sigma_D2 * e_c1_sq + sigma_eps2 * e_c2_sq,
        sigma_D2=sigma_D2,
        sigma_eps2=sigma_eps2
    )
