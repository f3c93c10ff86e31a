"""
Closed-form bullwhip measure for AR(1) demand with forecasted stochastic lead times,
together with its special cases, limits and stationary-point conditions.
"""
import logging
import math
from typing import Dict

from src.models import (
    BmInputs,
    BmMethod,
    BmResult,
    DomainError,
    MisuseError,
    StationaryPointReport
)

logger = logging.getLogger(__name__)

# below this distance from rho = +-1 the limit formulas replace the general one
RHO_SEAM = 1e-9


def check_rho(rho: float) -> float:
    if not -1.0 < rho < 1.0:
        hint = ""
        if rho >= 1.0:
            hint = "; use the rho -> 1 limit instead"
        elif rho <= -1.0:
            hint = "; use the rho -> -1 limit instead"
        raise DomainError(f"rho must lie strictly inside (-1, 1), got {rho}{hint}")
    return rho


def one_minus_rho_pow(rho: float, n: int) -> float:
    """1 - rho^n, accurate as rho approaches 1"""
    if rho > 0.0:
        return -math.expm1(n * math.log1p(rho - 1.0))
    return 1.0 - rho ** n


def _demand_forecast_term(mu_L: float, n: int, rho: float) -> float:
    return (2 * mu_L ** 2 / n ** 2 + 2 * mu_L / n) * one_minus_rho_pow(rho, n)


def _leadtime_forecast_term(inputs: BmInputs) -> float:
    return 2 * inputs.sigma_L2 * inputs.mu_D ** 2 / (inputs.sigma_D ** 2 * inputs.m ** 2)


def bm_components(inputs: BmInputs) -> tuple:
    """
    The three summands of the bullwhip measure.

    (lead-time variability with forecast interaction and correlation,
     lead-time forecasting, demand forecasting)
    """
    rho, n, m = inputs.rho, inputs.n, inputs.m
    sigma_L2 = inputs.sigma_L2
    decay = one_minus_rho_pow(rho, n)

    interaction = 2 * sigma_L2 / (n ** 2 * m ** 2) * (
        m * decay
        + n * (1 + rho) / (1 - rho)
        - (1 + rho ** 2) * decay / (1 - rho) ** 2
    )
    return (
        interaction,
        _leadtime_forecast_term(inputs),
        _demand_forecast_term(inputs.mu_L, n, rho)
    )


def bm_analytic(inputs: BmInputs) -> BmResult:
    """
    Var q / Var D under the order-up-to policy with moving-average forecasts.

    Within RHO_SEAM of rho = +-1 the value comes from the matching limit
    formula and `method` records the switch.
    """
    rho = check_rho(inputs.rho)

    if abs(1.0 - rho) < RHO_SEAM:
        logger.warning(f"rho={rho!r} is within {RHO_SEAM} of 1; using the rho -> 1 limit")
        components = (
            2 * inputs.sigma_L2 / inputs.m ** 2,
            _leadtime_forecast_term(inputs),
            0.0
        )
        return BmResult(value=bm_rho_to_1(inputs), components=components, method=BmMethod.LIMIT_RHO_1)

    if abs(1.0 + rho) < RHO_SEAM:
        logger.warning(f"rho={rho!r} is within {RHO_SEAM} of -1; using the rho -> -1 limit")
        odd = 1.0 - (-1) ** inputs.n
        components = (
            (2 * inputs.m - 1) * odd * inputs.sigma_L2 / (inputs.m ** 2 * inputs.n ** 2),
            _leadtime_forecast_term(inputs),
            2 * odd * inputs.mu_L * (inputs.mu_L + inputs.n) / inputs.n ** 2
        )
        return BmResult(
            value=bm_rho_to_minus1_general(inputs),
            components=components,
            method=BmMethod.LIMIT_RHO_MINUS_1
        )

    components = bm_components(inputs)
    return BmResult(value=sum(components) + 1, components=components)


def bm_constant_leadtime(L: float, n: int, rho: float) -> float:
    """Bullwhip measure for a deterministic lead time L"""
    check_rho(rho)
    if L < 0:
        raise DomainError(f"lead time must be non-negative, got {L}")
    if n < 1:
        raise DomainError(f"demand window must be at least 1, got {n}")
    return _demand_forecast_term(L, n, rho) + 1


def bm_limit_n_inf(inputs: BmInputs) -> float:
    """Limit as the demand window n grows without bound"""
    return 1 + 2 * inputs.mu_D ** 2 * inputs.sigma_L2 / (inputs.m ** 2 * inputs.sigma_D ** 2)


def bm_limit_m_inf(inputs: BmInputs) -> float:
    """Limit as the lead-time window m grows without bound"""
    n = inputs.n
    return 1 + one_minus_rho_pow(inputs.rho, n) * (2 * inputs.mu_L ** 2 / n ** 2 + 2 * inputs.mu_L / n)


def bm_limit_nm_inf() -> float:
    return 1.0


def bm_n1_slope(inputs: BmInputs) -> float:
    """Gradient in rho of the n = 1 measure, never positive"""
    if inputs.n != 1:
        raise MisuseError(f"the n = 1 form needs n = 1, got n = {inputs.n}")
    m, mu_L, sigma_L2 = inputs.m, inputs.mu_L, inputs.sigma_L2
    return 2 * (sigma_L2 - m * (m * mu_L * (mu_L + 1) + sigma_L2)) / m ** 2


def bm_n1(inputs: BmInputs) -> float:
    """
    Bullwhip measure with a one-period demand window, linear in rho.

    The expression carries an overall sigma_D^4 factor; it is evaluated
    in that form and divided out.
    """
    if inputs.n != 1:
        raise MisuseError(f"the n = 1 form needs n = 1, got n = {inputs.n}")
    rho = check_rho(inputs.rho)
    m, mu_L, sigma_L2 = inputs.m, inputs.mu_L, inputs.sigma_L2
    mu_D, sigma_D = inputs.mu_D, inputs.sigma_D

    scaled = (
        rho * 2 * sigma_D ** 4 * (sigma_L2 - m * (m * mu_L * (mu_L + 1) + sigma_L2)) / m ** 2
        + (
            2 * mu_D ** 2 * sigma_D ** 2 * sigma_L2
            + m * sigma_D ** 4 * (2 * m * mu_L * (mu_L + 1) + 2 * sigma_L2 + m)
        ) / m ** 2
    )
    return scaled / sigma_D ** 4


def bm_iid(inputs: BmInputs) -> float:
    """Bullwhip measure for uncorrelated demand (rho = 0)"""
    n, m = inputs.n, inputs.m
    mu_L, sigma_L2 = inputs.mu_L, inputs.sigma_L2
    return (
        1
        + 2 * inputs.mu_D ** 2 * sigma_L2 / (m ** 2 * inputs.sigma_D ** 2)
        + 2 * sigma_L2 * (m + n - 1) / (m ** 2 * n ** 2)
        + 2 * mu_L * (mu_L + n) / n ** 2
    )


def dbm_drho_at_zero(inputs: BmInputs) -> float:
    """
    dBM/drho at rho = 0: 4 (n-1) sigma_L^2 / (m^2 n^2).

    Valid for n >= 2; at n = 1 the measure is linear with slope bm_n1_slope.
    """
    n, m = inputs.n, inputs.m
    return 4 * (n - 1) * inputs.sigma_L2 / (m ** 2 * n ** 2)


def bm_rho_to_1(inputs: BmInputs) -> float:
    """Limit as rho -> 1; independent of n"""
    return 1 + 2 * inputs.sigma_L2 * (inputs.mu_D ** 2 + inputs.sigma_D ** 2) / (
        inputs.m ** 2 * inputs.sigma_D ** 2
    )


def bm_rho_to_minus1_general(inputs: BmInputs) -> float:
    """Limit as rho -> -1 for either parity of n"""
    n, m = inputs.n, inputs.m
    mu_L, sigma_L2 = inputs.mu_L, inputs.sigma_L2
    sign = (-1) ** n
    return (
        1
        + 2 * inputs.mu_D ** 2 * sigma_L2 / (m ** 2 * inputs.sigma_D ** 2)
        - (2 * m - 1) * (sign - 1) * sigma_L2 / (m ** 2 * n ** 2)
        - 2 * (sign - 1) * mu_L * (mu_L + n) / n ** 2
    )


def bm_rho_to_minus1_even(inputs: BmInputs) -> float:
    if inputs.n % 2:
        raise MisuseError(f"even-n limit called with odd n = {inputs.n}")
    return 1 + 2 * inputs.mu_D ** 2 * inputs.sigma_L2 / (inputs.m ** 2 * inputs.sigma_D ** 2)


def bm_rho_to_minus1_odd(inputs: BmInputs) -> float:
    n, m = inputs.n, inputs.m
    if n % 2 == 0:
        raise MisuseError(f"odd-n limit called with even n = {n}")
    mu_L, sigma_L2 = inputs.mu_L, inputs.sigma_L2
    return (
        1
        + 2 * inputs.mu_D ** 2 * sigma_L2 / (m ** 2 * inputs.sigma_D ** 2)
        + 2 * (2 * m - 1) * sigma_L2 / (m ** 2 * n ** 2)
        + 4 * mu_L * (mu_L + n) / n ** 2
    )


def bm_rho_to_minus1(inputs: BmInputs) -> float:
    """Limit as rho -> -1, dispatched on the parity of n"""
    if inputs.n % 2 == 0:
        return bm_rho_to_minus1_even(inputs)
    return bm_rho_to_minus1_odd(inputs)


def bm_limit_rho(inputs: BmInputs, which: str) -> float:
    """`which` is "rho1" or "rho-1" """
    if which == "rho1":
        return bm_rho_to_1(inputs)
    if which == "rho-1":
        return bm_rho_to_minus1(inputs)
    raise DomainError(f"unknown rho limit '{which}', expected 'rho1' or 'rho-1'")


def _iid_vs_rho1_bound(inputs: BmInputs) -> float:
    """Largest n for which BM_iid >= BM_(rho -> 1)"""
    m, mu_L, sigma_L2 = inputs.m, inputs.mu_L, inputs.sigma_L2
    if sigma_L2 == 0.0:
        return math.inf
    a = sigma_L2 + m ** 2 * mu_L
    return (a + math.sqrt(a ** 2 + 4 * sigma_L2 * (sigma_L2 * (m - 1) + m ** 2 * mu_L ** 2))) / (2 * sigma_L2)


def _iid_vs_rho_minus1_bound(inputs: BmInputs) -> float:
    """Smallest m for which BM_iid <= BM_(rho -> -1) with odd n"""
    n, mu_L = inputs.n, inputs.mu_L
    sigma_L = math.sqrt(inputs.sigma_L2)
    if mu_L == 0.0:
        return math.inf
    return (sigma_L * math.sqrt(sigma_L ** 2 + 4 * n * mu_L * (mu_L + n)) - sigma_L ** 2) / (
        2 * mu_L * (mu_L + n)
    )


def stationary_point_conditions(inputs: BmInputs) -> StationaryPointReport:
    """
    Sufficient (not necessary) conditions for a stationary point of BM in rho.

    Positive region (0, 1): n >= 2 and n below the iid-vs-(rho -> 1) bound.
    Negative region (-1, 0): n odd, n > 1 and m above the iid-vs-(rho -> -1) bound.
    """
    n, m = inputs.n, inputs.m
    positive_extremum_bound = _iid_vs_rho1_bound(inputs)
    negative_extremum_bound = _iid_vs_rho_minus1_bound(inputs)

    constant_case = None
    if inputs.sigma_L2 == 0.0:
        # deterministic lead times: BM_iid exceeds the rho -> 1 value whenever mu_L > 0
        constant_case = True

    return StationaryPointReport(
        positive_extremum_bound=positive_extremum_bound,
        negative_extremum_bound=negative_extremum_bound,
        positive_region_sufficient=n >= 2 and n <= positive_extremum_bound,
        negative_region_sufficient=n > 1 and n % 2 == 1 and m >= negative_extremum_bound,
        constant_leadtime_iid_exceeds_rho1=constant_case
    )


def special_cases(inputs: BmInputs) -> Dict[str, float]:
    """Every special-case value that applies to `inputs`, keyed by name"""
    cases = {
        "iid": bm_iid(inputs),
        "limit_n_inf": bm_limit_n_inf(inputs),
        "limit_m_inf": bm_limit_m_inf(inputs),
        "limit_nm_inf": bm_limit_nm_inf(),
        "rho_to_1": bm_rho_to_1(inputs),
        "rho_to_minus1": bm_rho_to_minus1(inputs),
        "dbm_drho_at_zero": dbm_drho_at_zero(inputs),
    }
    if inputs.n == 1:
        cases["n1"] = bm_n1(inputs)
        cases["n1_slope"] = bm_n1_slope(inputs)
    if inputs.sigma_L2 == 0.0:
        cases["constant_leadtime"] = bm_constant_leadtime(inputs.mu_L, inputs.n, inputs.rho)
    return cases
