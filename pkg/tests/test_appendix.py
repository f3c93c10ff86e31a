"""
Tests for the law-of-total-variance path to Var q
"""
import numpy as np
import pytest

from src.analytics import (
    appendix_terms,
    bm_analytic,
    bm_constant_leadtime,
    bm_iid,
    enumerate_appendix_moments,
    expected_C1_sq,
    sum_expected_C2k_sq,
    var_E_q_given_L,
    var_q_appendix
)
from src.models import BmInputs, ConfigurationError, SeededStream
from src.processes import gen_demand, gen_leadtimes, make_explicit_dist, make_two_point_dist
from src.replenishment import run_out_policy
from tests.conftest import scenario


def test_between_term(base_inputs):
    """Var E(q | L) is 5000 for the base scenario"""
    assert var_E_q_given_L(base_inputs) == pytest.approx(5000.0)
    assert var_E_q_given_L(scenario(sigma_L=0.0)) == 0.0
    assert var_E_q_given_L(scenario(mu_D=0.0)) == 0.0


def test_C1_at_zero_correlation(base_inputs):
    """E C1^2 = mu_L^2/n^2 + sigma_L^2/(n^2 m) at rho = 0"""
    assert expected_C1_sq(base_inputs) == pytest.approx(100 / 25 + 25 / 50, rel=1e-12)
    assert expected_C1_sq(scenario(sigma_L=0.0)) == pytest.approx((10 / 5) ** 2, rel=1e-12)


def test_C1_near_unit_correlation(base_inputs):
    """E C1^2 tends to 1 + 2 sigma_L^2 / m^2 as rho -> 1"""
    close = base_inputs.at_rho(1 - 1e-8)
    assert expected_C1_sq(close) == pytest.approx(1 + 2 * 25 / 4, rel=1e-4)
    assert expected_C1_sq(scenario(rho=1 - 1e-8, sigma_L=0.0)) == pytest.approx(1.0, rel=1e-6)


def test_C2_constant_leadtime():
    """sigma_L = 0 leaves a geometric sum"""
    rho, n = 0.6, 5
    expected = (10 / n + 1) ** 2 * (1 - rho ** (2 * n)) / (1 - rho ** 2)
    assert sum_expected_C2k_sq(scenario(rho=rho, n=n, sigma_L=0.0)) == pytest.approx(expected, rel=1e-12)


def test_C2_single_window():
    """n = 1, rho = 0 gives sigma_L^2/m + (mu_L + 1)^2"""
    inputs = scenario(n=1, m=3)
    assert sum_expected_C2k_sq(inputs) == pytest.approx(25 / 3 + 11 ** 2, rel=1e-12)


def test_appendix_matches_closed_form(base_inputs):
    """Var q / sigma_D^2 equals the closed form"""
    inputs = base_inputs.at_rho(0.3)
    assert var_q_appendix(inputs) / 16 == pytest.approx(bm_analytic(inputs).value, rel=1e-10)


def test_appendix_reduces_to_constant_leadtime():
    """sigma_L = 0: Var q = sigma_D^2 BM_constant"""
    for rho in (-0.8, -0.2, 0.0, 0.5, 0.9):
        inputs = scenario(rho=rho, sigma_L=0.0)
        assert var_q_appendix(inputs) == pytest.approx(
            16 * bm_constant_leadtime(10, 5, rho), rel=1e-10
        )


def test_appendix_reduces_to_iid(base_inputs):
    """rho = 0: Var q = sigma_D^2 BM_iid"""
    assert var_q_appendix(base_inputs) == pytest.approx(16 * bm_iid(base_inputs), rel=1e-12)


def test_dual_path_on_random_inputs():
    """Both computation paths agree over random parameter tuples"""
    rng = np.random.default_rng(20)
    for _ in range(1000):
        inputs = BmInputs.from_moments(
            mu_D=rng.uniform(0, 50),
            sigma_D=rng.uniform(0.5, 10),
            rho=rng.uniform(-0.99, 0.99),
            mu_L=rng.uniform(0, 15),
            sigma_L=rng.uniform(0, 8),
            n=int(rng.integers(1, 31)),
            m=int(rng.integers(1, 31))
        )
        closed = bm_analytic(inputs).value
        assert var_q_appendix(inputs) / inputs.sigma_D ** 2 == pytest.approx(closed, rel=1e-10)


def test_terms_add_up(base_inputs):
    """var_q is assembled from its three pieces"""
    terms = appendix_terms(base_inputs.at_rho(-0.4))
    assembled = terms.var_E_q_given_L + terms.sigma_D2 * terms.E_C1_sq + terms.sigma_eps2 * terms.sum_E_C2k_sq
    assert terms.var_q == pytest.approx(assembled, rel=1e-14)
    assert terms.sigma_eps2 == pytest.approx(16 * (1 - 0.16))


@pytest.mark.parametrize("rho", [-0.5, 0.0, 0.3, 0.6])
@pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (3, 1), (5, 2), (5, 3)])
def test_enumeration_matches_closed_forms(rho, n, m):
    """Brute force over two-point lead-time tuples matches every closed-form piece"""
    dist = make_two_point_dist(10, 5)
    inputs = scenario(rho=rho, n=n, m=m)

    enumerated = enumerate_appendix_moments(inputs, dist)
    closed = appendix_terms(inputs)

    assert enumerated.var_E_q_given_L == pytest.approx(closed.var_E_q_given_L, rel=1e-11)
    assert enumerated.E_C1_sq == pytest.approx(closed.E_C1_sq, rel=1e-11)
    assert enumerated.sum_E_C2k_sq == pytest.approx(closed.sum_E_C2k_sq, rel=1e-11)
    assert enumerated.var_q == pytest.approx(closed.var_q, rel=1e-11)


def test_enumeration_is_distribution_free():
    """A three-point pmf with the same moments gives the same Var q"""
    dist = make_explicit_dist({0: 0.25, 1: 0.5, 2: 0.25})
    inputs = BmInputs.from_moments(mu_D=20, sigma_D=4, rho=0.4, mu_L=1.0, sigma_L=dist.sigma_L2 ** 0.5, n=3, m=2)

    enumerated = enumerate_appendix_moments(inputs, dist)
    assert enumerated.var_q == pytest.approx(var_q_appendix(inputs), rel=1e-11)


def test_enumeration_window_cap(two_point):
    """m above the cap is a configuration error"""
    with pytest.raises(ConfigurationError):
        enumerate_appendix_moments(scenario(m=7), two_point)


def test_enumeration_needs_matching_moments(two_point):
    """A pmf whose moments differ from the inputs is a configuration error"""
    with pytest.raises(ConfigurationError):
        enumerate_appendix_moments(scenario(sigma_L=4.0), two_point)


@pytest.mark.slow
@pytest.mark.parametrize("rho", [-0.5, 0.0, 0.5])
def test_simulated_order_variance_matches(two_point, base_cfg, rho):
    """Var q of a 10^6-period run is within 3 batch-mean se of the law-of-total-variance value"""
    inputs = scenario(rho=rho)
    stream = SeededStream(seed=31, stream_id=int(10 * (rho + 1)))
    T = 1_000_000 + 2_000
    demands = gen_demand(inputs.demand, T, stream=stream)
    leadtimes = gen_leadtimes(two_point, T, stream=stream)
    trace = run_out_policy(demands, leadtimes, base_cfg, initial_order=inputs.mu_D)

    orders = trace.window(trace.order)
    batches = orders[:len(orders) // 100 * 100].reshape(100, -1)
    batch_vars = batches.var(axis=1, ddof=1)
    se = batch_vars.std(ddof=1) / np.sqrt(len(batch_vars))

    assert len(orders) >= 1_000_000
    assert abs(orders.var(ddof=1) - var_q_appendix(inputs)) < 3 * se
