"""
Monte Carlo estimation of the bullwhip measure from independent seeded replications
"""
import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import List, Optional, Tuple

import numpy as np

from src.models import (
    BmInputs,
    ConfigurationError,
    ForecastConfig,
    LeadTimeDist,
    McEstimate,
    McSettings,
    SeededStream
)
from src.processes import gen_demand, gen_leadtimes
from src.replenishment import policy

logger = logging.getLogger(__name__)

MIN_PERIODS = 10_000
MOMENT_TOLERANCE = 1e-9

# (stream_id, Var q / Var D, mean order)
ReplicationResult = Tuple[int, float, float]


def check_moments(inputs: BmInputs, dist: LeadTimeDist) -> None:
    if abs(dist.mu_L - inputs.mu_L) > MOMENT_TOLERANCE or abs(dist.sigma_L2 - inputs.sigma_L2) > MOMENT_TOLERANCE:
        raise ConfigurationError(
            f"lead-time distribution has mu_L={dist.mu_L}, sigma_L^2={dist.sigma_L2} "
            f"but the inputs ask for mu_L={inputs.mu_L}, sigma_L^2={inputs.sigma_L2}"
        )


def simulate_replication(
    inputs: BmInputs,
    dist: LeadTimeDist,
    T: int,
    stream: SeededStream,
    burn_in: Optional[int] = None
) -> ReplicationResult:
    """
    One replication: T measured periods after forecast history and burn-in.

    Returns the sample Var q / Var D and mean order over the measured window.
    """
    cfg = ForecastConfig(n=inputs.n, m=inputs.m, L_plus=dist.L_plus)
    burn_in = cfg.default_burn_in if burn_in is None else burn_in
    total = cfg.history_start + 1 + burn_in + T

    demands = gen_demand(inputs.demand, total, stream=stream)
    leadtimes = gen_leadtimes(dist, total, stream=stream)
    trace = policy.run_out_policy(
        demands, leadtimes, cfg, burn_in=burn_in, initial_order=inputs.mu_D
    )

    orders = trace.window(trace.order)
    demand = trace.window(trace.demand)
    ratio = float(np.var(orders, ddof=1) / np.var(demand, ddof=1))
    return stream.stream_id, ratio, float(np.mean(orders))


def _replication_worker(args) -> ReplicationResult:
    """Module level so ProcessPoolExecutor can pickle it"""
    inputs, dist, T, seed, stream_id, burn_in = args
    return simulate_replication(inputs, dist, T, SeededStream(seed=seed, stream_id=stream_id), burn_in)


def run_replications(
    inputs: BmInputs,
    dist: LeadTimeDist,
    T: int,
    replications: int,
    seed: int,
    workers: int = 1,
    burn_in: Optional[int] = None,
    stream_offset: int = 0
) -> List[ReplicationResult]:
    """Run replications stream_offset .. stream_offset + replications - 1, sorted by stream id"""
    jobs = [
        (inputs, dist, T, seed, stream_offset + r, burn_in)
        for r in range(replications)
    ]

    if workers <= 1:
        results = [_replication_worker(job) for job in jobs]
    else:
        results = []
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_replication_worker, job) for job in jobs]
            for future in as_completed(futures):
                results.append(future.result())

    results.sort(key=lambda result: result[0])
    for stream_id, ratio, _ in results:
        logger.debug(f"Replication {stream_id}: Var q / Var D = {ratio:.6f}")
    return results


def estimate_bm_mc(
    inputs: BmInputs,
    dist: LeadTimeDist,
    T: int = 200_000,
    replications: int = 16,
    seed: int = 0,
    workers: int = 1,
    burn_in: Optional[int] = None,
    stream_offset: int = 0
) -> McEstimate:
    """
    Mean of per-replication Var q / Var D with its standard error across replications.

    `dist` must carry the lead-time moments of `inputs`.
    """
    check_moments(inputs, dist)
    if T < MIN_PERIODS:
        raise ConfigurationError(f"need at least {MIN_PERIODS} measured periods, got T={T}")
    if replications < 2:
        raise ConfigurationError(f"a standard error needs at least 2 replications, got {replications}")

    results = run_replications(inputs, dist, T, replications, seed, workers, burn_in, stream_offset)
    ratios = np.array([ratio for _, ratio, _ in results])
    mean_orders = np.array([mean_order for _, _, mean_order in results])

    estimate = McEstimate(
        bm_mc=float(np.mean(ratios)),
        se=float(np.std(ratios, ddof=1) / np.sqrt(replications)),
        replications=replications,
        per_replication=tuple(float(r) for r in ratios),
        mean_order=float(np.mean(mean_orders))
    )
    logger.info(
        f"MC estimate at rho={inputs.rho:g}, n={inputs.n}, m={inputs.m}: "
        f"{estimate.bm_mc:.4f} +- {estimate.se:.4f} ({replications} x {T} periods)"
    )
    return estimate


def estimate_from_settings(
    inputs: BmInputs,
    dist: LeadTimeDist,
    settings: McSettings,
    stream_offset: int = 0
) -> McEstimate:
    return estimate_bm_mc(
        inputs,
        dist,
        T=settings.T,
        replications=settings.replications,
        seed=settings.seed,
        workers=settings.workers,
        burn_in=settings.burn_in,
        stream_offset=stream_offset
    )
