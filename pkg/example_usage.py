"""
Example usage of the bullwhip toolkit
"""
from dotenv import load_dotenv

from config.settings import default_seed
from src.analytics import bm_analytic, bm_rho_to_1, bm_rho_to_minus1, stationary_point_conditions
from src.experiments import estimate_bm_mc, find_stationary_points
from src.models import BmInputs
from src.processes import make_two_point_dist

load_dotenv()


def main():
    """Example usage"""
    inputs = BmInputs.from_moments(mu_D=20, sigma_D=4, rho=0.0, mu_L=10, sigma_L=5, n=5, m=2)

    print("Bullwhip toolkit - Example Usage\n" + "=" * 50 + "\n")

    for rho in (-0.9, -0.5, 0.0, 0.5, 0.9):
        result = bm_analytic(inputs.at_rho(rho))
        shares = ", ".join(f"{c:.3f}" for c in result.components)
        print(f"rho={rho:+.1f}: BM={result.value:.4f} (components {shares})")

    print(f"\nrho -> 1 limit: {bm_rho_to_1(inputs):.4f}")
    print(f"rho -> -1 limit: {bm_rho_to_minus1(inputs):.4f}")

    conditions = stationary_point_conditions(inputs)
    print(f"\nStationary point in (0, 1) guaranteed: {conditions.positive_region_sufficient}")
    print(f"Stationary point in (-1, 0) guaranteed: {conditions.negative_region_sufficient}")
    for point in find_stationary_points(inputs):
        print(f"  {point.kind} at rho={point.rho:+.4f}, BM={point.bm:.4f}")

    print("\n" + "=" * 50)
    dist = make_two_point_dist(10, 5)
    estimate = estimate_bm_mc(inputs, dist, T=50_000, replications=4, seed=default_seed())
    print(f"Monte Carlo at rho=0: {estimate.bm_mc:.4f} +- {estimate.se:.4f}")


if __name__ == "__main__":
    main()
