"""Walk through the cone-program precoder on one channel realization.

Shows the pipeline: reference linear design -> SINR targets -> solved
minimum-power precoders -> rescale onto the full data budget, and how
much power the optimization recovers at each split.

Run:  python demos/optimized_precoder.py
"""

import numpy as np

from uavsec.channel import draw_realization
from uavsec.config import ScenarioConfig
from uavsec.eve_aware import dominant_eve_direction, eveaware_precoders
from uavsec.harness import trial_rng
from uavsec.metrics import LinkBudget, secrecy_report
from uavsec.socp import (assemble_socp, nonlinear_precoder, solve_socp,
                         targets_from_precoders)


def main():
    cfg = ScenarioConfig()
    rng = trial_rng(cfg.seed, 3)
    real = draw_realization(cfg, rng)
    h, he = real.user_channels, real.eve_channel
    budget = LinkBudget.from_link_parameters(cfg.tx_power_dbm, cfg.bandwidth_hz,
                                             cfg.noise_figure_db,
                                             cfg.noise_density_dbm_hz)
    rho = budget.rho
    sigma = 1.0 / np.sqrt(rho)

    print(f"{'phi':>5s} {'ref rate':>9s} {'socp rate':>10s} {'solved power':>13s} "
          f"{'saved':>7s}")
    for split in (0.2, 0.5, 0.8, 1.0):
        reference = eveaware_precoders(h, dominant_eve_direction(he), "rzf",
                                       cfg.n_users / rho, split)
        targets = targets_from_precoders(h, he, reference, rho)
        problem = assemble_socp(h / sigma, he / sigma, reference.artificial_noise,
                                targets, 1.0)
        solution = solve_socp(problem)
        optimized = nonlinear_precoder(h, he, split, rho)
        ref_rate = secrecy_report(h, he, reference, rho).sum_secrecy_rate
        opt_rate = secrecy_report(h, he, optimized, rho).sum_secrecy_rate
        saved = split - solution.objective_value
        print(f"{split:5.1f} {ref_rate:9.3f} {opt_rate:10.3f} "
              f"{solution.objective_value:13.4f} {100 * saved / split:6.1f}%")

    print("\nthe solver meets the reference SINRs with less power; re-spending")
    print("the savings on the same balanced directions buys extra margin.")


if __name__ == "__main__":
    main()
