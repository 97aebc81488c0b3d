"""Desk-scale secrecy sweep: a few schemes, a coarse grid, fast trials.

Produces the same artifacts as the command line tool (CSV, JSON, SVG)
in ./demo_out, in well under a minute.

Run:  python demos/mini_sweep.py
"""

from pathlib import Path

from uavsec.config import ScenarioConfig
from uavsec.harness import best_phi, run_sweep
from uavsec.plotting import emit_plot
from uavsec.results import write_csv, write_json


def main():
    cfg = ScenarioConfig(n_trials=30, phi_grid=(0.0, 0.2, 0.4, 0.6, 0.8, 1.0),
                         schemes=("rzf_conv", "rzf_eve_full", "nonlinear_socp"),
                         seed=2026)
    print(f"sweeping {len(cfg.schemes)} schemes x {len(cfg.phi_grid)} splits "
          f"x {cfg.n_trials} trials (K={cfg.n_users}) ...")
    result = run_sweep(cfg)

    out = Path("demo_out")
    out.mkdir(exist_ok=True)
    write_csv(result, out / "mini_sweep.csv")
    write_json(result, out / "mini_sweep.json")
    emit_plot(result, out / "mini_sweep.svg", title="desk-scale sweep")

    for scheme in cfg.schemes:
        split, rate = best_phi(result, scheme)
        print(f"  {scheme:16s} best split phi={split:.1f} "
              f"-> {rate:.3f} bit/s/Hz")
    print(f"wrote {out}/mini_sweep.csv, .json, .svg")


if __name__ == "__main__":
    main()
