"""Command-line entry point: configure, sweep, serialize, plot.

Exit status is 0 only when every (scheme, power split) cell produced a
value; fallbacks are tolerated, hard failures are not.
"""

import argparse
import sys
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

from .config import SCHEMES, ScenarioConfig, parse_config
from .errors import ConfigError, UavsecError
from .harness import best_phi, run_sweep
from .results import make_manifest, write_csv, write_json

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uavsec",
        description="Sum secrecy rate sweep over the data/noise power split "
                    "for an aerial mmWave multiuser downlink.")
    parser.add_argument("--config", type=Path, default=None,
                        help="JSON configuration file; defaults apply when omitted")
    parser.add_argument("--k", type=int, default=None, help="number of users")
    parser.add_argument("--trials", type=int, default=None, help="Monte Carlo trials")
    parser.add_argument("--seed", type=int, default=None, help="base RNG seed")
    parser.add_argument("--phi-grid", type=str, default=None,
                        help="comma-separated data power fractions in [0, 1]")
    parser.add_argument("--schemes", type=str, default=None,
                        help=f"comma-separated subset of: {', '.join(SCHEMES)}")
    parser.add_argument("--out", type=Path, default=Path("."),
                        help="output directory (created if missing)")
    parser.add_argument("--emit-plot", action="store_true",
                        help="also render an SVG figure of the sweep")
    parser.add_argument("--workers", type=int, default=1,
                        help="parallel trial workers")
    return parser


def _apply_overrides(config: ScenarioConfig, args) -> ScenarioConfig:
    updates = {}
    if args.k is not None:
        updates["n_users"] = args.k
    if args.trials is not None:
        updates["n_trials"] = args.trials
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.phi_grid is not None:
        try:
            updates["phi_grid"] = tuple(float(v) for v in args.phi_grid.split(","))
        except ValueError as exc:
            raise ConfigError(f"--phi-grid: {exc}") from exc
    if args.schemes is not None:
        updates["schemes"] = tuple(s.strip() for s in args.schemes.split(","))
    return replace(config, **updates) if updates else config


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = parse_config(args.config) if args.config else ScenarioConfig()
        config = _apply_overrides(config, args)
    except UavsecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    out_dir = args.out
    out_dir.mkdir(parents=True, exist_ok=True)
    suffix = f"k{config.n_users}"
    manifest_path = out_dir / f"manifest_{suffix}.json"
    csv_path = out_dir / f"secrecy_sweep_{suffix}.csv"
    json_path = out_dir / f"secrecy_sweep_{suffix}.json"
    plot_path = out_dir / f"secrecy_sweep_{suffix}.svg"

    started = _timestamp()
    outputs = [csv_path, json_path] + ([plot_path] if args.emit_plot else [])
    manifest = make_manifest(config, started, output_paths=tuple(outputs))
    manifest.write(manifest_path)

    result = run_sweep(config, n_workers=max(1, args.workers))

    write_csv(result, csv_path)
    manifest = make_manifest(config, started, finished_at=_timestamp(),
                             output_paths=tuple(outputs))
    write_json(result, json_path, manifest=manifest)
    if args.emit_plot:
        from .plotting import emit_plot

        emit_plot(result, plot_path, title=f"K = {config.n_users} users")
    manifest.write(manifest_path)

    for scheme in result.schemes:
        split, rate = best_phi(result, scheme)
        print(f"{scheme}: best split phi={split:g} "
              f"mean sum secrecy rate {rate:.4f} bit/s/Hz")
    n_failed = int(result.failure_counts.sum())
    if n_failed:
        print(f"error: {n_failed} cell evaluations failed", file=sys.stderr)
        return 1
    print(f"wrote {csv_path} and {json_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
