"""Serialization of sweep results: CSV, JSON, and the run manifest.

Numbers are written with 12 significant digits through repeatable
formatting, so two identical sweeps serialize to identical bytes.
The manifest captures everything needed to reproduce a run and is
written before any result file.
"""

import json
from dataclasses import asdict, dataclass

from .config import ScenarioConfig, config_to_dict
from .errors import InvalidInputError
from .harness import SweepResult

__all__ = [
    "CSV_COLUMNS",
    "RESULTS_JSON_SCHEMA",
    "RunManifest",
    "result_records",
    "write_csv",
    "write_json",
    "write_results",
]

CSV_COLUMNS = ("scheme", "phi", "mean_sum_secrecy_rate_bps_hz", "std_err",
               "n_trials", "n_fallback")

# JSON documents produced by write_json conform to this schema.
RESULTS_JSON_SCHEMA = {
    "type": "object",
    "required": ["results"],
    "additionalProperties": False,
    "properties": {
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": list(CSV_COLUMNS),
                "additionalProperties": False,
                "properties": {
                    "scheme": {"type": "string"},
                    "phi": {"type": "number", "minimum": 0.0, "maximum": 1.0},
                    "mean_sum_secrecy_rate_bps_hz": {"type": "number"},
                    "std_err": {"type": "number"},
                    "n_trials": {"type": "integer", "minimum": 0},
                    "n_fallback": {"type": "integer", "minimum": 0},
                },
            },
        },
        "manifest": {
            "type": "object",
            "required": ["config", "artifact_version", "started_at",
                         "finished_at", "output_paths"],
            "properties": {
                "config": {"type": "object"},
                "artifact_version": {"type": "string"},
                "started_at": {"type": "string"},
                "finished_at": {"type": ["string", "null"]},
                "output_paths": {"type": "array", "items": {"type": "string"}},
            },
        },
    },
}


def _fmt(value: float) -> str:
    return f"{value:.12g}"


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record: the config snapshot alone replays the run."""

    config: dict
    artifact_version: str
    started_at: str
    finished_at: str | None
    output_paths: tuple

    def to_dict(self) -> dict:
        data = asdict(self)
        data["output_paths"] = list(self.output_paths)
        return data

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(self.to_dict(), handle, indent=2, sort_keys=True)
            handle.write("\n")


def make_manifest(config: ScenarioConfig, started_at: str,
                  finished_at: str | None = None,
                  output_paths: tuple = ()) -> RunManifest:
    from . import __version__

    return RunManifest(config=config_to_dict(config), artifact_version=__version__,
                       started_at=started_at, finished_at=finished_at,
                       output_paths=tuple(str(p) for p in output_paths))


def result_records(result: SweepResult) -> list:
    """One record per (scheme, power split) cell, in canonical order."""
    records = []
    for si, scheme in enumerate(result.schemes):
        for pi, split in enumerate(result.phi_grid):
            records.append({
                "scheme": scheme,
                "phi": float(split),
                "mean_sum_secrecy_rate_bps_hz": float(result.mean_rates[si, pi]),
                "std_err": float(result.std_errors[si, pi]),
                "n_trials": int(result.valid_counts[si, pi]),
                "n_fallback": int(result.fallback_counts[si, pi]),
            })
    return records


def write_csv(result: SweepResult, path) -> None:
    """Write one row per (scheme, phi) cell with 12-significant-digit numbers."""
    lines = [",".join(CSV_COLUMNS)]
    for record in result_records(result):
        lines.append(",".join([
            record["scheme"],
            _fmt(record["phi"]),
            _fmt(record["mean_sum_secrecy_rate_bps_hz"]),
            _fmt(record["std_err"]),
            str(record["n_trials"]),
            str(record["n_fallback"]),
        ]))
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


def write_json(result: SweepResult, path, manifest: RunManifest | None = None) -> None:
    """Mirror of the CSV records plus the manifest, as one JSON document."""
    document = {"results": result_records(result)}
    if manifest is not None:
        document["manifest"] = manifest.to_dict()
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(document, handle, indent=2, sort_keys=True)
        handle.write("\n")


def write_results(result: SweepResult, fmt: str, path,
                  manifest: RunManifest | None = None) -> None:
    if fmt == "csv":
        write_csv(result, path)
    elif fmt == "json":
        write_json(result, path, manifest=manifest)
    else:
        raise InvalidInputError(f"unknown result format {fmt!r}, expected 'csv' or 'json'")
