"""Deterministic SVG plots of sweep results.

Figures carry one line per scheme (mean sum secrecy rate against the
data power fraction) with symmetric standard-error bars. Rendering is
pinned so that identical sweeps yield byte-identical SVG files.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .harness import SweepResult

__all__ = ["emit_plot"]

_SCHEME_LABELS = {
    "zf_conv": "ZF",
    "rzf_conv": "RZF",
    "zf_eve_full": "ZF, eve-aware (full CSI)",
    "rzf_eve_full": "RZF, eve-aware (full CSI)",
    "zf_eve_limited": "ZF, eve-aware (limited CSI)",
    "rzf_eve_limited": "RZF, eve-aware (limited CSI)",
    "nonlinear_socp": "SOCP",
}


def emit_plot(result: SweepResult, path, title: str | None = None) -> None:
    """Render the sweep to an SVG file at `path`, byte-reproducibly."""
    with matplotlib.rc_context({"svg.hashsalt": "uavsec", "svg.fonttype": "path"}):
        fig, ax = plt.subplots(figsize=(7.0, 4.5))
        phi = np.asarray(result.phi_grid)
        for si, scheme in enumerate(result.schemes):
            means = result.mean_rates[si]
            errs = result.std_errors[si]
            label = _SCHEME_LABELS.get(scheme, scheme)
            ax.errorbar(phi, means, yerr=errs, marker="o", markersize=3.5,
                        capsize=2.0, linewidth=1.2, label=label)
        ax.set_xlabel("data power fraction")
        ax.set_ylabel("sum secrecy rate (bit/s/Hz)")
        if title:
            ax.set_title(title)
        ax.grid(True, alpha=0.3)
        ax.legend(fontsize=8)
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
