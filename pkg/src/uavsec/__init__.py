"""Secrecy-rate simulator and precoder library for an aerial mmWave downlink.

A seedable link-level simulator for a multiuser downlink served from a
hovering array in the presence of a multi-antenna eavesdropper, plus
the precoding schemes it compares: zero-forcing and regularized
zero-forcing with null-space artificial noise, eavesdropper-aware
variants under full or limited knowledge, and an SOCP-based
power-minimizing design.
"""

__version__ = "0.1.0"

from .channel import (
    ArrayGeometry,
    ChannelRealization,
    MultipathParams,
    NodePlacement,
    draw_realization,
    eve_channel,
    path_loss_db,
    sample_angles,
    sample_placement,
    steering_vector,
    user_channel,
)
from .config import SCHEMES, ScenarioConfig, parse_config, write_config
from .conventional import PrecoderSet, normalize, nullspace_an, rzf_data, zf_data
from .errors import (
    ConfigError,
    DegenerateChannelError,
    DegeneratePrecoderError,
    DegenerateTargetError,
    InvalidInputError,
    NumericalError,
    UavsecError,
)
from .eve_aware import (
    EveDirection,
    dominant_eve_direction,
    eveaware_precoders,
    limited_eve_direction,
)
from .harness import SweepResult, best_phi, build_precoders, run_sweep, run_trial, trial_rng
from .metrics import LinkBudget, SinrReport, eve_sinr, secrecy_report, user_sinr
from .numerics import hermitian_pd_solve, null_space_basis, pseudo_inverse, svd
from .results import write_csv, write_json, write_results
from .socp import (
    ConicProblem,
    SinrTargets,
    SocpSolution,
    assemble_socp,
    nonlinear_precoder,
    select_targets,
    solve_socp,
    targets_from_precoders,
)

__all__ = [
    "__version__",
    "ArrayGeometry",
    "ChannelRealization",
    "MultipathParams",
    "NodePlacement",
    "draw_realization",
    "eve_channel",
    "path_loss_db",
    "sample_angles",
    "sample_placement",
    "steering_vector",
    "user_channel",
    "SCHEMES",
    "ScenarioConfig",
    "parse_config",
    "write_config",
    "PrecoderSet",
    "normalize",
    "nullspace_an",
    "rzf_data",
    "zf_data",
    "ConfigError",
    "DegenerateChannelError",
    "DegeneratePrecoderError",
    "DegenerateTargetError",
    "InvalidInputError",
    "NumericalError",
    "UavsecError",
    "EveDirection",
    "dominant_eve_direction",
    "eveaware_precoders",
    "limited_eve_direction",
    "SweepResult",
    "best_phi",
    "build_precoders",
    "run_sweep",
    "run_trial",
    "trial_rng",
    "LinkBudget",
    "SinrReport",
    "eve_sinr",
    "secrecy_report",
    "user_sinr",
    "hermitian_pd_solve",
    "null_space_basis",
    "pseudo_inverse",
    "svd",
    "write_csv",
    "write_json",
    "write_results",
    "ConicProblem",
    "SinrTargets",
    "SocpSolution",
    "assemble_socp",
    "nonlinear_precoder",
    "select_targets",
    "solve_socp",
    "targets_from_precoders",
]
