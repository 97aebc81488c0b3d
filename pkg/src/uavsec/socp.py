"""Minimum-power data precoding under SINR floors and eavesdropper caps.

Given per-user SINR floors, per-stream ceilings on what the
eavesdropper may attain, and fixed artificial-noise precoders, the
data precoders minimizing total transmit power solve a second-order
cone program. Complex precoders are split into real and imaginary
blocks, each user's SINR floor becomes one rotated second-order
constraint (after fixing the phase so the useful gain is real), and
each stream's ceiling bounds the norm of its footprint at the
eavesdropper's array.

The raw solution is then rescaled by a single factor onto the full
data budget, so the scheme re-spends its power savings as margin
without disturbing the solved balance between streams.
"""

from dataclasses import dataclass, replace

import numpy as np
from scipy import sparse

from .conventional import PrecoderSet
from .errors import DegenerateTargetError, InvalidInputError
from .eve_aware import dominant_eve_direction, eveaware_precoders
from .metrics import _all_eve_sinr, _all_user_sinr

__all__ = [
    "SinrTargets",
    "ConicProblem",
    "SocpSolution",
    "targets_from_precoders",
    "select_targets",
    "assemble_socp",
    "solve_socp",
    "nonlinear_precoder",
]

NONLINEAR_SCHEME = "nonlinear_socp"

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
NUMERICAL_FAILURE = "numerical_failure"


@dataclass(frozen=True, eq=False)
class SinrTargets:
    """Strictly positive per-user SINR floors and per-stream eavesdropper ceilings.

    A scalar ceiling is broadcast so every stream shares the same cap.
    """

    user_floors: np.ndarray
    eve_ceilings: np.ndarray

    def __post_init__(self):
        floors = np.asarray(self.user_floors, dtype=np.float64)
        if floors.ndim != 1 or floors.size < 1:
            raise InvalidInputError("user_floors must be a nonempty 1-D array")
        if not np.all(np.isfinite(floors)) or np.any(floors <= 0):
            raise DegenerateTargetError("user SINR floors must be finite and > 0")
        ceilings = np.broadcast_to(
            np.asarray(self.eve_ceilings, dtype=np.float64), floors.shape).copy()
        if not np.all(np.isfinite(ceilings)) or np.any(ceilings <= 0):
            raise DegenerateTargetError("eavesdropper SINR ceilings must be finite and > 0")
        object.__setattr__(self, "user_floors", floors)
        object.__setattr__(self, "eve_ceilings", ceilings)


@dataclass(frozen=True, eq=False)
class ConicProblem:
    """Real-valued cone program: minimize objective . x subject to
    constraint_matrix @ x + constraint_offset lying in
    {0}^n_zero_rows x SOC(d_1) x ... x SOC(d_m).

    Variables: for precoder column k, real parts sit at
    [2Nk, 2Nk + N), imaginary parts at [2Nk + N, 2Nk + 2N); the last
    variable is the power epigraph t.
    """

    objective: np.ndarray
    constraint_matrix: sparse.csr_matrix
    constraint_offset: np.ndarray
    n_zero_rows: int
    soc_dims: tuple[int, ...]
    n_antennas: int
    n_users: int

    @property
    def n_variables(self) -> int:
        return self.objective.size

    def to_precoders(self, x: np.ndarray) -> np.ndarray:
        """Reassemble the (N, K) complex precoder matrix from a solution."""
        n, k = self.n_antennas, self.n_users
        blocks = np.asarray(x[: 2 * n * k], dtype=np.float64).reshape(k, 2 * n)
        return (blocks[:, :n] + 1j * blocks[:, n:]).T

    def from_precoders(self, precoders: np.ndarray, t: float | None = None) -> np.ndarray:
        """Pack a complex precoder matrix (and epigraph value) into variables."""
        n, k = self.n_antennas, self.n_users
        w = np.asarray(precoders, dtype=np.complex128)
        if w.shape != (n, k):
            raise InvalidInputError(f"precoders must have shape {(n, k)}, got {w.shape}")
        x = np.empty(self.n_variables)
        blocks = np.concatenate([w.real.T, w.imag.T], axis=1)  # (K, 2N)
        x[: 2 * n * k] = blocks.reshape(-1)
        x[-1] = float(np.linalg.norm(w)) if t is None else float(t)
        return x

    def cone_values(self, x: np.ndarray):
        """Zero-cone values and the list of second-order cone vectors at x."""
        values = self.constraint_matrix @ np.asarray(x, dtype=np.float64) + self.constraint_offset
        zero = values[: self.n_zero_rows]
        blocks = []
        start = self.n_zero_rows
        for dim in self.soc_dims:
            blocks.append(values[start:start + dim])
            start += dim
        return zero, blocks

    def max_violation(self, x: np.ndarray) -> dict:
        """Worst absolute violation of the zero rows and of each cone."""
        zero, blocks = self.cone_values(x)
        soc = 0.0
        for block in blocks:
            soc = max(soc, float(np.linalg.norm(block[1:]) - block[0]))
        return {
            "zero": float(np.max(np.abs(zero))) if zero.size else 0.0,
            "soc": max(0.0, soc),
        }


@dataclass(frozen=True, eq=False)
class SocpSolution:
    """Solver outcome: status, raw precoders, and their total power."""

    status: str
    precoders: np.ndarray | None
    objective_value: float
    solver_status: str


def targets_from_precoders(user_channels: np.ndarray, eve_channel: np.ndarray,
                           precoders: PrecoderSet, rho: float) -> SinrTargets:
    """Read SINR targets off an existing precoder set.

    Floors are the per-user SINRs the set achieves; the ceilings are
    the eavesdropper SINRs it concedes, stream by stream, so the
    optimized design may never leak more than the reference anywhere.
    """
    floors = _all_user_sinr(user_channels, precoders, rho)
    leaks = _all_eve_sinr(eve_channel, precoders, rho)
    if np.any(floors <= 0):
        raise DegenerateTargetError("reference precoders achieve zero SINR for some user")
    if np.any(leaks <= 0):
        raise DegenerateTargetError("reference precoders leak nothing; ceilings undefined")
    return SinrTargets(user_floors=floors, eve_ceilings=leaks)


def select_targets(user_channels: np.ndarray, eve_channel: np.ndarray,
                   an_precoders: np.ndarray, data_fraction: float, rho: float,
                   regularization: float | None = None) -> SinrTargets:
    """Targets from the eavesdropper-aware RZF reference at the same split.

    Builds the RZF data precoders on the channel augmented with the
    dominant eavesdropper direction, pairs them with the given
    artificial-noise precoders, and reads the achieved SINRs off that
    combination.
    """
    k = np.asarray(user_channels).shape[1]
    if regularization is None:
        regularization = k / rho
    direction = dominant_eve_direction(eve_channel)
    reference = eveaware_precoders(user_channels, direction, "rzf", regularization,
                                   data_fraction)
    v = np.asarray(an_precoders, dtype=np.complex128)
    combined = PrecoderSet(data=reference.data, artificial_noise=v,
                           data_fraction=data_fraction, scheme_id=reference.scheme_id)
    return targets_from_precoders(user_channels, eve_channel, combined, rho)


def assemble_socp(user_channels: np.ndarray, eve_channel: np.ndarray,
                  an_precoders: np.ndarray, targets: SinrTargets,
                  noise_amplitude: float) -> ConicProblem:
    """Build the explicit real cone program for the power minimization.

    Blocks, in row order:
      zero rows    -- Im(h_k^H w_k) = 0, one per user (phase fixing);
      epigraph     -- t >= norm of the stacked real precoder variables;
      user cone k  -- Re(h_k^H w_k) >= sqrt(floor_k) * norm of
                      [cross gains, fixed noise leak, receiver noise];
      eve cone k   -- norm of stream k's footprint at the eavesdropper
                      <= sqrt(ceiling_k * (AN footprint + noise)).
    """
    h = np.asarray(user_channels, dtype=np.complex128)
    he = np.asarray(eve_channel, dtype=np.complex128)
    v = np.asarray(an_precoders, dtype=np.complex128)
    if h.ndim != 2 or he.ndim != 2 or h.shape[0] != he.shape[0]:
        raise InvalidInputError("channels must be 2-D and share the antenna dimension")
    if v.ndim != 2 or v.shape[0] != h.shape[0]:
        raise InvalidInputError("an_precoders must be (N, Z)")
    if not np.isfinite(noise_amplitude) or noise_amplitude <= 0:
        raise InvalidInputError(f"noise_amplitude must be positive, got {noise_amplitude}")
    n, k = h.shape
    m = he.shape[1]
    floors = targets.user_floors
    if floors.size != k:
        raise InvalidInputError(f"got {floors.size} SINR floors for {k} users")

    n_vars = 2 * n * k + 1
    t_index = 2 * n * k
    ep_dim = 1 + 2 * n * k
    user_dim = 2 * k + 1
    eve_dim = 1 + 2 * m
    total_rows = k + ep_dim + k * user_dim + k * eve_dim

    # per-user real row templates: value row for Re(h_k^H w) over one
    # column block is [Re h_k; Im h_k], for Im(h_k^H w) it is [-Im; Re]
    re_vals = np.concatenate([h.real, h.imag], axis=0)    # (2N, K)
    im_vals = np.concatenate([-h.imag, h.real], axis=0)   # (2N, K)
    block_cols = 2 * n * np.arange(k)[:, None] + np.arange(2 * n)[None, :]  # (K, 2N)

    rows, cols, vals = [], [], []
    offset = np.zeros(total_rows)

    # zero rows: Im(h_k^H w_k) = 0
    rows.append(np.repeat(np.arange(k), 2 * n))
    cols.append(block_cols.reshape(-1))
    vals.append(im_vals.T.reshape(-1))
    base = k

    # epigraph cone: [t; all precoder variables]
    rows.append(base + np.arange(ep_dim))
    cols.append(np.concatenate([[t_index], np.arange(2 * n * k)]))
    vals.append(np.ones(ep_dim))
    base += ep_dim

    sqrt_floor = np.sqrt(floors)
    an_leak_users = np.linalg.norm(h.conj().T @ v, axis=1) if v.shape[1] else np.zeros(k)
    for u in range(k):
        r0 = base + u * user_dim
        rows.append(np.full(2 * n, r0))
        cols.append(block_cols[u])
        vals.append(re_vals[:, u])
        others = np.delete(np.arange(k), u)
        if others.size:
            tail = r0 + 1 + 2 * np.arange(others.size)
            rows.append(np.repeat(tail, 2 * n))
            cols.append(block_cols[others].reshape(-1))
            vals.append(np.tile(sqrt_floor[u] * re_vals[:, u], others.size))
            rows.append(np.repeat(tail + 1, 2 * n))
            cols.append(block_cols[others].reshape(-1))
            vals.append(np.tile(sqrt_floor[u] * im_vals[:, u], others.size))
        offset[r0 + user_dim - 2] = sqrt_floor[u] * an_leak_users[u]
        offset[r0 + user_dim - 1] = sqrt_floor[u] * noise_amplitude
    base += k * user_dim

    # eavesdropper cones share one template across streams
    eve_vals = np.empty((2 * m, 2 * n))
    eve_vals[0::2] = np.concatenate([he.real, he.imag], axis=0).T
    eve_vals[1::2] = np.concatenate([-he.imag, he.real], axis=0).T
    an_leak_eve = float(np.sum(np.abs(he.conj().T @ v) ** 2)) if v.shape[1] else 0.0
    ceiling_rhs = np.sqrt(targets.eve_ceilings * (an_leak_eve + noise_amplitude ** 2))
    for u in range(k):
        r0 = base + u * eve_dim
        rows.append(np.repeat(r0 + 1 + np.arange(2 * m), 2 * n))
        cols.append(np.tile(block_cols[u], 2 * m))
        vals.append(eve_vals.reshape(-1))
        offset[r0] = ceiling_rhs[u]
    base += k * eve_dim

    matrix = sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(total_rows, n_vars)).tocsr()
    objective = np.zeros(n_vars)
    objective[t_index] = 1.0
    soc_dims = (ep_dim,) + (user_dim,) * k + (eve_dim,) * k
    return ConicProblem(objective=objective, constraint_matrix=matrix,
                        constraint_offset=offset, n_zero_rows=k,
                        soc_dims=soc_dims, n_antennas=n, n_users=k)


def solve_socp(problem: ConicProblem, feas_tol: float = 1e-9, gap_tol: float = 1e-9,
               max_iter: int = 200, accept_tol: float = 1e-8) -> SocpSolution:
    """Solve the cone program with a deterministic interior-point solver.

    Near-converged outcomes are accepted only if the returned point
    passes an independent residual check at accept_tol; anything else
    is reported as a numerical failure rather than silently used.
    """
    import clarabel

    n = problem.n_variables
    p_mat = sparse.csc_matrix((n, n))
    a_mat = (-problem.constraint_matrix).tocsc()
    b_vec = problem.constraint_offset
    cones = [clarabel.ZeroConeT(problem.n_zero_rows)]
    cones += [clarabel.SecondOrderConeT(d) for d in problem.soc_dims]

    settings = clarabel.DefaultSettings()
    settings.verbose = False
    settings.max_iter = max_iter
    settings.tol_feas = feas_tol
    settings.tol_gap_rel = gap_tol
    settings.tol_gap_abs = gap_tol * 1e-3
    if hasattr(settings, "max_threads"):
        settings.max_threads = 1
    solver = clarabel.DefaultSolver(p_mat, problem.objective, a_mat, b_vec, cones, settings)
    result = solver.solve()
    raw = str(result.status)

    infeasible_states = {"PrimalInfeasible", "AlmostPrimalInfeasible"}
    marginal_states = {"AlmostSolved", "MaxIterations", "InsufficientProgress"}
    if raw in infeasible_states:
        return SocpSolution(status=INFEASIBLE, precoders=None,
                            objective_value=float("nan"), solver_status=raw)
    if raw not in {"Solved"} | marginal_states:
        return SocpSolution(status=NUMERICAL_FAILURE, precoders=None,
                            objective_value=float("nan"), solver_status=raw)

    x = np.asarray(result.x, dtype=np.float64)
    if not np.all(np.isfinite(x)):
        return SocpSolution(status=NUMERICAL_FAILURE, precoders=None,
                            objective_value=float("nan"), solver_status=raw)
    if raw in marginal_states:
        violation = problem.max_violation(x)
        if max(violation["zero"], violation["soc"]) > accept_tol:
            return SocpSolution(status=NUMERICAL_FAILURE, precoders=None,
                                objective_value=float("nan"), solver_status=raw)
    precoders = problem.to_precoders(x)
    power = float(np.sum(np.abs(precoders) ** 2))
    return SocpSolution(status=OPTIMAL, precoders=precoders,
                        objective_value=power, solver_status=raw)


def nonlinear_precoder(user_channels: np.ndarray, eve_channel: np.ndarray,
                       data_fraction: float, rho: float,
                       noise_amplitude: float | None = None,
                       regularization: float | None = None) -> PrecoderSet:
    """Power-minimizing data precoders re-spent on the full data budget.

    Targets come from the eavesdropper-aware RZF reference at the same
    power split; the artificial noise is kept from that reference. The
    solved matrix is scaled by one common factor so its total power is
    exactly the data budget, keeping the optimized balance between
    streams. If the solver cannot produce a verified solution, the
    reference set itself is returned with the fallback flag raised, so
    a sweep never loses a sample to solver trouble.
    """
    h = np.asarray(user_channels, dtype=np.complex128)
    he = np.asarray(eve_channel, dtype=np.complex128)
    k = h.shape[1]
    if regularization is None:
        regularization = k / rho
    if noise_amplitude is None:
        noise_amplitude = 1.0 / np.sqrt(rho)

    direction = dominant_eve_direction(he)
    reference = eveaware_precoders(h, direction, "rzf", regularization, data_fraction)
    if data_fraction == 0.0:
        # nothing to optimize with a zero data budget
        return replace(reference, scheme_id=NONLINEAR_SCHEME)

    targets = targets_from_precoders(h, he, reference, rho)
    # scale channels so the noise amplitude is 1; the optimal precoders
    # are invariant and the solver sees well-conditioned data
    s = 1.0 / noise_amplitude
    problem = assemble_socp(s * h, s * he, reference.artificial_noise, targets, 1.0)
    solution = solve_socp(problem)
    if solution.status != OPTIMAL:
        return replace(reference, scheme_id=NONLINEAR_SCHEME, fallback=True)
    total = float(np.sum(np.abs(solution.precoders) ** 2))
    if not np.isfinite(total) or total <= 0:
        return replace(reference, scheme_id=NONLINEAR_SCHEME, fallback=True)
    scaled = solution.precoders * np.sqrt(data_fraction / total)
    return PrecoderSet(data=scaled, artificial_noise=reference.artificial_noise,
                       data_fraction=data_fraction, scheme_id=NONLINEAR_SCHEME)
