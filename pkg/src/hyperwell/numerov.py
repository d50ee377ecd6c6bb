"""Independent eigenvalue oracle: Numerov shooting on the unreplaced problem.

This module solves the radial equation

    u''(r) = (2*mu/hbar**2) * (V_eff(r) - E) * u(r),
    V_eff  = D*(1 - sigma0*coth(alpha*r))**2 + hbar**2*l*(l+1)/(2*mu*r**2)

with the *exact* centrifugal term, so its eigenvalues are independent of
the closed-form spectrum and of the (gamma, c0) replacement by
construction.  Integration runs outward from near the origin with the
regular Frobenius start u ~ r**s (s from the indicial equation of the
exact potential) and inward from r_max with a decaying-exponential start;
the two branches are matched near the outer classical turning point
through a normalized Wronskian.

Level search is two-staged: bisection on the outward node count isolates
the n-th level on the broad bracket grid, then bisection on the Wronskian
sign refines it to ``energy_tol`` on a tighter grid whose r_max is rebuilt
from the isolated energy (30 e-foldings of its own tail instead of the
near-threshold allowance), which keeps the step size small where the
wavefunction actually lives.  The node count of the composite solution at
the accepted energy must equal n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numba import njit

from .errors import BracketError, ConvergenceError, DomainError
from .potential import PotentialParams, potential_value
from .spectrum import QuantumState

#: Acceptable normalized Wronskian magnitude at an accepted eigenvalue.
RESIDUAL_MAX = 1e-6

#: Outward integration starts where h**2 * W first drops below this
#: (three-point schemes lose stability when h**2 * W is of order one).
_STIFFNESS_LIMIT = 1.0


@dataclass(frozen=True)
class ShootingConfig:
    """Grid and search window of one shooting run."""

    r_min: float
    r_max: float
    n_grid: int = 20000
    energy_lo: float = -math.inf
    energy_hi: float = math.inf
    energy_tol: float = 1e-8
    max_bisections: int = 200

    def __post_init__(self):
        if not (0.0 < self.r_min < self.r_max):
            raise DomainError(f"need 0 < r_min < r_max, got {self.r_min!r}, {self.r_max!r}")
        if self.n_grid < 2000:
            raise DomainError(f"n_grid must be >= 2000, got {self.n_grid}")
        if not self.energy_lo < self.energy_hi:
            raise DomainError("energy_lo must be below energy_hi")
        if not self.energy_tol > 0.0:
            raise DomainError("energy_tol must be positive")


@dataclass(frozen=True)
class NumericLevel:
    """One numerically determined level."""

    state: QuantumState
    energy: float
    node_count_at_solution: int
    matching_residual: float


def effective_potential(p: PotentialParams, l: int, r: float) -> float:
    """V(r) plus the exact centrifugal term hbar**2*l*(l+1)/(2*mu*r**2)."""
    if l < 0:
        raise DomainError(f"l must be nonnegative, got {l!r}")
    return potential_value(p, r) + p.hbar**2 * l * (l + 1.0) / (2.0 * p.mu * r * r)


def _v_eff_array(p: PotentialParams, l: int, r: np.ndarray) -> np.ndarray:
    coth = 1.0 + 2.0 / np.expm1(2.0 * p.alpha * r)
    V = p.D * (1.0 - p.sigma0 * coth) ** 2
    return V + p.hbar**2 * l * (l + 1.0) / (2.0 * p.mu * r * r)


def resolve_config(
    p: PotentialParams,
    l: int,
    n_grid: int = 20000,
    energy_tol: float = 1e-8,
    max_bisections: int = 200,
) -> ShootingConfig:
    """Concrete grid and bracket for the full bound spectrum in channel l.

    The default bracket spans (min V_eff, threshold); r_max is the
    smallest radius giving at least 30 e-foldings of tail decay for the
    least-bound trial energy.

    Raises
    ------
    BracketError
        If no binding well exists below the continuum threshold (for
        example sigma0 = 1, where the well is purely repulsive).
    """
    threshold = p.threshold
    r_min = 1e-6 / p.alpha
    scan = np.geomspace(r_min, 300.0 / p.alpha, 6000)
    ve = _v_eff_array(p, l, scan)
    v_min = float(ve.min())
    span = threshold - v_min
    if not span > 0.0:
        raise BracketError(
            f"no binding well: min V_eff = {v_min:.6g} is not below the "
            f"threshold {threshold:.6g}")
    energy_lo = v_min + 1e-9 * span
    energy_hi = threshold - 1e-3 * span
    inside = np.nonzero(ve <= energy_hi)[0]
    r_turn = float(scan[inside[-1]])
    kappa = math.sqrt(2.0 * p.mu * (threshold - energy_hi)) / p.hbar
    r_max = r_turn + 30.0 / kappa
    return ShootingConfig(r_min=r_min, r_max=r_max, n_grid=n_grid,
                          energy_lo=energy_lo, energy_hi=energy_hi,
                          energy_tol=energy_tol, max_bisections=max_bisections)


@njit(cache=True, nogil=True)
def _numerov_kernel(W, h, i_start, u0, u1, i_match):
    """One outward+inward Numerov sweep of u'' = W u.

    Returns (normalized Wronskian at the matching index, full outward
    node count, composite node count).  Both branches rescale themselves
    when they exceed 1e250 instead of overflowing.
    """
    n = W.shape[0]
    c = -h * h / 12.0  # phi_j = 1 - h^2 W_j / 12
    win_out = np.zeros(5)
    win_in = np.zeros(5)

    nodes_full = 0
    nodes_left = 0
    prev2 = u0
    prev1 = u1
    f2 = 1.0 + c * W[i_start]
    f1 = 1.0 + c * W[i_start + 1]
    k = i_start - (i_match - 2)
    if 0 <= k < 5:
        win_out[k] = prev2
    k = i_start + 1 - (i_match - 2)
    if 0 <= k < 5:
        win_out[k] = prev1
    sign_prev = 0.0
    if prev1 != 0.0:
        sign_prev = 1.0 if prev1 > 0.0 else -1.0
    elif prev2 != 0.0:
        sign_prev = 1.0 if prev2 > 0.0 else -1.0
    for i in range(i_start + 2, n):
        f0 = 1.0 + c * W[i]
        u = ((12.0 - 10.0 * f1) * prev1 - f2 * prev2) / f0
        if abs(u) > 1e250:
            scale = 1e-250
            u *= scale
            prev1 *= scale
            # keep the stored matching window consistent while it is being
            # filled, but never dilute it with rescales that happen later
            if i <= i_match + 2:
                for k in range(5):
                    win_out[k] *= scale
        if u != 0.0:
            s = 1.0 if u > 0.0 else -1.0
            if sign_prev != 0.0 and s != sign_prev:
                nodes_full += 1
                if i <= i_match:
                    nodes_left += 1
            sign_prev = s
        prev2 = prev1
        prev1 = u
        f2 = f1
        f1 = f0
        k = i - (i_match - 2)
        if 0 <= k < 5:
            win_out[k] = u

    nodes_right = 0
    q2 = 1e-30
    kloc = math.sqrt(max(W[n - 1], 1e-30))
    q1 = q2 * math.exp(kloc * h)
    f2 = 1.0 + c * W[n - 1]
    f1 = 1.0 + c * W[n - 2]
    k = (n - 1) - (i_match - 2)
    if 0 <= k < 5:
        win_in[k] = q2
    k = (n - 2) - (i_match - 2)
    if 0 <= k < 5:
        win_in[k] = q1
    sign_prev = 1.0
    for i in range(n - 3, i_match - 3, -1):
        f0 = 1.0 + c * W[i]
        q = ((12.0 - 10.0 * f1) * q1 - f2 * q2) / f0
        if abs(q) > 1e250:
            scale = 1e-250
            q *= scale
            q1 *= scale
            for k in range(5):
                win_in[k] *= scale
        if q != 0.0:
            s = 1.0 if q > 0.0 else -1.0
            if s != sign_prev and i >= i_match:
                nodes_right += 1
            sign_prev = s
        q2 = q1
        q1 = q
        f2 = f1
        f1 = f0
        k = i - (i_match - 2)
        if 0 <= k < 5:
            win_in[k] = q

    ma = 0.0
    mb = 0.0
    for k in range(5):
        if abs(win_out[k]) > ma:
            ma = abs(win_out[k])
        if abs(win_in[k]) > mb:
            mb = abs(win_in[k])
    if ma == 0.0 or mb == 0.0:
        return 1e9, nodes_full, nodes_left + nodes_right
    for k in range(5):
        win_out[k] /= ma
        win_in[k] /= mb
    d_out = (win_out[0] - 8.0 * win_out[1] + 8.0 * win_out[3] - win_out[4]) / (12.0 * h)
    d_in = (win_in[0] - 8.0 * win_in[1] + 8.0 * win_in[3] - win_in[4]) / (12.0 * h)
    wronskian = d_out * win_in[2] - d_in * win_out[2]
    norm = abs(d_out * win_in[2]) + abs(d_in * win_out[2]) + 1e-300
    return wronskian / norm, nodes_full, nodes_left + nodes_right


@lru_cache(maxsize=64)
def _grid_data(p: PotentialParams, l: int, cfg: ShootingConfig):
    """Per-(params, channel, config) immutable grid quantities."""
    grid = np.linspace(cfg.r_min, cfg.r_max, cfg.n_grid)
    h = float(grid[1] - grid[0])
    v_eff = _v_eff_array(p, l, grid)
    i_min = int(np.argmin(v_eff))
    # start index: stable for every trial energy in the bracket
    e_ref = cfg.energy_lo if math.isfinite(cfg.energy_lo) else float(v_eff.min())
    w_ref = (2.0 * p.mu / p.hbar**2) * (v_eff - e_ref)
    ok = np.nonzero(h * h * w_ref <= _STIFFNESS_LIMIT)[0]
    i_start = int(ok[0]) if ok.size else 0
    i_start = min(i_start, cfg.n_grid - 12)
    # regular indicial exponent of the exact potential near the origin:
    # u ~ r**s, s(s-1) = l(l+1) + 2*mu*D*sigma0**2/(hbar*alpha)**2; the pure
    # power law is sign-safe at any start radius, and the admixture of the
    # irregular branch it carries decays like (r_start/r)**(2s-1)
    s_ind = 0.5 * (1.0 + math.sqrt(
        (2.0 * l + 1.0) ** 2 + 8.0 * p.mu * p.D * p.sigma0**2 / (p.hbar * p.alpha) ** 2))
    return grid, v_eff, h, i_start, i_min, s_ind


def numerov_integrate(
    p: PotentialParams, l: int, E: float, cfg: ShootingConfig
) -> tuple[float, int]:
    """Single sweep at trial energy E.

    Returns ``(mismatch, node_count)``: the normalized Wronskian of the
    outward and inward branches at the matching point (outermost
    classically allowed grid index) and the node count of the outward
    solution over the whole grid.  The count increases by one each time E
    crosses an eigenvalue from below.

    Raises
    ------
    DomainError
        If E is not below the effective potential at r_max (no decaying
        tail can be started: energy at or above the barrierless
        asymptote).
    """
    mismatch, nodes_full, _ = _sweep(p, l, E, cfg)
    return mismatch, nodes_full


def _sweep(p: PotentialParams, l: int, E: float, cfg: ShootingConfig):
    grid, v_eff, h, i_start, i_min, s_ind = _grid_data(p, l, cfg)
    if not E < v_eff[-1]:
        raise DomainError(
            f"E = {E:.6g} is not below V_eff(r_max) = {v_eff[-1]:.6g}; "
            "no turning point, cannot start a decaying tail")
    W = (2.0 * p.mu / p.hbar**2) * (v_eff - E)
    allowed = np.nonzero(v_eff <= E)[0]
    i_match = int(allowed[-1]) if allowed.size else i_min
    i_match = min(max(i_match, i_start + 5), cfg.n_grid - 6)
    r0 = grid[i_start]
    r1 = grid[i_start + 1]
    # seed scaled by r0**-s to stay in range for large indicial exponents
    u0 = 1e-150
    u1 = (r1 / r0) ** s_ind * 1e-150
    return _numerov_kernel(W, h, i_start, u0, u1, i_match)


def _refined_config(
    p: PotentialParams, l: int, cfg: ShootingConfig, e_estimate: float
) -> ShootingConfig:
    """Rebuild r_max from an energy estimate: its turning point + 30 e-folds."""
    grid, v_eff = _grid_data(p, l, cfg)[:2]
    threshold = p.threshold
    kappa = math.sqrt(2.0 * p.mu * max(threshold - e_estimate, 1e-30)) / p.hbar
    inside = np.nonzero(v_eff <= e_estimate)[0]
    r_turn = float(grid[inside[-1]]) if inside.size else float(grid[int(np.argmin(v_eff))])
    r_max = min(max(r_turn + 30.0 / kappa, 1.5 * r_turn, 20.0 * cfg.r_min), cfg.r_max)
    return ShootingConfig(r_min=cfg.r_min, r_max=r_max, n_grid=cfg.n_grid,
                          energy_lo=cfg.energy_lo, energy_hi=cfg.energy_hi,
                          energy_tol=cfg.energy_tol, max_bisections=cfg.max_bisections)


def find_level(
    p: PotentialParams, state: QuantumState, cfg: ShootingConfig | None = None
) -> NumericLevel:
    """Locate the n-th level of channel l, independent of the closed form.

    Stage 1 bisects on the outward node count until the window
    [count = n, count = n+1] is narrow; stage 2 rebuilds the grid around
    the isolated energy and bisects on the Wronskian sign down to
    ``energy_tol``.

    Raises
    ------
    BracketError
        If the energy bracket does not contain a level with n nodes.
    ConvergenceError
        If a bisection stage exhausts ``max_bisections``, or the accepted
        solution fails its node-count/residual validation.
    """
    n, l = state.n, state.l
    if cfg is None:
        cfg = resolve_config(p, l)
    lo = cfg.energy_lo
    hi = cfg.energy_hi
    if not (math.isfinite(lo) and math.isfinite(hi)):
        auto = resolve_config(p, l, cfg.n_grid, cfg.energy_tol, cfg.max_bisections)
        lo = lo if math.isfinite(lo) else auto.energy_lo
        hi = hi if math.isfinite(hi) else auto.energy_hi
    _, cnt_lo, _ = _sweep(p, l, lo, cfg)
    _, cnt_hi, _ = _sweep(p, l, hi, cfg)
    if cnt_lo > n or cnt_hi < n + 1:
        raise BracketError(
            f"no level with n = {n} inside [{lo:.6g}, {hi:.6g}]: node counts "
            f"run {cnt_lo}..{cnt_hi}")
    # stage 1: node-count isolation on the broad grid; the window stays wide
    # enough to absorb the discretization shift between this grid and the
    # refined one used below
    window = max(1e-4, 64.0 * cfg.energy_tol)
    steps = 0
    while hi - lo > window:
        steps += 1
        if steps > cfg.max_bisections:
            raise ConvergenceError("node-count bisection exhausted max_bisections")
        mid = 0.5 * (lo + hi)
        _, cnt, _ = _sweep(p, l, mid, cfg)
        if cnt >= n + 1:
            hi = mid
        else:
            lo = mid
    # stage 2a: re-isolate on the refined grid (its eigenvalue sits within
    # the two grids' mutual discretization shift of the coarse window)
    fine = _refined_config(p, l, cfg, hi)
    _, v_eff_fine = _grid_data(p, l, fine)[:2]
    hi_cap = float(v_eff_fine[-1]) - 1e-9 * (1.0 + abs(float(v_eff_fine[-1])))
    pad = max(1e-3 * (1.0 + abs(hi)), 100.0 * cfg.energy_tol)
    lo = max(lo - pad, cfg.energy_lo)
    hi = min(hi + pad, cfg.energy_hi, hi_cap)
    for _ in range(6):
        _, c_lo, _ = _sweep(p, l, lo, fine)
        _, c_hi, _ = _sweep(p, l, hi, fine)
        if c_lo <= n and c_hi >= n + 1:
            break
        pad *= 2.0
        lo = max(lo - pad, cfg.energy_lo)
        hi = min(hi + pad, cfg.energy_hi, hi_cap)
    else:
        raise ConvergenceError(
            f"padded window [{lo:.9g}, {hi:.9g}] does not re-isolate level "
            f"n = {n} on the refined grid")
    window = max(64.0 * cfg.energy_tol, (hi - lo) * 2.0**-46)
    steps = 0
    while hi - lo > window:
        steps += 1
        if steps > cfg.max_bisections:
            raise ConvergenceError("refined node-count bisection exhausted max_bisections")
        mid = 0.5 * (lo + hi)
        _, cnt, _ = _sweep(p, l, mid, fine)
        if cnt >= n + 1:
            hi = mid
        else:
            lo = mid
    # stage 2b: Wronskian sign refinement inside the tight window
    w_lo, _, _ = _sweep(p, l, lo, fine)
    w_hi, _, _ = _sweep(p, l, hi, fine)
    if math.copysign(1.0, w_lo) == math.copysign(1.0, w_hi) and w_lo != 0.0 and w_hi != 0.0:
        raise ConvergenceError(
            f"matching mismatch does not change sign across the isolated window "
            f"[{lo:.9g}, {hi:.9g}]")
    if w_lo == 0.0:
        hi = lo
    elif w_hi == 0.0:
        lo = hi
    steps = 0
    while hi - lo > cfg.energy_tol:
        steps += 1
        if steps > cfg.max_bisections:
            raise ConvergenceError("mismatch bisection exhausted max_bisections")
        mid = 0.5 * (lo + hi)
        w_mid, _, _ = _sweep(p, l, mid, fine)
        if w_mid == 0.0:
            lo = hi = mid
            break
        if math.copysign(1.0, w_mid) == math.copysign(1.0, w_lo):
            lo, w_lo = mid, w_mid
        else:
            hi = mid
    energy = 0.5 * (lo + hi)
    residual, _, nodes_comp = _sweep(p, l, energy, fine)
    if nodes_comp != n:
        raise ConvergenceError(
            f"accepted energy {energy:.9g} has {nodes_comp} nodes, expected {n}")
    if abs(residual) > RESIDUAL_MAX:
        raise ConvergenceError(
            f"matching residual {abs(residual):.3e} above {RESIDUAL_MAX:.1e} "
            f"at accepted energy {energy:.9g}")
    return NumericLevel(state=state, energy=energy,
                        node_count_at_solution=nodes_comp,
                        matching_residual=abs(residual))
