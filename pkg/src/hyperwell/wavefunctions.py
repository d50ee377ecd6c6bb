"""Normalized radial wavefunctions of the closed-form levels.

A bound level (beta > 0, index delta) has the radial profile

    R(r) = N * exp(-2*alpha*beta*r) * (1 - z)**(1+delta)
             * P_n^(2*beta, 2*delta+1)(1 - 2*z),        z = exp(-2*alpha*r)

with P the Jacobi polynomial of degree n (real, non-classical indices).
R vanishes like r**(1+delta) at the origin and decays like
exp(-2*alpha*beta*r); the degree n equals the number of interior nodes.

The normalization constant N is fixed by integrating R**2 over (0, inf).
Two routes are provided: composite Gauss-Legendre quadrature (the
authority), and a printed closed-form double sum over Gamma functions
(``normalization_analytic``).  The double sum is implemented exactly as
printed in its source and audited against quadrature rather than trusted:
for n = 0 it overestimates the squared norm by exactly 2*beta, and the
n = 1, 2 ratios are n-dependent, so it carries a typo.  Use
``normalization_audit`` to reproduce the comparison.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DomainError,
    InsufficientSamplingError,
    TailTooLargeError,
    UnboundStateError,
)
from .potential import PotentialParams
from .spectrum import EnergyLevel, QuantumState

#: Slack accepted outside [-1, 1] before a Jacobi argument is rejected.
_X_SLACK = 1e-12

#: Gauss-Legendre nodes per quadrature panel.
_GL_ORDER = 12


@dataclass(frozen=True)
class JacobiParams:
    """Jacobi polynomial indices (a, b) > -1 and degree n >= 0."""

    a: float
    b: float
    n: int

    def __post_init__(self):
        if not (self.a > -1.0 and self.b > -1.0):
            raise DomainError(f"Jacobi indices must exceed -1, got a={self.a!r} b={self.b!r}")
        if not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"degree must be a nonnegative integer, got {self.n!r}")


@dataclass(frozen=True, eq=False)
class RadialSolution:
    """Sampled normalized radial wavefunction with grid metadata."""

    state: QuantumState
    level: EnergyLevel
    norm_constant: float
    r: np.ndarray
    R: np.ndarray
    node_count: int

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.r.tolist(), self.R.tolist()))


def jacobi_eval(jp: JacobiParams, x):
    """P_n^(a,b)(x) by the three-term recurrence in the degree.

    Stable for real indices; exact for n = 0 (1) and
    n = 1 ((a+1) + (a+b+2)(x-1)/2).  Accepts scalars or arrays.

    Raises
    ------
    DomainError
        If any x lies outside [-1, 1] beyond a 1e-12 slack.
    """
    xs = np.asarray(x, dtype=float)
    if np.any(np.abs(xs) > 1.0 + _X_SLACK):
        raise DomainError("Jacobi argument outside [-1, 1]")
    a, b, n = jp.a, jp.b, jp.n
    p_prev = np.ones_like(xs)
    if n == 0:
        return float(p_prev) if np.ndim(x) == 0 else p_prev
    p_cur = (a + 1.0) + (a + b + 2.0) * (xs - 1.0) / 2.0
    for k in range(2, n + 1):
        c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0)
        c2 = (2.0 * k + a + b - 1.0) * (a * a - b * b)
        c3 = (2.0 * k + a + b - 1.0) * (2.0 * k + a + b) * (2.0 * k + a + b - 2.0)
        c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b)
        p_next = ((c2 + c3 * xs) * p_cur - c4 * p_prev) / c1
        p_prev, p_cur = p_cur, p_next
    return float(p_cur) if np.ndim(x) == 0 else p_cur


def _radial_shape(p: PotentialParams, level: EnergyLevel, r: np.ndarray) -> np.ndarray:
    """Unnormalized R(r); r must be positive."""
    beta, delta, n = level.beta, level.delta, level.state.n
    z = np.exp(-2.0 * p.alpha * r)
    envelope = np.exp(-2.0 * p.alpha * beta * r) * (1.0 - z) ** (1.0 + delta)
    poly = jacobi_eval(JacobiParams(a=2.0 * beta, b=2.0 * delta + 1.0, n=n), 1.0 - 2.0 * z)
    return envelope * poly


def radial_wavefunction(p: PotentialParams, level: EnergyLevel, r, norm: float | None = None):
    """Normalized R(r) at one or many radii.

    ``norm`` defaults to the quadrature normalization of the level
    (computed once and cached per (params, level)).

    Raises
    ------
    UnboundStateError
        If the level is not bound (no decaying tail exists).
    DomainError
        If any r <= 0.
    """
    if not level.is_bound:
        raise UnboundStateError(f"level {level.state} is not bound (beta={level.beta:.6g})")
    rs = np.asarray(r, dtype=float)
    if np.any(rs <= 0.0):
        raise DomainError("r must be positive")
    if norm is None:
        norm = _default_norm(p, level)
    out = norm * _radial_shape(p, level, rs)
    return float(out) if np.ndim(r) == 0 else out


def default_r_max(p: PotentialParams, level: EnergyLevel) -> float:
    """Sampling cutoff: tail suppressed to e**-30, at least 10 screening lengths."""
    return max(30.0 / (2.0 * p.alpha * level.beta), 10.0 / p.alpha)


def default_grid(p: PotentialParams, level: EnergyLevel, n_points: int = 4000) -> np.ndarray:
    """Geometric-then-uniform hybrid grid on (1e-6, r_max).

    The geometric quarter resolves the r**(1+delta) turn-on near the
    origin; the uniform remainder resolves the oscillations and the
    exponential tail.
    """
    r_min = 1e-6
    r_max = default_r_max(p, level)
    n_geo = n_points // 4
    r_knee = min(0.5 / p.alpha, 0.1 * r_max)
    r_knee = max(r_knee, 100.0 * r_min)
    geo = np.geomspace(r_min, r_knee, n_geo, endpoint=False)
    uni = np.linspace(r_knee, r_max, n_points - n_geo)
    return np.concatenate([geo, uni])


def normalization_quadrature(
    p: PotentialParams,
    level: EnergyLevel,
    r_max: float | None = None,
    n_points: int = 4000,
) -> float:
    """Normalization constant from composite Gauss-Legendre quadrature.

    Integrates the unnormalized R**2 over (0, r_max] on ``n_points``
    nodes (12-point panels) and adds the analytic exponential tail bound
    R(r_max)**2/(4*alpha*beta), then returns 1/sqrt(integral).

    Raises
    ------
    TailTooLargeError
        If exp(-2*alpha*beta*r_max) >= 1e-12 (truncated tail too fat).
    DomainError
        If n_points < 1000 or the level is unbound.
    """
    if not level.is_bound:
        raise UnboundStateError(f"level {level.state} is not bound (beta={level.beta:.6g})")
    if n_points < 1000:
        raise DomainError(f"n_points must be >= 1000, got {n_points}")
    if r_max is None:
        r_max = default_r_max(p, level)
    decay = 2.0 * p.alpha * level.beta * r_max
    if not decay > -math.log(1e-12):
        raise TailTooLargeError(
            f"exp(-2*alpha*beta*r_max) = {math.exp(-decay):.3e} is not below 1e-12")
    n_panels = max(n_points // _GL_ORDER, 8)
    # mild clustering of panel edges toward the origin
    edges = r_max * np.linspace(0.0, 1.0, n_panels + 1) ** 1.5
    nodes, weights = np.polynomial.legendre.leggauss(_GL_ORDER)
    lo = edges[:-1][:, None]
    hi = edges[1:][:, None]
    rs = 0.5 * (hi - lo) * nodes[None, :] + 0.5 * (hi + lo)
    ws = 0.5 * (hi - lo) * weights[None, :]
    shape = _radial_shape(p, level, rs.ravel())
    integral = float(np.sum(ws.ravel() * shape * shape))
    tail = float(_radial_shape(p, level, np.array([r_max]))[0]) ** 2 \
        / (4.0 * p.alpha * level.beta)
    integral += tail
    return 1.0 / math.sqrt(integral)


def _printed_norm_sum(p: PotentialParams, level: EnergyLevel) -> float:
    """The closed-form double sum s(n), exactly as printed in its source.

    Evaluated in log space with explicit sign tracking: Gamma arguments
    like (n + 2*beta + 1) overflow binary64 well before beta ~ 16 if the
    ratios are formed naively.
    """
    n = level.state.n
    tb = 2.0 * level.beta
    td = 2.0 * level.delta
    lg = math.lgamma
    pref_log = lg(n + td + 2.0) + 2.0 * lg(n + tb + 1.0) - lg(n + tb + td + 2.0)
    term_logs = []
    term_signs = []
    for pi in range(n + 1):
        for ri in range(n + 1):
            t = (lg(n + tb + ri - pi + 1.0) + math.log(pi + td + 2.0)
                 - lg(pi + 1.0) - lg(ri + 1.0) - lg(n - pi + 1.0) - lg(n - ri + 1.0)
                 - lg(n + tb - pi + 1.0) - lg(tb + ri + 1.0)
                 - math.log(n + tb + ri + td + 2.0))
            term_logs.append(t)
            term_signs.append(-1.0 if (pi + ri) % 2 else 1.0)
    m = max(term_logs)
    acc = sum(s * math.exp(t - m) for s, t in zip(term_signs, term_logs))
    if acc == 0.0:
        return 0.0
    sign = (-1.0 if n % 2 else 1.0) * math.copysign(1.0, acc)
    return sign * math.exp(pref_log + m + math.log(abs(acc))) / (2.0 * p.alpha)


def normalization_analytic(p: PotentialParams, level: EnergyLevel) -> float:
    """Normalization constant 1/sqrt(s(n)) from the printed double sum.

    Reported side by side with the quadrature value, never trusted: the
    printed sum disagrees with the true norm (see module docstring).  A
    nonpositive s(n) yields NaN with a warning instead of an exception.
    """
    if not level.is_bound:
        raise UnboundStateError(f"level {level.state} is not bound (beta={level.beta:.6g})")
    s = _printed_norm_sum(p, level)
    if not s > 0.0:
        warnings.warn(
            f"printed normalization sum is nonpositive (s={s:.6g}) for {level.state}; "
            "returning NaN", stacklevel=2)
        return math.nan
    return 1.0 / math.sqrt(s)


def normalization_audit(p: PotentialParams, level: EnergyLevel, n_points: int = 4000) -> dict:
    """Compare the printed normalization sum against quadrature.

    Returns a dict with both squared-norm integrals, both constants and
    their ratio; ``ratio_printed_over_quadrature`` equals 2*beta exactly
    at n = 0.
    """
    n_quad = normalization_quadrature(p, level, n_points=n_points)
    s_quad = 1.0 / (n_quad * n_quad)
    s_printed = _printed_norm_sum(p, level)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        n_printed = normalization_analytic(p, level)
    return {
        "n": level.state.n,
        "l": level.state.l,
        "beta": level.beta,
        "s_quadrature": s_quad,
        "s_printed": s_printed,
        "norm_quadrature": n_quad,
        "norm_printed": n_printed,
        "ratio_printed_over_quadrature": s_printed / s_quad,
    }


def count_nodes(samples) -> int:
    """Number of strict interior sign changes of sampled R(r).

    ``samples`` is an ordered sequence of (r, R) pairs, at least 100 of
    them.  Exact zeros (underflowed tails) do not break a sign run.

    Raises
    ------
    InsufficientSamplingError
        If the sampling is locally coarser than a quarter of the shortest
        observed oscillation scale (the minimum gap between consecutive
        sign changes).
    DomainError
        If fewer than 100 samples or radii are not strictly increasing.
    """
    arr = np.asarray(samples, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise DomainError("samples must be a sequence of (r, R) pairs")
    if arr.shape[0] < 100:
        raise DomainError(f"need at least 100 samples, got {arr.shape[0]}")
    r = arr[:, 0]
    R = arr[:, 1]
    if np.any(np.diff(r) <= 0.0):
        raise DomainError("sample radii must be strictly increasing")
    nz = np.nonzero(R)[0]
    if nz.size < 2:
        return 0
    signs = np.sign(R[nz])
    flips = np.nonzero(signs[1:] != signs[:-1])[0]
    n_flips = int(flips.size)
    if n_flips >= 2:
        flip_r = 0.5 * (r[nz[flips]] + r[nz[flips + 1]])
        g_min = float(np.min(np.diff(flip_r)))
        span = (r >= flip_r[0] - g_min) & (r <= flip_r[-1] + g_min)
        idx = np.nonzero(span)[0]
        if idx.size >= 2:
            max_dr = float(np.max(np.diff(r[idx])))
            if max_dr > 0.25 * g_min:
                raise InsufficientSamplingError(
                    f"sample spacing {max_dr:.3g} exceeds a quarter of the shortest "
                    f"oscillation scale {g_min:.3g}")
    return n_flips


def sample_radial(p: PotentialParams, level: EnergyLevel, n_points: int = 4000) -> RadialSolution:
    """Sample the normalized wavefunction on the default hybrid grid."""
    if not level.is_bound:
        raise UnboundStateError(f"level {level.state} is not bound (beta={level.beta:.6g})")
    norm = _default_norm(p, level)
    r = default_grid(p, level, n_points)
    R = norm * _radial_shape(p, level, r)
    nodes = count_nodes(np.column_stack([r, R]))
    return RadialSolution(state=level.state, level=level, norm_constant=norm,
                          r=r, R=R, node_count=nodes)


def overlap_integral(p: PotentialParams, level_a: EnergyLevel, level_b: EnergyLevel,
                     n_points: int = 4000) -> float:
    """Diagnostic overlap integral of two normalized states under dr.

    States of equal l but different n are *not* orthogonal under the
    plain dr measure here, because beta (and hence the weight) differs
    per level; the value is reported, not asserted against.
    """
    na = _default_norm(p, level_a)
    nb = _default_norm(p, level_b)
    r_max = max(default_r_max(p, level_a), default_r_max(p, level_b))
    n_panels = max(n_points // _GL_ORDER, 8)
    edges = r_max * np.linspace(0.0, 1.0, n_panels + 1) ** 1.5
    nodes, weights = np.polynomial.legendre.leggauss(_GL_ORDER)
    lo = edges[:-1][:, None]
    hi = edges[1:][:, None]
    rs = (0.5 * (hi - lo) * nodes[None, :] + 0.5 * (hi + lo)).ravel()
    ws = (0.5 * (hi - lo) * weights[None, :]).ravel()
    fa = na * _radial_shape(p, level_a, rs)
    fb = nb * _radial_shape(p, level_b, rs)
    return float(np.sum(ws * fa * fb))


@lru_cache(maxsize=256)
def _default_norm(p: PotentialParams, level: EnergyLevel) -> float:
    return normalization_quadrature(p, level)
