"""Hyperbolic coth-squared well and the shifted centrifugal replacement.

The well is

    V(r) = D * (1 - sigma0 * coth(alpha*r))**2

with three positive shape parameters: an energy scale ``D``, a screening
rate ``alpha`` (inverse length) and a dimensionless asymmetry ``sigma0``.
The origin carries a repulsive ``~ D*sigma0**2/(alpha*r)**2`` wall and the
continuum threshold is ``V(inf) = D*(1-sigma0)**2``.

For ``l != 0`` the centrifugal barrier ``1/r**2`` spoils closed-form
solvability.  It is replaced by an expression from the same exponential
family as the well,

    1/r**2  ~=  4*alpha**2 * (c0 + v + v**2),
    v       =   exp(-2*alpha*r) / (1 - exp(-2*alpha*r)),

governed by a universal dimensionless pair ``(gamma, c0)``:

* the *value* condition ``gamma**2 * (c0 + u + u**2) = 1`` with
  ``u = 1/(exp(gamma) - 1)`` makes the replacement exact at the reference
  radius ``r0 = gamma/(2*alpha)`` and determines ``c0`` from ``gamma``;
* the *slope* condition ``gamma**3 * (u + 3*u**2 + 2*u**3) = 2`` would make
  the first derivatives match there as well.  That expression equals
  ``2*t**3*cosh(t)/sinh(t)**3`` with ``t = gamma/2``, which is strictly
  below 2 for every positive ``t``, so the slope condition admits no
  finite solution; it is met only in the ``gamma -> 0`` limit, where the
  replacement becomes exact everywhere.  The scheme's canonical operating
  point ``gamma = 0.4990429999`` is therefore pinned as a constant, and
  its slope deficit (about -5.1e-4) is reported rather than hidden.

``c0 = 0`` recovers the conventional replacement ``4*alpha**2*(v + v**2)``.
All functions here are pure; the constants are computed once and cached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConvergenceError, DomainError

#: Canonical dimensionless reference point of the centrifugal replacement,
#: gamma = 2*alpha*r0.  See the module docstring for why this is a pinned
#: constant rather than the root of the slope condition.
MATCH_GAMMA = 0.4990429999


@dataclass(frozen=True)
class PotentialParams:
    """Physical inputs of the well, atomic units by default (mu = hbar = 1).

    Attributes
    ----------
    D : float
        Energy scale of the well, > 0.
    alpha : float
        Screening rate (inverse length), > 0.
    sigma0 : float
        Dimensionless asymmetry parameter, > 0.
    mu : float
        Reduced mass, > 0.
    hbar : float
        Action quantum, > 0.
    """

    D: float
    alpha: float
    sigma0: float
    mu: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("D", "alpha", "sigma0", "mu", "hbar"):
            value = getattr(self, name)
            if not (value > 0.0) or not math.isfinite(value):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")

    @property
    def threshold(self) -> float:
        """Continuum threshold V(inf) = D*(1 - sigma0)**2."""
        return self.D * (1.0 - self.sigma0) ** 2


@dataclass(frozen=True)
class ApproxConstants:
    """Universal pair (gamma, c0) of the centrifugal replacement.

    ``residual_first`` is the value-condition residual
    ``gamma**2*(c0 + u + u**2) - 1`` (zero up to rounding, by construction).
    ``residual_second`` is the slope-condition residual
    ``gamma**3*(u + 3u**2 + 2u**3) - 2``; at the canonical operating point
    it is about -5.07e-4 and cannot be reduced at any positive gamma.
    """

    gamma: float
    c0: float
    residual_first: float
    residual_second: float


def _coth(x: float) -> float:
    # 1 + 2/(e^{2x} - 1); expm1 keeps precision for small x, and the
    # explicit cutoff avoids the overflow of e^{2x} (coth is 1.0 to double
    # precision long before that)
    if x > 350.0:
        return 1.0
    return 1.0 + 2.0 / math.expm1(2.0 * x)


def _exp_shift(gamma: float) -> float:
    """u = 1/(exp(gamma) - 1)."""
    return 1.0 / math.expm1(gamma)


def matching_value_residual(gamma: float, c0: float) -> float:
    """Residual of the value condition gamma**2*(c0 + u + u**2) - 1."""
    u = _exp_shift(gamma)
    return gamma * gamma * (c0 + u + u * u) - 1.0


def matching_slope_residual(gamma: float) -> float:
    """Residual of the slope condition gamma**3*(u + 3u**2 + 2u**3) - 2.

    Strictly negative for every gamma > 0; tends to 0 from below as
    gamma -> 0.
    """
    u = _exp_shift(gamma)
    return gamma**3 * (u + 3.0 * u * u + 2.0 * u**3) - 2.0


@lru_cache(maxsize=None)
def solve_approx_constants(tolerance: float = 1e-12) -> ApproxConstants:
    """Return the universal (gamma, c0) pair with both matching residuals.

    ``c0`` is obtained from the value condition at the canonical gamma,

        c0 = 1/gamma**2 - 1/(e^gamma - 1) - 1/(e^gamma - 1)**2,

    which reproduces 0.0823058167837972 to full double precision.  The
    value-condition residual must come out below ``tolerance``; the slope
    residual is reported as-is (see module docstring).

    Raises
    ------
    ConvergenceError
        If the value condition cannot be satisfied to ``tolerance``
        (cannot happen for sane tolerances; guards against misuse such as
        tolerance = 0).
    """
    if not tolerance > 0.0:
        raise DomainError(f"tolerance must be positive, got {tolerance!r}")
    gamma = MATCH_GAMMA
    u = _exp_shift(gamma)
    c0 = 1.0 / (gamma * gamma) - u - u * u
    first = matching_value_residual(gamma, c0)
    second = matching_slope_residual(gamma)
    if abs(first) > tolerance:
        raise ConvergenceError(
            f"value-condition residual {first:.3e} exceeds tolerance {tolerance:.3e}"
        )
    return ApproxConstants(gamma=gamma, c0=c0, residual_first=first, residual_second=second)


def potential_value(p: PotentialParams, r: float) -> float:
    """Evaluate V(r) = D*(1 - sigma0*coth(alpha*r))**2.

    Diverges like D*sigma0**2/(alpha*r)**2 as r -> 0+ and tends to
    D*(1-sigma0)**2 as r -> inf.

    Raises
    ------
    DomainError
        If r <= 0 (coth pole).
    """
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r!r}")
    return p.D * (1.0 - p.sigma0 * _coth(p.alpha * r)) ** 2


def centrifugal_approx(alpha: float, c0: float, r: float) -> float:
    """Exponential replacement of 1/r**2: 4*alpha**2*(c0 + v + v**2).

    ``v = exp(-2*alpha*r)/(1 - exp(-2*alpha*r))`` is evaluated as
    ``1/expm1(2*alpha*r)``, which is stable for small ``alpha*r``.  With
    ``c0 = 0`` this is the conventional replacement.  Algebraically
    ``v + v**2 == z/(1-z)**2`` for ``z = exp(-2*alpha*r)``.

    Raises
    ------
    DomainError
        If r <= 0 or alpha <= 0.
    """
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r!r}")
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if alpha * r > 350.0:
        v = 0.0
    else:
        v = 1.0 / math.expm1(2.0 * alpha * r)
    return 4.0 * alpha * alpha * (c0 + v + v * v)


def approx_relative_error(alpha: float, c0: float, r: float) -> float:
    """Relative error |approx - 1/r**2| * r**2 of the replacement at r.

    Vanishes at r0 = gamma/(2*alpha) when (gamma, c0) satisfy the value
    condition, and shrinks like alpha**2 at fixed r as alpha -> 0.
    """
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r!r}")
    return abs(centrifugal_approx(alpha, c0, r) - 1.0 / (r * r)) * r * r
