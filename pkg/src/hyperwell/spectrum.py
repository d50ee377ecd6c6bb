"""Closed-form bound-state energies of the hyperbolic coth-squared well.

With the centrifugal replacement in place, the radial problem maps onto a
hypergeometric one under ``z = exp(-2*alpha*r)`` and yields discrete
levels labelled by the radial quantum number ``n`` and the orbital
momentum ``l``:

    E(n, l) = D*(1-sigma0)**2
              + (2*alpha**2*hbar**2/mu) * l*(l+1) * c0
              - (2*alpha**2*hbar**2/mu) * beta**2

where, in terms of nu = mu*D/(2*alpha**2*hbar**2),

    delta = ( -1 + sqrt(16*nu*sigma0**2 + (1+2*l)**2) ) / 2
    beta  = -( (n+1)**2 + l*(l+1) + (2n+1)*delta - 4*nu*sigma0*(1-sigma0) )
            / ( 2*(n + delta + 1) )

``beta`` is the dimensionless decay rate of the radial tail
``exp(-2*alpha*beta*r)``; a level is physical (bound) only when
``beta > 0``, which is exposed as ``EnergyLevel.is_bound`` instead of an
error so callers can enumerate the finite bound spectrum.

The ``l = 0`` channel needs no centrifugal replacement, so the s-wave
formula is exact for this well.  For ``sigma0 = 1`` the well degenerates
to a purely repulsive barrier (no bound states); the closed form still
evaluates and consistently reports ``beta < 0`` for every state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .potential import ApproxConstants, PotentialParams, solve_approx_constants


@dataclass(frozen=True)
class QuantumState:
    """Radial quantum number n >= 0 and orbital momentum l >= 0."""

    n: int
    l: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"n must be a nonnegative integer, got {self.n!r}")
        if not isinstance(self.l, int) or self.l < 0:
            raise DomainError(f"l must be a nonnegative integer, got {self.l!r}")


@dataclass(frozen=True)
class SpectralParams:
    """Dimensionless quantities entering the closed-form level of one state.

    ``eps_prime_sq`` is the combination -mu*E/(2*alpha**2*hbar**2) + delta_E_l;
    it may be negative for loosely bound states, while
    ``beta**2 = eps_prime_sq + nu*(1-sigma0)**2`` always holds.
    """

    nu: float
    delta: float
    beta: float
    delta_E_l: float
    eps_prime_sq: float


@dataclass(frozen=True)
class EnergyLevel:
    """One closed-form level: energy, tail exponent beta, index delta."""

    state: QuantumState
    energy: float
    beta: float
    delta: float
    is_bound: bool


def compute_nu(p: PotentialParams) -> float:
    """Depth ratio nu = mu*D/(2*alpha**2*hbar**2)."""
    return p.mu * p.D / (2.0 * p.alpha**2 * p.hbar**2)


def compute_delta(p: PotentialParams, l: int) -> float:
    """Index delta = (-1 + sqrt(16*nu*sigma0**2 + (1+2l)**2))/2.

    The square-root argument is >= 1, so delta >= 0 always; for sigma0 -> 0
    it reduces to l.  At l = 0 this coincides with the s-wave index
    (-1 + sqrt(1 + 8*mu*D*sigma0**2/(alpha**2*hbar**2)))/2.
    """
    if l < 0:
        raise DomainError(f"l must be nonnegative, got {l!r}")
    nu = compute_nu(p)
    return 0.5 * (-1.0 + math.sqrt(16.0 * nu * p.sigma0**2 + (1.0 + 2.0 * l) ** 2))


def compute_beta(p: PotentialParams, state: QuantumState) -> float:
    """Tail exponent beta of one state (quotient form; sign meaningful).

    A negative return is not an error: it flags that the formal level is
    not a bound state.  The matching constants do not enter beta; c0 only
    shifts the energy through the l*(l+1) term.
    """
    n, l = state.n, state.l
    nu = compute_nu(p)
    delta = compute_delta(p, l)
    numer = (n + 1.0) ** 2 + l * (l + 1.0) + (2.0 * n + 1.0) * delta \
        - 4.0 * nu * p.sigma0 * (1.0 - p.sigma0)
    return -numer / (2.0 * (n + delta + 1.0))


def energy_level(
    p: PotentialParams, state: QuantumState, constants: ApproxConstants | None = None
) -> EnergyLevel:
    """Closed-form level E(n, l); ``is_bound`` is true iff beta > 0.

    Self-consistency: for every bound level,
    sqrt(-mu*E/(2*alpha**2*hbar**2) + l(l+1)*c0 + nu*(1-sigma0)**2)
    reproduces beta exactly.
    """
    if constants is None:
        constants = solve_approx_constants()
    n, l = state.n, state.l
    delta = compute_delta(p, l)
    beta = compute_beta(p, state)
    scale = 2.0 * p.alpha**2 * p.hbar**2 / p.mu
    energy = p.D * (1.0 - p.sigma0) ** 2 + scale * l * (l + 1.0) * constants.c0 \
        - scale * beta * beta
    return EnergyLevel(state=state, energy=energy, beta=beta, delta=delta,
                       is_bound=beta > 0.0)


def spectral_params(
    p: PotentialParams, state: QuantumState, constants: ApproxConstants | None = None
) -> SpectralParams:
    """All dimensionless spectral quantities of one state."""
    if constants is None:
        constants = solve_approx_constants()
    level = energy_level(p, state, constants)
    nu = compute_nu(p)
    delta_E_l = state.l * (state.l + 1.0) * constants.c0
    scale = 2.0 * p.alpha**2 * p.hbar**2 / p.mu
    eps_prime_sq = -level.energy / scale + delta_E_l
    return SpectralParams(nu=nu, delta=level.delta, beta=level.beta,
                          delta_E_l=delta_E_l, eps_prime_sq=eps_prime_sq)


def s_wave_energy(p: PotentialParams, n: int) -> EnergyLevel:
    """Exact l = 0 level (no centrifugal replacement involved).

    Identical to ``energy_level`` at l = 0; kept as a separate arithmetic
    path because the s-wave closed form is exact and serves as a strong
    cross-check of the numeric oracle.
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    nu = compute_nu(p)
    delta1 = 0.5 * (-1.0 + math.sqrt(
        1.0 + 8.0 * p.mu * p.D * p.sigma0**2 / (p.alpha**2 * p.hbar**2)))
    numer = (n + 1.0) ** 2 + (2.0 * n + 1.0) * delta1 \
        - 4.0 * nu * p.sigma0 * (1.0 - p.sigma0)
    beta1 = -numer / (2.0 * (n + delta1 + 1.0))
    scale = 2.0 * p.alpha**2 * p.hbar**2 / p.mu
    energy = p.D * (1.0 - p.sigma0) ** 2 - scale * beta1 * beta1
    state = QuantumState(n=n, l=0)
    return EnergyLevel(state=state, energy=energy, beta=beta1, delta=delta1,
                       is_bound=beta1 > 0.0)


def sigma1_energy(
    p: PotentialParams, state: QuantumState, constants: ApproxConstants | None = None
) -> EnergyLevel:
    """Closed form for the degenerate sigma0 = 1 well (purely repulsive).

    The well reduces to 4*D*exp(-4*alpha*r)/(1 - exp(-2*alpha*r))**2 > 0,
    so no bound state exists; every returned level has beta < 0 and
    ``is_bound = False``.  The formula is retained because it is the
    sigma0 -> 1 limit of the general closed form.

    Raises
    ------
    DomainError
        If p.sigma0 != 1.
    """
    if p.sigma0 != 1.0:
        raise DomainError(f"sigma1_energy requires sigma0 = 1, got {p.sigma0!r}")
    if constants is None:
        constants = solve_approx_constants()
    n, l = state.n, state.l
    delta2 = 0.5 * (-1.0 + math.sqrt(
        8.0 * p.mu * p.D / (p.alpha**2 * p.hbar**2) + (1.0 + 2.0 * l) ** 2))
    numer = (n + 1.0) ** 2 + l * (l + 1.0) + (2.0 * n + 1.0) * delta2
    beta2 = -numer / (2.0 * (n + delta2 + 1.0))
    scale = 2.0 * p.alpha**2 * p.hbar**2 / p.mu
    energy = scale * l * (l + 1.0) * constants.c0 - scale * beta2 * beta2
    return EnergyLevel(state=state, energy=energy, beta=beta2, delta=delta2,
                       is_bound=beta2 > 0.0)
