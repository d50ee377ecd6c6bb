"""Shared fixtures: benchmark parameter sets and the (expensive) numeric table."""

import time

import pytest
from hypothesis import HealthCheck, settings

from hyperwell import (
    PotentialParams,
    QuantumState,
    energy_level,
    find_level,
    reference_rows,
    resolve_config,
    s_wave_energy,
)

settings.register_profile(
    "hyperwell", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("hyperwell")


def params_for(ref):
    return PotentialParams(D=10.0, alpha=ref.alpha, sigma0=ref.sigma0)


def state_for(ref):
    return QuantumState(n=ref.label.n, l=ref.label.l)


def analytic_energy(p, state):
    if state.l == 0:
        return s_wave_energy(p, state.n).energy
    return energy_level(p, state).energy


@pytest.fixture(scope="session")
def refs():
    return reference_rows()


@pytest.fixture(scope="session")
def analytic_table(refs):
    """(energies, elapsed_seconds) for all 56 benchmark entries."""
    t0 = time.perf_counter()
    energies = {}
    for ref in refs:
        p = params_for(ref)
        energies[(ref.label.text, ref.alpha, ref.sigma0)] = analytic_energy(p, state_for(ref))
    return energies, time.perf_counter() - t0


@pytest.fixture(scope="session")
def numeric_table(refs):
    """(levels, elapsed_seconds) from the shooting oracle for all 56 entries."""
    t0 = time.perf_counter()
    levels = {}
    for ref in refs:
        p = params_for(ref)
        levels[(ref.label.text, ref.alpha, ref.sigma0)] = find_level(p, state_for(ref))
    return levels, time.perf_counter() - t0


@pytest.fixture(scope="session")
def numeric_table_fine(refs):
    """Oracle energies with the grid step halved (n_grid doubled)."""
    levels = {}
    for ref in refs:
        p = params_for(ref)
        state = state_for(ref)
        cfg = resolve_config(p, state.l, n_grid=40000)
        levels[(ref.label.text, ref.alpha, ref.sigma0)] = find_level(p, state, cfg)
    return levels
