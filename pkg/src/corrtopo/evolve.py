"""Unitary time evolution of joint states.

Exact propagation uses exp(-i*t*(H0+V)) through eigendecomposition. The
first-order (short-pulse) propagator applies I - i*dt*H and renormalizes,
matching how very short interactions are treated analytically. Trajectories
sample the exact evolution with a fresh propagator per sample time (never
step-chained), so no error accumulates along a trajectory.
"""

from __future__ import annotations

import numpy as np

from .linalg import propagator, require_hermitian, require_state


def _joint_hamiltonian(state: np.ndarray, h0: np.ndarray, v: np.ndarray) -> np.ndarray:
    h0 = require_hermitian(h0, "h0")
    v = require_hermitian(v, "v")
    if h0.shape != v.shape:
        raise ValueError(f"h0 is {h0.shape[0]}-dim but v is {v.shape[0]}-dim")
    if h0.shape[0] != state.size:
        raise ValueError(f"state dim {state.size} does not match Hamiltonian dim {h0.shape[0]}")
    return h0 + v


def evolve_exact(state: np.ndarray, h0: np.ndarray, v: np.ndarray, dt: float) -> np.ndarray:
    """Return exp(-i*dt*(h0+v)) applied to ``state``."""
    state = require_state(state)
    h = _joint_hamiltonian(state, h0, v)
    return propagator(h, dt) @ state


def evolve_first_order(state: np.ndarray, h0: np.ndarray, v: np.ndarray, dt: float) -> np.ndarray:
    """Apply the truncated propagator I - i*dt*(h0+v), then renormalize.

    The truncation is not unitary; the output is renormalized. A zero-norm
    result (which cannot occur for Hermitian input, since
    ||(I - i*dt*H)psi||^2 = 1 + dt^2*||H psi||^2) is reported as an error.
    """
    state = require_state(state)
    h = _joint_hamiltonian(state, h0, v)
    raw = state - 1j * dt * (h @ state)
    norm = float(np.linalg.norm(raw))
    if norm <= 1e-12:
        raise ValueError("first-order propagation produced a zero-norm state")
    return raw / norm


def trajectory(
    state: np.ndarray,
    h0: np.ndarray,
    v: np.ndarray,
    dt: float,
    steps: int,
) -> list[tuple[float, np.ndarray]]:
    """Sample exact evolution at t = k*dt/steps for k = 0..steps."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    state = require_state(state)
    h = _joint_hamiltonian(state, h0, v)
    out = []
    for k in range(steps + 1):
        t = dt * k / steps
        out.append((t, propagator(h, t) @ state))
    return out
