"""Energy bookkeeping: potential expectations and conservation audits.

An interaction potential is "allowed" (energy-conserving) when Tr(V*rho) = 0.
Conservation is audited, never enforced: scenarios deliberately explore
violating potentials, so a nonzero expectation sets a report flag rather than
raising. Because the free Hamiltonian is always scalar here, V commutes with
the full Hamiltonian and Tr(V*rho(t)) is constant along every exact
trajectory; the residual check samples it anyway.
"""

from __future__ import annotations

import numpy as np

from . import model
from .evolve import trajectory
from .linalg import outer, require_hermitian

#: |Tr(V rho)| at or below this counts as energy-conserving.
CONSERVING_TOL = 1e-9


def expectation(v: np.ndarray, state_or_rho: np.ndarray) -> float:
    """Re Tr(v * rho); accepts a pure state (converted to its density matrix).

    The imaginary residue of the trace must stay below 1e-12; anything larger
    signals a non-Hermitian input and raises.
    """
    v = require_hermitian(v, "v")
    arr = np.asarray(state_or_rho, dtype=complex)
    rho = outer(arr) if arr.ndim == 1 else arr
    if rho.shape != v.shape:
        raise ValueError(f"dimension mismatch: v is {v.shape[0]}-dim, rho is {rho.shape[0]}-dim")
    val = complex(np.trace(v @ rho))
    if abs(val.imag) > 1e-12:
        raise ValueError(f"expectation has imaginary residue {val.imag:.3e}; input not Hermitian?")
    return float(val.real)


def is_conserving(v: np.ndarray, state_or_rho: np.ndarray, tol: float = CONSERVING_TOL) -> bool:
    return abs(expectation(v, state_or_rho)) <= tol


def conservation_residual(
    v: np.ndarray,
    h0: np.ndarray,
    state: np.ndarray,
    dt: float,
    steps: int = 100,
) -> float:
    """Max |Tr(V rho(t)) - Tr(V rho(0))| over trajectory samples."""
    samples = trajectory(state, h0, v, dt, steps)
    initial = expectation(v, samples[0][1])
    return max(abs(expectation(v, psi) - initial) for _, psi in samples)


def vbar_contour(family: str, eta, kappa, v0=1.0):
    """Exact initial expectation Tr(V rho(0)) over the (eta, kappa) plane.

    * general_diag: (v0/4)(1+eta)(1+kappa), zero on the perpendicular lines
      eta = -1 and kappa = -1;
    * general_flip: -(v0/2)[cos(eta+kappa) + cos(eta-kappa)]
      = -v0*cos(eta)*cos(kappa), zero on the grid eta or kappa = pi/2 + n*pi.

    Accepts scalars or broadcastable arrays; linear in v0.
    """
    if family == model.GENERAL_DIAG:
        out = (np.asarray(v0) / 4.0) * (1.0 + np.asarray(eta)) * (1.0 + np.asarray(kappa))
    elif family == model.GENERAL_FLIP:
        e, k = np.asarray(eta), np.asarray(kappa)
        out = -(np.asarray(v0) / 2.0) * (np.cos(e + k) + np.cos(e - k))
    else:
        raise ValueError(f"no expectation contour for family {family!r}")
    out = np.asarray(out, dtype=float)
    return float(out) if out.ndim == 0 else out
