"""Analytic evolved states for the potential families.

Each function returns the exact state reached from the canonical initial
state after time dt under H = (total energy eps)*I + V, including the global
phase, so numerical propagation can be compared amplitude by amplitude.
Writing x = v0*dt:

* case1_diag leaves the state a product and imprints the same relative phase
  x on both qubit factors;
* case2_flip leaves the state a product and rotates the first qubit's
  probability amplitudes by x;
* general_diag dephases the four amplitudes with exponents (1, kappa, eta,
  eta*kappa);
* general_flip mixes cos(x) and sin(x) with the four phase factors
  e^{+-i(eta +- kappa)};
* nonlocal_flip returns the *claimed* product form for the Bell pair coupled
  to an ancilla: [cos(x+pi/4)|phi1 chi1> + sin(x+pi/4)|phi2 chi2>] x
  (|eta1>-|eta2>)/sqrt2. Exact propagation does not reproduce this form (see
  scenarios.run_nonlocal); it is kept as the reference prediction.
"""

from __future__ import annotations

import numpy as np

from . import model


def bell_phi_minus() -> np.ndarray:
    """(|phi1 chi1> - |phi2 chi2|)/sqrt2, the short-pulse target state."""
    return np.array([1.0, 0.0, 0.0, -1.0], dtype=complex) / np.sqrt(2.0)


def nonlocal_pair_concurrence(x: float) -> float:
    """Pair concurrence |cos(2x)| implied by the claimed nonlocal product form."""
    return float(abs(np.cos(2.0 * x)))


def _case1_state(v0: float, dt: float, eps: float) -> np.ndarray:
    x = v0 * dt
    phase = np.exp(-1j * dt * (eps + v0)) / 2.0
    return phase * np.array([1.0, -np.exp(1j * x), np.exp(1j * x), -np.exp(2j * x)])


def _case2_state(v0: float, dt: float, eps: float) -> np.ndarray:
    x = v0 * dt
    c, s = np.cos(x + np.pi / 4.0), np.sin(x + np.pi / 4.0)
    return np.exp(-1j * eps * dt) / np.sqrt(2.0) * np.array([c, -c, s, -s], dtype=complex)


def _general_diag_state(v0: float, dt: float, eta: float, kappa: float, eps: float) -> np.ndarray:
    x = v0 * dt
    phase = np.exp(-1j * eps * dt) / 2.0
    return phase * np.array(
        [
            np.exp(-1j * x),
            -np.exp(-1j * x * kappa),
            np.exp(-1j * x * eta),
            -np.exp(-1j * x * eta * kappa),
        ]
    )


def _general_flip_state(v0: float, dt: float, eta: float, kappa: float, eps: float) -> np.ndarray:
    x = v0 * dt
    c, s = np.cos(x), np.sin(x)
    phase = np.exp(-1j * eps * dt) / 2.0
    return phase * np.array(
        [
            c + 1j * np.exp(1j * (eta + kappa)) * s,
            -(c + 1j * np.exp(1j * (eta - kappa)) * s),
            c + 1j * np.exp(-1j * (eta - kappa)) * s,
            -(c + 1j * np.exp(-1j * (eta + kappa)) * s),
        ]
    )


def _nonlocal_state(v0: float, dt: float, eps: float) -> np.ndarray:
    x = v0 * dt
    pair = np.zeros(4, dtype=complex)
    pair[0] = np.cos(x + np.pi / 4.0)
    pair[3] = np.sin(x + np.pi / 4.0)
    ancilla = np.array([1.0, -1.0], dtype=complex) / np.sqrt(2.0)
    return np.exp(-1j * eps * dt) * np.kron(pair, ancilla)


def evolved_state(spec: model.PotentialSpec, dt: float, eps: float = 0.0) -> np.ndarray:
    """Closed-form state after time dt for the given family (see module doc)."""
    if spec.family == model.CASE1_DIAG:
        return _case1_state(spec.v0, dt, eps)
    if spec.family == model.CASE2_FLIP:
        return _case2_state(spec.v0, dt, eps)
    if spec.family == model.GENERAL_DIAG:
        return _general_diag_state(spec.v0, dt, spec.eta, spec.kappa, eps)
    if spec.family == model.GENERAL_FLIP:
        return _general_flip_state(spec.v0, dt, spec.eta, spec.kappa, eps)
    if spec.family == model.NONLOCAL_FLIP:
        return _nonlocal_state(spec.v0, dt, eps)
    raise ValueError(f"no closed-form evolved state for family {spec.family!r}")
