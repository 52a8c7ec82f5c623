"""Entanglement quantification and separability classification.

For a pure two-qubit state with amplitudes (a, b, c, d) in the product basis,
the concurrence is C = 2|a*d - b*c|; a state is separable iff C = 0 and
maximally entangled iff C = 1. The Wootters mixed-state formula serves as an
independent oracle that must agree with the pure-state expression on pure
density matrices. Closed-form concurrences for the two general potential
families are provided for parameter-space sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import model
from .linalg import dagger, require_hermitian, require_state

SEPARABLE = "separable"
PARTIAL = "partial"
MAX_ENTANGLED = "max_entangled"

#: Default classification tolerance (configurable per call).
CLASS_TOL = 1e-9

_SIGMY_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(_SIGMY_Y, _SIGMY_Y)


def _amplitude_matrix(state: np.ndarray) -> np.ndarray:
    return np.asarray(state, dtype=complex).reshape(2, 2)


def concurrence_pure(state: np.ndarray) -> float:
    """Concurrence 2|a*d - b*c| of a normalized 4-dim pure state."""
    state = require_state(state, dim=4)
    a, b, c, d = state
    return float(np.clip(2.0 * abs(a * d - b * c), 0.0, 1.0))


def concurrence_wootters(rho: np.ndarray, psd_tol: float = 1e-10) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    C(rho) = max(0, l1 - l2 - l3 - l4) where the l's are the decreasing
    square roots of the eigenvalues of rho * (sy x sy) * conj(rho) * (sy x sy).
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("Wootters concurrence needs a 4x4 density matrix")
    require_hermitian(rho, "rho")
    evals = np.linalg.eigvalsh(rho)
    if evals.min() < -psd_tol:
        raise ValueError(f"rho is not positive semidefinite (min eigenvalue {evals.min():.3e})")
    if abs(float(np.trace(rho).real) - 1.0) > 1e-9:
        raise ValueError("rho must have unit trace")

    r = rho @ _YY @ np.conj(rho) @ _YY
    # eigenvalues of the non-Hermitian product are real and nonnegative in
    # exact arithmetic; clamp the round-off before the square root
    lam = np.sqrt(np.clip(np.real(np.linalg.eigvals(r)), 0.0, None))
    lam = np.sort(lam)[::-1]
    return float(np.clip(lam[0] - lam[1] - lam[2] - lam[3], 0.0, 1.0))


def schmidt(state: np.ndarray) -> tuple[float, float]:
    """Schmidt coefficients (l1 >= l2) of a 4-dim pure state; l1^2 + l2^2 = 1."""
    state = require_state(state, dim=4)
    s = np.linalg.svd(_amplitude_matrix(state), compute_uv=False)
    return float(s[0]), float(s[1])


def product_factors(state: np.ndarray, tol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """Factor a separable 4-dim pure state into its two qubit factors.

    Raises ValueError when the second Schmidt coefficient exceeds ``tol``
    (the state is not a product state). The returned factors are unit vectors
    with the first entry of each fixed real-positive; the product
    f1 x f2 equals the state up to a global phase.
    """
    state = require_state(state, dim=4)
    u, s, vh = np.linalg.svd(_amplitude_matrix(state))
    if s[1] > tol:
        raise ValueError(f"state is not a product state (second Schmidt coefficient {s[1]:.3e})")
    f1 = u[:, 0]
    f2 = vh[0, :]
    for f in (f1, f2):
        pivot = f[np.argmax(np.abs(f))]
        f *= np.conj(pivot) / abs(pivot)
    return f1, f2


def closed_form_concurrence(family: str, eta, kappa, x):
    """Concurrence after evolving the canonical initial state, as a function
    of the family parameters and the accumulated phase x = V0*dt.

    * general_diag: |sin(x*(1-eta)*(1-kappa)/2)| (half-angle form of
      (1/2)|1 - exp(i*x*(1-eta)*(1-kappa))|, which avoids cancellation noise
      near zero);
    * general_flip: (1/2)|[cos(eta+kappa) - cos(eta-kappa)] * sin(2x)|.

    Accepts scalars or broadcastable arrays for eta/kappa/x.
    """
    if family == model.GENERAL_DIAG:
        c = np.abs(np.sin(x * (1.0 - np.asarray(eta)) * (1.0 - np.asarray(kappa)) / 2.0))
    elif family == model.GENERAL_FLIP:
        e, k = np.asarray(eta), np.asarray(kappa)
        c = 0.5 * np.abs((np.cos(e + k) - np.cos(e - k)) * np.sin(2.0 * np.asarray(x)))
    else:
        raise ValueError(f"no closed-form concurrence for family {family!r}")
    c = np.clip(c, 0.0, 1.0)
    return float(c) if c.ndim == 0 else c


def classify(concurrence: float, tol: float = CLASS_TOL) -> str:
    if concurrence <= tol:
        return SEPARABLE
    if concurrence >= 1.0 - tol:
        return MAX_ENTANGLED
    return PARTIAL


@dataclass(frozen=True)
class EntanglementReport:
    concurrence: float
    schmidt: tuple[float, float]
    klass: str


def entanglement_report(state: np.ndarray, tol: float = CLASS_TOL) -> EntanglementReport:
    """Concurrence, Schmidt pair and separability class of a pure state."""
    c = concurrence_pure(state)
    lam = schmidt(state)
    return EntanglementReport(concurrence=c, schmidt=lam, klass=classify(c, tol))


def reduced_pair_density(state8: np.ndarray) -> np.ndarray:
    """Density matrix of qubits 1-2 after tracing qubit 3 out of a pure 8-dim state."""
    state8 = require_state(state8, dim=8)
    a = state8.reshape(4, 2)
    return a @ dagger(a)
