"""Dense complex linear algebra for Hilbert-space dimensions up to 8.

Everything here operates on plain numpy arrays: vectors are 1-D complex
arrays, operators are square 2-D complex arrays in row-major layout.
All dynamics in this package go through Hermitian eigendecomposition, which
keeps propagators unitary to round-off, so no Pade/scaling-squaring
exponential is ever needed.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

#: Largest joint dimension handled anywhere (three qubits).
DIM_CAP = 8

#: Hermiticity tolerance: ~100x accumulated double round-off at dim 8.
HERMITIAN_TOL = 1e-12

#: Unit-norm tolerance for state vectors.
NORM_TOL = 1e-12


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    """True if max |m[i,j] - conj(m[j,i])| <= tol."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return float(np.max(np.abs(m - dagger(m)))) <= tol


def require_hermitian(m: np.ndarray, what: str = "matrix", tol: float = HERMITIAN_TOL) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m, tol):
        raise ValueError(f"{what} is not Hermitian within {tol:g}")
    return m


def is_normalized(v: np.ndarray, tol: float = NORM_TOL) -> bool:
    return abs(float(np.linalg.norm(v)) - 1.0) <= tol


def require_state(v: np.ndarray, dim: int | None = None, tol: float = NORM_TOL) -> np.ndarray:
    v = np.asarray(v, dtype=complex).ravel()
    if dim is not None and v.size != dim:
        raise ValueError(f"expected a state of dimension {dim}, got {v.size}")
    if not is_normalized(v, tol):
        raise ValueError("state vector is not normalized")
    return v


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, capped at joint dimension 8 (three qubits)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out_dim = a.shape[0] * b.shape[0]
    if out_dim > DIM_CAP:
        raise ValueError(f"kron result dimension {out_dim} exceeds cap {DIM_CAP}")
    return np.kron(a, b)


def eig_hermitian(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (w, u) with eigenvalues w ascending and orthonormal eigenvector
    columns u, so that m = u @ diag(w) @ u^dagger.
    """
    m = require_hermitian(m)
    w, u = np.linalg.eigh(m)
    return w, u


def propagator(h: np.ndarray, t: float) -> np.ndarray:
    """Unitary exp(-i*t*h) for Hermitian h, via eigendecomposition."""
    if not np.isfinite(t):
        raise ValueError("propagation time must be finite")
    w, u = eig_hermitian(h)
    return (u * np.exp(-1j * w * t)) @ dagger(u)


def outer(state: np.ndarray) -> np.ndarray:
    """Density matrix |state><state| of a pure state."""
    v = np.asarray(state, dtype=complex).ravel()
    return np.outer(v, np.conj(v))


def partial_trace(rho: np.ndarray, dims: Iterable[int], keep: Iterable[int]) -> np.ndarray:
    """Trace out every subsystem not listed in ``keep``.

    ``dims`` are the subsystem dimensions in tensor order; their product must
    equal the dimension of ``rho``. The kept subsystems stay in their original
    order. Trace and Hermiticity are preserved exactly.
    """
    rho = np.asarray(rho, dtype=complex)
    dims = [int(d) for d in dims]
    n = len(dims)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("rho must be a square matrix")
    if int(np.prod(dims)) != rho.shape[0]:
        raise ValueError(f"subsystem dims {dims} do not multiply to {rho.shape[0]}")
    require_hermitian(rho, "rho")
    keep = sorted(set(int(k) for k in keep))
    if not keep or any(k < 0 or k >= n for k in keep):
        raise ValueError(f"keep={keep} out of range for {n} subsystems")

    r = rho.reshape(dims + dims)
    row_labels = list(range(n))
    col_labels = [n + i if i in keep else i for i in range(n)]
    out_labels = [i for i in keep] + [n + i for i in keep]
    reduced = np.einsum(r, row_labels + col_labels, out_labels)
    d_keep = int(np.prod([dims[k] for k in keep]))
    return reduced.reshape(d_keep, d_keep)
