"""Canonical initial states, free Hamiltonians and interaction potentials.

Basis ordering, used by every vector and matrix in this package:

* two qubits: |phi_i chi_j> maps to index 2*(i-1) + (j-1), i.e. the order
  (|phi1 chi1>, |phi1 chi2>, |phi2 chi1>, |phi2 chi2>);
* three qubits: |phi_i chi_j eta_k> maps to 4*(i-1) + 2*(j-1) + (k-1).

Density matrices are always trace-1 (states are unit vectors), so trace
conditions evaluated here may differ from unnormalized conventions by a
constant factor; zero/non-zero conclusions are unaffected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import kron, require_hermitian

# Potential families (these strings are the wire format used by the CLI).
CASE1_DIAG = "case1_diag"
CASE2_FLIP = "case2_flip"
GENERAL_DIAG = "general_diag"
GENERAL_FLIP = "general_flip"
MIXED_PULSE = "mixed_pulse"
NONLOCAL_FLIP = "nonlocal_flip"
RAW = "raw"

FAMILIES = (CASE1_DIAG, CASE2_FLIP, GENERAL_DIAG, GENERAL_FLIP, MIXED_PULSE, NONLOCAL_FLIP, RAW)

#: Families whose evolved-state and concurrence closed forms exist in entangle/closedform.
CONTOUR_FAMILIES = (GENERAL_DIAG, GENERAL_FLIP)

_SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
# i|a1><a2| + H.C. -- the antisymmetric flip used by case2 and the pair-ancilla coupling
_FLIP_I = np.array([[0.0, 1.0j], [-1.0j, 0.0]], dtype=complex)


@dataclass(frozen=True)
class PotentialSpec:
    """One interaction potential: a family tag plus its real parameters.

    ``eta``/``kappa`` are only read by the general families, ``eps`` only by
    ``mixed_pulse``. ``matrix`` is the raw escape hatch: with
    ``family="raw"`` an explicit Hermitian matrix (dim 4 or 8) is used as-is.
    """

    family: str
    v0: float = 1.0
    eta: float = 0.0
    kappa: float = 0.0
    eps: float = 0.0
    matrix: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown potential family {self.family!r}")
        for name in ("v0", "eta", "kappa", "eps"):
            val = getattr(self, name)
            if not (isinstance(val, (int, float)) and math.isfinite(val)):
                raise ValueError(f"parameter {name} must be a finite real, got {val!r}")
        if self.family == RAW:
            if self.matrix is None:
                raise ValueError("raw potential requires an explicit matrix")
            m = np.asarray(self.matrix, dtype=complex)
            if m.shape not in ((4, 4), (8, 8)):
                raise ValueError("raw potential matrix must be 4x4 or 8x8")
            require_hermitian(m, "raw potential")

    @property
    def dim(self) -> int:
        if self.family == NONLOCAL_FLIP:
            return 8
        if self.family == RAW:
            return np.asarray(self.matrix).shape[0]
        return 4


def initial_two_qubit_state() -> np.ndarray:
    """(1/2)(|phi1>+|phi2>) x (|chi1>-|chi2>), the canonical pre-interaction state."""
    return np.array([1.0, -1.0, 1.0, -1.0], dtype=complex) / 2.0


def initial_three_qubit_state() -> np.ndarray:
    """Bell pair (|phi1 chi1>+|phi2 chi2>)/sqrt2 joined with (|eta1>-|eta2>)/sqrt2."""
    return np.array([1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0, -1.0], dtype=complex) / 2.0


def build_h0(eps1: float, eps2: float, n_qubits: int = 2, eps3: float = 0.0) -> np.ndarray:
    """Free Hamiltonian (eps1 + eps2 [+ eps3]) * identity on the joint space.

    Each single-system Hamiltonian is proportional to identity, so the joint
    free Hamiltonian is scalar; the third energy defaults to 0 and only ever
    contributes a global phase.
    """
    if n_qubits not in (2, 3):
        raise ValueError("n_qubits must be 2 or 3")
    total = float(eps1) + float(eps2) + (float(eps3) if n_qubits == 3 else 0.0)
    return total * np.eye(2 ** n_qubits, dtype=complex)


def build_potential(spec: PotentialSpec) -> np.ndarray:
    """Concrete Hermitian matrix for the given potential family.

    * case1_diag:  V0 * diag(1, 0, 0, -1) -- keeps both bases, dephases.
    * case2_flip:  V0 * (i|phi1><phi2| + H.C.) x (|chi1><chi2| + H.C.).
    * general_diag: V0 * diag(1, kappa, eta, eta*kappa).
    * general_flip: V0 * (e^{i eta}|phi1><phi2| + H.C.) x (e^{i kappa}|chi1><chi2| + H.C.).
    * mixed_pulse: the short-pulse mix of diagonal -eps terms and two flips.
    * nonlocal_flip: identity on qubit 1, case2-style flip coupling qubits 2 and 3.
    * raw: the user-supplied matrix.
    """
    v0 = float(spec.v0)
    if spec.family == CASE1_DIAG:
        return v0 * np.diag([1.0, 0.0, 0.0, -1.0]).astype(complex)
    if spec.family == CASE2_FLIP:
        return v0 * kron(_FLIP_I, _SIGMA_X)
    if spec.family == GENERAL_DIAG:
        eta, kappa = float(spec.eta), float(spec.kappa)
        return v0 * np.diag([1.0, kappa, eta, eta * kappa]).astype(complex)
    if spec.family == GENERAL_FLIP:
        eta, kappa = float(spec.eta), float(spec.kappa)
        f1 = np.array([[0.0, np.exp(1j * eta)], [np.exp(-1j * eta), 0.0]])
        f2 = np.array([[0.0, np.exp(1j * kappa)], [np.exp(-1j * kappa), 0.0]])
        return v0 * kron(f1, f2)
    if spec.family == MIXED_PULSE:
        eps = float(spec.eps)
        v = np.zeros((4, 4), dtype=complex)
        v[1, 1] = v[2, 2] = -eps
        v[0, 2] = 1j * v0
        v[2, 0] = -1j * v0
        v[1, 3] = -1j * v0
        v[3, 1] = 1j * v0
        return v
    if spec.family == NONLOCAL_FLIP:
        return v0 * kron(np.eye(2, dtype=complex), kron(_FLIP_I, _SIGMA_X))
    if spec.family == RAW:
        return np.asarray(spec.matrix, dtype=complex).copy()
    raise ValueError(f"unknown potential family {spec.family!r}")


def as_general_diag(matrix: np.ndarray, tol: float = 1e-12) -> tuple[float, float, float] | None:
    """Return (v0, eta, kappa) if ``matrix`` equals V0*diag(1, kappa, eta, eta*kappa).

    Returns None when the matrix is outside the family; e.g. diag(1, 0, 0, -1)
    would need kappa = eta = 0 with eta*kappa = -1 and is therefore not a
    member.
    """
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (4, 4) or np.max(np.abs(m - np.diag(np.diag(m)))) > tol:
        return None
    d = np.diag(m)
    if np.max(np.abs(d.imag)) > tol:
        return None
    d = d.real
    v0 = d[0]
    if abs(v0) <= tol:
        # v0 = 0 forces the whole matrix to zero
        return (0.0, 0.0, 0.0) if np.max(np.abs(d)) <= tol else None
    kappa = d[1] / v0
    eta = d[2] / v0
    if abs(d[3] - v0 * eta * kappa) > tol * max(1.0, abs(v0)):
        return None
    return float(v0), float(eta), float(kappa)


_TEXT_KEYS = ("family", "v0", "eta", "kappa", "eps")


def parse_potential(text: str) -> PotentialSpec:
    """Parse the canonical text form, e.g. ``family=general_flip v0=1.0 eta=1.5708 kappa=0``."""
    fields: dict[str, str] = {}
    for token in text.split():
        if "=" not in token:
            raise ValueError(f"malformed token {token!r} in potential spec (expected key=value)")
        key, _, value = token.partition("=")
        if key not in _TEXT_KEYS:
            raise ValueError(f"unknown key {key!r} in potential spec")
        if key in fields:
            raise ValueError(f"duplicate key {key!r} in potential spec")
        fields[key] = value
    if "family" not in fields:
        raise ValueError("potential spec is missing family=...")
    kwargs: dict[str, float] = {}
    for key in ("v0", "eta", "kappa", "eps"):
        if key in fields:
            try:
                kwargs[key] = float(fields[key])
            except ValueError:
                raise ValueError(f"{key}={fields[key]!r} is not a real number") from None
    family = fields["family"]
    if family == RAW:
        raise ValueError("raw potentials cannot be given in text form")
    return PotentialSpec(family=family, **kwargs)


def format_potential(spec: PotentialSpec) -> str:
    """Canonical text form of a spec (inverse of parse_potential)."""
    if spec.family == RAW:
        raise ValueError("raw potentials have no text form")
    parts = [f"family={spec.family}", f"v0={spec.v0:.12g}"]
    if spec.family in (GENERAL_DIAG, GENERAL_FLIP):
        parts += [f"eta={spec.eta:.12g}", f"kappa={spec.kappa:.12g}"]
    if spec.family == MIXED_PULSE:
        parts.append(f"eps={spec.eps:.12g}")
    return " ".join(parts)
