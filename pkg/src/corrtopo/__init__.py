"""Dense simulator for two and three interacting qubits.

Builds the interaction-potential families (basis-preserving, basis-flipping,
short-pulse and pair-ancilla couplings), evolves joint states unitarily,
quantifies entanglement (concurrence, Schmidt coefficients, Wootters formula),
audits the energy-conservation trace condition, and maps the correlation
topology of the potential parameter space.

Units: hbar = 1 throughout; energies and times are dimensionless conjugates
and only products such as x = V0*dt ever matter.
"""

from .linalg import kron, eig_hermitian, propagator, partial_trace
from .model import (
    PotentialSpec,
    build_h0,
    build_potential,
    initial_two_qubit_state,
    initial_three_qubit_state,
    parse_potential,
    format_potential,
)
from .evolve import evolve_exact, evolve_first_order, trajectory
from .entangle import (
    concurrence_pure,
    concurrence_wootters,
    schmidt,
    closed_form_concurrence,
    entanglement_report,
)
from .energy import expectation, conservation_residual, vbar_contour
from .topo import GridSpec, sweep, zero_loci, contour_numeric, lattice_sites, alternation_check
from .scenarios import run_pulse, run_nonlocal, run_phase_copy

__version__ = "0.1.0"

__all__ = [
    "kron",
    "eig_hermitian",
    "propagator",
    "partial_trace",
    "PotentialSpec",
    "build_h0",
    "build_potential",
    "initial_two_qubit_state",
    "initial_three_qubit_state",
    "parse_potential",
    "format_potential",
    "evolve_exact",
    "evolve_first_order",
    "trajectory",
    "concurrence_pure",
    "concurrence_wootters",
    "schmidt",
    "closed_form_concurrence",
    "entanglement_report",
    "expectation",
    "conservation_residual",
    "vbar_contour",
    "GridSpec",
    "sweep",
    "zero_loci",
    "contour_numeric",
    "lattice_sites",
    "alternation_check",
    "run_pulse",
    "run_nonlocal",
    "run_phase_copy",
    "__version__",
]
