"""Topological state transfer and beam-splitter channels in periodically
modulated SSH chains: spectra, gap-state distributions, adiabatic transfer
dynamics, disorder robustness and resonator-lattice detection spectra."""

__version__ = "0.1.0"

from .errors import NumericError, ValidationError
from .lattice import (ChainSpec, CouplingSet, Scenario, SCENARIO_TAGS,
                      build_hamiltonian, coupling_profile, mirror_couplings,
                      scenario_hamiltonian)
from .spectral import (EdgeStateAnsatz, EigenSystem, GapStatePair, ScanResult,
                       analytic_edge_states, eigendecompose, gap_state_select,
                       site_distribution, spectrum_scan)
from .dynamics import (DriveSchedule, IntegratorConfig, SweepResult, Trajectory,
                       basis_state, distribution_fidelity, evolve, omega_sweep,
                       transfer_fidelity)
from .disorder import (CHANNELS, DisorderConfig, DisorderDraw, DisorderResult,
                       disorder_sweep, draw_offsets, offset_matrix, perturb)
from .circuit import (CircuitParams, DetectionSpectrum, MappingReport,
                      beam_splitter_detunings, detection_spectrum,
                      effective_hamiltonian, steady_state, verify_mapping)

__all__ = [
    "NumericError", "ValidationError",
    "ChainSpec", "CouplingSet", "Scenario", "SCENARIO_TAGS",
    "build_hamiltonian", "coupling_profile", "mirror_couplings",
    "scenario_hamiltonian",
    "EdgeStateAnsatz", "EigenSystem", "GapStatePair", "ScanResult",
    "analytic_edge_states", "eigendecompose", "gap_state_select",
    "site_distribution", "spectrum_scan",
    "DriveSchedule", "IntegratorConfig", "SweepResult", "Trajectory",
    "basis_state", "distribution_fidelity", "evolve", "omega_sweep",
    "transfer_fidelity",
    "CHANNELS", "DisorderConfig", "DisorderDraw", "DisorderResult",
    "disorder_sweep", "draw_offsets", "offset_matrix", "perturb",
    "CircuitParams", "DetectionSpectrum", "MappingReport",
    "beam_splitter_detunings", "detection_spectrum", "effective_hamiltonian",
    "steady_state", "verify_mapping",
]
