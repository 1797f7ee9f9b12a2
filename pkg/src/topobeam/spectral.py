"""Eigen-decomposition, theta sweeps of the spectrum and gap-state analysis."""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .errors import NumericError, ValidationError
from .lattice import ChainSpec, CouplingSet, Scenario, coupling_profile, build_hamiltonian

RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class EigenSystem:
    """Ascending eigenvalues and the matching orthonormal eigenvectors.

    ``states[:, k]`` belongs to ``energies[k]``.  Each vector's sign is
    fixed so that its largest-magnitude component is positive, which keeps
    theta scans continuous and exported tables reproducible.
    """

    energies: np.ndarray
    states: np.ndarray


def eigendecompose(h: np.ndarray) -> EigenSystem:
    if not np.all(np.isfinite(h)):
        raise NumericError("Hamiltonian contains non-finite entries")
    try:
        energies, states = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - eigh on finite symmetric input
        raise NumericError(f"eigensolver failed: {exc}") from exc
    flip = states[np.argmax(np.abs(states), axis=0), np.arange(states.shape[1])] < 0
    states = np.where(flip, -states, states)
    return EigenSystem(energies=energies, states=states)


@dataclass(frozen=True)
class GapStatePair:
    """The two mid-spectrum levels straddling the gap (zero-based indices)."""

    lower_index: int
    upper_index: int
    lower_energy: float
    upper_energy: float


def gap_state_select(es: EigenSystem) -> GapStatePair:
    """Pick the middle two levels of the ascending spectrum.

    No gap-existence judgement is made; callers inspect the energies.
    """
    n = es.energies.size
    if n < 4:
        raise ValidationError(f"need at least 4 levels to pick gap states, got {n}")
    lo = n // 2 - 1
    return GapStatePair(
        lower_index=lo,
        upper_index=lo + 1,
        lower_energy=float(es.energies[lo]),
        upper_energy=float(es.energies[lo + 1]),
    )


def site_distribution(state: np.ndarray) -> np.ndarray:
    """Per-site probabilities |psi_i|^2 of a normalized state."""
    p = np.abs(np.asarray(state)) ** 2
    total = p.sum()
    if total == 0.0:
        raise ValidationError("cannot take the site distribution of a zero vector")
    if abs(total - 1.0) > 1e-8:
        raise ValidationError(f"state is not normalized (norm^2 = {total})")
    return p


@dataclass(frozen=True)
class EdgeStateAnsatz:
    """Exponentially localized edge-state trial vector.

    The left state lives on a-sites with amplitude ratio
    ``-intra/inter`` per cell, the right state on b-sites with the inverse
    ratio.  ``normalizable`` flags |ratio| < 1, i.e. decay away from the
    edge; at the gap-closing point |ratio| = 1 the vector is still
    returned (normalized on the finite chain) but flagged.
    """

    side: str
    ratio: float
    amplitudes: np.ndarray
    energy: float
    normalizable: bool


def analytic_edge_states(c: CouplingSet, spec: ChainSpec,
                         strength: float = 1.0) -> tuple[EdgeStateAnsatz, EdgeStateAnsatz]:
    """Left and right edge-state ansatz vectors for staggered on-site
    modulation of amplitude ``strength``.

    The left state has energy +strength*sin(theta) (the a-sublattice
    potential), the right state the opposite sign.
    """
    if c.inter == 0.0:
        raise ValidationError("left edge ansatz undefined at inter = 0 (dimerized limit)")
    if c.intra == 0.0:
        raise ValidationError("right edge ansatz undefined at intra = 0 (dimerized limit)")

    shift = strength * np.sin(c.theta)
    cells = np.arange(1, spec.n_cells + 1)

    def make(side: str, ratio: float, sites: np.ndarray, energy: float) -> EdgeStateAnsatz:
        amps = np.zeros(spec.n_sites)
        amps[sites] = ratio ** cells
        amps /= np.linalg.norm(amps)
        # |ratio| = 1 marks the gap-closing point; compare with a float margin
        return EdgeStateAnsatz(side=side, ratio=float(ratio), amplitudes=amps,
                               energy=float(energy),
                               normalizable=bool(abs(ratio) < 1.0 - 1e-12))

    left = make("left", -c.intra / c.inter, spec.a_sites, shift)
    right = make("right", -c.inter / c.intra, spec.b_sites, -shift)
    return left, right


@dataclass(frozen=True)
class ScanResult:
    """Spectrum and gap-state distributions tabulated over a theta grid."""

    thetas: np.ndarray
    energies: np.ndarray      # (n_theta, 2N) ascending per row
    dist_lower: np.ndarray    # (n_theta, 2N) |psi|^2 of the lower gap state
    dist_upper: np.ndarray

    @property
    def gap_energies(self) -> np.ndarray:
        """(n_theta, 2) energies of the lower/upper gap states."""
        n = self.energies.shape[1]
        return self.energies[:, n // 2 - 1:n // 2 + 1]


def spectrum_scan(spec: ChainSpec, scenario: Scenario, thetas: np.ndarray) -> ScanResult:
    """Eigen-decompose the chain on every grid point of ``thetas``.

    The grid must be strictly increasing and lie within [0, 2*pi].
    """
    thetas = np.asarray(thetas, dtype=float)
    if thetas.size == 0:
        raise ValidationError("theta grid is empty")
    if thetas.size > 1 and not np.all(np.diff(thetas) > 0):
        raise ValidationError("theta grid must be strictly increasing")
    if thetas[0] < 0 or thetas[-1] > 2 * np.pi + 1e-12:
        raise ValidationError("theta grid must lie within [0, 2*pi]")

    n = spec.n_sites
    energies = np.empty((thetas.size, n))
    dist_lower = np.empty((thetas.size, n))
    dist_upper = np.empty((thetas.size, n))
    for i, theta in enumerate(thetas):
        es = eigendecompose(build_hamiltonian(spec, coupling_profile(scenario, theta)))
        pair = gap_state_select(es)
        energies[i] = es.energies
        dist_lower[i] = es.states[:, pair.lower_index] ** 2
        dist_upper[i] = es.states[:, pair.upper_index] ** 2
    return ScanResult(thetas=thetas, energies=energies,
                      dist_lower=dist_lower, dist_upper=dist_upper)


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def write_spectrum_csv(result: ScanResult, path) -> None:
    """`theta,E_1,...,E_2N`, one row per grid point."""
    n = result.energies.shape[1]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theta"] + [f"E_{k}" for k in range(1, n + 1)])
        for theta, row in zip(result.thetas, result.energies):
            writer.writerow([_fmt(theta)] + [_fmt(e) for e in row])


def write_distribution_csv(result: ScanResult, which: str, path) -> None:
    """`theta,site,p` for the selected gap state; sites are 1-based."""
    if which not in ("lower", "upper"):
        raise ValidationError(f"gap state must be 'lower' or 'upper', got {which!r}")
    dist = result.dist_lower if which == "lower" else result.dist_upper
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theta", "site", "p"])
        for theta, row in zip(result.thetas, dist):
            for site, p in enumerate(row, start=1):
                writer.writerow([_fmt(theta), site, _fmt(p)])
