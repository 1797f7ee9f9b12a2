"""Chain geometry, periodic coupling profiles and Hamiltonian assembly.

The chain has N unit cells of two sites each, ordered a1, b1, a2, b2, ...,
a_N, b_N (a-type sites sit at odd 1-based positions).  Every built-in
scenario modulates the nearest-neighbour bonds as

    intra-cell  t1 = 1 - cos(theta),    inter-cell  t2 = 1 + cos(theta),

and adds scenario-specific staggered on-site potentials and/or
next-nearest-neighbour (NNN) hoppings on top:

    BareSSH            plain alternating chain, nothing added
    RiceMele           on-site +V sin(theta) on a, -V sin(theta) on b
    FixedNNN           theta-independent NNN hoppings (fixed_t1 on a-a
                       bonds, fixed_t2 on b-b bonds)
    StaggeredNNN       NNN hoppings -V sin(theta) on a-a, +V sin(theta)
                       on b-b
    BeamSplitter       on-site -sin(theta) on a, +sin(theta) on b, plus
                       a-a NNN hopping equal to the inter-cell bond
    SuperSitePrecursor the BeamSplitter NNN hopping without the on-site
                       modulation (the first two sites then bind into an
                       exact "super-site" eigenstate)

All values are in units of the hopping energy scale; boundaries are open.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

TWO_PI = 2.0 * np.pi

SCENARIO_TAGS = (
    "BareSSH",
    "RiceMele",
    "FixedNNN",
    "StaggeredNNN",
    "BeamSplitter",
    "SuperSitePrecursor",
)


@dataclass(frozen=True)
class ChainSpec:
    """Chain geometry: N unit cells, 2N sites."""

    n_cells: int

    def __post_init__(self):
        if not isinstance(self.n_cells, int) or self.n_cells < 2:
            raise ValidationError(f"n_cells must be an integer >= 2, got {self.n_cells!r}")

    @property
    def n_sites(self) -> int:
        return 2 * self.n_cells

    @property
    def a_sites(self) -> np.ndarray:
        """Zero-based indices of a-type sites (odd 1-based positions)."""
        return np.arange(0, self.n_sites, 2)

    @property
    def b_sites(self) -> np.ndarray:
        return np.arange(1, self.n_sites, 2)


@dataclass(frozen=True)
class Scenario:
    """A named coupling profile with its free parameters.

    ``strength`` is the modulation amplitude V used by RiceMele and
    StaggeredNNN; ``fixed_t1``/``fixed_t2`` are the constant NNN hoppings
    of FixedNNN.  The other tags ignore these fields.
    """

    tag: str
    strength: float = 1.0
    fixed_t1: float = 0.0
    fixed_t2: float = 0.0

    def __post_init__(self):
        if self.tag not in SCENARIO_TAGS:
            raise ValidationError(
                f"unknown scenario tag {self.tag!r}; expected one of {SCENARIO_TAGS}"
            )


@dataclass(frozen=True)
class CouplingSet:
    """The six couplings of one Hamiltonian instance at a given theta.

    ``intra``/``inter`` are the alternating nearest-neighbour bonds,
    ``onsite_a``/``onsite_b`` the sublattice potentials and
    ``nnn_a``/``nnn_b`` the a-a and b-b next-nearest-neighbour hoppings.
    """

    intra: float
    inter: float
    onsite_a: float = 0.0
    onsite_b: float = 0.0
    nnn_a: float = 0.0
    nnn_b: float = 0.0
    theta: float = 0.0

    def __post_init__(self):
        values = (self.intra, self.inter, self.onsite_a, self.onsite_b,
                  self.nnn_a, self.nnn_b, self.theta)
        if not all(np.isfinite(values)):
            raise ValidationError(f"couplings must be finite, got {self}")


def coupling_profile(scenario: Scenario, theta: float) -> CouplingSet:
    """Evaluate a scenario's couplings at ``theta`` (reduced mod 2*pi)."""
    theta = float(theta) % TWO_PI
    t1 = 1.0 - np.cos(theta)
    t2 = 1.0 + np.cos(theta)
    s = np.sin(theta)
    v = scenario.strength

    if scenario.tag == "BareSSH":
        extra = {}
    elif scenario.tag == "RiceMele":
        extra = {"onsite_a": v * s, "onsite_b": -v * s}
    elif scenario.tag == "FixedNNN":
        extra = {"nnn_a": scenario.fixed_t1, "nnn_b": scenario.fixed_t2}
    elif scenario.tag == "StaggeredNNN":
        extra = {"nnn_a": -v * s, "nnn_b": v * s}
    elif scenario.tag == "BeamSplitter":
        extra = {"onsite_a": -s, "onsite_b": s, "nnn_a": t2}
    elif scenario.tag == "SuperSitePrecursor":
        extra = {"nnn_a": t2}
    else:  # pragma: no cover - guarded by Scenario.__post_init__
        raise ValidationError(f"unknown scenario tag {scenario.tag!r}")

    return CouplingSet(intra=t1, inter=t2, theta=theta, **extra)


def build_hamiltonian(spec: ChainSpec, c: CouplingSet) -> np.ndarray:
    """Assemble the dense real-symmetric single-particle matrix.

    On-site terms sit on the diagonal, nearest-neighbour bonds on the
    first off-diagonal (alternating intra/inter) and NNN bonds on the
    second off-diagonal.  Open boundary conditions: no wrap-around terms.
    """
    n = spec.n_sites
    a = spec.a_sites
    b = spec.b_sites
    h = np.zeros((n, n))

    h[a, a] = c.onsite_a
    h[b, b] = c.onsite_b
    h[a, b] = h[b, a] = c.intra               # a_n - b_n
    h[b[:-1], a[1:]] = h[a[1:], b[:-1]] = c.inter   # b_n - a_{n+1}
    h[a[:-1], a[1:]] = h[a[1:], a[:-1]] = c.nnn_a   # a_n - a_{n+1}
    h[b[:-1], b[1:]] = h[b[1:], b[:-1]] = c.nnn_b   # b_n - b_{n+1}
    return h


def scenario_hamiltonian(spec: ChainSpec, scenario: Scenario, theta: float) -> np.ndarray:
    """Shorthand for ``build_hamiltonian(spec, coupling_profile(scenario, theta))``."""
    return build_hamiltonian(spec, coupling_profile(scenario, theta))


def mirror_couplings(c: CouplingSet) -> CouplingSet:
    """Couplings of the spatially reversed chain (site i -> 2N+1-i).

    Reversal maps a-sites onto b-sites, so the sublattice potentials and
    the NNN hoppings swap while the alternating bonds stay in place.
    """
    return CouplingSet(
        intra=c.intra,
        inter=c.inter,
        onsite_a=c.onsite_b,
        onsite_b=c.onsite_a,
        nnn_a=c.nnn_b,
        nnn_b=c.nnn_a,
        theta=c.theta,
    )
