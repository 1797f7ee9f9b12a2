import numpy as np
import pytest

from topobeam import (ChainSpec, CouplingSet, Scenario, ValidationError,
                      build_hamiltonian, coupling_profile, mirror_couplings,
                      scenario_hamiltonian)

THETA_GRID = np.linspace(0.0, 2 * np.pi, 41)

ALL_SCENARIOS = [
    Scenario("BareSSH"),
    Scenario("RiceMele"),
    Scenario("FixedNNN", fixed_t1=-0.5, fixed_t2=0.5),
    Scenario("StaggeredNNN"),
    Scenario("BeamSplitter"),
    Scenario("SuperSitePrecursor"),
]


def test_chain_spec_validation():
    spec = ChainSpec(10)
    assert spec.n_sites == 20
    assert list(spec.a_sites) == list(range(0, 20, 2))
    with pytest.raises(ValidationError):
        ChainSpec(1)


def test_unknown_tag_rejected():
    with pytest.raises(ValidationError):
        Scenario("Kitaev")


def test_profile_bare_dimerized():
    c = coupling_profile(Scenario("BareSSH"), 0.0)
    assert c.intra == 0.0
    assert c.inter == 2.0
    assert c.onsite_a == c.onsite_b == c.nnn_a == c.nnn_b == 0.0


def test_profile_rice_mele_quarter():
    c = coupling_profile(Scenario("RiceMele"), np.pi / 2)
    np.testing.assert_allclose([c.intra, c.inter, c.onsite_a, c.onsite_b],
                               [1.0, 1.0, 1.0, -1.0], atol=1e-15)


def test_profile_beam_splitter():
    theta = 1.85 * np.pi
    c = coupling_profile(Scenario("BeamSplitter"), theta)
    np.testing.assert_allclose(c.intra, 1 - np.cos(theta))
    np.testing.assert_allclose(c.inter, 1 + np.cos(theta))
    np.testing.assert_allclose(c.nnn_a, c.inter)  # NNN rides the inter-cell bond
    assert c.onsite_a == -np.sin(theta) > 0
    assert c.nnn_b == 0.0


def test_profile_reduces_theta_mod_2pi():
    a = coupling_profile(Scenario("RiceMele"), 0.3)
    b = coupling_profile(Scenario("RiceMele"), 0.3 + 6 * np.pi)
    assert 0.0 <= b.theta < 2 * np.pi
    np.testing.assert_allclose(
        [b.theta, b.intra, b.inter, b.onsite_a, b.onsite_b],
        [a.theta, a.intra, a.inter, a.onsite_a, a.onsite_b], rtol=0, atol=1e-12)


@pytest.mark.parametrize("scenario", ALL_SCENARIOS, ids=lambda s: s.tag)
def test_nn_bonds_sum_to_two(scenario):
    for theta in THETA_GRID:
        c = coupling_profile(scenario, theta)
        np.testing.assert_allclose(c.intra + c.inter, 2.0, atol=1e-15)
        assert 0.0 <= c.intra <= 2.0


def test_coupling_set_rejects_non_finite():
    with pytest.raises(ValidationError):
        CouplingSet(intra=np.nan, inter=1.0)


@pytest.mark.parametrize("scenario", ALL_SCENARIOS, ids=lambda s: s.tag)
def test_hamiltonian_symmetric_and_banded(scenario):
    spec = ChainSpec(10)
    for theta in THETA_GRID:
        h = scenario_hamiltonian(spec, scenario, theta)
        assert np.max(np.abs(h - h.T)) == 0.0
        i, j = np.indices(h.shape)
        assert np.all(h[np.abs(i - j) > 2] == 0.0)


def test_bare_chiral_symmetry_exact():
    spec = ChainSpec(10)
    gamma = np.diag([1.0, -1.0] * spec.n_cells)
    for theta in THETA_GRID:
        h = scenario_hamiltonian(spec, Scenario("BareSSH"), theta)
        assert np.max(np.abs(gamma @ h @ gamma + h)) == 0.0


def test_staggered_reduces_to_bare_at_sin_zeros():
    spec = ChainSpec(6)
    h_stag = scenario_hamiltonian(spec, Scenario("StaggeredNNN"), 0.0)
    h_bare = scenario_hamiltonian(spec, Scenario("BareSSH"), 0.0)
    assert np.array_equal(h_stag, h_bare)  # sin(0) is exact
    h_stag = scenario_hamiltonian(spec, Scenario("StaggeredNNN"), np.pi)
    h_bare = scenario_hamiltonian(spec, Scenario("BareSSH"), np.pi)
    np.testing.assert_allclose(h_stag, h_bare, atol=1e-15)  # sin(pi) ~ 1e-16


def test_two_cell_dimer_limits():
    spec = ChainSpec(2)
    e0 = np.linalg.eigvalsh(scenario_hamiltonian(spec, Scenario("BareSSH"), 0.0))
    np.testing.assert_allclose(e0, [-2.0, 0.0, 0.0, 2.0], atol=1e-14)
    epi = np.linalg.eigvalsh(scenario_hamiltonian(spec, Scenario("BareSSH"), np.pi))
    np.testing.assert_allclose(epi, [-2.0, -2.0, 2.0, 2.0], atol=1e-14)


def test_beam_splitter_n3_against_charpoly_oracle():
    """Eigenvalues of the 6x6 beam-splitter chain at theta = 0.3*pi against
    an independently enumerated matrix solved via its characteristic
    polynomial (symbolic cofactor expansion + arbitrary-precision roots)."""
    sympy = pytest.importorskip("sympy")
    mpmath = pytest.importorskip("mpmath")

    theta = 0.3 * np.pi
    t1 = 1 - np.cos(theta)
    t2 = 1 + np.cos(theta)
    va = -np.sin(theta)
    vb = np.sin(theta)
    nnn = t2
    # sites a1 b1 a2 b2 a3 b3, every entry written out by hand
    m = sympy.Matrix([
        [va,  t1,  nnn, 0,   0,   0],
        [t1,  vb,  t2,  0,   0,   0],
        [nnn, t2,  va,  t1,  nnn, 0],
        [0,   0,   t1,  vb,  t2,  0],
        [0,   0,   nnn, t2,  va,  t1],
        [0,   0,   0,   0,   t1,  vb],
    ])
    poly = sympy.Poly(m.charpoly(), sympy.Symbol("lambda"))
    roots = sorted(float(r) for r in mpmath.polyroots(
        [mpmath.mpf(str(c)) for c in poly.all_coeffs()], maxsteps=200))

    h = scenario_hamiltonian(ChainSpec(3), Scenario("BeamSplitter"), theta)
    np.testing.assert_allclose(np.linalg.eigvalsh(h), roots, atol=1e-12)


def test_mirror_couplings_match_site_reversal():
    spec = ChainSpec(5)
    c = coupling_profile(Scenario("BeamSplitter"), 0.37)
    reversal = np.eye(spec.n_sites)[::-1]
    lhs = reversal @ build_hamiltonian(spec, c) @ reversal
    rhs = build_hamiltonian(spec, mirror_couplings(c))
    assert np.array_equal(lhs, rhs)
