import numpy as np
import pytest

from topobeam import (ChainSpec, DriveSchedule, IntegratorConfig, Scenario,
                      ValidationError, basis_state, distribution_fidelity,
                      eigendecompose, evolve, omega_sweep, scenario_hamiltonian,
                      transfer_fidelity)

SPEC = ChainSpec(10)
RM = Scenario("RiceMele")
COARSE = IntegratorConfig(dtheta_step=1e-2, snapshot_count=50)


def test_schedule_validation():
    with pytest.raises(ValidationError):
        DriveSchedule(omega=0.0)
    with pytest.raises(ValidationError):
        DriveSchedule(omega=1e-3, theta_start=1.0, theta_end=1.0)
    s = DriveSchedule(omega=2e-3)
    np.testing.assert_allclose(s.total_time, 2 * np.pi / 2e-3)
    r = s.reversed()
    assert r.omega == -2e-3 and r.theta_start == s.theta_end


def test_integrator_config_validation():
    with pytest.raises(ValidationError):
        IntegratorConfig(dtheta_step=0.1)
    with pytest.raises(ValidationError):
        IntegratorConfig(snapshot_count=1)


def test_rejects_non_normalized_state():
    psi = np.zeros(SPEC.n_sites, dtype=complex)
    psi[0] = 0.5
    with pytest.raises(ValidationError):
        evolve(SPEC, RM, DriveSchedule(omega=1e-3), psi, COARSE)


def test_stationary_state_frozen_hamiltonian():
    theta0 = 0.3 * np.pi
    es = eigendecompose(scenario_hamiltonian(SPEC, RM, theta0))
    psi0 = es.states[:, 4].astype(complex)
    schedule = DriveSchedule(omega=1e-3, theta_start=theta0, theta_end=theta0 + 1e-9)
    traj = evolve(SPEC, RM, schedule, psi0, COARSE)
    assert abs(np.vdot(psi0, traj.final_state)) > 1 - 1e-9  # equal up to phase


def test_norms_and_snapshot_grid():
    traj = evolve(SPEC, Scenario("BeamSplitter"), DriveSchedule(omega=1e-3),
                  basis_state(SPEC, SPEC.n_sites), COARSE)
    norms = np.linalg.norm(traj.states, axis=1)
    assert np.max(np.abs(norms - 1.0)) <= 1e-8
    assert traj.thetas[0] == 0.0
    np.testing.assert_allclose(traj.thetas[-1], 2 * np.pi)
    assert np.all(np.diff(traj.thetas) > 0)
    np.testing.assert_allclose(traj.times, traj.thetas / 1e-3)


def test_fidelity_metrics():
    psi = basis_state(SPEC, 3)
    assert transfer_fidelity(psi, psi) == 1.0
    assert transfer_fidelity(psi, basis_state(SPEC, 4)) == 0.0

    q = np.zeros(SPEC.n_sites)
    q[:2] = 0.5
    psi2 = np.sqrt(q).astype(complex)
    assert distribution_fidelity(psi2, q) == pytest.approx(1.0)
    assert distribution_fidelity(basis_state(SPEC, 5), q) == 0.0
    with pytest.raises(ValidationError):
        distribution_fidelity(psi2, q * 2)


def test_step_halving_converges_at_default_settings():
    """At a resolved drive (theta step over rate comparable to unit time)
    halving the default step leaves the final fidelity unchanged to 1e-6."""
    psi0 = basis_state(SPEC, 1)
    target = basis_state(SPEC, SPEC.n_sites)
    fids = []
    for dtheta in (1e-3, 5e-4):
        traj = evolve(SPEC, RM, DriveSchedule(omega=1e-3), psi0,
                      IntegratorConfig(dtheta_step=dtheta, snapshot_count=2))
        fids.append(transfer_fidelity(traj.final_state, target))
    assert abs(fids[0] - fids[1]) < 1e-6


def test_time_reversal_recovers_initial_state():
    psi0 = basis_state(SPEC, 1)
    schedule = DriveSchedule(omega=1e-3)
    cfg = IntegratorConfig(snapshot_count=2)
    fwd = evolve(SPEC, RM, schedule, psi0, cfg)
    back = evolve(SPEC, RM, schedule.reversed(), fwd.final_state, cfg)
    assert transfer_fidelity(back.final_state, psi0) > 1 - 1e-6


def test_sweep_matches_standalone_evolve_bitwise():
    psi0 = basis_state(SPEC, 1)
    target = basis_state(SPEC, SPEC.n_sites)
    omega = 1e-4
    result = omega_sweep(SPEC, RM, np.array([omega]), psi0,
                         target_state=target, cfg=COARSE)
    traj = evolve(SPEC, RM, DriveSchedule(omega=omega), psi0, COARSE)
    assert result.fidelity_overlap[0] == transfer_fidelity(traj.final_state, target)
    assert result.fidelity_distribution[0] == distribution_fidelity(
        traj.final_state, np.abs(target) ** 2)


def test_sweep_validation():
    psi0 = basis_state(SPEC, 1)
    with pytest.raises(ValidationError):
        omega_sweep(SPEC, RM, np.array([]), psi0, target_state=psi0)
    with pytest.raises(ValidationError):
        omega_sweep(SPEC, RM, np.array([-1e-3]), psi0, target_state=psi0)
    with pytest.raises(ValidationError):
        omega_sweep(SPEC, RM, np.array([1e-3]), psi0)


def test_rice_mele_sweep_non_monotonic_with_high_plateau():
    psi0 = basis_state(SPEC, 1)
    target = basis_state(SPEC, SPEC.n_sites)
    omegas = np.logspace(-6, -2, 9)
    result = omega_sweep(SPEC, RM, omegas, psi0, target_state=target)
    fid = result.fidelity_overlap
    assert fid.max() > 0.99               # adiabatic plateau
    assert np.argmax(fid) > 0             # slower than the best rate is worse
    assert fid[0] < fid.max()


def test_staggered_nnn_fidelity_decays_with_rate():
    psi0 = basis_state(SPEC, 1)
    target = basis_state(SPEC, SPEC.n_sites)
    result = omega_sweep(SPEC, Scenario("StaggeredNNN"), np.array([1e-5, 1e-3]),
                         psi0, target_state=target)
    assert result.fidelity_overlap[1] < result.fidelity_overlap[0]
