"""Command-line front end: validates a run config, dispatches to the
simulation modules and writes CSV artifacts plus a JSON run manifest.

File names carry a 12-hex-digit hash of the resolved configuration, so
identical runs land on identical names and re-running a manifest's config
reproduces its outputs byte for byte.  Exit codes: 0 success, 2 invalid
configuration, 3 numerical failure, 4 I/O failure.
"""

from __future__ import annotations

import copy
import json
import os
import platform
import sys
import time

import click
import numpy as np

from . import __version__
from .circuit import (detection_spectrum, verify_mapping, write_detection_csv,
                      write_mapping_csv)
from .config import RunConfig, config_hash, load_config, validate_config
from .lattice import scenario_hamiltonian
from .disorder import disorder_sweep, write_disorder_csv
from .dynamics import (DriveSchedule, IntegratorConfig, basis_state, evolve,
                       omega_sweep, write_sweep_csv, write_trajectory_csv)
from .errors import NumericError, ValidationError
from .presets import DESCRIPTIONS, PRESETS
from .spectral import spectrum_scan, write_distribution_csv, write_spectrum_csv

EXIT_VALIDATION = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

OUTPUT_DIR_ENV = "TOPOBEAM_OUT"


def _theta_grid(params: dict) -> np.ndarray:
    return np.linspace(params["theta_start"], params["theta_end"],
                       params["theta_points"])


def _run_spectrum(cfg: RunConfig, out_dir: str, tag: str) -> list[str]:
    result = spectrum_scan(cfg.spec, cfg.scenario, _theta_grid(cfg.params))
    names = [f"spectrum_{tag}.csv", f"distribution_upper_{tag}.csv",
             f"distribution_lower_{tag}.csv"]
    write_spectrum_csv(result, os.path.join(out_dir, names[0]))
    write_distribution_csv(result, "upper", os.path.join(out_dir, names[1]))
    write_distribution_csv(result, "lower", os.path.join(out_dir, names[2]))
    return names


def _run_distribution(cfg: RunConfig, out_dir: str, tag: str) -> list[str]:
    which = cfg.params["gap_state"]
    result = spectrum_scan(cfg.spec, cfg.scenario, _theta_grid(cfg.params))
    name = f"distribution_{which}_{tag}.csv"
    write_distribution_csv(result, which, os.path.join(out_dir, name))
    return [name]


def _run_evolve(cfg: RunConfig, out_dir: str, tag: str) -> list[str]:
    p = cfg.params
    schedule = DriveSchedule(omega=p["omega"], theta_start=p["theta_start"],
                             theta_end=p["theta_end"])
    icfg = IntegratorConfig(dtheta_step=p["dtheta_step"], snapshot_count=p["snapshots"])
    traj = evolve(cfg.spec, cfg.scenario, schedule,
                  basis_state(cfg.spec, p["initial_site"]), icfg)
    name = f"trajectory_{tag}.csv"
    write_trajectory_csv(traj, os.path.join(out_dir, name))
    return [name]


def _run_sweep(cfg: RunConfig, out_dir: str, tag: str) -> list[str]:
    p = cfg.params
    omegas = np.logspace(np.log10(p["omega_min"]), np.log10(p["omega_max"]), p["points"])
    target_state = None
    target_pops = None
    if "target_site" in p:
        target_state = basis_state(cfg.spec, p["target_site"])
    else:
        pops = np.zeros(cfg.spec.n_sites)
        values = p["target_populations"]
        pops[:len(values)] = values
        target_pops = pops
    result = omega_sweep(cfg.spec, cfg.scenario, omegas,
                         basis_state(cfg.spec, p["initial_site"]),
                         target_state=target_state, target_populations=target_pops,
                         cfg=IntegratorConfig(dtheta_step=p["dtheta_step"]))
    name = f"sweep_{tag}.csv"
    write_sweep_csv(result, os.path.join(out_dir, name))
    return [name]


def _run_disorder(cfg: RunConfig, out_dir: str, tag: str, threads: int) -> list[str]:
    p = cfg.params
    w_grid = np.power(10.0, np.asarray(p["log10w_values"]))
    result = disorder_sweep(cfg.spec, w_grid, channels=tuple(p["channels"]),
                            samples=p["samples"], seed=cfg.seed, omega=p["omega"],
                            scenario=cfg.scenario,
                            cfg=IntegratorConfig(dtheta_step=p["dtheta_step"]),
                            n_jobs=threads)
    name = f"disorder_{tag}.csv"
    write_disorder_csv(result, os.path.join(out_dir, name))
    click.echo(f"clean fidelity: {result.clean_fidelity:.6f}")
    return [name]


def _run_detect(cfg: RunConfig, out_dir: str, tag: str) -> list[str]:
    p = cfg.params
    h = scenario_hamiltonian(cfg.spec, cfg.scenario, p["theta"])
    drive = np.zeros(cfg.spec.n_sites, dtype=complex)
    drive[p["drive_site"] - 1] = p["drive_amplitude"]
    grid = np.linspace(p["omega_d_min"], p["omega_d_max"], p["omega_d_points"])
    spectrum = detection_spectrum(h, drive, grid, p["kappa"])
    name = f"detection_{tag}.csv"
    write_detection_csv(spectrum, os.path.join(out_dir, name))
    return [name]


def _run_verify_map(cfg: RunConfig, out_dir: str, tag: str) -> list[str]:
    thetas = np.linspace(0.0, 2.0 * np.pi, cfg.params["theta_points"])
    report = verify_mapping(cfg.spec, thetas)
    name = f"mapping_{tag}.csv"
    write_mapping_csv(report, os.path.join(out_dir, name))
    status = "PASS" if report.passed else "FAIL"
    click.echo(f"mapping check: {status} (max |diff| = {report.max_abs_diff:.3e})")
    if not report.passed:
        raise NumericError("detuning-schedule lattice deviates from the "
                           f"beam-splitter chain by {report.max_abs_diff:.3e}")
    return [name]


def _execute(cfg: RunConfig, out_dir: str, threads: int) -> list[str]:
    tag = config_hash(cfg)
    if cfg.command == "spectrum":
        return _run_spectrum(cfg, out_dir, tag)
    if cfg.command == "distribution":
        return _run_distribution(cfg, out_dir, tag)
    if cfg.command == "evolve":
        return _run_evolve(cfg, out_dir, tag)
    if cfg.command == "sweep-omega":
        return _run_sweep(cfg, out_dir, tag)
    if cfg.command == "disorder":
        return _run_disorder(cfg, out_dir, tag, threads)
    if cfg.command == "detect":
        return _run_detect(cfg, out_dir, tag)
    return _run_verify_map(cfg, out_dir, tag)


def _write_manifest(cfg: RunConfig, out_dir: str, outputs: list[str],
                    wall_time: float) -> str:
    name = f"{cfg.command}_{config_hash(cfg)}.manifest.json"
    manifest = {
        "command": cfg.command,
        "config": cfg.resolved(),
        "config_hash": config_hash(cfg),
        "outputs": outputs,
        "versions": {
            "topobeam": __version__,
            "numpy": np.__version__,
            "python": platform.python_version(),
        },
        "wall_time_s": round(wall_time, 3),
    }
    with open(os.path.join(out_dir, name), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return name


@click.group()
def main():
    """Simulations of topological transfer channels in modulated SSH chains."""


@main.command()
@click.option("--config", "config_path", type=str, default=None,
              help="Path to a YAML run configuration.")
@click.option("--preset", type=str, default=None,
              help="Name of a bundled reference run (see list-presets).")
@click.option("--out", type=str, default=None, help="Output directory.")
@click.option("--seed", type=int, default=None, help="Override the config seed.")
@click.option("--threads", type=int, default=1, show_default=True,
              help="Worker count for sample-parallel commands.")
def run(config_path, preset, out, seed, threads):
    """Execute one run and write its CSV artifacts plus a manifest."""
    started = time.perf_counter()
    try:
        if (config_path is None) == (preset is None):
            raise ValidationError("provide exactly one of --config or --preset")
        if preset is not None:
            if preset not in PRESETS:
                raise ValidationError(f"unknown preset {preset!r}; see list-presets")
            raw = copy.deepcopy(PRESETS[preset])
            if seed is not None:
                raw["seed"] = seed
            cfg = validate_config(raw)
        else:
            cfg = load_config(config_path)
            if seed is not None:
                raw = copy.deepcopy(cfg.resolved())
                raw["seed"] = seed
                cfg = validate_config(raw)

        out_dir = out or cfg.output_dir or os.environ.get(OUTPUT_DIR_ENV) or "out"
        os.makedirs(out_dir, exist_ok=True)
        outputs = _execute(cfg, out_dir, threads)
        manifest = _write_manifest(cfg, out_dir, outputs, time.perf_counter() - started)
    except ValidationError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    except NumericError as exc:
        click.echo(f"numeric error: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)
    except OSError as exc:
        click.echo(f"io error: {exc}", err=True)
        sys.exit(EXIT_IO)
    for name in outputs + [manifest]:
        click.echo(os.path.join(out_dir, name))


@main.command("list-presets")
def list_presets():
    """Print the bundled reference runs."""
    for name in PRESETS:
        click.echo(f"{name:8s} {DESCRIPTIONS[name]}")


if __name__ == "__main__":
    main()
