import csv
import json
import math
from pathlib import Path

import yaml
from click.testing import CliRunner

from topobeam.cli import main
from topobeam.presets import DESCRIPTIONS, PRESETS

CATALOG = [
    "fig2a", "fig3a", "fig3b", "fig3c", "fig3d", "fig4a", "fig4b",
    "fig5a", "fig5b", "fig5c", "fig5d", "fig6a", "fig6b", "fig6c", "fig6d",
    "fig8", "fig9a", "fig9b", "fig9c", "fig11a", "fig11b",
]

CHEAP_EVOLVE = {
    "command": "evolve",
    "scenario": {"tag": "BeamSplitter", "n_cells": 4},
    "evolve": {"omega": 1e-4, "initial_site": 8, "dtheta_step": 1e-2,
               "snapshots": 20},
}


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def read_csv(path: Path) -> list[dict]:
    with open(path) as fh:
        return list(csv.DictReader(fh))


def test_preset_catalog_is_stable():
    assert list(PRESETS) == CATALOG
    assert set(DESCRIPTIONS) == set(CATALOG)
    result = invoke("list-presets")
    assert result.exit_code == 0
    for name in CATALOG:
        assert name in result.output


def test_spectrum_preset_writes_expected_tables(tmp_path):
    result = invoke("run", "--preset", "fig2a", "--out", str(tmp_path))
    assert result.exit_code == 0, result.output
    spectra = list(tmp_path.glob("spectrum_*.csv"))
    assert len(spectra) == 1
    rows = read_csv(spectra[0])
    assert len(rows) == 201
    header = rows[0].keys()
    assert list(header)[:3] == ["theta", "E_1", "E_2"]
    # the middle pair stays pinned to zero deep in the topological intervals
    for row in rows:
        theta = float(row["theta"])
        if theta <= 0.25 * math.pi or theta >= 1.75 * math.pi:
            assert abs(float(row["E_10"])) < 1e-6
            assert abs(float(row["E_11"])) < 1e-6
    assert len(list(tmp_path.glob("distribution_upper_*.csv"))) == 1
    assert len(list(tmp_path.glob("distribution_lower_*.csv"))) == 1
    assert len(list(tmp_path.glob("*.manifest.json"))) == 1


def test_beam_splitter_trajectory_ends_half_half(tmp_path):
    result = invoke("run", "--preset", "fig6d", "--out", str(tmp_path))
    assert result.exit_code == 0, result.output
    rows = read_csv(next(tmp_path.glob("trajectory_*.csv")))
    t_final = max(float(r["t"]) for r in rows)
    final = {int(r["site"]): float(r["population"])
             for r in rows if float(r["t"]) == t_final}
    assert abs(final[1] - 0.5) < 0.05
    assert abs(final[2] - 0.5) < 0.05


def test_malformed_config_writes_nothing(tmp_path):
    cfg = tmp_path / "bad.yaml"
    cfg.write_text(yaml.safe_dump({
        "command": "spectrum",
        "scenario": {"tag": "BareSSH", "n_cells": -5},
        "spectrum": {"theta_points": 11},
    }))
    out = tmp_path / "out"
    result = invoke("run", "--config", str(cfg), "--out", str(out))
    assert result.exit_code == 2
    assert "n_cells" in result.output
    assert not out.exists()


def test_unknown_key_is_named(tmp_path):
    cfg = tmp_path / "bad.yaml"
    cfg.write_text(yaml.safe_dump({
        "command": "spectrum",
        "scenario": {"tag": "BareSSH", "n_cells": 10, "coupling": 2.0},
        "spectrum": {},
    }))
    result = invoke("run", "--config", str(cfg), "--out", str(tmp_path / "o"))
    assert result.exit_code == 2
    assert "coupling" in result.output


def test_missing_config_file_is_io_error(tmp_path):
    result = invoke("run", "--config", str(tmp_path / "absent.yaml"))
    assert result.exit_code == 4


def test_preset_equals_expanded_config(tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    assert invoke("run", "--preset", "fig2a", "--out", str(a)).exit_code == 0
    cfg = tmp_path / "fig2a.yaml"
    cfg.write_text(yaml.safe_dump(PRESETS["fig2a"]))
    assert invoke("run", "--config", str(cfg), "--out", str(b)).exit_code == 0
    files_a = sorted(p.name for p in a.glob("*.csv"))
    files_b = sorted(p.name for p in b.glob("*.csv"))
    assert files_a == files_b
    for name in files_a:
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_manifest_round_trip_reproduces_bytes(tmp_path):
    first = tmp_path / "first"
    cfg = tmp_path / "run.yaml"
    cfg.write_text(yaml.safe_dump(CHEAP_EVOLVE))
    assert invoke("run", "--config", str(cfg), "--out", str(first)).exit_code == 0

    manifest = json.loads(next(first.glob("*.manifest.json")).read_text())
    again = tmp_path / "again"
    cfg2 = tmp_path / "rerun.yaml"
    cfg2.write_text(yaml.safe_dump(manifest["config"]))
    assert invoke("run", "--config", str(cfg2), "--out", str(again)).exit_code == 0

    for name in manifest["outputs"]:
        assert (first / name).read_bytes() == (again / name).read_bytes()


def test_seed_flag_changes_disorder_run(tmp_path):
    raw = {
        "command": "disorder",
        "scenario": {"tag": "BeamSplitter", "n_cells": 4},
        "disorder": {"log10w_values": [-1.0], "samples": 2,
                     "omega": 1e-4, "dtheta_step": 1e-2},
    }
    cfg = tmp_path / "dis.yaml"
    cfg.write_text(yaml.safe_dump(raw))
    out = tmp_path / "out"
    r1 = invoke("run", "--config", str(cfg), "--out", str(out))
    r2 = invoke("run", "--config", str(cfg), "--out", str(out), "--seed", "99")
    assert r1.exit_code == 0 and r2.exit_code == 0
    tables = list(out.glob("disorder_*.csv"))
    assert len(tables) == 2  # the seed participates in the config hash
    seeds = set()
    for table in tables:
        seeds.update(row["seed"] for row in read_csv(table))
    assert seeds == {"0", "99"}


def test_verify_map_reports_pass(tmp_path):
    cfg = tmp_path / "map.yaml"
    cfg.write_text(yaml.safe_dump({
        "command": "verify-map",
        "scenario": {"tag": "BeamSplitter", "n_cells": 10},
        "verify-map": {"theta_points": 51},
    }))
    result = invoke("run", "--config", str(cfg), "--out", str(tmp_path / "o"))
    assert result.exit_code == 0
    assert "PASS" in result.output


def test_detect_preset_schema(tmp_path):
    raw = dict(PRESETS["fig11a"])
    raw["detect"] = dict(raw["detect"], omega_d_points=21)
    cfg = tmp_path / "det.yaml"
    cfg.write_text(yaml.safe_dump(raw))
    result = invoke("run", "--config", str(cfg), "--out", str(tmp_path / "o"))
    assert result.exit_code == 0, result.output
    rows = read_csv(next((tmp_path / "o").glob("detection_*.csv")))
    assert list(rows[0].keys()) == ["omega_d", "site", "population"]
    assert len(rows) == 21 * 20
    assert all(float(r["population"]) >= 0.0 for r in rows)
