"""Bundled reference runs fig2a ... fig11b.

Each preset expands to an ordinary run configuration (see
:mod:`topobeam.config`); names and contents are stable across releases.
"""

from __future__ import annotations

import math

TWO_PI = 2.0 * math.pi


def _scenario(tag: str, **kw) -> dict:
    return {"tag": tag, "n_cells": 10, **kw}


def _spectrum(tag: str, **kw) -> dict:
    return {"command": "spectrum", "scenario": _scenario(tag, **kw),
            "spectrum": {"theta_points": 201}}


def _distribution(tag: str, gap_state: str = "upper", **kw) -> dict:
    return {"command": "distribution", "scenario": _scenario(tag, **kw),
            "distribution": {"theta_points": 201, "gap_state": gap_state}}


def _sweep(tag: str, initial_site: int, **target) -> dict:
    return {"command": "sweep-omega", "scenario": _scenario(tag),
            "sweep-omega": {"initial_site": initial_site, "points": 25, **target}}


def _evolve(tag: str, omega: float, initial_site: int) -> dict:
    return {"command": "evolve", "scenario": _scenario(tag),
            "evolve": {"omega": omega, "initial_site": initial_site}}


def _detect(drive_site: int) -> dict:
    return {"command": "detect", "scenario": _scenario("BeamSplitter"),
            "detect": {"theta": 0.15 * math.pi, "drive_site": drive_site,
                       "kappa": 0.05}}


PRESETS: dict[str, dict] = {
    "fig2a": _spectrum("BareSSH"),
    "fig3a": _spectrum("RiceMele"),
    "fig3b": _distribution("RiceMele"),
    "fig3c": _sweep("RiceMele", initial_site=1, target_site=20),
    "fig3d": _evolve("RiceMele", omega=5e-4, initial_site=1),
    "fig4a": _spectrum("FixedNNN", fixed_t1=-0.5, fixed_t2=0.5),
    "fig4b": _distribution("FixedNNN", fixed_t1=-0.5, fixed_t2=0.5),
    "fig5a": _spectrum("StaggeredNNN"),
    "fig5b": _distribution("StaggeredNNN"),
    "fig5c": _sweep("StaggeredNNN", initial_site=1, target_site=20),
    "fig5d": _evolve("StaggeredNNN", omega=1e-5, initial_site=1),
    "fig6a": _spectrum("BeamSplitter"),
    "fig6b": _distribution("BeamSplitter"),
    "fig6c": _sweep("BeamSplitter", initial_site=20,
                    target_populations=[0.5, 0.5]),
    "fig6d": _evolve("BeamSplitter", omega=1e-5, initial_site=20),
    "fig8": {"command": "disorder", "scenario": _scenario("BeamSplitter"),
             "disorder": {"log10w_values": [-3.0, -2.5, -2.0, -1.5, -1.0,
                                            -0.5, 0.0, 0.5],
                          "samples": 100, "omega": 1e-5},
             "seed": 7},
    "fig9a": _spectrum("SuperSitePrecursor"),
    "fig9b": _distribution("SuperSitePrecursor"),
    "fig9c": _distribution("SuperSitePrecursor", gap_state="lower"),
    "fig11a": _detect(drive_site=20),
    "fig11b": _detect(drive_site=1),
}

DESCRIPTIONS: dict[str, str] = {
    "fig2a": "bare chain spectrum with degenerate zero modes (N=10, 201 theta points)",
    "fig3a": "spectrum with staggered on-site modulation, split gap states",
    "fig3b": "upper gap state distribution across the on-site pumping cycle",
    "fig3c": "end-to-end transfer fidelity vs sweep rate (on-site channel)",
    "fig3d": "site populations during the on-site-channel transfer at omega=5e-4",
    "fig4a": "spectrum with fixed NNN hoppings (no pumping channel)",
    "fig4b": "upper gap state distribution for fixed NNN hoppings",
    "fig5a": "spectrum with staggered periodic NNN hoppings",
    "fig5b": "upper gap state distribution across the NNN pumping cycle",
    "fig5c": "end-to-end transfer fidelity vs sweep rate (NNN channel)",
    "fig5d": "site populations during the NNN-channel transfer at omega=1e-5",
    "fig6a": "beam-splitter chain spectrum",
    "fig6b": "upper gap state distribution of the beam-splitter chain",
    "fig6c": "beam-splitter fidelity vs sweep rate (two-site target)",
    "fig6d": "last site to first two sites transfer at omega=1e-5",
    "fig8": "disorder-averaged beam-splitter fidelity per channel (100 samples)",
    "fig9a": "spectrum of the super-site precursor chain",
    "fig9b": "upper gap state (right edge) of the precursor chain",
    "fig9c": "lower gap state (two-site super-site) of the precursor chain",
    "fig11a": "detection spectrum, drive on the last resonator",
    "fig11b": "detection spectrum, drive on the first resonator",
}
