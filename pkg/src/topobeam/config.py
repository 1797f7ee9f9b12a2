"""Run configuration: schema, validation, canonical hashing.

A run is described by a small YAML document::

    command: evolve            # spectrum | distribution | evolve | sweep-omega
                               # | disorder | detect | verify-map
    scenario:
      tag: BeamSplitter        # BareSSH | RiceMele | FixedNNN | StaggeredNNN
                               # | BeamSplitter | SuperSitePrecursor
      n_cells: 10
      strength: 1.0            # modulation amplitude V (RiceMele, StaggeredNNN)
      fixed_t1: -0.5           # FixedNNN only
      fixed_t2: 0.5
    evolve:                    # exactly one block, named after the command
      omega: 1.0e-5
      initial_site: 20         # 1-based
    seed: 0                    # optional, used by disorder
    output_dir: out            # optional, overridden by --out / TOPOBEAM_OUT

Command blocks (defaults in parentheses):

    spectrum      theta_start (0), theta_end (2*pi), theta_points (201)
    distribution  spectrum keys + gap_state: upper|lower (upper)
    evolve        omega*, initial_site*, theta_start (0), theta_end (2*pi),
                  dtheta_step (1e-3), snapshots (400)
    sweep-omega   initial_site*, target_site or target_populations*,
                  omega_min (1e-6), omega_max (1e-2), points (25),
                  dtheta_step (1e-3)
    disorder      channels ([onsite, nn, nnn]), log10w_values*,
                  samples (100), omega (1e-5), dtheta_step (1e-3)
    detect        theta*, drive_site*, kappa (0.05), drive_amplitude (1),
                  omega_d_min (-2), omega_d_max (2), omega_d_points (801)
    verify-map    theta_points (101)

Keys marked * are required.  Unknown keys anywhere are rejected.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass

import yaml

from .errors import ValidationError
from .lattice import ChainSpec, Scenario, SCENARIO_TAGS

TWO_PI = 2.0 * math.pi

COMMANDS = ("spectrum", "distribution", "evolve", "sweep-omega",
            "disorder", "detect", "verify-map")

# name -> (default or REQUIRED, validator)
_REQUIRED = object()


def _number(v):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise TypeError("expected a number")
    return float(v)


def _positive(v):
    v = _number(v)
    if v <= 0:
        raise TypeError("expected a positive number")
    return v


def _int_pos(v):
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise TypeError("expected a positive integer")
    return v


def _int_any(v):
    if isinstance(v, bool) or not isinstance(v, int):
        raise TypeError("expected an integer")
    return v


def _gap_state(v):
    if v not in ("upper", "lower"):
        raise TypeError("expected 'upper' or 'lower'")
    return v


def _channels(v):
    if not isinstance(v, list) or not v or not all(
            c in ("onsite", "nn", "nnn") for c in v):
        raise TypeError("expected a nonempty list drawn from [onsite, nn, nnn]")
    return list(v)


def _float_list(v):
    if not isinstance(v, list) or not v:
        raise TypeError("expected a nonempty list of numbers")
    return [_number(x) for x in v]


_SPECTRUM_KEYS = {
    "theta_start": (0.0, _number),
    "theta_end": (TWO_PI, _number),
    "theta_points": (201, _int_pos),
}

_SCHEMAS: dict[str, dict] = {
    "spectrum": dict(_SPECTRUM_KEYS),
    "distribution": {**_SPECTRUM_KEYS, "gap_state": ("upper", _gap_state)},
    "evolve": {
        "omega": (_REQUIRED, _positive),
        "initial_site": (_REQUIRED, _int_pos),
        "theta_start": (0.0, _number),
        "theta_end": (TWO_PI, _number),
        "dtheta_step": (1e-3, _positive),
        "snapshots": (400, _int_pos),
    },
    "sweep-omega": {
        "initial_site": (_REQUIRED, _int_pos),
        "target_site": (None, _int_pos),
        "target_populations": (None, _float_list),
        "omega_min": (1e-6, _positive),
        "omega_max": (1e-2, _positive),
        "points": (25, _int_pos),
        "dtheta_step": (1e-3, _positive),
    },
    "disorder": {
        "channels": (["onsite", "nn", "nnn"], _channels),
        "log10w_values": (_REQUIRED, _float_list),
        "samples": (100, _int_pos),
        "omega": (1e-5, _positive),
        "dtheta_step": (1e-3, _positive),
    },
    "detect": {
        "theta": (_REQUIRED, _number),
        "drive_site": (_REQUIRED, _int_pos),
        "kappa": (0.05, _positive),
        "drive_amplitude": (1.0, _number),
        "omega_d_min": (-2.0, _number),
        "omega_d_max": (2.0, _number),
        "omega_d_points": (801, _int_pos),
    },
    "verify-map": {
        "theta_points": (101, _int_pos),
    },
}

_SCENARIO_KEYS = {
    "tag": (_REQUIRED, None),
    "n_cells": (_REQUIRED, _int_pos),
    "strength": (1.0, _number),
    "fixed_t1": (0.0, _number),
    "fixed_t2": (0.0, _number),
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    spec: ChainSpec
    scenario: Scenario
    params: dict
    seed: int
    output_dir: str | None

    def resolved(self) -> dict:
        """Canonical plain-dict form (defaults filled, output dir excluded)."""
        return {
            "command": self.command,
            "scenario": {
                "tag": self.scenario.tag,
                "n_cells": self.spec.n_cells,
                "strength": self.scenario.strength,
                "fixed_t1": self.scenario.fixed_t1,
                "fixed_t2": self.scenario.fixed_t2,
            },
            self.command: dict(sorted(self.params.items())),
            "seed": self.seed,
        }


def _apply_schema(block: dict, schema: dict, where: str) -> dict:
    out = {}
    for key in block:
        if key not in schema:
            raise ValidationError(f"unknown key {where}{key!r}")
    for key, (default, validator) in schema.items():
        if key in block:
            try:
                out[key] = validator(block[key]) if validator else block[key]
            except TypeError as exc:
                raise ValidationError(f"invalid value for {where}{key!r}: {exc}") from exc
        elif default is _REQUIRED:
            raise ValidationError(f"missing required key {where}{key!r}")
        elif default is not None:
            out[key] = default
    return out


def validate_config(raw: dict) -> RunConfig:
    if not isinstance(raw, dict):
        raise ValidationError("config must be a mapping")

    command = raw.get("command")
    if command not in COMMANDS:
        raise ValidationError(f"invalid or missing 'command' (got {command!r}); "
                              f"expected one of {COMMANDS}")

    allowed_top = {"command", "scenario", command, "seed", "output_dir"}
    for key in raw:
        if key not in allowed_top:
            raise ValidationError(f"unknown key {key!r}")

    scenario_block = raw.get("scenario")
    if not isinstance(scenario_block, dict):
        raise ValidationError("missing or invalid 'scenario' block")
    sc = _apply_schema(scenario_block, _SCENARIO_KEYS, "scenario.")
    if sc["tag"] not in SCENARIO_TAGS:
        raise ValidationError(f"unknown scenario tag {sc['tag']!r}")

    spec = ChainSpec(n_cells=sc["n_cells"])
    scenario = Scenario(tag=sc["tag"], strength=sc["strength"],
                        fixed_t1=sc["fixed_t1"], fixed_t2=sc["fixed_t2"])

    block = raw.get(command, {})
    if not isinstance(block, dict):
        raise ValidationError(f"{command!r} block must be a mapping")
    params = _apply_schema(block, _SCHEMAS[command], f"{command}.")

    if command == "sweep-omega":
        has_site = "target_site" in params
        has_pops = "target_populations" in params
        if has_site == has_pops:
            raise ValidationError(
                "sweep-omega needs exactly one of 'target_site' or 'target_populations'")
        if params["omega_min"] >= params["omega_max"]:
            raise ValidationError("sweep-omega.omega_min must be below omega_max")
        if has_site and params["target_site"] > spec.n_sites:
            raise ValidationError(f"sweep-omega.target_site exceeds chain length {spec.n_sites}")
        if has_pops and len(params["target_populations"]) > spec.n_sites:
            raise ValidationError("sweep-omega.target_populations longer than the chain")
    if command == "disorder":
        params["log10w_values"] = sorted(params["log10w_values"])
    if command in ("evolve", "sweep-omega"):
        site = params["initial_site"]
        if site > spec.n_sites:
            raise ValidationError(f"{command}.initial_site exceeds chain length {spec.n_sites}")
    if command == "detect" and params["drive_site"] > spec.n_sites:
        raise ValidationError(f"detect.drive_site exceeds chain length {spec.n_sites}")

    seed = raw.get("seed", 0)
    try:
        seed = _int_any(seed)
    except TypeError as exc:
        raise ValidationError(f"invalid value for 'seed': {exc}") from exc

    output_dir = raw.get("output_dir")
    if output_dir is not None and not isinstance(output_dir, str):
        raise ValidationError("'output_dir' must be a string")

    return RunConfig(command=command, spec=spec, scenario=scenario,
                     params=params, seed=seed, output_dir=output_dir)


def load_config(path) -> RunConfig:
    with open(path) as fh:
        try:
            raw = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ValidationError(f"config is not valid YAML: {exc}") from exc
    return validate_config(raw)


def config_hash(cfg: RunConfig) -> str:
    """Twelve hex chars addressing the resolved run parameters."""
    canonical = json.dumps(cfg.resolved(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()[:12]
