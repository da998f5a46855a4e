"""Scenario-driven command line harness.

``dipolepair run scenario.yaml --out DIR`` executes one fully self-describing
scenario (YAML key/value file, schema below) and writes deterministic CSV and
JSON artifacts.  ``dipolepair validate`` runs every invariant/oracle suite,
``dipolepair list-scenarios`` shows the bundled example scenarios.

Exit codes: 0 success, 2 scenario schema violation, 3 physics precondition
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np
import yaml

from . import confinement, measurement, surfaces, tunneling, validate
from .hamiltonians import FieldConfig, FieldKind, two_level_block
from .params import PhysicalParams
from .surfaces import Branch, GridSpec

_PARAMS_SCHEMA = {
    "type": "object",
    "properties": {
        "mu": {"type": "number", "exclusiveMinimum": 0},
        "m": {"type": "number", "exclusiveMinimum": 0},
        "b": {"type": "number", "minimum": 0},
        "B0": {"type": "number", "minimum": 0},
        "hbar": {"type": "number", "exclusiveMinimum": 0},
        "r_c": {"type": "number", "minimum": 0},
    },
    "required": ["mu", "m"],
    "additionalProperties": False,
}

SCENARIO_SCHEMA = {
    "type": "object",
    "properties": {
        "name": {"type": "string", "minLength": 1},
        "command": {
            "enum": [
                "surface", "cut", "tunneling", "wkb",
                "measurement", "confinement", "validate",
            ]
        },
        "params": _PARAMS_SCHEMA,
        "field": {
            "enum": [k.value for k in FieldKind],
        },
        "branch": {"enum": ["minus", "plus"]},
        "grid": {
            "type": "object",
            "properties": {
                "z1_min": {"type": "number"},
                "z1_max": {"type": "number"},
                "z2_min": {"type": "number"},
                "z2_max": {"type": "number"},
                "n1": {"type": "integer", "minimum": 2},
                "n2": {"type": "integer", "minimum": 2},
                "log_spacing": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
        "cut": {
            "type": "object",
            "properties": {
                "z1_min": {"type": "number", "exclusiveMinimum": 0},
                "z1_max": {"type": "number", "exclusiveMinimum": 0},
                "n": {"type": "integer", "minimum": 2},
            },
            "required": ["z1_min", "z1_max", "n"],
            "additionalProperties": False,
        },
        "solver": {
            "type": "object",
            "properties": {
                "half_width_rm": {"type": "number", "minimum": 3},
                "n_points": {"type": "integer", "minimum": 501},
            },
            "additionalProperties": False,
        },
        "energies_frac_vm": {
            "type": "array", "items": {"type": "number", "minimum": 0, "maximum": 1},
            "minItems": 1,
        },
        "theta": {"type": "number"},
        "geometry": {
            "type": "object",
            "properties": {"z1": {"type": "number"}, "z2": {"type": "number"}},
            "required": ["z1", "z2"],
            "additionalProperties": False,
        },
        "n_trials": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer", "minimum": 0},
        "trap": {
            "type": "object",
            "properties": {
                "m": {"type": "number", "exclusiveMinimum": 0},
                "Omega": {"type": "number", "exclusiveMinimum": 0},
                "z0": {"type": "number", "minimum": 0},
            },
            "required": ["m", "Omega", "z0"],
            "additionalProperties": False,
        },
        "output": {"type": "string", "minLength": 1},
    },
    "required": ["name", "command"],
    "additionalProperties": False,
}


class ScenarioError(Exception):
    """Schema-level scenario problem (exit code 2)."""


def load_scenario(path: str | Path) -> dict:
    path = Path(path)
    if not path.is_file():
        # Fall back to a bundled scenario referenced by name.
        candidate = resources.files("dipolepair") / "scenarios" / f"{Path(path).stem}.yaml"
        if candidate.is_file():
            path = Path(str(candidate))
        else:
            raise ScenarioError(f"scenario file not found: {path}")
    try:
        data = yaml.safe_load(path.read_text())
    except yaml.YAMLError as exc:
        raise ScenarioError(f"unparseable scenario: {exc}") from exc
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a mapping")
    try:
        jsonschema.validate(data, SCENARIO_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ScenarioError(f"at {where}: {exc.message}") from exc
    return data


def _params(scenario: dict) -> PhysicalParams:
    spec = dict(scenario.get("params", {}))
    if "mu" not in spec or "m" not in spec:
        raise ScenarioError("at params: 'mu' and 'm' are required for this command")
    return PhysicalParams(**spec)


def _field(scenario: dict) -> FieldConfig:
    kind = scenario.get("field")
    if kind is None:
        raise ScenarioError("at field: a field configuration is required for this command")
    return FieldConfig(FieldKind(kind))


def _json_default(obj):
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(
        json.dumps(payload, indent=2, sort_keys=True, default=_json_default) + "\n"
    )


def _params_dict(params: PhysicalParams) -> dict:
    return {
        "mu": params.mu, "m": params.m, "b": params.b,
        "B0": params.B0, "hbar": params.hbar, "r_c": params.r_c,
    }


def _run_surface(scenario, out_dir: Path) -> list[Path]:
    params = _params(scenario)
    config = _field(scenario)
    branch = Branch(scenario.get("branch", "plus"))
    grid = GridSpec(**scenario.get("grid", {}))
    surface = surfaces.sample_surface(params, config, branch, grid)
    base = scenario.get("output", scenario["name"])
    csv_path = out_dir / f"{base}.csv"
    json_path = out_dir / f"{base}.json"
    surfaces.write_surface_csv(surface, csv_path)
    surfaces.write_metadata_json(
        surface, json_path,
        extra={"command": "surface", "grid": scenario.get("grid", {})},
    )
    return [csv_path, json_path]


def _run_cut(scenario, out_dir: Path) -> list[Path]:
    params = _params(scenario)
    config = _field(scenario)
    branch = Branch(scenario.get("branch", "plus"))
    spec = scenario.get("cut", {"z1_min": 0.05, "z1_max": 3.0, "n": 301})
    z1 = np.linspace(spec["z1_min"], spec["z1_max"], spec["n"])
    cut = surfaces.diagonal_cut(params, config, branch, z1)
    base = scenario.get("output", scenario["name"])
    csv_path = out_dir / f"{base}.csv"
    json_path = out_dir / f"{base}.json"
    surfaces.write_cut_csv(cut, csv_path)
    surfaces.write_metadata_json(cut, json_path, extra={"command": "cut", "cut": spec})
    return [csv_path, json_path]


def _run_tunneling(scenario, out_dir: Path) -> list[Path]:
    params = _params(scenario)
    solver = scenario.get("solver", {})
    n_points = solver.get("n_points", 2001)
    half_width_rm = solver.get("half_width_rm", 4.0)
    potential = tunneling.bo_potential(params)
    result = tunneling.splitting(
        potential, half_width=half_width_rm * potential.r_m, n_points=n_points
    )
    v_m = 4.0 * params.mu**2 / potential.r_m**3
    payload = {
        "command": "tunneling",
        "params": _params_dict(params),
        "r_m": potential.r_m,
        "E_S": result.e_s,
        "E_A": result.e_a,
        "Delta": result.delta,
        "Delta_matrix_element": result.delta_matrix_element,
        "t_swap": result.t_swap,
        "w_E0": tunneling.tunneling_probability(params, 0.0),
        "w_Em": tunneling.tunneling_probability(params, v_m),
        "solver": {
            "N": n_points,
            "L_over_rm": half_width_rm,
            "identity_residual": abs(result.delta - result.delta_matrix_element),
        },
    }
    base = scenario.get("output", scenario["name"])
    json_path = out_dir / f"{base}.json"
    csv_path = out_dir / f"{base}_eigenfunctions.csv"
    _write_json(json_path, payload)
    with csv_path.open("w", newline="") as fh:
        fh.write("z,phi_S,phi_A,phi_R,phi_L\n")
        for row in zip(
            result.phi_s.z, result.phi_s.values, result.phi_a.values,
            result.phi_r.values, result.phi_l.values,
        ):
            fh.write(",".join(repr(float(v)) for v in row) + "\n")
    return [json_path, csv_path]


def _run_wkb(scenario, out_dir: Path) -> list[Path]:
    params = _params(scenario)
    r_m = tunneling.well_minimum(params)
    v_m = 4.0 * params.mu**2 / r_m**3
    fractions = scenario.get("energies_frac_vm", [0.0, 1.0])
    entries = []
    for frac in fractions:
        energy = frac * v_m
        entries.append(
            {
                "E_over_Vm": frac,
                "half_action": tunneling.wkb_exponent_integral(params, energy),
                "exponent": tunneling.wkb_exponent(params, energy),
                "w": tunneling.tunneling_probability(params, energy),
            }
        )
    payload = {
        "command": "wkb",
        "params": _params_dict(params),
        "r_m": r_m,
        "r_c_over_r_m": params.r_c / r_m,
        "V_rm_simplified": v_m,
        "results": entries,
    }
    base = scenario.get("output", scenario["name"])
    json_path = out_dir / f"{base}.json"
    _write_json(json_path, payload)
    return [json_path]


def _run_measurement(scenario, out_dir: Path) -> list[Path]:
    if "theta" in scenario:
        theta = float(scenario["theta"])
    elif "geometry" in scenario:
        params = _params(scenario)
        config = _field(scenario)
        geo = scenario["geometry"]
        theta = two_level_block(params, config, geo["z1"], geo["z2"]).angle
    else:
        raise ScenarioError("at theta: measurement needs 'theta' or 'geometry'")
    pred = measurement.protective_expectation(theta)
    rho = measurement.rho_left("-a", theta)
    sx, sy = measurement.transverse_expectations(theta)
    payload = {
        "command": "measurement",
        "theta": theta,
        "rho_diagonal": [float(v) for v in np.diag(rho.mat)],
        "expectation_sz_left": pred.expectation_sz,
        "expectation_sz_right": -pred.expectation_sz,
        "expectation_sx_left": sx,
        "expectation_sy_left": sy,
        "p_plus": pred.p_plus,
        "p_minus": pred.p_minus,
        "concurrence": measurement.spin_concurrence(theta),
    }
    if "n_trials" in scenario:
        payload["ensemble"] = measurement.standard_measurement_simulation(
            theta, scenario["n_trials"], scenario.get("seed", 0)
        )
    base = scenario.get("output", scenario["name"])
    json_path = out_dir / f"{base}.json"
    _write_json(json_path, payload)
    return [json_path]


def _run_confinement(scenario, out_dir: Path) -> list[Path]:
    trap_spec = scenario.get("trap")
    if trap_spec is None:
        raise ScenarioError("at trap: confinement needs a 'trap' section")
    trap = confinement.TrapConfig(**trap_spec)
    delta_s, delta_t = confinement.hyperfine_expectations(trap)
    com, rel_s, rel_t = confinement.kinetic_expectations(trap)
    payload = {
        "command": "confinement",
        "trap": dict(trap_spec),
        "xi": trap.xi,
        "well_separated": trap.well_separated,
        "packet_overlap": confinement.packet_overlap(trap),
        "hyperfine": {"delta_S": delta_s, "delta_T": delta_t},
        "kinetic": {"com": com, "rel_S": rel_s, "rel_T": rel_t},
    }
    base = scenario.get("output", scenario["name"])
    json_path = out_dir / f"{base}.json"
    _write_json(json_path, payload)
    return [json_path]


def _run_validate_scenario(scenario, out_dir: Path) -> list[Path]:
    results = validate.run_all()
    payload = _validate_payload(results)
    base = scenario.get("output", scenario["name"])
    json_path = out_dir / f"{base}.json"
    _write_json(json_path, payload)
    if not payload["ok"]:
        raise RuntimeError("validation suites failed: " + ", ".join(payload["failed"]))
    return [json_path]


_COMMANDS = {
    "surface": _run_surface,
    "cut": _run_cut,
    "tunneling": _run_tunneling,
    "wkb": _run_wkb,
    "measurement": _run_measurement,
    "confinement": _run_confinement,
    "validate": _run_validate_scenario,
}


def run_scenario(path: str | Path, out_dir: str | Path = ".") -> list[Path]:
    scenario = load_scenario(path)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return _COMMANDS[scenario["command"]](scenario, out)


def _validate_payload(results) -> dict:
    return {
        "ok": all(r.ok for r in results),
        "failed": [r.name for r in results if not r.ok],
        "suites": [
            {
                "name": r.name,
                "ok": r.ok,
                "elapsed_s": round(r.elapsed_s, 4),
                "details": r.details,
            }
            for r in results
        ],
    }


def bundled_scenarios() -> list[str]:
    root = resources.files("dipolepair") / "scenarios"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".yaml"))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="dipolepair",
        description="Two-dipole spin-1/2 model: surfaces, tunneling, measurements.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_run = sub.add_parser("run", help="execute a scenario file")
    p_run.add_argument("scenario")
    p_run.add_argument("--out", default=".", help="output directory")

    p_val = sub.add_parser("validate", help="run all invariant/oracle suites")
    p_val.add_argument("--json", action="store_true", help="machine-readable output")
    p_val.add_argument(
        "--mutate", default=None, choices=["eigenvalue"],
        help="inject a deliberate fault to sanity-check the harness",
    )

    sub.add_parser("list-scenarios", help="list bundled example scenarios")

    args = parser.parse_args(argv)

    if args.subcommand == "run":
        try:
            artifacts = run_scenario(args.scenario, args.out)
        except ScenarioError as exc:
            print(f"scenario error: {exc}", file=sys.stderr)
            return 2
        except (ValueError, RuntimeError) as exc:
            print(f"physics error: {exc}", file=sys.stderr)
            return 3
        for path in artifacts:
            print(path)
        return 0

    if args.subcommand == "validate":
        results = validate.run_all(mutate=args.mutate)
        payload = _validate_payload(results)
        if args.json:
            print(json.dumps(payload, indent=2, sort_keys=True, default=_json_default))
        else:
            for suite in payload["suites"]:
                status = "PASS" if suite["ok"] else "FAIL"
                print(f"{status}  {suite['name']}  ({suite['elapsed_s']:.3f}s)")
        return 0 if payload["ok"] else 1

    for name in bundled_scenarios():
        print(name)
    return 0


if __name__ == "__main__":
    sys.exit(main())
