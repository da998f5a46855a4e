import json

import pytest
import yaml

from dipolepair.cli import (
    ScenarioError,
    bundled_scenarios,
    load_scenario,
    main,
    run_scenario,
)


def write_scenario(tmp_path, payload, name="scenario.yaml"):
    path = tmp_path / name
    path.write_text(yaml.safe_dump(payload))
    return path


def test_bundled_scenarios_listed(capsys):
    assert main(["list-scenarios"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == bundled_scenarios()
    assert "tunneling_neutron.yaml" in out


@pytest.mark.parametrize("name", [s.removesuffix(".yaml") for s in bundled_scenarios()])
def test_every_bundled_scenario_runs(tmp_path, name):
    assert main(["run", name, "--out", str(tmp_path / name)]) == 0


def test_artifacts_are_deterministic(tmp_path):
    first = run_scenario("measurement_demo", tmp_path / "a")
    second = run_scenario("measurement_demo", tmp_path / "b")
    for p1, p2 in zip(first, second):
        assert p1.read_bytes() == p2.read_bytes()


def test_missing_scenario_exits_2(capsys):
    assert main(["run", "no_such_scenario.yaml"]) == 2
    assert "scenario error" in capsys.readouterr().err


def test_schema_violation_exits_2(tmp_path, capsys):
    path = write_scenario(
        tmp_path,
        {
            "name": "bad-grid",
            "command": "surface",
            "params": {"mu": 1.0, "m": 1.0, "B0": 1.0},
            "field": "case1_everywhere",
            "grid": {"n1": 1},
        },
    )
    assert main(["run", str(path)]) == 2
    err = capsys.readouterr().err
    # The error message points at the offending field.
    assert "grid" in err and "n1" in err


def test_unknown_command_rejected(tmp_path):
    path = write_scenario(tmp_path, {"name": "x", "command": "explode"})
    with pytest.raises(ScenarioError, match="command"):
        load_scenario(path)


def test_physics_precondition_exits_3(tmp_path, capsys):
    # Tunneling without a core cutoff: the dipole divergence is unregularized.
    path = write_scenario(
        tmp_path,
        {
            "name": "no-cutoff",
            "command": "tunneling",
            "params": {"mu": 1.0, "m": 1.0, "b": 1.0, "r_c": 0.0},
        },
    )
    assert main(["run", str(path), "--out", str(tmp_path)]) == 3
    assert "physics error" in capsys.readouterr().err


def test_tunneling_artifacts(tmp_path):
    assert main(["run", "tunneling_neutron", "--out", str(tmp_path)]) == 0
    payload = json.loads((tmp_path / "tunneling_neutron.json").read_text())
    assert payload["E_S"] < payload["E_A"]
    assert payload["Delta"] > 0
    assert 0.3 <= payload["w_E0"] <= 0.5
    # Full resolved parameter set embedded in the artifact.
    assert set(payload["params"]) == {"mu", "m", "b", "B0", "hbar", "r_c"}
    csv_lines = (tmp_path / "tunneling_neutron_eigenfunctions.csv").read_text().splitlines()
    assert csv_lines[0] == "z,phi_S,phi_A,phi_R,phi_L"


def test_measurement_theta_from_geometry(tmp_path):
    path = write_scenario(
        tmp_path,
        {
            "name": "geo",
            "command": "measurement",
            "params": {"mu": 1.0, "m": 1.0, "B0": 0.5},
            "field": "case2_constant_right",
            "geometry": {"z1": 1.2, "z2": -0.8},
        },
    )
    assert main(["run", str(path), "--out", str(tmp_path)]) == 0
    payload = json.loads((tmp_path / "geo.json").read_text())
    assert payload["expectation_sz_left"] == -payload["expectation_sz_right"]
    assert payload["p_plus"] + payload["p_minus"] == pytest.approx(1.0)


def test_validate_command_json(capsys):
    assert main(["validate", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert payload["failed"] == []
    names = {s["name"] for s in payload["suites"]}
    assert "hamiltonians.eigensystem" in names
    assert all("elapsed_s" in s for s in payload["suites"])


def test_validate_mutation_hook_reports_failure(capsys):
    # A deliberately perturbed eigenvalue must be caught by the oracle suite.
    assert main(["validate", "--mutate", "eigenvalue", "--json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["failed"] == ["hamiltonians.eigensystem"]
