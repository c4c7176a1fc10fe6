import json
import subprocess
import sys

from torifan.cli import main, run


def invoke(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_degree_catalog_pseudo_path(capsys):
    code, out, _ = invoke(capsys, "degree", "catalog:X3_0", "--json")
    assert code == 0
    assert json.loads(out) == {"anticanonical_degree": 52}


def test_is_weakened_fano_json(capsys):
    code, out, _ = invoke(capsys, "is-weakened-fano", "catalog:P1xF2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["is_weakened"] is True
    assert payload["crepant_contractions"][0]["contraction"]["kind"] == "zero_two"


def test_false_predicate_still_exits_zero(capsys):
    code, out, _ = invoke(capsys, "is-fano", "catalog:F2", "--json")
    assert code == 0
    assert json.loads(out) == {"is_fano": False}


def test_validate_error_on_incomplete_fan(tmp_path, capsys):
    path = tmp_path / "fan.json"
    path.write_text('{"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2]]}')
    code, out, err = invoke(capsys, "validate", str(path), "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["is_complete"] is False


def test_validate_ok(capsys):
    code, out, _ = invoke(capsys, "validate", "catalog:P2", "--json")
    assert code == 0
    assert json.loads(out)["is_complete"] is True


def test_unknown_catalog_name(capsys):
    code, out, _ = invoke(capsys, "degree", "catalog:NOPE", "--json")
    assert code == 1
    assert "unknown catalog name" in json.loads(out)["error"]


def test_malformed_json_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    code, out, _ = invoke(capsys, "analyze", str(path), "--json")
    assert code == 1


def test_isomorphic_command(tmp_path, capsys):
    code, out, _ = invoke(capsys, "isomorphic", "catalog:P1xP1", "catalog:F1", "--json")
    assert code == 0
    assert json.loads(out)["isomorphic"] is False
    code, out, _ = invoke(capsys, "isomorphic", "catalog:X4_1", "catalog:X4_1", "--json")
    payload = json.loads(out)
    assert payload["isomorphic"] is True
    assert payload["matrix"] is not None


def test_catalog_list(capsys):
    code, out, _ = invoke(capsys, "catalog", "--list", "--json")
    assert code == 0
    names = {item["name"] for item in json.loads(out)["names"]}
    assert {"P2", "F2", "X3_0", "P1xW7", "PP2_O_O3"} <= names


def test_catalog_dump_round_trips(capsys):
    from torifan.catalog import named_fan
    from torifan.fan import fan_from_json

    code, out, _ = invoke(capsys, "catalog", "X5_1", "--json")
    assert code == 0
    assert fan_from_json(out) == named_fan("X5_1").fan


def test_analyze_payload_shape(capsys):
    code, out, _ = invoke(capsys, "analyze", "catalog:F2", "--json")
    payload = json.loads(out)
    assert payload["picard_rank"] == 2
    degrees = sorted(rel["degree"] for rel in payload["relations"])
    assert degrees == [0, 2]
    assert all(rel["extremal"] for rel in payload["relations"])


def test_output_byte_stable(capsys):
    _, first, _ = invoke(capsys, "analyze", "catalog:X4_1", "--json")
    _, second, _ = invoke(capsys, "analyze", "catalog:X4_1", "--json")
    assert first == second


def test_run_returns_result_object():
    result = run(["degree", "catalog:P2", "--json"])
    assert result.status == "ok"
    assert result.payload == {"anticanonical_degree": 9}
    assert result.exit_code == 0


def test_human_output_contains_table(capsys):
    code, out, _ = invoke(capsys, "validate", "catalog:P2")
    assert code == 0
    assert "is_smooth: True" in out


def test_twist_bound_env_override(monkeypatch):
    # parsing only: the env variable must feed the default without erroring
    monkeypatch.setenv("TORIFAN_TWIST_BOUND", "2")
    result = run(["classify-3folds", "--json"])
    assert result.status == "error"  # bound 2 is rejected by the enumerator
    assert "twist bound" in result.payload["error"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "torifan", "degree", "catalog:P2", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"anticanonical_degree": 9}
