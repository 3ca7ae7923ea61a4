"""Command-line interface: golden outputs, exit codes, byte stability."""

import json
import subprocess
import sys

import pytest

from parkfn.cli import main


def run_cli(capsys, argv, stdin_obj=None, monkeypatch=None):
    if stdin_obj is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", _FakeStdin(json.dumps(stdin_obj)))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class _FakeStdin:
    def __init__(self, text):
        self._text = text

    def read(self, *args):
        return self._text


def write_instance(tmp_path, obj, name="instance.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


# -- check -------------------------------------------------------------------


def test_check_vector_golden(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [0, 2, 0], "u": [1, 1, 3]})
    code, out, _ = run_cli(capsys, ["check", "--family", "vector", "--file", path])
    assert code == 0
    assert out == '{"member":true,"prime":false}\n'


def test_check_vector_full_lot_example(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [6, 0, 1, 0, 0], "u": [1, 1, 3, 3, 9]})
    code, out, _ = run_cli(capsys, ["check", "--family", "vector", "--file", path])
    assert code == 0 and json.loads(out) == {"member": True, "prime": False}


def test_check_classical(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [0, 3, 1, 0]})
    code, out, _ = run_cli(capsys, ["check", "--family", "classical", "--file", path])
    assert code == 0 and json.loads(out) == {"member": True, "prime": False}


def test_check_pq_golden(tmp_path, capsys):
    prime_pair = write_instance(tmp_path, {"p": 3, "q": 4, "a": [0, 0, 3], "b": [0, 0, 1, 1]})
    code, out, _ = run_cli(capsys, ["check", "--family", "pq", "--file", prime_pair])
    assert code == 0
    assert out == '{"member":true,"prime":true}\n'
    member_pair = write_instance(tmp_path, {"a": [3, 0, 3], "b": [1, 0, 1, 0]}, "m.json")
    code, out, _ = run_cli(capsys, ["check", "--family", "pq", "--file", member_pair])
    assert json.loads(out) == {"member": True, "prime": False}
    non_member = write_instance(tmp_path, {"a": [0, 3, 3], "b": [0, 0, 2, 2]}, "n.json")
    code, out, _ = run_cli(capsys, ["check", "--family", "pq", "--file", non_member])
    assert json.loads(out) == {"member": False, "prime": False}


def test_check_twodim_golden_witness(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [2, 3, 2], "b": [3, 0, 1, 0]})
    argv = ["check", "--family", "twodim", "--affine", "0,1,1,0,1,1", "--p", "3", "--q", "4", "--file", path]
    code, out, _ = run_cli(capsys, argv)
    assert code == 0
    assert out == '{"member":true,"prime":false,"witness":"NNEENEN"}\n'
    bad = write_instance(tmp_path, {"a": [4, 3, 3], "b": [2, 0, 2, 1]}, "bad.json")
    code, out, _ = run_cli(capsys, argv[:-1] + [bad])
    assert json.loads(out) == {"member": False, "prime": False}


def test_check_twodim_embedded_grid(tmp_path, capsys):
    from parkfn.pq import u0_matrix

    instance = {"a": [0, 0, 3], "b": [0, 0, 1, 1], "U": u0_matrix(3, 4).to_json_dict()}
    path = write_instance(tmp_path, instance)
    code, out, _ = run_cli(capsys, ["check", "--family", "twodim", "--file", path])
    assert code == 0 and json.loads(out)["prime"] is True
    affine = {
        "a": [0, 0, 3],
        "b": [0, 0, 1, 1],
        "affine": {"a": 0, "b": 1, "c": 1, "d": 0, "s": 1, "t": 1, "p": 3, "q": 4},
    }
    path = write_instance(tmp_path, affine, "affine.json")
    code, out2, _ = run_cli(capsys, ["check", "--family", "twodim", "--file", path])
    assert code == 0 and out2 == out


def test_check_twodim_matrix_file(tmp_path, capsys):
    from parkfn.pq import u0_matrix

    grid_path = write_instance(tmp_path, u0_matrix(2, 2).to_json_dict(), "grid.json")
    inst = write_instance(tmp_path, {"a": [0, 1], "b": [1, 0]})
    code, out, _ = run_cli(
        capsys, ["check", "--family", "twodim", "--matrix-file", grid_path, "--file", inst]
    )
    assert code == 0 and out == '{"member":true,"prime":false,"witness":"ENEN"}\n'


def test_list_twodim_prime(capsys):
    code, out, _ = run_cli(
        capsys,
        ["list", "--family", "twodim", "--affine", "0,1,1,0,1,1", "--p", "1", "--q", "1", "--prime"],
    )
    assert code == 0 and out.splitlines() == ['{"a":[0],"b":[0]}']


def test_check_reads_stdin(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys,
        ["check", "--family", "pq"],
        stdin_obj={"a": [], "b": [0]},
        monkeypatch=monkeypatch,
    )
    assert code == 0 and json.loads(out) == {"member": True, "prime": True}


# -- simulate ----------------------------------------------------------------


def test_simulate_golden(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [6, 0, 1, 0, 0], "u": [1, 1, 3, 3, 9]})
    code, out, _ = run_cli(capsys, ["simulate", "--family", "vector", "--file", path])
    assert code == 0
    assert out == '{"assignment":[8,0,2,0,2]}\n'


def test_simulate_failure(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [8, 8, 0, 0, 0], "u": [1, 1, 3, 3, 9]})
    code, out, _ = run_cli(capsys, ["simulate", "--family", "vector", "--file", path])
    assert code == 0
    assert out == '{"failed_car":1}\n'


def test_simulate_rejects_pair_families(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [0], "b": [0]})
    code, _, err = run_cli(capsys, ["simulate", "--family", "pq", "--file", path])
    assert code == 1 and "error" in err


# -- decompose ---------------------------------------------------------------


def test_decompose_vector_golden(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [0, 3, 1, 0], "u": [1, 2, 3, 4]})
    code, out, _ = run_cli(capsys, ["decompose", "--family", "vector", "--file", path])
    assert code == 0
    assert out == (
        '{"components":[{"B":[0,2,3],"a":[0,1,0],"offset":0,"u":[1,2,3]},'
        '{"B":[1],"a":[0],"offset":3,"u":[1]}]}\n'
    )


def test_decompose_vector_six_car_golden(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [7, 3, 0, 4, 0, 3], "u": [1, 2, 4, 5, 7, 8]})
    code, out, _ = run_cli(capsys, ["decompose", "--family", "vector", "--file", path])
    assert code == 0
    got = json.loads(out)
    assert got["components"][0] == {"B": [2, 4], "a": [0, 0], "offset": 0, "u": [1, 2]}
    assert got["components"][1] == {"B": [1, 3, 5], "a": [1, 2, 1], "offset": 2, "u": [2, 3, 5]}
    assert got["components"][2] == {"B": [0], "a": [0], "offset": 7, "u": [1]}


def test_decompose_pq_golden(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [3, 0, 3, 2, 3, 0], "b": [6, 1, 0, 5, 0]})
    code, out, _ = run_cli(capsys, ["decompose", "--family", "pq", "--file", path])
    assert code == 0
    got = json.loads(out)
    assert got["components"][0] == {
        "A": [1, 3, 5],
        "B": [1, 2, 4],
        "a": [0, 2, 0],
        "b": [1, 0, 0],
        "offset": [0, 0],
    }
    assert got["components"][4] == {"A": [], "B": [0], "a": [], "b": [0], "offset": [6, 4]}


def test_decompose_rejects_non_member(tmp_path, capsys):
    path = write_instance(tmp_path, {"a": [2, 2], "u": [1, 2]})
    code, _, err = run_cli(capsys, ["decompose", "--family", "vector", "--file", path])
    assert code == 1 and "error" in err


# -- count and list ----------------------------------------------------------


@pytest.mark.parametrize("method", ["formula", "oracle"])
def test_count_classical_prime(capsys, method):
    code, out, _ = run_cli(
        capsys, ["count", "--family", "classical", "--n", "4", "--prime", "--method", method]
    )
    assert code == 0 and out == "27\n"


def test_count_vector_arith_flags(capsys):
    code, out, _ = run_cli(
        capsys, ["count", "--family", "vector", "--s", "2", "--b", "1", "--n", "2"]
    )
    assert code == 0 and out == "8\n"


def test_count_vector_u_flag_detects_arithmetic(capsys):
    code, out, _ = run_cli(capsys, ["count", "--family", "vector", "--u", "2,3,4"])
    assert code == 0 and out == "50\n"
    code, _, err = run_cli(capsys, ["count", "--family", "vector", "--u", "1,1,4"])
    assert code == 1 and "arithmetic" in err


def test_count_pq_and_twodim(capsys):
    code, out, _ = run_cli(capsys, ["count", "--family", "pq", "--p", "3", "--q", "4"])
    assert code == 0 and out == "12800\n"
    code, out, _ = run_cli(
        capsys,
        ["count", "--family", "twodim", "--affine", "0,1,1,0,1,1", "--p", "3", "--q", "4", "--method", "oracle"],
    )
    assert code == 0 and out == "12800\n"


def test_count_oracle_cap_exit_code(capsys):
    code, _, err = run_cli(
        capsys,
        ["count", "--family", "classical", "--n", "12", "--method", "oracle", "--cap", "1000"],
    )
    assert code == 3 and "error" in err


def test_count_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("PARKFN_SEARCH_CAP", "10")
    code, _, _ = run_cli(capsys, ["count", "--family", "classical", "--n", "3", "--method", "oracle"])
    assert code == 3
    monkeypatch.setenv("PARKFN_SEARCH_CAP", "1000")
    code, out, _ = run_cli(capsys, ["count", "--family", "classical", "--n", "3", "--method", "oracle"])
    assert code == 0 and out == "16\n"


def test_list_members(capsys):
    code, out, _ = run_cli(capsys, ["list", "--family", "classical", "--n", "2"])
    assert code == 0
    assert out.splitlines() == ['{"a":[0,0]}', '{"a":[0,1]}', '{"a":[1,0]}']
    code, out, _ = run_cli(capsys, ["list", "--family", "pq", "--p", "1", "--q", "1", "--prime"])
    assert out.splitlines() == ['{"a":[0],"b":[0]}']


# -- verify ------------------------------------------------------------------


def test_verify_classical_suite_csv(capsys):
    code, out, err = run_cli(capsys, ["verify", "--suite", "classical"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family,params,quantity,formula,oracle,pass"
    assert len(lines) == 25  # header + 6 n-values x 4 quantities
    assert all(line.endswith("True") for line in lines[1:])
    assert "24/24" in err


def test_verify_pq_small_suite(capsys):
    code, out, err = run_cli(capsys, ["verify", "--suite", "pq-small"])
    assert code == 0
    assert "136/136" in err
    assert all(line.endswith("True") for line in out.splitlines()[1:])


def test_verify_json_format_is_stable(capsys):
    code, out1, _ = run_cli(capsys, ["verify", "--suite", "classical", "--format", "json"])
    assert code == 0
    code, out2, _ = run_cli(capsys, ["verify", "--suite", "classical", "--format", "json"])
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["all_pass"] is True and doc["suite"] == "classical" and doc["version"] == 1


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, ["verify", "--suite", "nope"])
    assert code == 1 and "unknown suite" in err


def test_verify_disagreement_exit_code(capsys, monkeypatch):
    import parkfn.cli as cli_mod

    monkeypatch.setattr(cli_mod, "run_row", lambda *args: (1, 2))
    code, out, _ = run_cli(capsys, ["verify", "--suite", "classical"])
    assert code == 2
    assert all(line.endswith("False") for line in out.splitlines()[1:])


def test_malformed_instance_exits_one(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, _, err = run_cli(capsys, ["check", "--family", "pq", "--file", str(path)])
    assert code == 1 and "error" in err


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "parkfn", "count", "--family", "classical", "--n", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "125\n"
