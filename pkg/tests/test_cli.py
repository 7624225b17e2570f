import json
import subprocess
import sys

import pytest

from densematch.cli import main

RUNNING = "bipartite 2 2\ne 0 0\ne 0 1\ne 1 1\n"


@pytest.fixture
def gfile(tmp_path):
    def write(text, name="g.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_perfect_and_by_size(capsys, gfile):
    path = gfile(RUNNING)
    assert run(capsys, "count", "--file", path) == (0, "1\n", "")
    assert run(capsys, "count", "--file", path, "--mode", "by-size")[:2] == (0, "1 3 1\n")
    tri = gfile("general 3\ne 0 1\ne 1 2\ne 0 2\n", "tri.txt")
    assert run(capsys, "count", "--file", tri, "--mode", "perfect")[:2] == (0, "0\n")


def test_count_json_uses_decimal_strings(capsys, gfile):
    path = gfile("bipartite 20 20\n" + "".join(f"e {u} {v}\n" for u in range(20) for v in range(20)))
    code, out, _ = run(capsys, "count", "--file", path, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"kind": "count", "mode": "perfect", "count": "2432902008176640000"}


def test_count_errors(capsys, gfile):
    code, _, err = run(capsys, "count", "--file", gfile("bipartite 2 2\ne 0 5\n"))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "count", "--file", gfile("general 26\n"))
    assert code == 3
    code, _, _ = run(capsys, "count", "--file", gfile("general 10\n"), "--max-vertices", "8")
    assert code == 3
    code, _, _ = run(capsys, "count", "--file", gfile("general 2\ne 0 1\n"), "--mode", "by-size")
    assert code == 2
    code, _, _ = run(capsys, "count", "--file", "/nonexistent/graph.txt")
    assert code == 2
    assert run(capsys, "count")[0] == 2


def test_reduce_text(capsys, gfile):
    path = gfile(RUNNING)
    code, out, _ = run(capsys, "reduce", "--file", path, "--construction", "beta")
    assert code == 0
    assert "p = 6 13 44" in out and "m = 1 3 1" in out and "oracle_calls = 3" in out
    code, out, _ = run(capsys, "reduce", "--file", path, "--construction", "alpha", "--verify")
    assert code == 0
    assert "p = 2 3 10" in out and "m = 1 3 1" in out and "verdict: OK" in out


def test_reduce_json_and_verify(capsys, gfile):
    code, out, _ = run(capsys, "reduce", "--file", gfile("bipartite 1 1\n"),
                       "--construction", "beta", "--verify", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["verdict"] == "OK" and doc["m"] == ["1", "0"] and doc["p"] == ["1", "2"]


def test_reduce_errors(capsys, gfile):
    assert run(capsys, "reduce", "--file", gfile("bipartite 1 2\ne 0 0\n"),
               "--construction", "beta")[0] == 2
    assert run(capsys, "reduce", "--file", gfile("bipartite 1 1\ne 0 0 2\n"),
               "--construction", "alpha")[0] == 2
    assert run(capsys, "reduce", "--file", gfile("bipartite 6 6\n"),
               "--construction", "alpha")[0] == 3
    assert run(capsys, "reduce", "--file", gfile("bipartite 3 3\n"),
               "--construction", "beta", "--max-n", "2")[0] == 3
    assert run(capsys, "reduce", "--file", gfile("general 2\ne 0 1\n"),
               "--construction", "beta")[0] == 2


def test_reduce_oracle_inconsistency_exit_code(capsys, gfile, monkeypatch):
    import densematch.cli as cli

    monkeypatch.setattr(cli, "exact_oracle", lambda h, max_vertices=24: 1)
    code, _, err = run(capsys, "reduce", "--file", gfile(RUNNING), "--construction", "beta")
    assert code == 4 and "inconsistency" in err


def test_matrix_checks(capsys):
    code, out, _ = run(capsys, "matrix", "--kind", "A", "--n", "2", "--check", "det")
    assert code == 0 and out.splitlines() == ["1 1 2", "1 2 6", "2 6 24", "det: 4"]
    code, out, _ = run(capsys, "matrix", "--kind", "Q", "--n", "2", "--check", "blocks")
    assert "top-left: [[1,1],[1,9]]" in out
    assert "bottom-right: [[1]]" in out
    assert "off-blocks zero: true" in out
    code, out, _ = run(capsys, "matrix", "--kind", "B", "--n", "4", "--check", "pd")
    assert "minors: 1 2 48" in out and "verdict: positive definite" in out


@pytest.mark.parametrize("kind, n", [("A", 5), ("pascalL", 4), ("B", 6), ("C", 6), ("Q", 7), ("cbinL", 5)])
def test_matrix_factor_passes(capsys, kind, n):
    code, out, _ = run(capsys, "matrix", "--kind", kind, "--n", str(n), "--check", "factor")
    assert code == 0
    assert out.splitlines()[-1] == "factor: PASS"


def test_matrix_errors(capsys):
    assert run(capsys, "matrix", "--kind", "B", "--n", "3")[0] == 2
    assert run(capsys, "matrix", "--kind", "Z", "--n", "3")[0] == 2
    assert run(capsys, "matrix", "--kind", "A", "--n", "2", "--check", "blocks")[0] == 2
    assert run(capsys, "matrix", "--kind", "pascalL", "--n", "2", "--check", "pd")[0] == 2
    assert run(capsys, "matrix", "--kind", "A", "--n", "-1")[0] == 2


def test_matrix_json(capsys):
    code, out, _ = run(capsys, "matrix", "--kind", "Q", "--n", "3", "--check", "blocks", "--json")
    doc = json.loads(out)
    assert doc["off_blocks_zero"] is True
    assert doc["top_left"] == [["1", "1"], ["1", "9"]]
    assert doc["bottom_right"] == [["1", "9"], ["9", "225"]]
    assert doc["bottom_right_is_schur_square_of_C"] is True


def test_verify_class(capsys, gfile):
    path = gfile(RUNNING)
    code, out, _ = run(capsys, "verify-class", "--file", path, "--construction", "alpha", "--i", "1")
    assert code == 0 and out.splitlines() == ["vertices: 6", "alpha<=2: true"]
    code, out, _ = run(capsys, "verify-class", "--file", path, "--construction", "beta", "--i", "2")
    assert out.splitlines() == ["vertices: 4+4", "beta<=2: true"]
    code, out, _ = run(capsys, "verify-class", "--file", gfile("bipartite 0 0\n", "e.txt"),
                       "--construction", "beta", "--i", "0")
    assert code == 0 and "beta<=2: true" in out


def test_output_is_deterministic(capsys, gfile):
    path = gfile(RUNNING)
    argv = ["reduce", "--file", path, "--construction", "alpha", "--verify", "--json"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_module_entry_point(gfile):
    proc = subprocess.run(
        [sys.executable, "-m", "densematch", "count", "--file", gfile(RUNNING), "--mode", "by-size"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "1 3 1\n"
