import json
import shutil
import subprocess

import pytest

from signed_ste.cli import main, parse_mu
from signed_ste.io import fixture, read_json, to_json
from signed_ste.qext import QExt
from signed_ste.weighing import build_w, pattern_x


@pytest.fixture
def fig3(tmp_path):
    p = tmp_path / "fig3.json"
    p.write_text(to_json(fixture("figure3")))
    return str(p)


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


class TestParams:
    def test_table(self, capsys):
        rc, out, _ = run(capsys, "params", "--k", "6")
        assert rc == 0
        assert out.strip() == "k=6  | (5, 6, -1), (1, 3, -2), (0, √6, -√6), (-1, 2, -3), (-5, 1, -6)"

    def test_json(self, capsys):
        rc, out, _ = run(capsys, "params", "--k", "8", "--json", "--n-max", "20")
        rows = json.loads(out)
        assert rc == 0 and len(rows) == 5
        assert rows[1] == {"k": 8, "t": 2, "lambda1": "4", "lambda2": "-2", "type": "Type2",
                           "orders": [3, 6, 9, 12, 15, 18]}

    def test_bad_k(self, capsys):
        rc, _, err = run(capsys, "params", "--k", "0")
        assert rc == 2 and "error" in err


class TestConstruct:
    def test_block8(self, capsys):
        rc, out, err = run(capsys, "construct", "block8", "--m", "14")
        assert rc == 0
        assert read_json(out).n == 42
        report = json.loads(err)
        assert report["verification"]["ste"]["m1"] == 14
        assert report["verification"]["ramanujan"]["pass"]

    def test_line_complete(self, capsys):
        rc, out, err = run(capsys, "construct", "line-complete", "--n", "5", "--negate")
        assert rc == 0 and json.loads(err)["verification"]["ste"]["lambda1"] == "3"

    def test_chain_to_file(self, capsys, tmp_path):
        out_path, rep_path = tmp_path / "c.json", tmp_path / "r.json"
        rc, out, err = run(capsys, "construct", "chain", "--seed", "pentagon", "--k", "7",
                           "-o", str(out_path), "--report", str(rep_path))
        assert rc == 0 and out == "" and err == ""
        assert read_json(out_path.read_text()).n == 24
        assert json.loads(rep_path.read_text())["square_identity"] == "A^2 = 7I"

    def test_block8_bad_order(self, capsys):
        rc, _, err = run(capsys, "construct", "block8", "--m", "6")
        assert rc == 2 and "m=6" in err

    def test_dot_output(self, capsys):
        rc, out, _ = run(capsys, "construct", "chain", "--seed", "k2", "--k", "2", "--format", "dot")
        assert rc == 0 and out.count(" -- ") == 4


class TestVerify:
    def test_ste(self, capsys, fig3):
        rc, out, _ = run(capsys, "verify", "ste", fig3)
        rep = json.loads(out)
        assert rc == 0 and rep["spectrum"] == "[sqrt(5)^3, -sqrt(5)^3]"

    def test_ste_failure_exit(self, capsys, tmp_path):
        p = tmp_path / "c6.txt"
        p.write_text("0 1 0 0 0 1\n1 0 1 0 0 0\n0 1 0 1 0 0\n0 0 1 0 1 0\n0 0 0 1 0 1\n1 0 0 0 1 0\n")
        rc, out, _ = run(capsys, "verify", "ste", str(p))
        assert rc == 1 and json.loads(out)["pass"] is False

    def test_weighing(self, capsys, tmp_path):
        p = tmp_path / "w.txt"
        p.write_text("\n".join(" ".join(map(str, r)) for r in build_w(pattern_x(8)).entries))
        rc, out, _ = run(capsys, "verify", "weighing", str(p), "--alpha", "4")
        assert rc == 0 and json.loads(out)["weighing"]
        rc, _, _ = run(capsys, "verify", "weighing", str(p), "--alpha", "3")
        assert rc == 1

    def test_star(self, capsys, fig3):
        rc, out, _ = run(capsys, "verify", "star", fig3, "--mu", "0,20", "--set", "0,1,2")
        assert rc == 0 and json.loads(out)["mu"] == "sqrt(5)"

    def test_partition(self, capsys, fig3):
        rc, out, _ = run(capsys, "verify", "partition", fig3, "--x", "0,1,2")
        assert rc == 0 and json.loads(out)["partition"]

    def test_ramanujan_and_line(self, capsys, fig3):
        assert run(capsys, "verify", "ramanujan", fig3)[0] == 0
        assert run(capsys, "verify", "line-spectrum", fig3)[0] == 0

    def test_missing_file(self, capsys, tmp_path):
        rc, _, err = run(capsys, "verify", "ste", str(tmp_path / "nope.json"))
        assert rc == 2 and "error" in err

    def test_malformed_file(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"n": 3, "edges": [[0, 0, 1]]}')
        rc, _, err = run(capsys, "verify", "ste", str(p))
        assert rc == 2 and "self-loop" in err


class TestMisc:
    def test_search(self, capsys):
        rc, out, err = run(capsys, "search", "block8-m4")
        rep = json.loads(err)
        assert rc == 0 and rep["pairs_found"] == 2304 and rep["spectrum"] == "[4^4, -2^8]"
        assert read_json(out).n == 12

    def test_export_matrix(self, capsys, fig3):
        rc, out, _ = run(capsys, "export", fig3, "--format", "matrix")
        assert rc == 0 and len(out.splitlines()) == 6

    def test_spectrum(self, capsys, fig3):
        rc, out, _ = run(capsys, "spectrum", fig3)
        assert rc == 0 and out.splitlines() == ["-2.2360679775 x3", "2.2360679775 x3"]

    def test_parse_mu(self):
        assert parse_mu("1,5") == QExt.quadratic_root(1, 5)
        assert parse_mu("1,5", "minus") == QExt.quadratic_root(1, 5, -1)
        assert parse_mu("-2") == -2

    @pytest.mark.skipif(shutil.which("signed-ste") is None, reason="console script not installed")
    def test_console_script(self):
        proc = subprocess.run(["signed-ste", "params", "--k", "5"], capture_output=True, text=True)
        assert proc.returncode == 0 and "√5" in proc.stdout
