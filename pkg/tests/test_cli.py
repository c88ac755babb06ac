import json
import subprocess
import sys

import pytest

from clusterlab.cli import main

A2 = {"n": 2, "B": [[0, 1], [-1, 0]]}


@pytest.fixture()
def a2_file(tmp_path):
    p = tmp_path / "a2.json"
    p.write_text(json.dumps(A2))
    return str(p)


def write_matrix(tmp_path, obj, name="m.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


class TestMutate:
    def test_single_step_prints_frozen_values(self, a2_file, capsys):
        assert main(["mutate", a2_file, "--path", "1"]) == 0
        out = capsys.readouterr().out
        assert "x1 = x1^-1*x2 + x1^-1*y1" in out
        assert "F1 = y1 + 1" in out
        assert "g1 = (-1, 1)" in out

    def test_empty_path_is_origin(self, a2_file, capsys):
        assert main(["mutate", a2_file]) == 0
        out = capsys.readouterr().out
        assert "x1 = x1" in out and "x2 = x2" in out

    def test_involution(self, a2_file, capsys):
        assert main(["mutate", a2_file, "--path", "1,1"]) == 0
        out = capsys.readouterr().out
        assert "x1 = x1" in out

    def test_json_payload(self, a2_file, tmp_path, capsys):
        out_file = tmp_path / "seed.json"
        assert main(["mutate", a2_file, "--path", "1", "--json", str(out_file)]) == 0
        payload = json.loads(out_file.read_text())
        assert payload["v"] == 1
        assert payload["variables"][0] == "x1^-1*x2 + x1^-1*y1"
        assert payload["C"] == [[-1, 1], [0, 1]]
        assert payload["G"] == [[-1, 0], [1, 1]]
        assert payload["sign_coherent"] == [True, True]
        assert payload["duality_ok"] is True

    def test_bad_direction_is_config_error(self, a2_file, capsys):
        assert main(["mutate", a2_file, "--path", "7"]) == 1
        assert "outside" in capsys.readouterr().err

    def test_inline_matrix_literal(self, a2_file, capsys):
        assert main(["mutate", json.dumps(A2), "--path", "1"]) == 0
        inline = capsys.readouterr().out
        assert main(["mutate", a2_file, "--path", "1"]) == 0
        assert inline == capsys.readouterr().out

    def test_inline_garbage_is_config_error(self, capsys):
        assert main(["mutate", "{not json"]) == 1
        assert "JSON" in capsys.readouterr().err

    def test_extended_matrix_accepted_when_principal(self, tmp_path, capsys):
        f = write_matrix(tmp_path, {
            "n": 2, "m": 2,
            "Bt": [[0, 1], [-1, 0], [1, 0], [0, 1]],
        })
        assert main(["mutate", f, "--path", "1"]) == 0

    def test_extended_matrix_rejected_when_not_principal(self, tmp_path, capsys):
        f = write_matrix(tmp_path, {
            "n": 2, "m": 1,
            "Bt": [[0, 1], [-1, 0], [2, 5]],
        })
        assert main(["mutate", f]) == 1
        assert "principal" in capsys.readouterr().err


class TestVerify:
    def test_a2_passes_with_closure(self, a2_file, tmp_path, capsys):
        rep = tmp_path / "rep.json"
        code = main(["verify", a2_file, "--depth", "12", "--require-closure",
                     "--json", str(rep)])
        assert code == 0
        out = capsys.readouterr().out
        assert "c_determines_seed" in out and "failures: 0" in out
        data = json.loads(rep.read_text())
        assert data["seeds"] == 10 and data["closure"] is True

    def test_affine_truncation_exit_three(self, tmp_path, capsys):
        f = write_matrix(tmp_path, {"n": 2, "B": [[0, 2], [-2, 0]]})
        assert main(["verify", f, "--depth", "4", "--require-closure"]) == 3
        assert main(["verify", f, "--depth", "4"]) == 0

    def test_canary_exit_two(self, a2_file, capsys):
        assert main(["verify", a2_file, "--depth", "3", "--canary", "flip-coeff"]) == 2
        assert main(["verify", a2_file, "--depth", "3", "--canary", "perturb-c"]) == 2

    def test_non_sign_skew_symmetric_exit_one(self, tmp_path, capsys):
        f = write_matrix(tmp_path, {"n": 2, "B": [[0, 1], [1, 0]]})
        assert main(["verify", f, "--depth", "2"]) == 1
        assert "sign-skew-symmetric" in capsys.readouterr().err

    def test_report_dir(self, a2_file, tmp_path, capsys):
        rd = tmp_path / "out"
        assert main(["verify", a2_file, "--depth", "12",
                     "--report-dir", str(rd)]) == 0
        assert (rd / "report.json").exists()
        assert (rd / "report.csv").exists()
        assert (rd / "figures" / "exchange_quiver.png").exists()

    def test_certified_depth_flag(self, tmp_path, capsys):
        f = write_matrix(tmp_path, {"n": 3, "B": [[0, 1, 1], [-1, 0, 1], [-2, -3, 0]]})
        assert main(["verify", f, "--depth", "3", "--certified-depth", "5"]) == 0
        assert "triple_determines_seed_certified" in capsys.readouterr().out

    def test_term_budget_exit_one(self, tmp_path, capsys):
        f = write_matrix(tmp_path, {"n": 3, "B": [[0, 1, 1], [-1, 0, 1], [-2, -3, 0]]})
        assert main(["verify", f, "--depth", "5", "--max-seeds", "100000"]) == 1
        assert "budget" in capsys.readouterr().err


class TestExplore:
    def test_summary_and_json(self, a2_file, tmp_path, capsys):
        out_file = tmp_path / "atlas.json"
        assert main(["explore", a2_file, "--depth", "12",
                     "--json", str(out_file)]) == 0
        out = capsys.readouterr().out
        assert "seeds: 10" in out and "closure: True" in out
        data = json.loads(out_file.read_text())
        assert len(data["entries"]) == 10
        assert data["entries"][0]["path"] == []

    def test_require_closure_truncated(self, tmp_path, capsys):
        f = write_matrix(tmp_path, {"n": 2, "B": [[0, 2], [-2, 0]]})
        assert main(["explore", f, "--depth", "3", "--require-closure"]) == 3

    def test_missing_file(self, capsys):
        assert main(["explore", "/nonexistent/m.json", "--depth", "2"]) == 1


def test_console_script_wired():
    out = subprocess.run([sys.executable, "-m", "clusterlab.cli", "--help"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "mutate" in out.stdout and "serve" in out.stdout
