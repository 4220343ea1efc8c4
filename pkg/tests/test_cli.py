import json
import subprocess
import sys

import pytest

from schur9.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerifyCommand:
    def test_running_example_exit_zero(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--lambda", "5,4,4,2", "--mu", "3,2",
            "--strip", "profile:-3:ENEEENE", "--n", "3",
        )
        assert code == 0
        assert "EQUAL" in out

    def test_qfun_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--qfun", "--lambda", "9,6,4,2", "--mu", "4,3",
            "--strip", "profile:0:EENNEEEE", "--n", "2", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == "schur9/1"
        assert data["equal"] is True

    def test_containment_error_exit_two(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--lambda", "1", "--mu", "2", "--strip", "row", "--n", "2"
        )
        assert code == 2
        assert "error" in err

    def test_bad_strip_exit_two(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--lambda", "2,1", "--strip", "zigzag", "--n", "2"
        )
        assert code == 2

    def test_perturb_negative_control(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--lambda", "5,4,4,2", "--mu", "3,2",
            "--strip", "profile:-3:ENEEENE", "--n", "3", "--perturb",
        )
        assert code == 1
        assert "NOT EQUAL" in out

    def test_perturb_pfaffian_negative_control(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--qfun", "--lambda", "4,2,1", "--mu", "2",
            "--strip", "row", "--n", "2", "--perturb",
        )
        assert code == 1


class TestCaseFiles:
    def test_aggregate_order_and_exit(self, tmp_path, capsys):
        cases = [
            {"lambda": "2,1", "mu": "", "strip": "row", "n": 2},
            {"lambda": "3,1", "mu": "2", "strip": "row", "n": 2, "qfun": True},
            {"lambda": "2", "mu": "", "strip": "col", "n": 2},
        ]
        path = tmp_path / "cases.json"
        path.write_text(json.dumps(cases))
        code, out, _ = run_cli(
            capsys, "verify", "--case-file", str(path), "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["equal"] is True
        assert [c["lambda"] for c in data["cases"]] == ["2,1", "3,1", "2"]

    def test_negative_case_exits_one(self, tmp_path, capsys):
        cases = [
            {"lambda": "2,1", "mu": "", "strip": "row", "n": 2},
            {"lambda": "2,1", "mu": "", "strip": "row", "n": 2, "perturb": True},
        ]
        path = tmp_path / "cases.json"
        path.write_text(json.dumps(cases))
        code, out, _ = run_cli(capsys, "verify", "--case-file", str(path))
        assert code == 1
        assert "1/2 equal" in out

    def test_empty_file_exit_zero(self, tmp_path, capsys):
        path = tmp_path / "cases.json"
        path.write_text("")
        code, out, _ = run_cli(capsys, "verify", "--case-file", str(path))
        assert code == 0
        assert "0/0" in out

    def test_json_lines_with_error_reported(self, tmp_path, capsys):
        path = tmp_path / "cases.jsonl"
        path.write_text('{"lambda": "2,1", "strip": "row", "n": 2}\n{broken\n')
        code, _, err = run_cli(capsys, "verify", "--case-file", str(path))
        assert code == 2
        assert "line 2" in err

    def test_csv_and_figures_outputs(self, tmp_path, capsys):
        cases = [{"lambda": "3,1", "mu": "1", "strip": "hook", "n": 2}]
        path = tmp_path / "cases.json"
        path.write_text(json.dumps(cases))
        csv_path = tmp_path / "summary.csv"
        fig_dir = tmp_path / "figs"
        code, _, _ = run_cli(
            capsys, "verify", "--case-file", str(path),
            "--csv", str(csv_path), "--figures", str(fig_dir),
        )
        assert code == 0
        rows = csv_path.read_text().strip().splitlines()
        assert rows[0].startswith("index,check,lambda")
        assert len(rows) == 2
        pngs = sorted(p.name for p in fig_dir.glob("*.png"))
        assert pngs == [
            "case_000_decomposition.png", "case_000_shape.png", "case_000_strip.png"
        ]

    def test_deterministic_output(self, tmp_path, capsys):
        cases = [
            {"lambda": "3,2", "mu": "1", "strip": "inner", "n": 2},
            {"lambda": "3,1", "mu": "2", "strip": "row", "n": 2, "qfun": True},
        ]
        path = tmp_path / "cases.json"
        path.write_text(json.dumps(cases))

        def snapshot():
            code, out, _ = run_cli(capsys, "verify", "--case-file", str(path),
                                   "--format", "json")
            data = json.loads(out)
            for case in data["cases"]:
                case.pop("elapsed_ms")
            return code, json.dumps(data, sort_keys=True)

        assert snapshot() == snapshot()


class TestCorollaryCommand:
    @pytest.mark.parametrize("name,lam,mu,qfun", [
        ("jt", "3,1", "1", False),
        ("djt", "3,1", "1", False),
        ("giambelli", "3,2", "", False),
        ("giambelli@1", "3,2", "1", False),
        ("okada-inner", "3,2", "1", False),
        ("lp-outer", "3,2", "1", False),
        ("jpn", "3,1", "", True),
        ("qcol", "3,2", "1", True),
        ("q-inner", "4,2,1", "2", True),
        ("q-outer", "4,2,1", "2", True),
    ])
    def test_all_names(self, capsys, name, lam, mu, qfun):
        argv = ["corollary", name, "--lambda", lam, "--mu", mu, "--n", "2"]
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0, out

    def test_unknown_name(self, capsys):
        code, _, err = run_cli(capsys, "corollary", "mystery", "--lambda", "2", "--n", "1")
        assert code == 2


class TestEnumerateRenderLgv:
    def test_enumerate_counts(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--lambda", "2", "--n", "2")
        assert code == 0 and out.strip() == "3"
        code, out, _ = run_cli(
            capsys, "enumerate", "--qfun", "--lambda", "1", "--n", "1"
        )
        assert code == 0 and out.strip() == "2"

    def test_render_grid(self, capsys):
        code, out, _ = run_cli(
            capsys, "render", "--lambda", "5,4,4,2", "--mu", "3,2",
            "--strip", "profile:-3:ENEEENE",
        )
        assert code == 0
        assert "*" in out and "-3" in out
        assert "theta_1 ~ phi[-3,1]" in out

    def test_render_empty(self, capsys):
        code, out, _ = run_cli(capsys, "render", "--lambda", "", "--mu", "")
        assert code == 0
        assert "(empty)" in out

    def test_lgv_check(self, capsys):
        code, out, _ = run_cli(
            capsys, "lgv-check", "--lambda", "3,1", "--mu", "1",
            "--strip", "hook", "--n", "2",
        )
        assert code == 0
        assert "bijection=ok" in out

    def test_console_script_entry_point(self):
        result = subprocess.run(
            [sys.executable, "-m", "schur9.cli", "enumerate", "--lambda", "2", "--n", "2"],
            capture_output=True, text=True,
        )
        assert result.returncode == 0
        assert result.stdout.strip() == "3"


def test_lgv_check_dot_export(tmp_path, capsys):
    dot = tmp_path / "paths.dot"
    code, out, _ = run_cli(
        capsys, "lgv-check", "--lambda", "2,1", "--strip", "row", "--n", "2",
        "--dot", str(dot),
    )
    assert code == 0
    assert dot.read_text().startswith("digraph")
