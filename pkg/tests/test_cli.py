import json

import pytest

from leibnizalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_example2_right_exit_zero(self, corpus_files, capsys):
        code, out, _ = run(capsys, "check", str(corpus_files["example2"]))
        assert code == 0
        assert "chirality: right" in out

    def test_wrong_declared_side_fails(self, tmp_path, capsys):
        bad = tmp_path / "bad.leib"
        bad.write_text("dim: 2\nside: right\nf 1 1 2 = 1\nf 1 2 2 = 1\n")
        code, _, err = run(capsys, "check", str(bad))
        assert code == 1
        assert "verification failed" in err

    def test_auto_neither_fails(self, tmp_path, capsys):
        bad = tmp_path / "bad.leib"
        bad.write_text("dim: 2\nf 1 1 1 = 1\nf 1 1 2 = 1\nf 2 1 1 = 1\n")
        code, out, _ = run(capsys, "check", str(bad))
        assert code == 1
        assert "chirality: neither" in out

    def test_parse_error_is_exit_two(self, tmp_path, capsys):
        bad = tmp_path / "bad.leib"
        bad.write_text("dim: 2\nf 1 1 = nope\n")
        code, _, err = run(capsys, "check", str(bad))
        assert code == 2
        assert "error" in err

    def test_missing_file_is_exit_two(self, capsys):
        code, _, err = run(capsys, "check", "/nonexistent/x.leib")
        assert code == 2


class TestDuals:
    def test_all_scenarios(self, corpus_files, capsys):
        code, out, _ = run(
            capsys, "duals", str(corpus_files["example1"]), "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert sorted(payload) == ["l-3-l", "l-3-r", "lr-1-r", "lr-4-l"]
        assert payload["lr-4-l"]["kernel_dimension"] == 2

    def test_single_scenario(self, corpus_files, capsys):
        code, out, _ = run(
            capsys, "duals", str(corpus_files["example3"]), "--scenario", "lr-1-r"
        )
        assert code == 0
        assert "lr-1-r" in out

    def test_incompatible_scenario_is_input_error(self, corpus_files, capsys):
        code, _, err = run(
            capsys, "duals", str(corpus_files["example2"]), "--scenario", "l-3-r"
        )
        assert code == 2

    def test_dim9_rejected(self, tmp_path, capsys):
        big = tmp_path / "big.leib"
        big.write_text("dim: 9\n")
        code, _, err = run(capsys, "duals", str(big), "--scenario", "all")
        assert code == 2
        assert "outside 1..8" in err


class TestRMatrixCommands:
    def test_ybe_satisfied(self, corpus_files, tmp_path, capsys):
        rfile = tmp_path / "r.rmat"
        rfile.write_text("dim: 2\nr 1 2 = 1\nr 2 1 = -1\n")
        code, out, _ = run(
            capsys,
            "ybe",
            str(corpus_files["example3"]),
            "--side",
            "r",
            "--r",
            str(rfile),
        )
        assert code == 0
        assert "CYBE: satisfied" in out

    def test_ybe_violated_exit_one(self, corpus_files, tmp_path, capsys):
        rfile = tmp_path / "r.rmat"
        rfile.write_text("dim: 2\nr 1 2 = 1\n")
        code, out, _ = run(
            capsys,
            "ybe",
            str(corpus_files["example3"]),
            "--side",
            "r",
            "--r",
            str(rfile),
        )
        assert code == 1
        assert "CYBE: violated" in out

    def test_gybe_despite_cybe(self, corpus_files, tmp_path, capsys):
        rfile = tmp_path / "r.rmat"
        rfile.write_text("dim: 2\nr 1 2 = 1\n")
        code, out, _ = run(
            capsys,
            "gybe",
            str(corpus_files["example3"]),
            "--side",
            "r",
            "--r",
            str(rfile),
        )
        assert code == 0
        assert "GYBE: satisfied" in out

    def test_solve_recovers_family(self, corpus_files, tmp_path, capsys):
        dual = tmp_path / "dual.leib"
        dual.write_text("dim: 2\nf 1 2 1 = -1\nf 1 2 2 = -1\nf 2 2 1 = 1\nf 2 2 2 = 1\n")
        code, out, _ = run(
            capsys,
            "rmatrix",
            str(corpus_files["example1"]),
            "--case",
            "left4",
            "--dual",
            str(dual),
            "--format",
            "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["solvable"] is True
        assert payload["particular"] == [["1", "0"], ["-1", "0"]]

    def test_solve_infeasible_exit_one(self, corpus_files, tmp_path, capsys):
        dual = tmp_path / "dual.leib"
        dual.write_text("dim: 2\nf 1 2 1 = -1\nf 1 2 2 = -1\nf 2 1 1 = 1\nf 2 1 2 = 1\n")
        code, out, _ = run(
            capsys,
            "rmatrix",
            str(corpus_files["example1"]),
            "--case",
            "left4",
            "--dual",
            str(dual),
        )
        assert code == 1
        assert "infeasible" in out

    def test_coboundary_output(self, corpus_files, tmp_path, capsys):
        rfile = tmp_path / "r.rmat"
        rfile.write_text("dim: 2\nr 1 1 = 1\nr 2 1 = -1\n")
        code, out, _ = run(
            capsys,
            "coboundary",
            str(corpus_files["example1"]),
            "--case",
            "left4",
            "--r",
            str(rfile),
            "--format",
            "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["dual_chirality"] == "left"
        assert ["1", "2", "1", "-1"] in [
            [str(x) for x in row] for row in payload["dual_tensor"]
        ]

    def test_schouten_text(self, corpus_files, tmp_path, capsys):
        rfile = tmp_path / "r.rmat"
        rfile.write_text("dim: 2\nr 1 2 = 1\n")
        code, out, _ = run(
            capsys,
            "schouten",
            str(corpus_files["example3"]),
            "--side",
            "r",
            "--r",
            str(rfile),
        )
        assert code == 0
        assert "(2,2,2)=1" in out


class TestReportAndCorpus:
    def test_report_deterministic(self, corpus_files, capsys):
        code1, out1, _ = run(capsys, "report", str(corpus_files["example4"]))
        code2, out2, _ = run(capsys, "report", str(corpus_files["example4"]))
        assert code1 == code2 == 0
        assert out1 == out2
        payload = json.loads(out1)
        assert payload["tool"]["name"] == "leibnizalg"
        assert payload["check"]["chirality"] == "right"
        assert payload["selfcheck"]["dual_defect_identity"] is True

    def test_report_seed_recorded(self, corpus_files, capsys):
        _, out, _ = run(capsys, "report", str(corpus_files["example1"]), "--seed", "9")
        assert json.loads(out)["selfcheck"]["seed"] == 9

    def test_corpus_list_and_extract(self, tmp_path, capsys):
        code, out, _ = run(capsys, "corpus")
        assert code == 0
        assert out.split() == ["example1", "example2", "example3", "example4"]
        code, out, _ = run(capsys, "corpus", "example3", "--dest", str(tmp_path))
        assert code == 0
        assert (tmp_path / "example3.leib").read_text().startswith("#")

    def test_corpus_unknown_name(self, capsys):
        code, _, err = run(capsys, "corpus", "example9")
        assert code == 2

    def test_unknown_flag_exit_two(self, corpus_files, capsys):
        code, _, _ = run(capsys, "check", str(corpus_files["example1"]), "--bogus")
        assert code == 2

    def test_adjoint_matches_goldens(self, corpus_files, capsys):
        code, out, _ = run(
            capsys, "adjoint", str(corpus_files["example1"]), "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["first_slot"][0] == [["0", "-1"], ["0", "-1"]]
        assert payload["output_slot"][1] == [["-1", "-1"], ["0", "0"]]

    def test_actions_verdicts(self, corpus_files, capsys):
        code, out, _ = run(
            capsys, "actions", str(corpus_files["example2"]), "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["case1"] == {
            "right-1": "pass",
            "right-2": "pass",
            "right-3": "pass",
        }
