"""
Command line interface.

Claims checked here:
- every subcommand prints frozen, byte-deterministic output on the
  documented examples
- inputs arrive as positional text, --file JSON, or stdin JSON
- exit codes: 0 success, 2 parse error or invalid value, 3 shape
  mismatch, 4 type error, 5 a checked law failed
- parse errors land on stderr and name the offending position
- --csv and --figure write report files next to the table output
"""

import io
import json
import sys

import pytest

from brauercat import cli
from brauercat.reports import CheckReport, CheckResult

WORKED = ["3>3:[T1-T3,T2-B1,B2-B3]", "3>3:[T1-B3,T2-T3,B1-B2]"]
PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


class TestCompose:
    def test_text_golden(self, capsys):
        assert cli.main(["compose", *WORKED]) == 0
        assert capsys.readouterr().out == "k=1, 3>3:[T1-T3,T2-B3,B1-B2]\n"

    def test_json_golden(self, capsys):
        assert cli.main(["compose", *WORKED, "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == {
            "top": 3, "bottom": 3,
            "pairs": [["T1", "T3"], ["T2", "B3"], ["B1", "B2"]],
            "loops": 1,
        }

    def test_file_input(self, tmp_path, capsys):
        payload = [
            {"top": 3, "bottom": 3,
             "pairs": [["T1", "T3"], ["T2", "B1"], ["B2", "B3"]], "loops": 0},
            {"top": 3, "bottom": 3,
             "pairs": [["T1", "B3"], ["T2", "T3"], ["B1", "B2"]], "loops": 0},
        ]
        path = tmp_path / "pair.json"
        path.write_text(json.dumps(payload))
        assert cli.main(["compose", "--file", str(path)]) == 0
        assert capsys.readouterr().out == "k=1, 3>3:[T1-T3,T2-B3,B1-B2]\n"

    def test_stdin_input(self, monkeypatch, capsys):
        payload = [
            {"top": 2, "bottom": 2, "pairs": [["T1", "B1"], ["T2", "B2"]]},
            {"top": 2, "bottom": 2, "pairs": [["T1", "B2"], ["T2", "B1"]]},
        ]
        monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(payload)))
        assert cli.main(["compose", "--file", "-"]) == 0
        assert capsys.readouterr().out == "k=0, 2>2:[T1-B2,T2-B1]\n"

    def test_shape_mismatch_is_exit_3(self, capsys):
        assert cli.main(["compose", "2>2:[T1-B1,T2-B2]", "3>3:[T1-B1,T2-B2,T3-B3]"]) == 3
        assert capsys.readouterr().err.startswith("error:")

    def test_missing_argument_is_exit_2(self, capsys):
        assert cli.main(["compose", "2>2:[T1-B1,T2-B2]"]) == 2

    def test_bad_json_is_exit_2(self, monkeypatch, capsys):
        monkeypatch.setattr(sys, "stdin", io.StringIO("{not json"))
        assert cli.main(["compose", "--file", "-"]) == 2
        assert "position" in capsys.readouterr().err


class TestRepresent:
    def test_diagram_csv_golden(self, capsys):
        assert cli.main(["represent", "2>2:[T1-T2,B1-B2]", "--p", "2",
                         "--format", "csv"]) == 0
        assert capsys.readouterr().out == (
            "1,0,0,1\n0,0,0,0\n0,0,0,0\n1,0,0,1\n"
        )

    def test_term_json_golden(self, capsys):
        assert cli.main(["represent", "phi_0 o gamma_0", "--p", "2",
                         "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == {
            "links": {"top": 0, "bottom": 0, "pairs": [], "loops": 1},
            "matrix": {"rows": 1, "cols": 1, "entries": [[1, 1, "2/1"]]},
        }

    def test_term_text_shows_links_then_matrix(self, capsys):
        assert cli.main(["represent", "phi_0 o gamma_0", "--p", "3"]) == 0
        assert capsys.readouterr().out == "links: k=1, 0>0:[]\n3\n"

    def test_output_is_byte_deterministic(self, capsys):
        argv = ["represent", "3>3:[T1-T3,T2-B1,B2-B3]", "--p", "2", "--format", "json"]
        cli.main(argv)
        first = capsys.readouterr().out
        cli.main(argv)
        assert capsys.readouterr().out == first

    def test_syntax_error_is_exit_2_with_position(self, capsys):
        assert cli.main(["represent", "phi_0 o", "--p", "2"]) == 2
        assert "position" in capsys.readouterr().err

    def test_type_error_is_exit_4(self, capsys):
        assert cli.main(["represent", "phi_0 o phi_0", "--p", "2"]) == 4
        assert capsys.readouterr().err.startswith("error:")

    def test_invalid_p_is_exit_2(self, capsys):
        assert cli.main(["represent", "id_1", "--p", "0"]) == 2

    def test_term_ast_from_file(self, tmp_path, capsys):
        ast = {"kind": "comp",
               "after": {"kind": "phi", "power": 0},
               "before": {"kind": "gamma", "power": 0}}
        path = tmp_path / "term.json"
        path.write_text(json.dumps(ast))
        assert cli.main(["represent", "--file", str(path), "--p", "2",
                         "--format", "csv"]) == 0
        assert capsys.readouterr().out == "2\n"


class TestCheck:
    def test_axioms_pass_and_summarize(self, capsys):
        assert cli.main(["check", "axioms", "--max-power", "1", "--p", "2"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out
        assert out.rstrip().splitlines()[-1].endswith("0 failed")

    def test_functor_pass(self, capsys):
        assert cli.main(["check", "functor", "--max-size", "2", "--p", "2"]) == 0

    def test_commutant_writes_csv_and_figure(self, tmp_path, capsys):
        csv_path = tmp_path / "report.csv"
        fig_path = tmp_path / "report.png"
        assert cli.main(["check", "commutant", "--n", "2", "--p", "2",
                         "--csv", str(csv_path), "--figure", str(fig_path)]) == 0
        err = capsys.readouterr().err
        assert f"wrote {csv_path}" in err and f"wrote {fig_path}" in err
        assert csv_path.read_text().startswith("group,instance,passed\n")
        assert fig_path.read_bytes().startswith(PNG_MAGIC)

    def test_failing_report_is_exit_5(self, capsys):
        report = CheckReport("demo", (CheckResult("g", "broken", False),))
        args = cli.argparse.Namespace(csv=None, figure=None)
        assert cli._emit_report(report, args) == cli.EXIT_LAW
        assert "FAIL" in capsys.readouterr().out


class TestFaithfulness:
    def test_tl_golden(self, capsys):
        assert cli.main(["faithfulness", "--n", "3", "--p", "2", "--tl"]) == 0
        assert capsys.readouterr().out == "dim=5 rank=5 injective=yes\n"

    def test_collapse_golden(self, capsys):
        assert cli.main(["faithfulness", "--n", "2", "--p", "1"]) == 0
        assert capsys.readouterr().out == "dim=3 rank=1 injective=no\n"

    def test_side_outputs(self, tmp_path, capsys):
        csv_path = tmp_path / "faith.csv"
        fig_path = tmp_path / "faith.png"
        assert cli.main(["faithfulness", "--n", "2", "--p", "2",
                         "--csv", str(csv_path), "--figure", str(fig_path)]) == 0
        assert csv_path.read_text().startswith("n,p,basis,dimension,rank,injective\n")
        assert fig_path.read_bytes().startswith(PNG_MAGIC)

    def test_scale_guard_is_exit_2(self, capsys):
        assert cli.main(["faithfulness", "--n", "5", "--p", "2"]) == 2


class TestEnumerate:
    def test_text_golden(self, capsys):
        assert cli.main(["enumerate", "2", "2"]) == 0
        assert capsys.readouterr().out == (
            "2>2:[T1-T2,B1-B2]\n"
            "2>2:[T1-B1,T2-B2]\n"
            "2>2:[T1-B2,T2-B1]\n"
        )

    def test_noncrossing_filter(self, capsys):
        assert cli.main(["enumerate", "3", "3", "--noncrossing"]) == 0
        assert len(capsys.readouterr().out.rstrip().splitlines()) == 5

    def test_json_round_trips(self, capsys):
        assert cli.main(["enumerate", "2", "0", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == [
            {"top": 2, "bottom": 0, "pairs": [["T1", "T2"]]},
        ]

    def test_odd_total_is_empty(self, capsys):
        assert cli.main(["enumerate", "2", "1"]) == 0
        assert capsys.readouterr().out == ""


class TestRender:
    def test_ascii_golden(self, capsys):
        assert cli.main(["render", "2>2:[T1-T2,B1-B2]"]) == 0
        assert capsys.readouterr().out == "*   *\n ( )\n\n ( )\n*   *\n"

    def test_tikz_to_file(self, tmp_path, capsys):
        out = tmp_path / "diagram.tex"
        assert cli.main(["render", "2>2:[T1-B1,T2-B2]", "--style", "tikz",
                         "--out", str(out)]) == 0
        text = out.read_text()
        assert text.startswith("\\documentclass[tikz]{standalone}\n")
        assert text.endswith("\\end{document}\n")

    def test_png_needs_out(self, capsys):
        assert cli.main(["render", "2>2:[T1-B1,T2-B2]", "--style", "png"]) == 2

    def test_png_to_file(self, tmp_path, capsys):
        out = tmp_path / "diagram.png"
        assert cli.main(["render", "2>2:[T1-B2,T2-B1]", "--style", "png",
                         "--out", str(out)]) == 0
        assert out.read_bytes().startswith(PNG_MAGIC)

    def test_stdin_diagram(self, monkeypatch, capsys):
        payload = {"top": 2, "bottom": 2, "pairs": [["T1", "B1"], ["T2", "B2"]]}
        monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(payload)))
        assert cli.main(["render", "--file", "-"]) == 0
        assert capsys.readouterr().out.startswith("*   *\n|")

    def test_bad_notation_is_exit_2(self, capsys):
        assert cli.main(["render", "2>2:[T1?T2]"]) == 2
        assert "position" in capsys.readouterr().err


class TestEvalTerm:
    def test_text_golden(self, capsys):
        assert cli.main(["eval-term", "phi_1 o F(gamma_0)"]) == 0
        assert capsys.readouterr().out == (
            "term: (phi_1 o F(gamma_0))\n"
            "type: 1 -> 1\n"
            "links: k=0, 1>1:[T1-B1]\n"
        )

    def test_json_fields(self, capsys):
        assert cli.main(["eval-term", "chi_0 o chi_0", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["source"] == 2 and data["target"] == 2
        assert data["links"] == {"top": 2, "bottom": 2,
                                 "pairs": [["T1", "B1"], ["T2", "B2"]], "loops": 0}

    def test_ast_file(self, tmp_path, capsys):
        path = tmp_path / "term.json"
        path.write_text(json.dumps({"kind": "id", "power": 2}))
        assert cli.main(["eval-term", "--file", str(path)]) == 0
        assert "type: 2 -> 2" in capsys.readouterr().out

    def test_type_error_is_exit_4(self, capsys):
        assert cli.main(["eval-term", "gamma_0 o phi_1"]) == 4

    def test_missing_input_is_exit_2(self, capsys):
        assert cli.main(["eval-term"]) == 2
