"""
Tests for the command-line pipeline: stdout answers, exit codes and artifacts.
"""

import json

import pytest

from crossnum.graphs import MultiGraph, parse_edge_list
from crossnum.main import EXIT_INPUT, EXIT_NO, EXIT_UNKNOWN, EXIT_YES, build_parser, main
from crossnum.mso import TWO_COLORABLE, to_text
from crossnum.schemas import CrossingWitness


def _answer(capsys) -> str:
    return capsys.readouterr().out.strip()


@pytest.fixture
def k5_file(write_graph, k5):
    return write_graph("k5.txt", k5)


class TestCross:
    def test_decide(self, k5_file, capsys):
        assert main(["cross", "decide", "--in", str(k5_file), "--k", "0"]) == EXIT_NO
        assert _answer(capsys) == "no"
        assert main(["cross", "decide", "--in", str(k5_file), "--k", "1"]) == EXIT_YES
        assert _answer(capsys) == "yes"

    def test_decide_writes_witness_and_report(self, k5_file, tmp_path, capsys):
        witness_path = tmp_path / "out" / "w.json"
        report_path = tmp_path / "out" / "r.json"
        code = main([
            "cross", "decide", "--in", str(k5_file), "--k", "1",
            "--witness", str(witness_path), "--report", str(report_path),
        ])
        assert code == EXIT_YES
        witness = CrossingWitness.model_validate_json(witness_path.read_text())
        assert witness.size == 1
        report = json.loads(report_path.read_text())
        assert report["verdict"] == "yes"
        assert report["elapsed_seconds"] is None

    def test_decide_with_forbidden_edges(self, k5_file, capsys):
        assert main(["cross", "decide", "--in", str(k5_file), "--k", "1", "--forbid", "5,6,7,8"]) == EXIT_YES
        assert main(["cross", "decide", "--in", str(k5_file), "--k", "1", "--naive"]) == EXIT_YES

    def test_decide_budget(self, write_graph, k6, capsys):
        path = write_graph("k6.txt", k6)
        assert main(["cross", "decide", "--in", str(path), "--k", "3", "--max-nodes", "1"]) == EXIT_UNKNOWN
        assert _answer(capsys) == "unknown"

    def test_number_writes_artifacts(self, k5_file, tmp_path, capsys):
        out = tmp_path / "results"
        assert main(["cross", "number", "--in", str(k5_file), "--output-dir", str(out)]) == EXIT_YES
        assert _answer(capsys) == "1"
        witness_text = (out / "k5.witness.json").read_text()
        svg_text = (out / "k5.svg").read_text()
        assert CrossingWitness.model_validate_json(witness_text).size == 1

        assert main(["cross", "number", "--in", str(k5_file), "--output-dir", str(out)]) == EXIT_YES
        assert (out / "k5.witness.json").read_text() == witness_text
        assert (out / "k5.svg").read_text() == svg_text

    def test_validate_round(self, k5_file, tmp_path, capsys):
        out = tmp_path / "results"
        main(["cross", "number", "--in", str(k5_file), "--output-dir", str(out)])
        capsys.readouterr()
        witness = out / "k5.witness.json"
        assert main(["cross", "validate", "--in", str(k5_file), "--witness", str(witness), "--k", "1"]) == EXIT_YES
        assert _answer(capsys) == "valid"
        assert main(["cross", "validate", "--in", str(k5_file), "--witness", str(witness), "--k", "0"]) == EXIT_NO
        assert _answer(capsys) == "invalid"

    def test_draw(self, k5_file, tmp_path, capsys):
        out = tmp_path / "drawn"
        assert main(["cross", "draw", "--in", str(k5_file), "--output-dir", str(out)]) == EXIT_YES
        assert _answer(capsys) == "1"
        drawing = out / "k5.drawing.json"
        assert main(["cross", "validate", "--in", str(k5_file), "--drawing", str(drawing), "--k", "1"]) == EXIT_YES

    def test_validate_needs_a_certificate(self, k5_file):
        assert main(["cross", "validate", "--in", str(k5_file)]) == EXIT_INPUT


class TestGrid:
    def test_gen(self, capsys):
        assert main(["grid", "gen", "--r", "2"]) == EXIT_YES
        text = capsys.readouterr().out
        assert text.splitlines()[0] == "24 30"
        assert parse_edge_list(text).num_edges == 30

    def test_gen_planted_json(self, capsys):
        assert main(["grid", "gen", "--r", "3", "--plant", "--seed", "4", "--format", "json"]) == EXIT_YES
        document = json.loads(capsys.readouterr().out)
        # 54 grid vertices plus the four new K5 vertices
        assert len(document["vertices"]) == 54 + 4
        assert len(document["edges"]) == 72 + 10

    def test_embed_absent(self, write_graph, k4, capsys):
        path = write_graph("k4.txt", k4)
        assert main(["grid", "embed", "--in", str(path), "--r", "2"]) == EXIT_NO
        assert _answer(capsys) == "absent"

    def test_reduce_without_grid(self, k5_file, tmp_path, capsys):
        output = tmp_path / "reduced.json"
        assert main(["grid", "reduce", "--in", str(k5_file), "--k", "1", "--output", str(output)]) == EXIT_YES
        document = json.loads(output.read_text())
        assert len(document["vertices"]) == 5


class TestMso:
    def test_eval(self, write_graph, write_text, c4, k3, capsys):
        formula = write_text("bip.mso", to_text(TWO_COLORABLE))
        c4_path = write_graph("c4.txt", c4)
        k3_path = write_graph("k3.txt", k3)
        assert main(["mso", "eval", "--graph", str(c4_path), "--formula", str(formula)]) == EXIT_YES
        assert _answer(capsys) == "true"
        assert main(["mso", "eval", "--graph", str(k3_path), "--formula", str(formula)]) == EXIT_NO
        assert _answer(capsys) == "false"

    def test_eval_assignment(self, write_graph, write_text, c4, capsys):
        formula = write_text("f.mso", "(ALL z. (Y z -> E z)) & I u w")
        path = write_graph("c4.txt", c4)
        code = main([
            "mso", "eval", "--in", str(path), "--formula", str(formula),
            "--assign", "u=0", "--assign", "w=4", "--forbid", "5",
        ])
        assert code == EXIT_YES
        assert _answer(capsys) == "true"

    def test_eval_universe_limit(self, write_graph, write_text, capsys):
        formula = write_text("bip.mso", to_text(TWO_COLORABLE))
        path = write_graph("big.txt", MultiGraph.from_pairs(12, [(i, i + 1) for i in range(11)]))
        code = main(["mso", "eval", "--in", str(path), "--formula", str(formula), "--max-universe", "10"])
        assert code == EXIT_UNKNOWN

    def test_interpret(self, write_text, capsys):
        formula = write_text("f.mso", "EX x. E x")
        assert main(["mso", "interpret", "--formula", str(formula)]) == EXIT_YES
        assert "x1" in _answer(capsys)

    def test_chi(self, write_text, tmp_path, capsys):
        formula = write_text("f.mso", "EX x. V x")
        output = tmp_path / "chi.txt"
        assert main(["mso", "interpret", "--formula", str(formula), "--chi", "1", "--output", str(output)]) == EXIT_YES
        assert "Y" in output.read_text()


class TestErrors:
    def test_missing_file(self, tmp_path):
        assert main(["cross", "decide", "--in", str(tmp_path / "nope.txt"), "--k", "1"]) == EXIT_INPUT

    def test_bad_formula(self, write_graph, write_text, c4):
        formula = write_text("bad.mso", "EX x")
        path = write_graph("c4.txt", c4)
        assert main(["mso", "eval", "--in", str(path), "--formula", str(formula)]) == EXIT_INPUT

    def test_unbound_variable(self, write_graph, write_text, c4):
        formula = write_text("free.mso", "E x")
        path = write_graph("c4.txt", c4)
        assert main(["mso", "eval", "--in", str(path), "--formula", str(formula)]) == EXIT_INPUT

    def test_malformed_graph(self, write_text):
        path = write_text("bad.txt", "3 1\n0 3\n")
        assert main(["cross", "number", "--in", str(path)]) == EXIT_INPUT

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["cross"])

    def test_seed_only_for_grid_gen(self):
        assert build_parser().parse_args(["grid", "gen", "--r", "2", "--seed", "5"]).seed == 5
        with pytest.raises(SystemExit):
            build_parser().parse_args(["cross", "decide", "--in", "g.txt", "--k", "1", "--seed", "5"])
        with pytest.raises(SystemExit):
            build_parser().parse_args(["mso", "eval", "--in", "g.txt", "--formula", "f.mso", "--seed", "5"])
