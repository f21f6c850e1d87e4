"""Command-line interface: exit codes, JSON reports, pipelines."""

import json
import re

import corpus
from ocpack import cycle_graph, emit_graph, parse_graph
from ocpack.cli import main

TIMING_PATTERN = re.compile(r'"timing_ms": [0-9.]+')


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def graph_file(tmp_path, graph, name="g.graph", weights=None):
    path = tmp_path / name
    path.write_text(emit_graph(graph, weights))
    return str(path)


def solve_report(out: str) -> dict:
    return json.loads(out)


class TestSolve:
    def test_exact_on_triangle(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(3))
        code, out, err = run_cli(["solve", path, "--algo", "exact"], capsys)
        assert code == 0
        report = solve_report(out)
        assert report["command"] == "solve"
        assert report["result"]["size"] == 1
        assert report["result"]["weight"] == 1
        assert report["verification"] == "pass"
        assert report["parameters"]["n"] == 3
        assert "[ocpack]" in err

    def test_bipartite_flow(self, tmp_path, capsys):
        g = corpus.random_bipartite(12, 0.4, seed=21)
        path = graph_file(tmp_path, g)
        code, out, _ = run_cli(["solve", path, "--algo", "bipartite"], capsys)
        assert code == 0
        report = solve_report(out)
        assert report["result"]["size"] == corpus.ref_alpha_w(g, None)

    def test_bipartite_on_odd_cycle_exits_two(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(5))
        code, out, err = run_cli(["solve", path, "--algo", "bipartite"], capsys)
        assert code == 2
        assert out == ""
        assert "precondition violated" in err

    def test_noshort_on_long_cycle(self, tmp_path, capsys):
        code, out, _ = run_cli(
            ["gen", "--family", "oddcycles", "--lengths", "53"], capsys
        )
        assert code == 0
        path = tmp_path / "c53.graph"
        path.write_text(out)
        code, out, _ = run_cli(
            ["solve", str(path), "--algo", "noshort", "--k", "1", "--b", "2"],
            capsys,
        )
        assert code == 0
        report = solve_report(out)
        assert report["result"]["size"] >= 13
        assert report["verification"] == "pass"
        assert all(1 <= v <= 53 for v in report["result"]["vertices"])

    def test_noshort_on_short_cycle_exits_two(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(5))
        code, _, err = run_cli(
            ["solve", path, "--algo", "noshort", "--k", "1", "--b", "2"], capsys
        )
        assert code == 2
        assert "precondition violated" in err

    def test_eptas_repetitions(self, tmp_path, capsys):
        g = corpus.gnp_corpus(1, 12, 12, seed=1101)[0]
        path = graph_file(tmp_path, g)
        code, out, _ = run_cli(
            [
                "solve", path, "--algo", "eptas", "--k", "1", "--t", "3",
                "--mode", "practical", "--r-override", "12",
                "--d-override", "20", "--reps", "4", "--seed", "9",
            ],
            capsys,
        )
        assert code == 0
        report = solve_report(out)
        assert len(report["repetition_sizes"]) == 4
        assert report["result"]["size"] == max(report["repetition_sizes"])
        assert report["parameters"]["mode"] == "practical"

    def test_qptas_on_triangle(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(3))
        code, out, _ = run_cli(
            ["solve", path, "--algo", "qptas", "--k", "1", "--p", "4"], capsys
        )
        assert code == 0
        assert solve_report(out)["result"]["size"] == 1

    def test_missing_required_params(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(5))
        code, _, err = run_cli(["solve", path, "--algo", "eptas"], capsys)
        assert code == 1
        assert "requires --k and --t" in err


class TestColor:
    def test_trianglefree_five_cycle(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(5))
        code, out, _ = run_cli(
            ["color", path, "--algo", "trianglefree", "--k", "1"], capsys
        )
        assert code == 0
        report = solve_report(out)
        assert report["result"]["colors"] <= 7
        assert len(report["result"]["assignment"]) == 5
        assert report["verification"] == "pass"

    def test_trianglefree_rejects_triangle(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(3))
        code, _, err = run_cli(
            ["color", path, "--algo", "trianglefree", "--k", "1"], capsys
        )
        assert code == 2
        assert "precondition violated" in err

    def test_general_coloring(self, tmp_path, capsys):
        g = corpus.gnp_corpus(1, 10, 10, seed=1102)[0]
        path = graph_file(tmp_path, g)
        code, out, _ = run_cli(
            ["color", path, "--algo", "general", "--k", "2"], capsys
        )
        assert code == 0
        assert solve_report(out)["verification"] == "pass"

    def test_exact_coloring(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(5))
        code, out, _ = run_cli(["color", path, "--algo", "exact"], capsys)
        assert code == 0
        assert solve_report(out)["result"]["colors"] == 3


class TestGen:
    def test_oddcycles_pipeline(self, tmp_path, capsys):
        code, out, err = run_cli(
            ["gen", "--family", "oddcycles", "--lengths", "3,5"], capsys
        )
        assert code == 0
        assert "gen oddcycles" in err
        path = tmp_path / "cycles.graph"
        path.write_text(out)
        code, out, _ = run_cli(["check", str(path), "--what", "iocp"], capsys)
        assert code == 0
        assert solve_report(out)["result"]["iocp"] == 2

    def test_gnp_deterministic(self, capsys):
        args = ["gen", "--family", "gnp", "--n", "10", "--p", "0.3", "--seed", "4"]
        _, first, _ = run_cli(args, capsys)
        _, second, _ = run_cli(args, capsys)
        assert first == second
        graph, _ = parse_graph(first)
        assert graph.n == 10

    def test_thm5_emit_variants(self, tmp_path, capsys):
        graphs = {}
        for emit in ("sampled", "pruned", "result"):
            code, out, err = run_cli(
                ["gen", "--family", "thm5", "--k", "4", "--seed", "2", "--emit", emit],
                capsys,
            )
            assert code == 0
            assert "gen thm5: k=4 n=8" in err
            graphs[emit], _ = parse_graph(out)
        n = graphs["result"].n
        assert n == 8
        assert graphs["pruned"].m + graphs["result"].m == n * (n - 1) // 2
        assert graphs["pruned"].m <= graphs["sampled"].m

    def test_highoddgirth(self, capsys):
        code, out, err = run_cli(
            [
                "gen", "--family", "highoddgirth", "--n-bipartite", "4",
                "--lengths", "9", "--attach-edges", "2", "--seed", "3",
            ],
            capsys,
        )
        assert code == 0
        assert "odd_girth=9" in err
        graph, _ = parse_graph(out)
        assert graph.n == 13
        assert corpus.ref_odd_girth(graph) == 9

    def test_missing_family_options(self, capsys):
        code, _, err = run_cli(["gen", "--family", "gnp"], capsys)
        assert code == 1
        assert "requires --n and --p" in err


class TestCheck:
    def test_oddgirth_of_nine_cycle(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(9))
        code, out, _ = run_cli(["check", path, "--what", "oddgirth"], capsys)
        assert code == 0
        assert solve_report(out)["result"]["odd_girth"] == 9

    def test_oddgirth_of_bipartite_graph_is_inf(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(6))
        code, out, _ = run_cli(["check", path, "--what", "oddgirth"], capsys)
        assert code == 0
        assert solve_report(out)["result"]["odd_girth"] == "inf"

    def test_independent_vertices_are_one_indexed(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(5))
        code, out, _ = run_cli(
            ["check", path, "--what", "independent", "--vertices", "1,3"], capsys
        )
        assert code == 0
        assert solve_report(out)["result"] == {"ok": True, "violating_edge": None}
        code, out, _ = run_cli(
            ["check", path, "--what", "independent", "--vertices", "1,2"], capsys
        )
        assert code == 0
        assert solve_report(out)["result"] == {
            "ok": False,
            "violating_edge": [1, 2],
        }

    def test_coloring_check(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(6))
        code, out, _ = run_cli(
            ["check", path, "--what", "coloring", "--colors", "0,1,0,1,0,1"],
            capsys,
        )
        assert code == 0
        assert solve_report(out)["result"]["ok"] is True
        code, out, _ = run_cli(
            ["check", path, "--what", "coloring", "--colors", "0,0,1,1,0,1"],
            capsys,
        )
        assert code == 0
        report = solve_report(out)
        assert report["result"]["ok"] is False
        assert report["result"]["violating_edge"] == [1, 2]

    def test_k33_detection(self, tmp_path, capsys):
        from ocpack import complete_bipartite

        path = graph_file(tmp_path, complete_bipartite(3, 3))
        code, out, _ = run_cli(["check", path, "--what", "k33"], capsys)
        assert code == 0
        assert solve_report(out)["result"] == {
            "found": True,
            "sides": [[1, 2, 3], [4, 5, 6]],
        }
        path = graph_file(tmp_path, cycle_graph(9), name="c9.graph")
        code, out, _ = run_cli(["check", path, "--what", "k33"], capsys)
        assert solve_report(out)["result"] == {"found": False, "sides": None}

    def test_iocp_beyond_limit_exits_two(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(15))
        code, _, err = run_cli(["check", path, "--what", "iocp"], capsys)
        assert code == 2
        assert "precondition violated" in err


class TestUsageAndInputErrors:
    def test_missing_file(self, capsys):
        code, _, err = run_cli(["solve", "/no/such/file", "--algo", "exact"], capsys)
        assert code == 1
        assert "input error" in err

    def test_malformed_file_reports_line(self, tmp_path, capsys):
        path = tmp_path / "bad.graph"
        path.write_text("p 2 1\ne 1 5\n")
        code, _, err = run_cli(["solve", str(path), "--algo", "exact"], capsys)
        assert code == 1
        assert "line 2" in err

    def test_unknown_algorithm(self, tmp_path, capsys):
        path = graph_file(tmp_path, cycle_graph(5))
        code, _, err = run_cli(["solve", path, "--algo", "magic"], capsys)
        assert code == 1
        assert "usage" in err

    def test_unknown_command(self, capsys):
        code, _, _ = run_cli(["frobnicate"], capsys)
        assert code == 1


class TestBench:
    def test_grid_over_directory(self, tmp_path, capsys):
        for index, g in enumerate(corpus.gnp_corpus(2, 8, 10, seed=1103)):
            graph_file(tmp_path, g, name=f"g{index}.graph")
        code, out, err = run_cli(
            ["bench", str(tmp_path), "--algos", "exact,general", "--k", "1,2"],
            capsys,
        )
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert len(lines) == 2 * 2 * 2
        for record in lines:
            assert record["algo"] in ("exact", "general")
            assert record["params"]["k"] in (1, 2)
            assert "timing_ms" in record
            assert record["bound_satisfied"] is True
        assert "bench: 8 records" in err

    def test_error_records_keep_the_grid_running(self, tmp_path, capsys):
        graph_file(tmp_path, cycle_graph(5), name="c5.graph")
        code, out, _ = run_cli(
            ["bench", str(tmp_path), "--algos", "noshort,exact", "--k", "1"],
            capsys,
        )
        assert code == 0
        records = {r["algo"]: r for r in map(json.loads, out.splitlines())}
        assert "error" in records["noshort"]
        assert "odd girth" in records["noshort"]["error"]
        assert records["exact"]["result"]["size"] == 2

    def test_not_a_directory(self, capsys):
        code, _, err = run_cli(
            ["bench", "/no/such/dir", "--algos", "exact"], capsys
        )
        assert code == 1
        assert "argument error" in err


class TestDeterminism:
    def test_solve_output_is_byte_identical_modulo_timing(self, tmp_path, capsys):
        g = corpus.gnp_corpus(1, 12, 12, seed=1104)[0]
        path = graph_file(tmp_path, g)
        args = [
            "solve", path, "--algo", "eptas", "--k", "1", "--t", "3",
            "--mode", "practical", "--r-override", "12", "--d-override", "20",
            "--reps", "3", "--seed", "17",
        ]
        _, first, _ = run_cli(args, capsys)
        _, second, _ = run_cli(args, capsys)
        assert TIMING_PATTERN.sub("-", first) == TIMING_PATTERN.sub("-", second)

    def test_gen_thm5_is_byte_identical(self, capsys):
        args = ["gen", "--family", "thm5", "--k", "4", "--seed", "6"]
        _, first, _ = run_cli(args, capsys)
        _, second, _ = run_cli(args, capsys)
        assert first == second
