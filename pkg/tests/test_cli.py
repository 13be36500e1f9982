"""Exit-code contract and artifact round trips of the command line."""

import json

import pytest

from affinecover.cli import main
from affinecover.geom.io import write_drawing2
from affinecover.graphs import path_graph, write_graph
from affinecover.reduction import leveling_for_attachment
from affinecover.graphs import write_levels


def run(argv):
    return main([str(a) for a in argv])


def test_generate_then_verify_roundtrips(tmp_path, capsys):
    g2 = tmp_path / "g2.graph"
    assert run(["gen-stacked", 2, "--out", g2]) == 0
    cert = tmp_path / "cert"
    assert run(["stacked-draw", 2, "--out", cert, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert payload["achieved"] == 3 and payload["meets_target"]
    assert run(["verify-2d", g2, f"{cert}.drawing", f"{cert}.lines"]) == 0


def test_verify_2d_names_crossing_pair(tmp_path, capsys):
    from affinecover.geom import pt2
    from affinecover.graphs import make_graph

    g = make_graph(4, [(0, 1), (2, 3)])
    gf = tmp_path / "x.graph"
    df = tmp_path / "x.drawing"
    gf.write_text(write_graph(g))
    df.write_text(write_drawing2({0: pt2(0, 0), 1: pt2(2, 2),
                                  2: pt2(0, 2), 3: pt2(2, 0)}))
    assert run(["verify-2d", gf, df]) == 1
    out = capsys.readouterr().out
    assert "(0, 1)" in out and "(2, 3)" in out


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


def test_capacity_exits_2(tmp_path):
    big = tmp_path / "big.graph"
    big.write_text(write_graph(path_graph(13)))
    assert run(["solve-pi12", big, 2]) == 2


def test_three_d_pipeline(tmp_path, capsys):
    d7 = tmp_path / "t7.3d"
    assert run(["gen-two-planes", 7, "--out", d7]) == 0
    assert run(["verify-3d", d7]) == 0
    assert run(["bound-check", d7, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert payload["passed"] and payload["m"] == 16
    assert run(["random-3d", 8, 5, "--format", "json"]) == 0


def test_reduction_pipeline(tmp_path):
    g = path_graph(4)
    gf = tmp_path / "p4.graph"
    gf.write_text(write_graph(g))
    lev = leveling_for_attachment(g, 0, 4)
    lf = tmp_path / "p4.levels"
    lf.write_text(write_levels(lev))
    prefix = tmp_path / "fd"
    assert run(["forward-draw", gf, lf, "--attachment", 0, "--out", prefix]) == 0
    out_levels = tmp_path / "rec.levels"
    assert run(["extract-levels", f"{prefix}.reduction.json",
                f"{prefix}.drawing", "--out", out_levels]) == 0
    assert out_levels.read_text().startswith("levels")
    red_prefix = tmp_path / "red"
    assert run(["reduce", gf, 0, "--out", red_prefix]) == 0
    assert run(["verify-2d", f"{red_prefix}.graph", f"{prefix}.drawing"]) == 0


def test_svg_deterministic(tmp_path):
    cert = tmp_path / "cert"
    assert run(["stacked-draw", 1, "--out", cert]) == 0
    g = tmp_path / "k4.graph"
    assert run(["gen-stacked", 1, "--out", g]) == 0
    s1 = tmp_path / "a.svg"
    s2 = tmp_path / "b.svg"
    assert run(["export-svg", f"{cert}.drawing", s1, "--graph", g,
                "--lines", f"{cert}.lines"]) == 0
    assert run(["export-svg", f"{cert}.drawing", s2, "--graph", g,
                "--lines", f"{cert}.lines"]) == 0
    assert s1.read_bytes() == s2.read_bytes()
    assert s1.read_bytes().startswith(b"<?xml")


def test_solve_pi12_writes_certificate(tmp_path, capsys):
    gf = tmp_path / "k4.graph"
    assert run(["gen-stacked", 1, "--out", gf]) == 0
    prefix = tmp_path / "k4cert"
    assert run(["solve-pi12", gf, 2, 4, "--out", prefix, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert payload["lower"] == 2 and payload["upper"] == 2
    assert run(["verify-2d", gf, f"{prefix}.drawing", f"{prefix}.lines"]) == 0


def test_gen_g0_and_spiral(tmp_path):
    assert run(["gen-g0", "--out", tmp_path / "g0.graph"]) == 0
    text = (tmp_path / "g0.graph").read_text()
    assert text.startswith("6 11")
    assert run(["gen-spiral", 3, "--out", tmp_path / "s.graph"]) == 0


def test_min_cover_command(tmp_path, capsys):
    from affinecover.geom import pt2

    df = tmp_path / "pts.drawing"
    df.write_text(write_drawing2({0: pt2(0, 0), 1: pt2(1, 1), 2: pt2(2, 2)}))
    assert run(["min-cover", df, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert payload["k"] == 1
