import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tricover import cli
from tricover.cli import (InstanceFile, ParseError, format_instance, parse_instance, points_file,
                          ranges_file)
from tricover.geom_core import ExtRect, Interval
from tricover.graphs import WeightedGraph
from tricover.instances import random_hypergraph, random_rects
from tricover.reductions import QSqrt39

rat = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def ranges_files(draw):
    d = draw(st.integers(1, 3))
    weighted = draw(st.booleans())
    rs = []
    for k in range(draw(st.integers(0, 6))):
        sides = []
        for _ in range(d):
            lo, hi = sorted((draw(rat), draw(rat)))
            lo = float("-inf") if draw(st.booleans()) and draw(st.booleans()) else lo
            hi = float("inf") if draw(st.booleans()) and draw(st.booleans()) else hi
            lc, hc = (True, True) if lo == hi else (draw(st.booleans()), draw(st.booleans()))
            sides.append(Interval(lo, hi, lc, hc))
        rs.append(ExtRect(tuple(sides), draw(rat) if weighted else None, k))
    return InstanceFile("ranges", d, weighted, ranges=rs)


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_empty_points_file():
    inst = parse_instance("DIM 2 KIND points\n")
    assert inst.points == [] and format_instance(inst) == "DIM 2 KIND points\n"


def test_token_round_trip():
    text = "DIM 2 KIND ranges WEIGHTED\n-inf:1/3) (2:inf 7/2\n"
    inst = parse_instance(text)
    s = inst.ranges[0].sides
    assert s[0].lo == float("-inf") and s[0].hi == F(1, 3) and not s[0].hi_closed
    assert not s[1].lo_closed and inst.ranges[0].weight == F(7, 2)
    assert format_instance(inst) == text


def test_sqrt39_tokens():
    inst = points_file([(QSqrt39(F(5, 4), F(1, 4)), F(-1, 3))])
    text = format_instance(inst)
    assert "5/4+1/4*sqrt39" in text
    assert parse_instance(text).points == inst.points


@settings(max_examples=200)
@given(ranges_files())
def test_ranges_round_trip(inst):
    text = format_instance(inst)
    again = parse_instance(text)
    assert format_instance(again) == text
    assert [(r.sides, r.weight) for r in again.ranges] == [(r.sides, r.weight) for r in inst.ranges]


@settings(max_examples=100)
@given(ranges_files(), st.randoms(use_true_random=False))
def test_noisy_files_canonicalize(inst, rnd):
    canon = format_instance(inst)
    lines = canon.splitlines()
    noisy = ["# generated", lines[0]]
    for ln in lines[1:]:
        toks = ln.split()
        noisy.append("  " + (" " * rnd.randint(1, 3)).join(toks) + "\t")
        if rnd.random() < 0.3:
            noisy.append("")
    text = "\n".join(noisy) + "\n"
    once = format_instance(parse_instance(text))
    assert once == canon
    assert format_instance(parse_instance(once)) == once


def test_graph_and_hypergraph_round_trip():
    G = WeightedGraph((0, F(1, 20), F(1, 10)), ((0, 1, F(1, 100)), (1, 2, F(3, 100))))
    text = format_instance(InstanceFile("graph", 1, True, graph=G))
    assert parse_instance(text).graph == G
    H = random_hypergraph(2, per_part=2)
    text = format_instance(InstanceFile("hypergraph", 1, hypergraph=H))
    assert parse_instance(text).hypergraph == H
    assert format_instance(parse_instance(text)) == text


@pytest.mark.parametrize("text,where", [
    ("DIM 2 KIND points\n1 2\n3\n", ":3:"),
    ("DIM x KIND points\n", ":1:5"),
    ("DIM 2 KIND ranges\n0:1 2\n", ":2:"),
    ("DIM 2 KIND blobs\n", ":1:12"),
    ("DIM 1 KIND graph\n2 1\n0 1/10\n0 1/5\n", ":4:"),
])
def test_parse_errors_report_position(text, where):
    with pytest.raises(ParseError, match=where):
        parse_instance(text, "f")


def _write_instance(tmp_path, P, R):
    cli.write_file(str(tmp_path / "a.points"), points_file(P, 2))
    cli.write_file(str(tmp_path / "a.ranges"), ranges_file(R, 2))
    return str(tmp_path / "a.points"), str(tmp_path / "a.ranges")


def test_cover3_oracle_vs_basic(tmp_path, capsys):
    P = [(F(x), F(y)) for x, y in ((0, 0), (1, 1), (2, 0), (5, 5), (6, 6), (9, 9), (10, 8), (3, 1), (0, 2), (8, 9))]
    R = [ExtRect.closed((0, 0), (3, 2), weight=4, id=0), ExtRect.closed((5, 5), (6, 6), weight=2, id=1),
         ExtRect.closed((8, 8), (10, 9), weight=3, id=2), ExtRect.closed((0, 0), (10, 10), weight=20, id=3),
         ExtRect.closed((4, 4), (10, 10), weight=6, id=4)]
    pts, rng = _write_instance(tmp_path, P, R)
    outs = {}
    for v in ("oracle", "basic"):
        code, out = _run(capsys, "cover3", "--points", pts, "--ranges", rng, "--variant", v)
        assert code == 0
        outs[v] = json.loads(out)
    assert outs["oracle"]["weight"] == outs["basic"]["weight"] == "9"
    assert set(outs["basic"]) >= {"status", "weight", "witness", "provenance", "stats"}


def test_cover3_infeasible_and_check(tmp_path, capsys):
    P, R = random_rects(3, 12)
    pts, rng = _write_instance(tmp_path, P, R)
    code, out = _run(capsys, "cover3", "--points", pts, "--ranges", rng, "--oracle-check")
    res = json.loads(out)
    assert res["oracle_agree"] is True
    assert code == (2 if res["status"] == "infeasible" else 0)


def test_gen_then_verify(tmp_path, capsys):
    src = str(tmp_path / "h")
    assert _run(capsys, "gen", "--kind", "random_hypergraph", "--n", "1", "--seed", "4", "--out", src)[0] == 0
    pre = str(tmp_path / "d")
    code, _ = _run(capsys, "gen", "--kind", "d2c_r13", "--source", src + ".hypergraph", "--out", pre)
    assert code == 0
    code, out = _run(capsys, "verify", "--kind", "d2c_r13", "--source", src + ".hypergraph",
                     "--instance", pre)
    assert code == 0 and json.loads(out)["agree"] is True


def test_verify_rejects_edited_instance(tmp_path, capsys):
    src = str(tmp_path / "g")
    _run(capsys, "gen", "--kind", "random_graph", "--n", "4", "--p", "0.9", "--out", src)
    pre = str(tmp_path / "b")
    _run(capsys, "gen", "--kind", "triangle_boxes_r3", "--source", src + ".graph", "--out", pre)
    with open(pre + ".points", "a") as fh:
        fh.write("0 0 0\n")
    code, out = _run(capsys, "verify", "--kind", "triangle_boxes_r3", "--source", src + ".graph",
                     "--instance", pre)
    assert code == 1 and json.loads(out)["status"] == "error"


def test_d3c_and_oracle_commands(tmp_path, capsys):
    P = [(F(x), F(0)) for x in range(4)]
    pts = str(tmp_path / "l.points")
    cli.write_file(pts, points_file(P, 2))
    code, out = _run(capsys, "d3c", "--points", pts, "--oracle-check")
    assert code == 0 and json.loads(out)["radius"] == "1"
    code, out = _run(capsys, "d3c", "--points", pts, "--radius", "1/2")
    assert code == 2 and json.loads(out)["status"] == "infeasible"
    code, out = _run(capsys, "oracle", "--problem", "kcenter", "--points", pts)
    assert code == 0 and json.loads(out)["radius"] == "1"


def test_errors_exit_one(tmp_path, capsys):
    assert _run(capsys, "cover3", "--points", str(tmp_path / "none"), "--ranges", "x")[0] == 1
    assert _run(capsys, "cover3", "--bogus")[0] == 1
    bad = tmp_path / "bad.points"
    bad.write_text("DIM 2 KIND points\n1 1/0\n")
    code, out = _run(capsys, "d3c", "--points", str(bad))
    assert code == 1 and "bad.points:2:" in json.loads(out)["error"]


def test_bench_csv(capsys):
    code, out = _run(capsys, "bench", "--variant", "unit_unweighted", "--sizes", "64,128", "--oracle-check")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("variant,n,g") and len(lines) == 3
    assert all(",unit_unw," not in ln or ln.split(",")[1] in ("64", "128") for ln in lines[1:])
