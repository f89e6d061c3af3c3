"""Command-line front end.

Every command except ``bench`` prints one JSON object on stdout.  Exit codes:
0 success, 2 infeasible (or a failed decision), 1 error.

File formats (blank lines and lines starting with '#' are ignored)::

    DIM d KIND points            then one point per line: d rationals
    DIM d KIND ranges [WEIGHTED] then per line d interval tokens lo:hi, '(' prefix
                                 or ')' suffix marks an open side, then the weight
    DIM 1 KIND graph [WEIGHTED]  then "n m", a line of n labels, m lines "u v [w]"
                                 where u, v are vertex labels
    DIM 1 KIND hypergraph        then "parts k", k lines of part labels ('-' for an
                                 empty part), then edge lines "a:i b:j c:k"

Rationals are written as ``p/q`` or integers; ``inf`` / ``-inf`` are allowed in
ranges.  Numbers in Q(sqrt 39) print as ``a+b*sqrt39``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .geom_core import ExtRect, Interval, ext, is_finite, rational
from .graphs import PartiteHypergraph3, WeightedGraph
from .reductions import QSqrt39

F = Fraction


class ParseError(ValueError):
    pass


@dataclass
class InstanceFile:
    kind: str
    dim: int
    weighted: bool = False
    points: list = field(default_factory=list)
    ranges: list = field(default_factory=list)
    graph: Optional[WeightedGraph] = None
    hypergraph: Optional[PartiteHypergraph3] = None


# --------------------------------------------------------------------------
# scalars

_Q39 = re.compile(r"^(.+?)\+(.+)\*sqrt39$")


def fmt_num(v) -> str:
    if isinstance(v, QSqrt39):
        return str(v)
    if not is_finite(v):
        return "-inf" if v < 0 else "inf"
    return str(F(v))


def parse_num(tok: str, allow_inf: bool = False):
    m = _Q39.match(tok)
    if m:
        return QSqrt39(F(m.group(1)), F(m.group(2)))
    if allow_inf:
        return ext(tok)
    return rational(tok)


def fmt_interval(s: Interval) -> str:
    left = "(" if is_finite(s.lo) and not s.lo_closed else ""
    right = ")" if is_finite(s.hi) and not s.hi_closed else ""
    return f"{left}{fmt_num(s.lo)}:{fmt_num(s.hi)}{right}"


def parse_interval(tok: str) -> Interval:
    lo_open = tok.startswith("(")
    hi_open = tok.endswith(")")
    body = tok[1 if lo_open else 0: len(tok) - 1 if hi_open else len(tok)]
    if body.count(":") != 1:
        raise ValueError(f"interval token {tok!r} needs exactly one ':'")
    a, b = body.split(":")
    return Interval(ext(a), ext(b), not lo_open, not hi_open)


# --------------------------------------------------------------------------
# files

def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _fail(path, no, col, msg):
    raise ParseError(f"{path}:{no}:{col}: {msg}")


def _col(line: str, k: int) -> int:
    """1-based column of the k-th whitespace token."""
    spans = [m.start() + 1 for m in re.finditer(r"\S+", line)]
    return spans[k] if k < len(spans) else len(line) + 1


def parse_instance(text: str, path: str = "<input>") -> InstanceFile:
    rows = list(_lines(text))
    if not rows:
        _fail(path, 1, 1, "missing header line")
    no, head = rows[0]
    toks = head.split()
    if len(toks) < 4 or toks[0] != "DIM" or toks[2] != "KIND":
        _fail(path, no, 1, "header must read 'DIM d KIND kind [WEIGHTED]'")
    try:
        dim = int(toks[1])
    except ValueError:
        _fail(path, no, _col(head, 1), f"bad dimension {toks[1]!r}")
    kind = toks[3]
    if kind not in ("points", "ranges", "graph", "hypergraph"):
        _fail(path, no, _col(head, 3), f"unknown kind {kind!r}")
    extra = toks[4:]
    if extra not in ([], ["WEIGHTED"]):
        _fail(path, no, _col(head, 4), f"unexpected header tokens {' '.join(extra)!r}")
    inst = InstanceFile(kind, dim, bool(extra))
    body = rows[1:]
    reader = {"points": _read_points, "ranges": _read_ranges, "graph": _read_graph,
              "hypergraph": _read_hyper}[kind]
    reader(inst, body, path)
    return inst


def _read_points(inst, body, path):
    for no, line in body:
        toks = line.split()
        if len(toks) != inst.dim:
            _fail(path, no, 1, f"expected {inst.dim} coordinates, got {len(toks)}")
        pt = []
        for k, t in enumerate(toks):
            try:
                pt.append(parse_num(t))
            except (ValueError, ZeroDivisionError) as e:
                _fail(path, no, _col(line, k), f"bad coordinate {t!r}: {e}")
        inst.points.append(tuple(pt))


def _read_ranges(inst, body, path):
    want = inst.dim + (1 if inst.weighted else 0)
    for no, line in body:
        toks = line.split()
        if len(toks) != want:
            _fail(path, no, 1, f"expected {want} tokens, got {len(toks)}")
        sides = []
        for k, t in enumerate(toks[: inst.dim]):
            try:
                sides.append(parse_interval(t))
            except (ValueError, ZeroDivisionError) as e:
                _fail(path, no, _col(line, k), str(e))
        w = None
        if inst.weighted:
            try:
                w = rational(toks[-1])
            except (ValueError, ZeroDivisionError) as e:
                _fail(path, no, _col(line, inst.dim), f"bad weight {toks[-1]!r}: {e}")
        inst.ranges.append(ExtRect(tuple(sides), w, len(inst.ranges)))


def _read_graph(inst, body, path):
    if len(body) < 2:
        _fail(path, body[0][0] if body else 1, 1, "graph needs an 'n m' line and a label line")
    no, line = body[0]
    try:
        n, m = (int(x) for x in line.split())
    except ValueError:
        _fail(path, no, 1, "expected 'n m'")
    no, line = body[1]
    try:
        labels = [rational(t) for t in line.split()]
    except (ValueError, ZeroDivisionError) as e:
        _fail(path, no, 1, f"bad label: {e}")
    if len(labels) != n:
        _fail(path, no, 1, f"expected {n} labels, got {len(labels)}")
    where = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for no, line in body[2:]:
        toks = line.split()
        if len(toks) != (3 if inst.weighted else 2):
            _fail(path, no, 1, "edge line must read 'u v" + (" w'" if inst.weighted else "'"))
        try:
            u, v = (where[rational(t)] for t in toks[:2])
        except KeyError:
            _fail(path, no, 1, "edge endpoint is not a listed label")
        except (ValueError, ZeroDivisionError) as e:
            _fail(path, no, 1, str(e))
        edges.append((u, v, rational(toks[2])) if inst.weighted else (u, v))
    if len(edges) != m:
        _fail(path, body[-1][0], 1, f"expected {m} edges, got {len(edges)}")
    try:
        inst.graph = WeightedGraph(tuple(labels), tuple(edges))
    except ValueError as e:
        _fail(path, body[0][0], 1, str(e))


def _read_hyper(inst, body, path):
    if not body:
        _fail(path, 1, 1, "hypergraph needs a 'parts k' line")
    no, line = body[0]
    toks = line.split()
    if len(toks) != 2 or toks[0] != "parts":
        _fail(path, no, 1, "expected 'parts k'")
    k = int(toks[1])
    if len(body) < 1 + k:
        _fail(path, no, 1, f"expected {k} part lines")
    parts = []
    for no, line in body[1: 1 + k]:
        parts.append(() if line == "-" else tuple(rational(t) for t in line.split()))
    edges = []
    for no, line in body[1 + k:]:
        toks = line.split()
        if len(toks) != 3:
            _fail(path, no, 1, "edge line needs three 'part:index' tokens")
        try:
            edges.append(tuple(tuple(int(x) for x in t.split(":")) for t in toks))
        except ValueError:
            _fail(path, no, 1, "bad 'part:index' token")
    try:
        inst.hypergraph = PartiteHypergraph3(tuple(parts), tuple(edges))
    except ValueError as e:
        _fail(path, body[0][0], 1, str(e))


def format_instance(inst: InstanceFile) -> str:
    head = f"DIM {inst.dim} KIND {inst.kind}" + (" WEIGHTED" if inst.weighted else "")
    out = [head]
    if inst.kind == "points":
        out += [" ".join(fmt_num(c) for c in p) for p in inst.points]
    elif inst.kind == "ranges":
        for r in inst.ranges:
            toks = [fmt_interval(s) for s in r.sides]
            if inst.weighted:
                toks.append(fmt_num(r.weight if r.weight is not None else F(1)))
            out.append(" ".join(toks))
    elif inst.kind == "graph":
        G = inst.graph
        out.append(f"{G.n} {len(G.edges)}")
        out.append(" ".join(fmt_num(t) for t in G.labels))
        for u, v, w in G.edges:
            toks = [fmt_num(G.labels[u]), fmt_num(G.labels[v])]
            if inst.weighted:
                toks.append(fmt_num(w if w is not None else F(0)))
            out.append(" ".join(toks))
    else:
        H = inst.hypergraph
        out.append(f"parts {H.num_parts}")
        out += [" ".join(fmt_num(t) for t in p) if p else "-" for p in H.parts]
        out += [" ".join(f"{a}:{b}" for a, b in e) for e in H.edges]
    return "\n".join(out) + "\n"


def read_file(path: str) -> InstanceFile:
    with open(path) as fh:
        return parse_instance(fh.read(), path)


def write_file(path: str, inst: InstanceFile) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(format_instance(inst))
    os.replace(tmp, path)


def points_file(points, dim: Optional[int] = None) -> InstanceFile:
    d = dim if dim is not None else (len(points[0]) if points else 2)
    return InstanceFile("points", d, points=list(points))


def ranges_file(ranges, dim: Optional[int] = None) -> InstanceFile:
    d = dim if dim is not None else (ranges[0].dim if ranges else 2)
    weighted = any(r.weight is not None for r in ranges)
    return InstanceFile("ranges", d, weighted, ranges=list(ranges))


def _expect(inst: InstanceFile, kind: str, path: str) -> InstanceFile:
    if inst.kind != kind:
        raise ParseError(f"{path}: expected a {kind} file, got {inst.kind}")
    return inst


# --------------------------------------------------------------------------
# commands

VARIANT_ALIASES = {"unit_weighted": "unit_w", "unit_unweighted": "unit_unw"}


class Infeasible(Exception):
    def __init__(self, payload):
        self.payload = payload


def _budget(args):
    from .oracles import OracleBudget
    return OracleBudget(time_ms=args.budget_ms) if args.budget_ms else OracleBudget()


def _jsonable(v):
    if isinstance(v, (Fraction, QSqrt39)):
        return fmt_num(v)
    if isinstance(v, float) and not is_finite(v):
        return fmt_num(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def cmd_cover3(args) -> dict:
    from .cover3 import solve
    from .oracles import brute_cover_k

    P = _expect(read_file(args.points), "points", args.points).points
    R = _expect(read_file(args.ranges), "ranges", args.ranges).ranges
    variant = VARIANT_ALIASES.get(args.variant, args.variant)
    report = {}
    sol = solve(P, R, variant, g=args.grid, report=report)
    out = {"status": "ok" if sol else "infeasible", "weight": None if sol is None else sol.weight,
           "witness": [] if sol is None else list(sol.ids),
           "provenance": None if sol is None else sol.provenance.name,
           "stats": {k: v for k, v in report.items() if k != "variant"},
           "variant": report.get("variant", variant)}
    if args.oracle_check:
        weighted = any(r.weight is not None for r in R)
        ref = brute_cover_k(P, R, 3, weighted=True, budget=_budget(args))
        agree = (ref is None) == (sol is None)
        if agree and ref is not None and weighted:
            agree = ref[1] == sol.weight
        out["oracle_weight"] = None if ref is None else ref[1]
        out["oracle_agree"] = agree
        if not agree:
            out["status"] = "error"
            return out
    if sol is None:
        raise Infeasible(out)
    return out


def cmd_d3c(args) -> dict:
    from .kcenter import rect_d3c_decide, rect_d3c_optimize
    from .oracles import brute_discrete_kcenter

    P = _expect(read_file(args.points), "points", args.points).points
    Q = _expect(read_file(args.supply), "points", args.supply).points if args.supply else None
    if args.radius is not None:
        got = rect_d3c_decide(P, rational(args.radius), Q)
        out = {"status": "ok" if got else "infeasible", "radius": rational(args.radius),
               "witness": list(got or ()), "provenance": "decide", "stats": {}}
        if got is None:
            raise Infeasible(out)
        return out
    sol = rect_d3c_optimize(P, Q)
    out = {"status": "ok", "radius": sol.radius, "witness": list(sol.centers),
           "provenance": "optimize", "stats": {}}
    if args.oracle_check:
        ref = brute_discrete_kcenter(P, 3, "linf", Q, budget=_budget(args))
        out["oracle_radius"] = ref.radius
        out["oracle_agree"] = ref.radius == sol.radius
        if ref.radius != sol.radius:
            out["status"] = "error"
    return out


def _random_source(args):
    from . import instances as I
    n = args.n
    if args.kind == "random_rects":
        P, R = I.random_rects(args.seed, n, weighted=True)
        return P, R, None
    if args.kind == "random_unit":
        P, R = I.planted_instance(args.seed, unit=True, weighted=False, n=n)
        return P, R, None
    if args.kind == "bench_unit":
        P, R = I.bench_unit_instance(n, args.seed)
        return P, R, None
    if args.kind == "random_graph":
        return None, None, I.random_graph(args.seed, n, args.p, weighted=args.weighted,
                                          zero_label=not args.positive_labels)
    return None, None, I.random_hypergraph(args.seed, 3 * args.kappa if args.parts is None else args.parts,
                                           per_part=n)


RANDOM_KINDS = ("random_rects", "random_unit", "bench_unit", "random_graph", "random_hypergraph")


def _load_source(path: str):
    src = read_file(path)
    if src.kind == "graph":
        return src.graph
    if src.kind == "hypergraph":
        return src.hypergraph
    raise ParseError(f"{path}: a reduction source must be a graph or hypergraph file")


def cmd_gen(args) -> dict:
    from .reductions import generate

    if args.out is None:
        raise ValueError("gen needs --out PREFIX")
    written = []
    if args.kind in RANDOM_KINDS:
        P, R, src = _random_source(args)
        if src is None:
            write_file(args.out + ".points", points_file(P, 2))
            write_file(args.out + ".ranges", ranges_file(R, 2))
            written = [args.out + ".points", args.out + ".ranges"]
            return {"status": "ok", "kind": args.kind, "points": len(P), "ranges": len(R),
                    "files": written, "seed": args.seed}
        if isinstance(src, WeightedGraph):
            f = InstanceFile("graph", 1, args.weighted, graph=src)
        else:
            f = InstanceFile("hypergraph", 1, hypergraph=src)
        write_file(args.out + "." + f.kind, f)
        return {"status": "ok", "kind": args.kind, "files": [args.out + "." + f.kind], "seed": args.seed}
    if args.source is None:
        raise ValueError("gen --kind <reduction> needs --source FILE")
    inst = generate(args.kind, _load_source(args.source), args.kappa)
    write_file(args.out + ".points", points_file(inst.points, inst.dim))
    written.append(args.out + ".points")
    if inst.ranges is not None:
        write_file(args.out + ".ranges", ranges_file(inst.ranges, inst.dim))
        written.append(args.out + ".ranges")
    return {"status": "ok", "kind": inst.kind, "dim": inst.dim, "points": len(inst.points),
            "ranges": None if inst.ranges is None else len(inst.ranges), "k": inst.k,
            "objective": inst.objective, "threshold": inst.threshold, "files": written}


def cmd_verify(args) -> dict:
    from .reductions import generate, verify_reduction

    src = _load_source(args.source)
    inst = generate(args.kind, src, args.kappa)
    if args.instance:
        pts = read_file(args.instance + ".points").points
        rng = read_file(args.instance + ".ranges").ranges if inst.ranges is not None else None
        same = list(pts) == list(inst.points) and (
            rng is None or [(r.sides, r.weight) for r in rng] == [(r.sides, r.weight) for r in inst.ranges])
        if not same:
            raise ValueError("instance files do not match the generator output for this source")
    rep = verify_reduction(args.kind, src, inst, budget=_budget(args))
    out = {"status": "ok" if rep.agree else "error", "agree": rep.agree, "kind": rep.kind,
           "source_answer": rep.source_answer, "geometry_answer": rep.geometry_answer,
           "source_value": rep.source_value, "geometry_value": rep.geometry_value,
           "threshold": rep.threshold}
    return out


def cmd_oracle(args) -> dict:
    from .oracles import brute_cover_k, brute_discrete_kcenter, brute_maxcov

    P = _expect(read_file(args.points), "points", args.points).points
    budget = _budget(args)
    if args.problem == "cover":
        R = _expect(read_file(args.ranges), "ranges", args.ranges).ranges
        got = brute_cover_k(P, R, args.k, weighted=True, budget=budget)
        out = {"status": "ok" if got else "infeasible", "weight": None if got is None else got[1],
               "witness": [] if got is None else list(got[0]), "provenance": "oracle", "stats": {}}
        if got is None:
            raise Infeasible(out)
        return out
    if args.problem == "kcenter":
        sol = brute_discrete_kcenter(P, args.k, args.metric, budget=budget)
        return {"status": "ok", "radius": sol.radius, "witness": list(sol.centers),
                "provenance": "oracle", "stats": {"metric": args.metric}}
    R = _expect(read_file(args.ranges), "ranges", args.ranges).ranges
    ids, count = brute_maxcov(P, R, 2, budget=budget)
    return {"status": "ok", "count": count, "witness": list(ids), "provenance": "oracle", "stats": {}}


@dataclass(frozen=True)
class BenchConfig:
    """One benchmark sweep.  ``step3_const`` is the constant c in the checks
    configs <= c * g^8 (basic, weighted_rect) and configs <= c * g^5 (unweighted)."""
    variant: str = "unit_unw"
    sizes: tuple = (256, 512, 1024)
    repeats: int = 1
    seed: int = 0
    g: Optional[int] = None
    step3_const: int = 1


STEP3_EXPONENT = {"basic": 8, "weighted_rect": 8, "unweighted": 5}


def step3_within_bound(row: dict, const: int) -> bool:
    """True when the row's Step-3 configuration count respects c * g^e for its variant."""
    e = STEP3_EXPONENT.get(row["variant"])
    if e is None or row["g"] in ("", None):
        return True
    return int(row["configs"] or 0) <= const * int(row["g"]) ** e


BENCH_FIELDS = ("variant", "n", "g", "repeat", "seed", "wall_s", "step1_pairs", "step2_pairs",
                "configs", "branches", "walk_failures", "case1_guesses", "case2_guesses",
                "case3_guesses", "pruned", "weight", "oracle_weight")


def bench_rows(variant: str, sizes, repeats: int = 1, seed: int = 0, g=None, oracle_check=False,
               budget=None):
    """Yield one BenchRecord dict per (size, repeat) on the standard bench instances."""
    from . import instances as I
    from .cover3 import solve
    from .oracles import DEFAULT_BUDGET, brute_cover_k

    variant = VARIANT_ALIASES.get(variant, variant)
    # warm the compiled kernels so the first timing is not a compile
    P0, R0 = I.bench_unit_instance(64, seed)
    solve(P0, R0, variant)
    for n in sizes:
        if variant in ("unit_w", "unit_unw"):
            P, R = I.bench_unit_instance(n, seed)
            if variant == "unit_w":
                R = [ExtRect(r.sides, 1 + (k * 7919) % 97, r.id) for k, r in enumerate(R)]
        else:
            P, R = I.random_rects(seed, n, weighted=variant in ("basic", "weighted_rect"), C=n)
        for rep in range(repeats):
            report = {}
            t0 = time.perf_counter()
            sol = solve(P, R, variant, g=g, report=report)
            wall = time.perf_counter() - t0
            row = {"variant": variant, "n": n, "g": report.get("g"), "repeat": rep, "seed": seed,
                   "wall_s": f"{wall:.6f}", "weight": "" if sol is None else fmt_num(sol.weight),
                   "oracle_weight": ""}
            for k in BENCH_FIELDS[6:15]:
                row[k] = report.get(k, "")
            if oracle_check:
                ref = brute_cover_k(P, R, 3, weighted=True, budget=budget or DEFAULT_BUDGET)
                row["oracle_weight"] = "" if ref is None else fmt_num(ref[1])
            yield row


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    w.writeheader()
    bad = False
    for row in bench_rows(args.variant, sizes, args.repeats, args.seed, args.grid, args.oracle_check,
                          _budget(args)):
        if args.oracle_check and row["oracle_weight"] != row["weight"]:
            bad = True
        w.writerow(row)
    text = buf.getvalue()
    if args.out:
        tmp = args.out + ".tmp"
        with open(tmp, "w") as fh:
            fh.write(text)
        os.replace(tmp, args.out)
    sys.stdout.write(text)
    return 1 if bad else 0


# --------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--variant", default="auto",
                        help="auto, basic, unweighted, weighted_rect, unit_w, unit_unw, oracle "
                             "(unit_weighted / unit_unweighted are accepted too)")
    common.add_argument("--grid", type=int, default=None, help="override the grid size g")
    common.add_argument("--seed", type=int, default=0, help="PCG64 seed")
    common.add_argument("--budget-ms", type=int, default=None,
                        help="oracle wall-clock budget (default: $TRICOVER_BUDGET_MS or none)")
    common.add_argument("--oracle-check", action="store_true", help="also run the brute-force oracle and compare")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for interface stability; the kernels are single-threaded")

    p = argparse.ArgumentParser(prog="tricover", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cover3", parents=[common], help="size-3 rectangle cover")
    c.add_argument("--points", required=True)
    c.add_argument("--ranges", required=True)

    d = sub.add_parser("d3c", parents=[common], help="rectilinear discrete 3-center")
    d.add_argument("--points", required=True)
    d.add_argument("--supply", help="points file of allowed centers (default: the points)")
    d.add_argument("--radius", help="decide this radius instead of optimizing")

    g = sub.add_parser("gen", parents=[common], help="generate a reduction instance or a random source")
    g.add_argument("--kind", required=True)
    g.add_argument("--source", help="graph or hypergraph file")
    g.add_argument("--out", help="output prefix")
    g.add_argument("--kappa", type=int, default=2)
    g.add_argument("--n", type=int, default=5, help="size for random kinds")
    g.add_argument("--p", type=float, default=0.5, help="edge probability for random_graph")
    g.add_argument("--parts", type=int, default=None, help="parts for random_hypergraph")
    g.add_argument("--weighted", action="store_true", help="weighted random_graph")
    g.add_argument("--positive-labels", action="store_true", help="random_graph labels in (0, 1/10]")

    v = sub.add_parser("verify", parents=[common], help="check a reduction against both oracles")
    v.add_argument("--kind", required=True)
    v.add_argument("--source", required=True)
    v.add_argument("--instance", help="prefix of files written by gen; must match the generator")
    v.add_argument("--kappa", type=int, default=2)

    o = sub.add_parser("oracle", parents=[common], help="brute-force reference answers")
    o.add_argument("--problem", choices=("cover", "kcenter", "maxcov"), default="cover")
    o.add_argument("--points", required=True)
    o.add_argument("--ranges")
    o.add_argument("--k", type=int, default=3)
    o.add_argument("--metric", choices=("linf", "l2"), default="linf")

    b = sub.add_parser("bench", parents=[common], help="timing table as CSV")
    b.add_argument("--sizes", default="256,512,1024")
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--out", help="also write the CSV here")
    return p


COMMANDS = {"cover3": cmd_cover3, "d3c": cmd_d3c, "gen": cmd_gen, "verify": cmd_verify,
            "oracle": cmd_oracle}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0
    if args.command == "bench":
        try:
            return cmd_bench(args)
        except Exception as e:  # noqa: BLE001 - report any failure as JSON
            print(json.dumps({"status": "error", "error": f"{type(e).__name__}: {e}"}))
            return 1
    try:
        out = COMMANDS[args.command](args)
        code = 1 if out.get("status") == "error" else 0
    except Infeasible as inf:
        out, code = inf.payload, 2
    except Exception as e:  # noqa: BLE001
        out, code = {"status": "error", "error": f"{type(e).__name__}: {e}"}, 1
    sys.stdout.write(json.dumps(_jsonable(out), sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
