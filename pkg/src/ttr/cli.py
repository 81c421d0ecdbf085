"""Command-line interface: ``ttr <command> [options]``.

Graphs come from ``--family name:params`` or ``--input path`` (edge-list
format).  ``--json`` switches to machine-readable output carrying
``"schema": 1``.  Exit status: 0 success, 1 usage or input error, 2 failed
verification.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Callable

from . import __version__
from .bcg import NotChainGraph, is_chain_graph, random_connected_bcg, transitivity_bcg, ttr_bcg
from .families import build_clique_union_witness, recognize_family, tr_formula, ttr_formula
from .gadget import build_reduction, lift_partition
from .graph import (
    Graph,
    GraphError,
    GraphFamily,
    format_edge_list,
    generate,
    is_tree,
    parse_edge_list_with_stats,
)
from .oracle import (
    CapExceeded,
    SolveReport,
    bounds_ttr,
    default_cap,
    tournament_transitivity_exact,
    transitivity_exact,
)
from .partition import (
    OrderedPartition,
    PartitionError,
    format_partition,
    is_tournament_transitive,
    is_transitive,
    parse_partition,
)
from .trees import all_trees, tournament_transitivity_tree, transitive_profile, transitivity_tree

SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# --- input ------------------------------------------------------------------

def _load_graph(args) -> tuple[Graph, dict]:
    if bool(args.family) == bool(args.input):
        raise UsageError("give exactly one of --family or --input")
    if args.family:
        fam = GraphFamily.parse(args.family)
        return generate(fam), {"family": str(fam)}
    with open(args.input, encoding="utf-8") as fh:
        g, dupes = parse_edge_list_with_stats(fh.read())
    return g, {"input": args.input, "duplicate_edges": dupes}


def _load_partition(path: str) -> OrderedPartition:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        if "witness" not in doc or doc["witness"] is None:
            raise PartitionError("JSON document carries no witness")
        return OrderedPartition(doc["witness"])
    return parse_partition(text)


def _cap(args) -> int:
    cap = default_cap() if args.cap is None else args.cap
    if cap < 1:
        raise UsageError("--cap must be at least 1")
    return cap


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        out = {"schema": SCHEMA, "command": args.command, **doc}
        print(json.dumps(out, sort_keys=True))
    else:
        print(text.rstrip("\n"))


def _parts(p: OrderedPartition | None):
    return None if p is None else p.as_lists()


# --- commands ---------------------------------------------------------------

def _solve_ttr(g: Graph, cap: int, fam: GraphFamily | None) -> SolveReport:
    if g.n <= cap:
        rep = tournament_transitivity_exact(g, cap)
        if fam is not None and ttr_formula(fam) != rep.value:
            raise AssertionError(f"formula for {fam} disagrees with exact search")
        return rep
    if is_tree(g):
        return tournament_transitivity_tree(g, cap)
    if is_chain_graph(g) and g.m:
        d = ttr_bcg(g, cap)
        return SolveReport(d.lo, d.witness, "bcg:" + d.reason, (d.lo, d.hi),
                           notes={"exact": d.kind == "Exact"})
    fam = fam or recognize_family(g)
    if fam is not None:
        value = ttr_formula(fam)
        w = None
        if fam.tag == "clique_union":
            w = build_clique_union_witness(*fam.params)
        return SolveReport(value, w, "formula", (value, value), notes={"family": str(fam)})
    raise CapExceeded(g.n, cap)


def _solve_tr(g: Graph, cap: int, fam: GraphFamily | None) -> SolveReport:
    if g.n <= cap:
        return transitivity_exact(g, cap)
    if is_tree(g):
        v = transitivity_tree(g)
        return SolveReport(v, None, "tree-profile", (v, v))
    if fam is not None:
        v = tr_formula(fam)
        return SolveReport(v, None, "formula", (v, v))
    raise CapExceeded(g.n, cap)


def cmd_solve(args) -> int:
    g, src = _load_graph(args)
    fam = GraphFamily.parse(args.family) if args.family else None
    cap = _cap(args)
    rep = (_solve_tr if args.transitive else _solve_ttr)(g, cap, fam)
    key, label = ("tr", "Tr") if args.transitive else ("ttr", "TTr")
    exact = rep.notes.get("exact", True)
    doc = {**src, "n": g.n, "m": g.m, key: rep.value, "exact": exact, "bounds": list(rep.bounds),
           "method": rep.method, "witness": _parts(rep.witness)}
    lines = [f"{label} = {rep.value}" + ("" if exact else f" (interval {rep.bounds[0]}..{rep.bounds[1]})"),
             f"method: {rep.method}"]
    if rep.witness is not None:
        lines.append("witness:")
        lines.append(format_partition(rep.witness))
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    with open(args.graph, encoding="utf-8") as fh:
        g, _ = parse_edge_list_with_stats(fh.read())
    p = _load_partition(args.partition)
    check = is_transitive if args.transitive else is_tournament_transitive
    try:
        report = check(g, p)
    except PartitionError as e:
        report, problem = None, str(e)
    mode = "transitive" if args.transitive else "tournament"
    if report is None:
        _emit(args, {"ok": False, "mode": mode, "k": len(p), "error": problem}, f"INVALID: {problem}")
        return 2
    v = report.first_violation
    doc = {"ok": report.ok, "mode": mode, "k": len(p),
           "violation": None if v is None else {"i": v.i, "j": v.j, "kind": v.kind, "witness": v.witness}}
    if report.ok:
        text = f"OK: {mode} transitive partition of size {len(p)}"
    else:
        text = f"FAIL: V_{v.i} vs V_{v.j}: {v.kind} (vertex {v.witness})"
    _emit(args, doc, text)
    return 0 if report.ok else 2


def cmd_tree(args) -> int:
    g, src = _load_graph(args)
    if not is_tree(g):
        raise UsageError("input is not a tree")
    prof = transitive_profile(g)
    rep = tournament_transitivity_tree(g, _cap(args))
    tr = max(prof.values())
    pair = rep.notes.get("pair")
    doc = {**src, "n": g.n, "tr": tr, "ttr": rep.value, "profile": [prof[v] for v in range(g.n)],
           "pair": list(pair) if pair else None, "witness": _parts(rep.witness)}
    lines = [f"Tr = {tr}", f"TTr = {rep.value}",
             "profile: " + " ".join(str(prof[v]) for v in range(g.n))]
    if pair:
        lines.append(f"pair (y, z) = {pair}")
    if rep.witness is not None:
        lines += ["witness:", format_partition(rep.witness)]
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_bcg(args) -> int:
    g, src = _load_graph(args)
    try:
        d = ttr_bcg(g, _cap(args))
    except NotChainGraph as e:
        raise UsageError(f"not a bipartite chain graph: {e}") from None
    cls = d.classification
    doc = {**src, "n": g.n, "kind": d.kind, "lo": d.lo, "hi": d.hi, "reason": d.reason,
           "type": cls.kind if cls else None, "t": cls.t if cls else None,
           "side_swapped": cls.side_swapped if cls else None,
           "tr": transitivity_bcg(cls) if cls else None,
           "z": list(d.condition_witnesses) if d.condition_witnesses else None,
           "witness": _parts(d.witness)}
    head = f"TTr = {d.lo}" if d.kind == "Exact" else f"TTr in [{d.lo}, {d.hi}]"
    lines = [head, f"reason: {d.reason}"]
    if cls:
        lines.insert(0, f"type: {cls.kind}, t = {cls.t}, Tr = {transitivity_bcg(cls)}")
    if d.witness is not None:
        lines += ["witness:", format_partition(d.witness)]
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_formula(args) -> int:
    if not args.family:
        raise UsageError("formula needs --family")
    fam = GraphFamily.parse(args.family)
    doc = {"family": str(fam), "ttr": ttr_formula(fam)}
    try:
        doc["tr"] = tr_formula(fam)
    except GraphError:
        doc["tr"] = None
    text = f"TTr({fam}) = {doc['ttr']}" + ("" if doc["tr"] is None else f"\nTr({fam}) = {doc['tr']}")
    _emit(args, doc, text)
    return 0


def cmd_gadget(args) -> int:
    g, src = _load_graph(args)
    gi = build_reduction(g)
    cert = None
    k = None
    if g.n <= _cap(args):
        rep = transitivity_exact(g, _cap(args))
        k = rep.value
        cert = lift_partition(gi, rep.witness)
    if args.out_graph:
        with open(args.out_graph, "w", encoding="utf-8") as fh:
            fh.write(format_edge_list(gi.gadget))
    if args.out_partition and cert is not None:
        with open(args.out_partition, "w", encoding="utf-8") as fh:
            fh.write(format_partition(cert))
    doc = {**src, "base_n": g.n, "base_m": g.m, "delta": gi.delta, "n": gi.gadget.n, "m": gi.gadget.m,
           "stated_m": gi.stated_edge_count, "hubs": list(gi.hubs),
           "hub_degrees": [gi.gadget.degree(h) for h in gi.hubs],
           "base_tr": k, "certificate_size": None if cert is None else len(cert)}
    lines = [f"G' has {gi.gadget.n} vertices and {gi.gadget.m} edges "
             f"({gi.stated_edge_count} without hub-to-copy edges)",
             f"hubs x, x', x'' = {gi.hubs}"]
    if cert is not None:
        lines.append(f"Tr(G) = {k}; lifted certificate of size {len(cert)} verifies")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.family:
        g = generate(GraphFamily.parse(args.family))
    elif args.random_tree:
        n = args.random_tree
        g = Graph(1) if n == 1 else Graph(n, _random_tree_edges(n, rng))
    elif args.random_bcg:
        g = random_connected_bcg(args.random_bcg, rng)
    else:
        raise UsageError("gen needs --family, --random-tree or --random-bcg")
    sys.stdout.write(format_edge_list(g))
    return 0


def _random_tree_edges(n: int, rng: random.Random):
    # attach each vertex to a uniformly chosen earlier one, then shuffle ids
    perm = list(range(n))
    rng.shuffle(perm)
    return [(perm[v], perm[rng.randrange(v)]) for v in range(1, n)]


def cmd_bounds(args) -> int:
    g, src = _load_graph(args)
    lo, hi = bounds_ttr(g)
    doc = {**src, "lower": lo, "upper": hi,
           "upper_terms": {"max_degree_plus_one": g.max_degree + 1, "n_minus_min_degree": g.n - g.min_degree,
                           "half_order": (g.n + 1) // 2}}
    _emit(args, doc, f"{lo} <= TTr <= {hi}")
    return 0


# --- sweep ------------------------------------------------------------------

def _sweep_families() -> tuple[bool, str]:
    cases = [GraphFamily("path", (n,)) for n in range(1, 11)]
    cases += [GraphFamily("cycle", (n,)) for n in range(3, 11)]
    cases += [GraphFamily("complete_bipartite", (a, b)) for a in range(1, 5) for b in range(1, 5)]
    cases += [GraphFamily("complete", (n,)) for n in range(1, 11)]
    bad = [str(f) for f in cases if tournament_transitivity_exact(generate(f)).value != ttr_formula(f)]
    return not bad, f"{len(cases)} family members" + (f", mismatches: {bad}" if bad else "")


def _sweep_trees(max_n: int) -> tuple[bool, str]:
    bad, count = 0, 0
    for g in all_trees(max_n):
        count += 1
        got = tournament_transitivity_tree(g, witness=False).value
        if got != tournament_transitivity_exact(g, cap=max(g.n, 1)).value:
            bad += 1
    return not bad, f"{count} trees with n <= {max_n}, {bad} mismatches"


def _sweep_bcg(count: int, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        g = random_connected_bcg(rng.randint(2, 12), rng)
        d = ttr_bcg(g, cap=0, cross_check=False)
        o = tournament_transitivity_exact(g, cap=12).value
        if not d.lo <= o <= d.hi:
            bad += 1
    return not bad, f"{count} random chain graphs, {bad} verdicts contradicting exact search"


def cmd_sweep(args) -> int:
    checks: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
        ("families", _sweep_families),
        ("trees", lambda: _sweep_trees(args.max_tree_n)),
        ("bcg", lambda: _sweep_bcg(args.bcg_count, args.seed)),
    ]
    rows = []
    for name, fn in checks:
        start = time.perf_counter()
        ok, detail = fn()
        rows.append({"name": name, "ok": ok, "detail": detail, "seconds": round(time.perf_counter() - start, 2)})
    text = "\n".join(f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']:<9} {r['detail']}" for r in rows)
    doc = {"checks": [{k: v for k, v in r.items() if k != "seconds"} for r in rows]}
    _emit(args, doc, text)
    return 0 if all(r["ok"] for r in rows) else 2


# --- wiring -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cap", type=int, default=None, help="largest n for exhaustive search (default $TTR_CAP or 12)")
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--family", help="family spec such as path:5, cycle:6, kmn:2,3, cliques:3,3")
    source.add_argument("--input", help="edge-list file")

    p = _Parser(prog="ttr", description="Tournament transitivity of graphs.")
    p.add_argument("--version", action="version", version=f"ttr {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", parents=[common, source], help="compute TTr (or Tr) with a witness")
    s.add_argument("--transitive", action="store_true", help="compute Tr instead of TTr")
    s.set_defaults(fn=cmd_solve)

    s = sub.add_parser("verify", parents=[common], help="check a partition file against a graph")
    s.add_argument("graph")
    s.add_argument("partition", help="one part per line, or the JSON output of solve")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--tournament", action="store_true", help="tournament transitive check (default)")
    mode.add_argument("--transitive", action="store_true", help="plain transitive check")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("tree", parents=[common, source], help="tree algorithm with transitive profile")
    s.set_defaults(fn=cmd_tree)

    s = sub.add_parser("bcg", parents=[common, source], help="bipartite chain graph classification and TTr")
    s.set_defaults(fn=cmd_bcg)

    s = sub.add_parser("formula", parents=[common, source], help="closed-form TTr and Tr of a family")
    s.set_defaults(fn=cmd_formula)

    s = sub.add_parser("gadget", parents=[common, source], help="build the hardness gadget G'")
    s.add_argument("--out-graph", help="write G' as an edge list")
    s.add_argument("--out-partition", help="write the lifted certificate")
    s.set_defaults(fn=cmd_gadget)

    s = sub.add_parser("gen", parents=[common], help="print a graph as an edge list")
    s.add_argument("--family")
    s.add_argument("--random-tree", type=int, metavar="N")
    s.add_argument("--random-bcg", type=int, metavar="N")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_gen)

    s = sub.add_parser("bounds", parents=[common, source], help="cheap lower and upper bounds on TTr")
    s.set_defaults(fn=cmd_bounds)

    s = sub.add_parser("sweep", parents=[common], help="run the family, tree and BCG corpora")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-tree-n", type=int, default=10)
    s.add_argument("--bcg-count", type=int, default=300)
    s.set_defaults(fn=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, GraphError, PartitionError, CapExceeded, OSError, ValueError) as e:
        print(f"ttr {args.command}: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
