"""Acceptance criteria, one test each.

Every test appends a PASS/FAIL line to the session summary (printed at the
end of the pytest run) and asserts the criterion.  Run the module directly
to print the table without pytest.
"""

import random
import time

import networkx as nx
import pytest

from ttr.bcg import TYPE_I, TYPE_III, classify_bcg, random_connected_bcg, ttr_bcg
from ttr.families import build_clique_union_witness, ttr_formula
from ttr.gadget import build_reduction, lift_partition
from ttr.graph import (
    Graph,
    GraphFamily,
    complement,
    connected_components,
    generate,
    has_induced_p3,
    is_complete,
)
from ttr.oracle import tournament_transitivity_exact, transitivity_exact
from ttr.partition import is_tournament_transitive, is_transitive
from ttr.trees import all_trees, tournament_transitivity_tree, transitivity_tree

from conftest import ACCEPTANCE_LINES, random_graph

PATH_TABLE = (1, 1, 2, 2, 3, 3, 3, 3, 3, 3)
CYCLE_TABLE = (1, 2, 2, 3, 3, 3, 3, 3)


def record(num: int, ok: bool, detail: str, seconds: float | None = None) -> None:
    tail = "" if seconds is None else f" [{seconds:.1f}s]"
    line = f"{'PASS' if ok else 'FAIL'}  criterion {num}: {detail}{tail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def ttr(g):
    return tournament_transitivity_exact(g, cap=max(12, g.n)).value


def check_1():
    start = time.perf_counter()
    bad = []
    for n, want in enumerate(PATH_TABLE, 1):
        f = GraphFamily("path", (n,))
        if not ttr(generate(f)) == ttr_formula(f) == want:
            bad.append(str(f))
    for n, want in enumerate(CYCLE_TABLE, 3):
        f = GraphFamily("cycle", (n,))
        if not ttr(generate(f)) == ttr_formula(f) == want:
            bad.append(str(f))
    for a in range(1, 5):
        for b in range(1, 5):
            f = GraphFamily("complete_bipartite", (a, b))
            want = 1 if a == b == 1 else 2
            if not ttr(generate(f)) == ttr_formula(f) == want:
                bad.append(str(f))
    for n in range(1, 11):
        f = GraphFamily("complete", (n,))
        if not ttr(generate(f)) == ttr_formula(f) == 1:
            bad.append(str(f))
    secs = time.perf_counter() - start
    ok = not bad and secs < 60
    return ok, f"family tables P_1..P_10, C_3..C_10, K_(m,n) m,n<=4, K_1..K_10; mismatches: {bad or 'none'}", secs


def check_2():
    start = time.perf_counter()
    bad = []
    for n in range(1, 4):
        for t in range(1, n + 1):
            g = generate(GraphFamily("clique_union", (t, n)))
            w = build_clique_union_witness(t, n)
            if ttr(g) != t or len(w) != t or not is_tournament_transitive(g, w):
                bad.append((t, n))
    g = generate(GraphFamily("clique_union", (4, 4)))
    w = build_clique_union_witness(4, 4)
    if len(w) != 4 or not is_tournament_transitive(g, w):
        bad.append((4, 4))
    secs = time.perf_counter() - start
    return not bad and secs < 60, f"t*K_n for 1<=t<=n<=3 by search, 4*K_4 witness; failures: {bad or 'none'}", secs


def check_3():
    start = time.perf_counter()
    count, bad, outside = 0, [], 0
    for g in all_trees(10):
        count += 1
        got = tournament_transitivity_tree(g, witness=False).value
        tr = transitivity_tree(g)
        if got not in (tr - 1, tr):
            outside += 1
        if got != ttr(g):
            bad.append(g.edges())
    secs = time.perf_counter() - start
    ok = count == 201 and not bad and not outside and secs < 600
    return ok, f"{count} trees n<=10: {len(bad)} disagreements with search, {outside} outside [Tr-1, Tr]", secs


def check_4():
    vals = {name: ttr(generate(GraphFamily.parse(name))) for name in ("path:5", "cycle:5", "cycle:4", "k:4")}
    ok = vals == {"path:5": 3, "cycle:5": 2, "cycle:4": 2, "k:4": 1}
    return ok, f"TTr(P_5)={vals['path:5']} > TTr(C_5)={vals['cycle:5']}, TTr(C_4)={vals['cycle:4']} > TTr(K_4)={vals['k:4']}", None


def check_5():
    start = time.perf_counter()
    rng = random.Random(5)
    violations = []
    graphs = 0
    while graphs < 500:
        g = random_graph(rng, rng.randint(1, 8), rng.choice((0.2, 0.35, 0.5, 0.65, 0.8)))
        graphs += 1
        rep = tournament_transitivity_exact(g)
        k = rep.value
        tr, trc = transitivity_exact(g).value, transitivity_exact(complement(g)).value
        if k > min(tr, trc):
            violations.append(("complement bound", g.edges()))
        if k > min(g.max_degree + 1, g.n - g.min_degree):
            violations.append(("degree bound", g.edges()))
        if k > (g.n + 1) // 2:
            violations.append(("half-order bound", g.edges()))
        if len(connected_components(g)) == 1:
            if (k == 1) != is_complete(g) or (k >= 2) != has_induced_p3(g):
                violations.append(("characterization", g.edges()))
        if not is_transitive(complement(g), rep.witness):
            violations.append(("complement witness", g.edges()))
    secs = time.perf_counter() - start
    return not violations and secs < 300, f"{graphs} random graphs n<=8: {len(violations)} violations", secs


def check_6():
    start = time.perf_counter()
    rng = random.Random(6)
    exact_bad, interval_bad, iff_if, iff_only_if, type3_bad = 0, 0, 0, [], 0
    n_exact = n_type1 = n_type3 = 0
    for _ in range(300):
        g = random_connected_bcg(rng.randint(2, 12), rng)
        cls = classify_bcg(g)
        d = ttr_bcg(g, cap=0, cross_check=False)
        o = ttr(g)
        if d.kind == "Exact":
            n_exact += 1
            exact_bad += d.value != o
        elif not d.lo <= o <= d.hi:
            interval_bad += 1
        if cls.kind == TYPE_I:
            n_type1 += 1
            has_z = d.reason == "type1-iff"
            if has_z and o != cls.t + 1:
                iff_if += 1
            if not has_z and o == cls.t + 1:
                iff_only_if.append((g.n, g.edges()))
        if cls.kind == TYPE_III:
            n_type3 += 1
            type3_bad += o >= cls.t + 2
    secs = time.perf_counter() - start
    ok = not (exact_bad or interval_bad or iff_if or iff_only_if or type3_bad) and secs < 600
    smallest = min(iff_only_if)[1] if iff_only_if else None
    detail = (f"300 chain graphs: {n_exact} theorem Exact verdicts, {exact_bad} wrong; "
              f"{interval_bad} intervals missing the value; Type-I ({n_type1}): condition => t+1 failed {iff_if}x, "
              f"t+1 without condition {len(iff_only_if)}x"
              + (f" (smallest: {smallest})" if smallest else "")
              + f"; Type-III ({n_type3}) strictness violated {type3_bad}x")
    return ok, detail, secs


def check_7():
    start = time.perf_counter()
    bad, bases = [], 0
    for n in range(1, 6):
        for h in nx.graph_atlas_g():
            if h.number_of_nodes() != n:
                continue
            bases += 1
            g = Graph(n, h.edges())
            rep = transitivity_exact(g)
            gi = build_reduction(g)
            w = lift_partition(gi, rep.witness)
            if gi.gadget.n != 3 * n * (g.max_degree + 1) + 3:
                bad.append(("vertex count", g.edges()))
            if len(w) != rep.value + 2 or not is_tournament_transitive(gi.gadget, w):
                bad.append(("lift", g.edges()))
    k1 = ttr(build_reduction(Graph(1)).gadget)
    if k1 != 3:
        bad.append(("K_1 gadget", k1))
    secs = time.perf_counter() - start
    return not bad and secs < 300, f"{bases} base graphs n<=5 lifted to Tr+2; TTr(G' of K_1)={k1}; failures: {bad or 'none'}", secs


CHECKS = {1: check_1, 2: check_2, 3: check_3, 4: check_4, 5: check_5, 6: check_6, 7: check_7}


@pytest.mark.parametrize("num", sorted(CHECKS))
def test_criterion(num):
    ok, detail, secs = CHECKS[num]()
    record(num, ok, detail, secs)
    assert ok, detail


def test_criterion_8_not_reproducible():
    line = ("N/A   criterion 8: hardness theorems, the converse gadget direction beyond K_1, and chain graph "
            "verdicts above the search cap are not checkable at this scale")
    ACCEPTANCE_LINES.append(line)
    print(line)
    pytest.skip("not reproducible at desk scale")


if __name__ == "__main__":
    for num in sorted(CHECKS):
        record(num, *CHECKS[num]())
