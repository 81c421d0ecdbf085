import random
from itertools import combinations

import pytest

from ttr.graph import Graph, GraphError, GraphFamily, complete_graph, cycle_graph, generate, path_graph
from ttr.oracle import all_partitions, tournament_transitivity_exact, transitive_number_exact, transitivity_exact
from ttr.partition import is_tournament_transitive
from ttr.trees import (
    PathRequirement,
    agrees,
    all_trees,
    allowed_indices_at_anchor,
    anchor_indices,
    compute_X,
    compute_Y,
    ladder,
    nonisomorphic_trees,
    pruned_tree,
    root_at,
    rooted_transitive_number,
    rooted_values,
    tournament_transitivity_tree,
    transitive_profile,
    transitivity_tree,
    tree_drop_witness,
)

STAR3 = generate(GraphFamily("star", (3,)))

# x = 0 with legs whose rooted values are 1, 2 and 3
SPIDER = Graph(8, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (4, 6), (6, 7)])


def random_tree(rng, n):
    return Graph(n, [(v, rng.randrange(v)) for v in range(1, n)])


def test_tree_counts():
    assert [sum(1 for _ in nonisomorphic_trees(n)) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


def test_root_at():
    rt = root_at(path_graph(3), 1)
    assert rt.children[1] == [0, 2] and rt.parent == {0: 1, 2: 1}
    rt = root_at(path_graph(3), 0)
    assert rt.children == {0: [1], 1: [2], 2: []}
    assert root_at(Graph(1), 0).children == {0: []}
    with pytest.raises(GraphError):
        root_at(cycle_graph(4), 0)


def test_pruned_tree():
    g = path_graph(5)
    h, remap = pruned_tree(g, 0, 2)
    assert h == path_graph(2) and set(remap) == {0, 1}
    h, remap = pruned_tree(g, 2, 3)
    assert h == path_graph(3) and set(remap) == {0, 1, 2}
    h, remap = pruned_tree(STAR3, 0, 3)
    assert h.n == 3 and set(remap) == {0, 1, 2}
    with pytest.raises(GraphError):
        pruned_tree(g, 1, 1)


def test_ladder_examples():
    assert ladder([]).z == 0
    assert ladder([2, 2]).z == 2
    assert ladder([1, 1, 1]).z == 1
    lad = ladder([3, 1, 2, 1])
    assert lad.sorted_values == (1, 1, 2, 3) and lad.z == 3


def _ladder_brute(vals):
    s = sorted(vals)
    for z in range(len(s), 0, -1):
        for idx in combinations(range(len(s)), z):
            if all(s[i] >= j for j, i in enumerate(idx, 1)):
                return z
    return 0


def test_ladder_against_subsequence_search():
    rng = random.Random(3)
    for _ in range(3000):
        vals = [rng.randint(1, 8) for _ in range(rng.randint(0, 8))]
        lad = ladder(vals)
        assert lad.z == _ladder_brute(vals)
        chosen = [lad.sorted_values[i] for i in lad.chosen]
        assert all(v >= j for j, v in enumerate(chosen, 1))


def test_rooted_numbers():
    assert rooted_transitive_number(root_at(path_graph(5), 2), 0) == 1
    assert rooted_transitive_number(root_at(path_graph(5), 2), 2) == 3
    assert rooted_transitive_number(root_at(STAR3, 0), 0) == 2


def test_profile_examples():
    assert transitive_profile(path_graph(5)) == {0: 2, 1: 3, 2: 3, 3: 3, 4: 2}
    assert transitive_profile(Graph(1)) == {0: 1}
    assert transitive_profile(STAR3) == {0: 2, 1: 2, 2: 2, 3: 2}


def test_profile_matches_exact_search():
    for g in all_trees(8):
        prof = transitive_profile(g)
        assert all(prof[v] == transitive_number_exact(g, v) for v in range(g.n))


def test_transitivity_tree():
    assert transitivity_tree(path_graph(5)) == 3
    assert transitivity_tree(STAR3) == 2
    # a path has maximum degree 2, so Tr(P_15) <= 3
    assert transitivity_tree(path_graph(15)) == 3
    for g in all_trees(10):
        assert transitivity_tree(g) == transitivity_exact(g).value
    with pytest.raises(GraphError):
        transitivity_tree(complete_graph(3))


def _exact_anchor_sets(g, x):
    rt = root_at(g, x)
    vals = rooted_values(rt)
    k = vals[x]
    seen = {}
    for p in all_partitions(g, k):
        if x in p[k - 1]:
            for c in rt.children[x]:
                seen.setdefault(c, set()).add(p.index_of(c))
    return rt, vals, seen


def test_anchor_star():
    rt = root_at(STAR3, 0)
    assert allowed_indices_at_anchor(rt, 0, 3, 1) == {1}


def test_anchor_spider():
    rt, vals, exact = _exact_anchor_sets(SPIDER, 0)
    assert [vals[c] for c in (1, 2, 4)] == [1, 2, 3]
    got = allowed_indices_at_anchor(rt, 0, 4, 3, vals)
    assert got == exact[4]
    assert allowed_indices_at_anchor(rt, 0, 2, 2, vals) == exact[2]
    assert allowed_indices_at_anchor(rt, 0, 1, 1, vals) == exact[1] == {1}


def test_anchor_rejects_off_ladder():
    rt = root_at(SPIDER, 0)
    with pytest.raises(GraphError):
        allowed_indices_at_anchor(rt, 0, 1, 2)
    with pytest.raises(GraphError):
        allowed_indices_at_anchor(rt, 0, 5, 1)
    with pytest.raises(GraphError):
        allowed_indices_at_anchor(rt, 0, 4, 4)


def test_anchor_sets_match_enumeration():
    rng = random.Random(8)
    checked = 0
    for _ in range(40):
        g = random_tree(rng, rng.randint(3, 7))
        x = rng.randrange(g.n)
        rt, vals, exact = _exact_anchor_sets(g, x)
        lad = ladder([vals[c] for c in rt.children[x]])
        kids = sorted(rt.children[x], key=lambda c: (vals[c], c))
        for j, pos in enumerate(lad.chosen, 1):
            c = kids[pos]
            assert allowed_indices_at_anchor(rt, x, c, j, vals) == exact[c]
            assert anchor_indices(rt, x, c, vals) == exact[c]
            checked += 1
    assert checked > 40


def test_compute_x_y_on_p5():
    g = path_graph(5)
    x = compute_X(g, 0, 3, 3)
    assert x.vertices == [0, 1] and x.allowed_indices[0] == {2}
    y = compute_Y(g, 0, 3, 3)
    assert y.vertices == [3, 2, 1] and y.allowed_indices[3] == {3} and y.allowed_indices[2] == {2}
    assert agrees(x, y)


def test_compute_x_y_on_p4_disagree():
    g = path_graph(4)
    x = compute_X(g, 3, 1, 3)
    y = compute_Y(g, 3, 1, 3)
    assert x.vertices == [3, 2] and y.vertices == [1, 2, 3]
    assert x.allowed_indices[3] == {2} and 2 not in y.allowed_indices[3]
    assert not agrees(x, y)


def test_x_is_anchor_when_y_already_reaches_k():
    g = path_graph(7)
    assert compute_X(g, 1, 4, 3).vertices == [1]


def test_star_leaves():
    g = STAR3
    assert compute_X(g, 1, 2, 2).vertices == [1]


def test_y_is_anchor_when_support_is_off_path():
    # z = 0 has two off-path legs giving value 3; y = 5 hangs off a long arm
    g = Graph(8, [(0, 1), (1, 2), (0, 3), (0, 4), (4, 5), (5, 6), (6, 7)])
    prof = transitive_profile(g)
    assert prof[0] == 3
    assert compute_Y(g, 5, 0, 3).vertices == [0]


def test_compute_preconditions():
    g = path_graph(5)
    with pytest.raises(GraphError):
        compute_X(g, 1, 2, 3)
    with pytest.raises(GraphError):
        compute_Y(g, 0, 4, 3)
    with pytest.raises(GraphError):
        compute_X(cycle_graph(4), 0, 2, 3)


def test_agrees_synthetic():
    def req(verts, sets):
        return PathRequirement(verts[0], verts, dict(zip(verts, map(frozenset, sets))), 3, (0, 9))
    assert agrees(req([0, 1], [{2}, {1}]), req([9, 8], [{3}, {2}]))
    assert agrees(req([0, 5], [{2}, {2}]), req([9, 5], [{3}, {2}]))
    assert not agrees(req([0, 5], [{2}, {2}]), req([9, 5], [{3}, {3}]))
    other = PathRequirement(1, [1], {1: frozenset({2})}, 3, (1, 9))
    with pytest.raises(GraphError):
        agrees(req([0], [{2}]), other)


@pytest.mark.parametrize("g,value", [
    (path_graph(4), 2),
    (path_graph(5), 3),
    (STAR3, 2),
    (Graph(1), 1),
    (path_graph(2), 1),
])
def test_algorithm_examples(g, value):
    r = tournament_transitivity_tree(g)
    assert r.value == value
    assert len(r.witness) == value and is_tournament_transitive(g, r.witness)


def test_algorithm_matches_exact_on_small_trees():
    for g in all_trees(9):
        r = tournament_transitivity_tree(g)
        tr = transitivity_tree(g)
        assert r.value in (tr - 1, tr)
        assert r.value == tournament_transitivity_exact(g).value
        assert len(r.witness) == r.value and is_tournament_transitive(g, r.witness)


def test_drop_witness_on_larger_trees():
    rng = random.Random(17)
    for _ in range(30):
        g = random_tree(rng, rng.randint(15, 60))
        w = tree_drop_witness(g)
        assert len(w) == transitivity_tree(g) - 1 and is_tournament_transitive(g, w)
        r = tournament_transitivity_tree(g, cap=0)
        assert r.value in (len(w), len(w) + 1)


def test_not_a_tree():
    with pytest.raises(GraphError):
        tournament_transitivity_tree(cycle_graph(5))
