from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from ttr.graph import Graph, complement, connected_components, has_induced_p3, induced_subgraph, is_complete
from ttr.oracle import tournament_transitivity_exact, transitivity_exact
from ttr.partition import is_tournament_transitive, is_transitive, merge_first_two
from ttr.trees import tournament_transitivity_tree, transitivity_tree

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def trees(draw, max_n=11):
    n = draw(st.integers(1, max_n))
    return Graph(n, [(v, draw(st.integers(0, v - 1))) for v in range(1, n)])


@SETTINGS
@given(graphs())
def test_upper_bounds(g):
    ttr = tournament_transitivity_exact(g).value
    assert ttr <= transitivity_exact(g).value
    assert ttr <= transitivity_exact(complement(g)).value
    assert ttr <= min(g.max_degree + 1, g.n - g.min_degree, (g.n + 1) // 2)


@SETTINGS
@given(graphs())
def test_witness_is_transitive_in_complement(g):
    w = tournament_transitivity_exact(g).witness
    assert is_transitive(complement(g), w)


@SETTINGS
@given(graphs(), st.data())
def test_induced_subgraph_monotone(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    h, _ = induced_subgraph(g, s)
    assert tournament_transitivity_exact(h).value <= tournament_transitivity_exact(g).value


@SETTINGS
@given(graphs())
def test_merge_first_two(g):
    w = tournament_transitivity_exact(g).witness
    if len(w) >= 2:
        assert is_tournament_transitive(g, merge_first_two(w))


@SETTINGS
@given(graphs())
def test_connected_characterizations(g):
    if len(connected_components(g)) != 1:
        return
    ttr = tournament_transitivity_exact(g).value
    assert (ttr == 1) == is_complete(g)
    assert (ttr >= 2) == has_induced_p3(g)


@SETTINGS
@given(trees())
def test_tree_algorithm(t):
    r = tournament_transitivity_tree(t)
    assert r.value == tournament_transitivity_exact(t).value
    assert transitivity_tree(t) - 1 <= r.value <= transitivity_tree(t)
    assert is_tournament_transitive(t, r.witness)
