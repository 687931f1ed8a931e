from __future__ import annotations

import random
from itertools import permutations, product

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import digits, graphs, random_graph
from wordrep import graphs as gr
from wordrep.graphs import Graph
from wordrep.represent import graph_of_word, verify
from wordrep.search import (
    CENSUS_FIELDS,
    Orientation,
    SearchBudget,
    census_csv,
    census_rows,
    complete_for_level0,
    find_isomorphism,
    find_representant,
    is_circle_graph,
    length_bound,
    max_clique_size,
    min_level,
    permutational_representant,
    transitive_orientation,
)
from wordrep.words import is_permutational, is_uniform, parse_word

W5 = gr.wheel(5)


def test_budget_validation():
    for bad in (dict(max_copies_per_letter=0), dict(node_limit=0), dict(worker_hint=0)):
        with pytest.raises(ValueError):
            SearchBudget(**bad)
    assert SearchBudget(2).family == "uniform(t<=2)"
    assert SearchBudget(3, permutational_only=True).family == "permutational(blocks<=3)"
    assert SearchBudget(2, uniform_only=False).family == "words(copies<=2)"


def test_c4_found():
    res = find_representant(gr.cycle(4), 0, SearchBudget(2))
    assert res.found and is_uniform(res.word) == 2
    assert graph_of_word(res.word, 0) == graph_of_word(digits("14213243"), 0)


def test_w5_not_two_uniform():
    res = find_representant(W5, 0, SearchBudget(2, node_limit=None))
    assert res.status == "absent" and res.word is None
    assert res.length_bound == 2 * 6 * (6 - 3)


def test_w5_three_uniform_level_one():
    res = find_representant(W5, 1, SearchBudget(3))
    assert res.found and is_uniform(res.word) == 3 and verify(res.word, W5, 1)


def test_exhausted_is_not_absent():
    res = find_representant(W5, 1, SearchBudget(3, node_limit=50))
    assert res.status == "exhausted" and res.nodes == 50


@pytest.mark.parametrize("workers", [2, 3])
def test_worker_count_does_not_change_results(workers):
    for g, k, b in ((W5, 1, SearchBudget(3)), (W5, 0, SearchBudget(2)), (W5, 1, SearchBudget(3, node_limit=700))):
        one = find_representant(g, k, b)
        many = find_representant(g, k, SearchBudget(**{**b.__dict__, "worker_hint": workers}))
        assert one == many


def _families():
    return [
        dict(max_copies_per_letter=2),
        dict(max_copies_per_letter=2, uniform_only=False),
        dict(max_copies_per_letter=3, permutational_only=True),
    ]


@pytest.mark.parametrize("fam", _families(), ids=["uniform", "free", "perm"])
def test_pruning_and_symmetry_preserve_verdicts(fam):
    # every labeled graph on up to 4 vertices, levels 0..2: the pruned
    # canonical search agrees with the plain labeled enumeration
    for n in (2, 3, 4):
        if n == 4 and fam.get("permutational_only"):
            fam = {**fam, "max_copies_per_letter": 2}
        for g in gr.all_labeled_graphs(n):
            for k in (0, 1, 2):
                verdicts = {
                    find_representant(g, k, SearchBudget(node_limit=None, canonical=c, prune=p, **fam)).status
                    for c in (True, False)
                    for p in (True, False)
                }
                assert len(verdicts) == 1, (sorted(g.edges), k, verdicts)


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=5))
def test_soundness(g):
    for k in (0, 1):
        res = find_representant(g, k, SearchBudget(2, uniform_only=False, node_limit=20_000))
        if res.found:
            assert graph_of_word(res.word, k) == g


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=7), graphs(min_n=1, max_n=7))
def test_isomorphism_agrees_with_networkx(a, b):
    def masks(g):
        return [sum(1 << (u - 1) for u in g.neighbors(v)) for v in g.vertices]

    def nxg(g):
        h = nx.Graph()
        h.add_nodes_from(g.vertices)
        h.add_edges_from(g.edges)
        return h

    for x, y in ((a, b), (a, a)):
        m = find_isomorphism(masks(x), masks(y))
        assert (m is not None) == nx.is_isomorphic(nxg(x), nxg(y))
        if m is not None:
            for u, v in x.edges:
                assert y.has_edge(m[u - 1] + 1, m[v - 1] + 1)


def test_min_level_examples():
    r = min_level(gr.complete(4))
    assert (r.k, r.qualifier) == (0, "=") and graph_of_word(r.word, 0) == gr.complete(4)
    r = min_level(gr.empty(3))
    assert (r.k, r.word, r.qualifier) == (0, digits("112233"), "=")
    r = min_level(W5)
    assert (r.k, r.qualifier) == (1, "≤") and verify(r.word, W5, 1)
    assert r.searches[0].status == "absent"
    r = min_level(W5, SearchBudget(2))
    assert (r.k, r.qualifier) == (2, "≤") and r.family == "universal-permutational"
    with pytest.raises(ValueError):
        min_level(Graph(1, frozenset()))


def test_level0_completeness_rule():
    assert max_clique_size(W5) == 3 and length_bound(W5) == 36
    assert not complete_for_level0(W5, SearchBudget(5))
    assert complete_for_level0(W5, SearchBudget(6))
    assert not complete_for_level0(W5, SearchBudget(6, permutational_only=True))


def test_min_level_at_most_two_small_graphs():
    rng = random.Random(3)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 6))
        r = min_level(g, SearchBudget(2, node_limit=20_000))
        assert r.k <= 2 and verify(r.word, g, r.k)


def test_circle_graphs():
    assert is_circle_graph(gr.cycle(4))
    assert not is_circle_graph(W5)
    assert all(is_circle_graph(gr.complete(n)) for n in range(1, 7))
    with pytest.raises(ValueError):
        is_circle_graph(gr.path(9))


# -- comparability ------------------------------------------------------------------

def brute_transitive(g: Graph) -> bool:
    edges = sorted(g.edges)
    for bits in product((0, 1), repeat=len(edges)):
        arcs = frozenset((u, v) if b else (v, u) for (u, v), b in zip(edges, bits))
        if Orientation(arcs).is_transitive():
            return True
    return not edges


def test_orientation_examples():
    o = transitive_orientation(gr.complete(3))
    assert o is not None and o.is_transitive() and len(o.arcs) == 3
    assert transitive_orientation(gr.cycle(5)) is None
    assert transitive_orientation(gr.path(4)) is not None
    with pytest.raises(ValueError):
        transitive_orientation(gr.empty(13))


@settings(max_examples=80)
@given(graphs(min_n=1, max_n=5))
def test_orientation_matches_brute_force(g):
    o = transitive_orientation(g)
    assert (o is not None) == brute_transitive(g)
    if o is not None:
        assert {tuple(sorted(a)) for a in o.arcs} == set(g.edges) and len(o.arcs) == len(g.edges)


def random_comparability(rng: random.Random, n: int) -> Graph:
    order = list(range(1, n + 1))
    rng.shuffle(order)
    below = {v: set() for v in order}
    for i, v in enumerate(order):
        for u in order[:i]:
            if rng.random() < 0.35:
                below[v].add(u)
                below[v] |= below[u]
    return Graph.from_edges(n, [(min(u, v), max(u, v)) for v in order for u in below[v]])


def test_permutational_examples():
    assert permutational_representant(gr.complete(3)) in set(permutations((1, 2, 3)))
    assert permutational_representant(gr.empty(2)) == digits("12 21")
    with pytest.raises(ValueError):
        permutational_representant(gr.cycle(5))


def test_random_comparability_graphs():
    rng = random.Random(17)
    for _ in range(60):
        g = random_comparability(rng, rng.randint(1, 7))
        w = permutational_representant(g)
        assert verify(w, g, 0) and is_permutational(w)


def test_pair_driven_extensions():
    rng = random.Random(4)
    for _ in range(10):
        g = random_comparability(rng, 6)
        w = permutational_representant(g, max_extensions=1)
        assert verify(w, g, 0) and is_permutational(w)


# -- census ------------------------------------------------------------------------

def test_census_two_vertices():
    rows = list(census_rows(2, 0))
    assert [r["graph6"] for r in rows] == ["A?", "A_"]
    assert all(r["qualifier"] == "=" for r in rows)
    text = census_csv(rows)
    assert text.splitlines()[0] == ",".join(CENSUS_FIELDS)


def test_census_four_vertices_two_uniform():
    rows = list(census_rows(4, 0, SearchBudget(2)))
    assert len(rows) == 64
    for r in rows:
        g = gr.parse_graph6(r["graph6"])
        assert r["k_claimed"] == "0" and verify(parse_word(r["witness_word"]), g, 0)
    assert census_csv(rows) == census_csv(census_rows(4, 0, SearchBudget(2)))


def test_census_flags_missing_witness():
    rows = list(census_rows(6, 0, SearchBudget(2), graphs=[W5]))
    assert rows[0]["qualifier"] == ">" and rows[0]["witness_word"] == ""
    rows = list(census_rows(6, 1, SearchBudget(3, node_limit=30), graphs=[W5]))
    assert rows[0]["qualifier"] == "?"


def test_census_universal_only():
    rows = list(census_rows(3, 2, universal_only=True))
    assert len(rows) == 8
    for r in rows:
        g = gr.parse_graph6(r["graph6"])
        assert verify(parse_word(r["witness_word"]), g, 2)
    with pytest.raises(ValueError):
        list(census_rows(3, 1, universal_only=True))
