import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcskit import fixtures
from lcskit.presentation import Presentation
from lcskit.relgraph import (
    RelationGraph,
    betti,
    blocks,
    build_graph,
    components,
    contract,
    find_isomorphism,
    format_graph,
    graphs_isomorphic,
    is_conjugation_free_graph,
    is_cycle_separated,
)
from oracles import nx_betti, nx_cycle_separated

TRIANGLE = RelationGraph.from_edges(3, [(1, 2), (2, 3), (3, 1)])
PATH3 = RelationGraph.from_edges(3, [(1, 2), (2, 3)])
K4 = RelationGraph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
# two triangles joined through vertex 4
DUMBBELL = RelationGraph.from_edges(7, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)])


def to_nx(g: RelationGraph) -> nx.Graph:
    h = nx.Graph()
    for v in g.vertices:
        h.add_node(v.id, mult=v.multiplicity)
    h.add_edges_from((e.u, e.v) for e in g.edges)
    return h


def test_g2_graph_edges():
    g = build_graph(fixtures.example_g2())
    assert len(g.vertices) == 3
    assert sorted(e.generator for e in g.edges) == [1, 3, 5]


def test_empty_and_single_vertex_graphs():
    assert build_graph(fixtures.generic(5)).vertices == ()
    g = build_graph(fixtures.pencil(5))
    assert len(g.vertices) == 1 and g.edges == ()
    assert g.vertices[0].multiplicity == 5


def test_betti_examples():
    assert betti(TRIANGLE) == 1
    assert betti(PATH3) == 0
    assert betti(K4) == 3
    assert betti(build_graph(fixtures.example_h())) == 1


def test_cycle_separated_examples():
    assert is_cycle_separated(DUMBBELL)
    assert not is_cycle_separated(K4)
    assert is_cycle_separated(TRIANGLE)
    # two triangles sharing a vertex
    bowtie = RelationGraph.from_edges(5, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])
    assert not is_cycle_separated(bowtie)


def test_conjugation_free_graph_examples():
    assert is_conjugation_free_graph(DUMBBELL)
    assert is_conjugation_free_graph(TRIANGLE)
    assert not is_conjugation_free_graph(K4)
    assert not is_conjugation_free_graph(build_graph(fixtures.braid_section()))


def test_contract_examples():
    c = contract(TRIANGLE)
    assert [n.symbol for n in c.nodes] == ["⊚"] and c.links == ()
    c = contract(PATH3)
    assert [n.symbol for n in c.nodes] == ["●"] * 3 and len(c.links) == 2
    c = contract(DUMBBELL)
    assert sorted(n.symbol for n in c.nodes) == ["⊚", "⊚", "●"]
    assert c.is_forest() and len(c.links) == 2
    with pytest.raises(ValueError):
        contract(K4)


def test_isomorphism_examples():
    assert not graphs_isomorphic(TRIANGLE, PATH3)
    assert graphs_isomorphic(TRIANGLE, TRIANGLE)
    relabeled = RelationGraph.from_edges(3, [(2, 3), (1, 3), (1, 2)])
    assert find_isomorphism(TRIANGLE, relabeled) is not None
    a = RelationGraph.from_edges(2, [(1, 2)], [3, 4])
    b = RelationGraph.from_edges(2, [(1, 2)], [4, 4])
    assert not graphs_isomorphic(a, b)


def test_blocks_of_dumbbell():
    sizes = sorted(len(b) for b in blocks(DUMBBELL))
    assert sizes == [1, 1, 3, 3]


def test_format_graph_is_stable():
    text = format_graph(build_graph(fixtures.example_h()))
    assert text.splitlines()[0] == "vertex 1 mult=3 support=1,2,3"
    assert text.rstrip().endswith("beta=1 cycle_separated=true cf_graph=true")
    assert text == format_graph(build_graph(fixtures.example_h()))


def random_graph(rng: random.Random, n: int, p: float) -> RelationGraph:
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < p]
    mults = [rng.randint(3, 5) for _ in range(n)]
    return RelationGraph.from_edges(n, edges, mults)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 8), st.floats(0.1, 0.7))
def test_predicates_match_networkx(seed, n, p):
    g = random_graph(random.Random(seed), n, p)
    h = to_nx(g)
    assert betti(g) == nx_betti(h)
    assert len(components(g)) == nx.number_connected_components(h)
    assert is_cycle_separated(g) == nx_cycle_separated(h)
    if is_cycle_separated(g):
        assert contract(g).is_forest()


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 7), st.floats(0.2, 0.8))
def test_isomorphism_matches_networkx(seed, n, p):
    rng = random.Random(seed)
    g1 = random_graph(rng, n, p)
    if rng.random() < 0.5:
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        mults = [0] * n
        for v in g1.vertices:
            mults[perm[v.id - 1] - 1] = v.multiplicity
        g2 = RelationGraph.from_edges(n, [(perm[e.u - 1], perm[e.v - 1]) for e in g1.edges], mults)
    else:
        g2 = random_graph(rng, n, p)
    expected = nx.is_isomorphic(to_nx(g1), to_nx(g2), node_match=lambda a, b: a["mult"] == b["mult"])
    witness = find_isomorphism(g1, g2)
    assert (witness is not None) == expected
    if witness:
        mapped = {frozenset((witness[e.u], witness[e.v])) for e in g1.edges}
        assert mapped == {frozenset((e.u, e.v)) for e in g2.edges}


def test_generated_fixtures_are_cycle_separated():
    rng = random.Random(7)
    for _ in range(100):
        g = build_graph(fixtures.random_cycle_separated(rng))
        assert is_cycle_separated(g)


def test_graph_from_presentation_with_overlaps():
    p = Presentation.from_relations(6, [(1, 2, 3), (3, 4, 5), (1, 4, 6)])
    g = build_graph(p)
    assert [(e.generator, e.u, e.v) for e in g.edges] == [(1, 1, 2), (3, 1, 3), (4, 2, 3)]
