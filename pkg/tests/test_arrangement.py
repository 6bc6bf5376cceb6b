import random
from fractions import Fraction as F
from math import comb

import pytest

from lcskit import fixtures
from lcskit.arrangement import (
    RationalLine,
    fan_graph,
    format_arrangement,
    format_lattice,
    induced_presentation,
    intersect,
    lattice,
    parse_arrangement,
    realize,
    round_trip_check,
)
from lcskit.errors import ArrangementError, HypothesisError
from lcskit.presentation import Presentation, incidence_of
from lcskit.relgraph import RelationGraph, betti, build_graph, graphs_isomorphic


def line(label, a, b, c):
    return RationalLine(label, F(a), F(b), F(c))


def test_lines_are_normalized():
    assert line(1, 2, 4, 6) == line(1, 1, 2, 3)
    assert line(1, -1, 0, 5) == line(1, 1, 0, -5)
    with pytest.raises(ArrangementError):
        line(1, 0, 0, 1)


def test_intersection_and_parallels():
    assert intersect(line(1, 1, 0, 0), line(2, 0, 1, -1)) == (0, -1)
    assert intersect(line(1, 1, 1, 0), line(2, 1, 1, 1)) is None


def test_concurrent_and_generic_triples():
    lat = lattice([line(1, 1, 0, 0), line(2, 0, 1, 0), line(3, 1, -1, 0)])
    assert [p.multiplicity for p in lat.points] == [3]
    lat = lattice([line(1, 1, 0, 0), line(2, 0, 1, 0), line(3, 1, 1, -1)])
    assert lat.counts() == {2: 3}


def test_lattice_errors():
    with pytest.raises(ArrangementError, match="parallel"):
        lattice([line(1, 1, 0, 0), line(2, 1, 0, 1)])
    lat = lattice([line(1, 1, 0, 0), line(2, 1, 0, 1), line(3, 0, 1, 0)], allow_parallel=True)
    assert lat.parallel_pairs == ((1, 2),)
    with pytest.raises(ArrangementError, match="coincide"):
        lattice([line(1, 1, 0, 0), line(2, 2, 0, 0)])
    with pytest.raises(ArrangementError, match="duplicate"):
        lattice([line(1, 1, 0, 0), line(1, 0, 1, 0)])


def test_realize_generic():
    arr = realize(RelationGraph((), ()), 4)
    lat = lattice(arr)
    assert len(arr) == 4 and lat.counts() == {2: 6}
    assert fan_graph(lat).vertices == ()
    p = induced_presentation(lat)
    assert all(r.length == 2 for r in p.relations) and len(p.relations) == 6


def test_realize_pencil():
    p = fixtures.pencil(5)
    lat = lattice(realize(build_graph(p), 5))
    assert lat.counts() == {5: 1}
    g = fan_graph(lat)
    assert len(g.vertices) == 1 and g.edges == ()
    induced = induced_presentation(lat)
    assert [r.support for r in induced.relations] == [(1, 2, 3, 4, 5)]


def test_realize_h():
    p = fixtures.example_h()
    arr = realize(build_graph(p), 7)
    lat = lattice(arr)
    assert len(arr) == 7
    assert lat.counts() == {3: 3, 2: 12}
    g = fan_graph(lat)
    assert len(g.vertices) == 3 and len(g.edges) == 3 and betti(g) == 1
    assert graphs_isomorphic(g, build_graph(p))
    assert incidence_of(induced_presentation(lat)) == incidence_of(p)


def test_round_trip_examples():
    for p in [fixtures.example_h(), fixtures.example_x3(), fixtures.pencil(6), fixtures.generic(5)]:
        assert round_trip_check(p).ok


def test_round_trip_two_components():
    # a triple and a quadruple sharing no generator, plus a free line
    p = Presentation.from_relations(8, [(1, 2, 3), (4, 5, 6, 7)])
    g = build_graph(p)
    assert len(g.vertices) == 2 and g.edges == ()
    report = round_trip_check(p)
    assert report.ok
    assert report.lattice.counts() == {3: 1, 4: 1, 2: comb(8, 2) - 3 - 6}


def test_round_trip_refuses_conjugated_input():
    with pytest.raises(HypothesisError):
        round_trip_check(fixtures.example_g2())


def test_realize_refuses_non_cycle_separated():
    with pytest.raises(HypothesisError):
        realize(build_graph(fixtures.braid_section()), 6)


def test_induced_presentation_refuses_without_cf_graph():
    # complete quadrilateral: six lines through pairs of four points, a section of the braid arrangement
    pts = [(F(0), F(0)), (F(1), F(0)), (F(0), F(1)), (F(2), F(3))]
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    arr = [RationalLine.through(i, pts[a], pts[b]) for i, (a, b) in enumerate(pairs, start=1)]
    lat = lattice(arr)
    assert lat.counts() == {3: 4, 2: 3}
    assert betti(fan_graph(lat)) == 3
    with pytest.raises(HypothesisError):
        induced_presentation(lat)


def test_random_round_trips():
    rng = random.Random(5)
    for _ in range(60):
        report = round_trip_check(fixtures.random_cycle_separated(rng))
        assert report.ok


def test_arrangement_text_round_trip():
    arr = realize(build_graph(fixtures.example_h()), 7)
    text = format_arrangement(arr)
    assert parse_arrangement(text) == arr
    assert text.startswith("line 1 ")


def test_parse_arrangement_errors():
    with pytest.raises(ArrangementError):
        parse_arrangement("line 1 1 x 0")
    with pytest.raises(ArrangementError):
        parse_arrangement("lime 1 1 0 0")
    assert parse_arrangement("# only a comment\nline 2 1/2 0 -1  # x = 2\n")[0].label == 2


def test_lattice_report_sorted():
    lat = lattice([line(1, 1, 0, 0), line(2, 0, 1, 0), line(3, 1, 1, -1)])
    rows = format_lattice(lat).splitlines()
    assert rows == [
        "point (-1,0) mult=2 lines=2,3",
        "point (0,-1) mult=2 lines=1,3",
        "point (0,0) mult=2 lines=1,2",
    ]


def test_round_trips_with_two_cycles():
    rng = random.Random(21)
    seen_two_cycles = 0
    for _ in range(300):
        p = fixtures.random_cycle_separated(rng, max_n=20, max_vertices=8)
        g = build_graph(p)
        if betti(g) < 2:
            continue
        seen_two_cycles += 1
        assert round_trip_check(p).ok
    assert seen_two_cycles >= 5
