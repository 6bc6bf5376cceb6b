"""Real line arrangements over exact rationals.

Realization turns a cycle-separated relation graph into an affine line
arrangement whose multiple points are exactly the graph's vertices (with the
right multiplicities) and whose other intersections are all double points.
Vertices are placed on the parabola ``y = x^2`` in an outerplanar order, so
the graph's edges become non-crossing chords; every remaining line is added
one at a time through its multiple point, or through no existing point at all,
and rejected on any unintended coincidence.  A final lattice pass re-verifies
everything; all comparisons are exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import ArrangementError, HypothesisError, RealizationError
from .presentation import IncidenceData, Presentation, incidence_of, is_conjugation_free
from .relgraph import (
    Edge,
    RelationGraph,
    Vertex,
    blocks,
    build_graph,
    components,
    find_isomorphism,
    is_conjugation_free_graph,
    is_cycle_separated,
)

Point = tuple[Fraction, Fraction]

MAX_ATTEMPTS = 12
MAX_CANDIDATES = 500


@dataclass(frozen=True)
class RationalLine:
    """The line ``a*x + b*y = c``, scaled so the first nonzero of (a, b) is 1."""

    label: int
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        if a == 0 and b == 0:
            raise ArrangementError(f"line {self.label}: (a, b) must not both be zero")
        lead = a if a != 0 else b
        object.__setattr__(self, "a", a / lead)
        object.__setattr__(self, "b", b / lead)
        object.__setattr__(self, "c", c / lead)

    @classmethod
    def through(cls, label: int, p: Point, q: Point) -> "RationalLine":
        if p == q:
            raise ArrangementError("two distinct points are needed to define a line")
        a = q[1] - p[1]
        b = p[0] - q[0]
        return cls(label, a, b, a * p[0] + b * p[1])

    @classmethod
    def with_slope(cls, label: int, p: Point, slope: Fraction) -> "RationalLine":
        """Line through ``p`` with ``dy/dx = slope``."""
        return cls(label, slope, Fraction(-1), slope * p[0] - p[1])

    def contains(self, p: Point) -> bool:
        return self.a * p[0] + self.b * p[1] == self.c

    def direction(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)


def intersect(l1: RationalLine, l2: RationalLine) -> Point | None:
    """Unique common point, or None for parallel lines."""
    det = l1.a * l2.b - l1.b * l2.a
    if det == 0:
        return None
    x = (l1.c * l2.b - l1.b * l2.c) / det
    y = (l1.a * l2.c - l1.c * l2.a) / det
    return (x, y)


@dataclass(frozen=True)
class LatticePoint:
    x: Fraction
    y: Fraction
    lines: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.lines)

    @property
    def point(self) -> Point:
        return (self.x, self.y)


@dataclass(frozen=True)
class IntersectionLattice:
    labels: tuple[int, ...]
    points: tuple[LatticePoint, ...]
    parallel_pairs: tuple[tuple[int, int], ...] = ()

    @property
    def n(self) -> int:
        return len(self.labels)

    def multiple_points(self) -> tuple[LatticePoint, ...]:
        return tuple(p for p in self.points if p.multiplicity >= 3)

    def counts(self) -> dict[int, int]:
        return dict(sorted(Counter(p.multiplicity for p in self.points).items()))

    def incidence(self) -> IncidenceData:
        return IncidenceData(self.n, tuple(p.lines for p in self.points))

    def pair_coverage(self) -> int:
        return sum(comb(p.multiplicity, 2) for p in self.points)


def lattice(arr: Sequence[RationalLine], allow_parallel: bool = False) -> IntersectionLattice:
    """Group all pairwise intersections by exact coordinates."""
    labels = [l.label for l in arr]
    dup_labels = [k for k, c in Counter(labels).items() if c > 1]
    if dup_labels:
        raise ArrangementError(f"duplicate line label {dup_labels[0]}")
    by_point: dict[Point, set[int]] = {}
    parallel = []
    for l1, l2 in combinations(arr, 2):
        if (l1.a, l1.b, l1.c) == (l2.a, l2.b, l2.c):
            raise ArrangementError(f"lines {l1.label} and {l2.label} coincide")
        pt = intersect(l1, l2)
        if pt is None:
            if not allow_parallel:
                raise ArrangementError(f"lines {l1.label} and {l2.label} are parallel")
            parallel.append((min(l1.label, l2.label), max(l1.label, l2.label)))
            continue
        by_point.setdefault(pt, set()).update((l1.label, l2.label))
    points = tuple(LatticePoint(x, y, tuple(sorted(s))) for (x, y), s in sorted(by_point.items()))
    return IntersectionLattice(tuple(sorted(labels)), points, tuple(sorted(parallel)))


def fan_graph(lat: IntersectionLattice) -> RelationGraph:
    """Multiple points as vertices; consecutive multiple points on a line as edges."""
    mult = sorted(
        ((i, p) for i, p in enumerate(lat.points, start=1) if p.multiplicity >= 3),
        key=lambda ip: (-ip[1].multiplicity, ip[1].lines),
    )
    verts = tuple(
        Vertex(vid, pid, p.multiplicity, frozenset(p.lines)) for vid, (pid, p) in enumerate(mult, start=1)
    )
    on_line: dict[int, list[tuple[Point, int]]] = {}
    for v, (_, p) in zip(verts, mult):
        for label in p.lines:
            on_line.setdefault(label, []).append((p.point, v.id))
    pairs = []
    for label, pts in on_line.items():
        pts.sort()
        for (_, a), (_, b) in zip(pts, pts[1:]):
            pairs.append((min(a, b), max(a, b), label))
    edges = tuple(Edge(k, gen, a, b) for k, (a, b, gen) in enumerate(sorted(pairs), start=1))
    return RelationGraph(verts, edges)


def induced_presentation(lat: IntersectionLattice) -> Presentation:
    """One conjugation-free cyclic relation per intersection point (strict mode).

    Only licensed when the Fan graph is a disjoint union of conjugation-free graphs.
    """
    if lat.parallel_pairs:
        raise ArrangementError("parallel lines leave pairs uncovered; no presentation is induced")
    if list(lat.labels) != list(range(1, lat.n + 1)):
        raise ArrangementError("line labels must be 1..n to induce a presentation")
    g = fan_graph(lat)
    bad = [c for c in components(g) if not is_conjugation_free_graph(c)]
    if bad:
        ids = sorted(v.id for v in bad[0].vertices)
        raise HypothesisError(
            f"Fan graph component on vertices {ids} is not a conjugation-free graph; "
            "the arrangement need not have a conjugation-free geometric presentation"
        )
    return Presentation.from_relations(lat.n, [p.lines for p in lat.points], implicit_commutators=False)


# -- realization -------------------------------------------------------------


def _outerplanar_order(g: RelationGraph) -> list[int]:
    """Vertex order in which the edges of a cycle-separated graph are non-crossing chords.

    Each block's remaining vertices, with everything hanging off them, occupy a
    contiguous run right after the block's entry vertex; cycles are walked in
    cyclic order.  Hence no two edges interleave.
    """
    blks = blocks(g)
    by_vertex: dict[int, list[int]] = {v: [] for v in g.vertex_ids}
    for bi, blk in enumerate(blks):
        for x in sorted({y for e in blk for y in (e.u, e.v)}):
            by_vertex[x].append(bi)
    order: list[int] = []
    seen_blocks: set[int] = set()

    def walk_cycle(blk: list[Edge], start: int) -> list[int]:
        adj: dict[int, list[int]] = {}
        for e in blk:
            adj.setdefault(e.u, []).append(e.v)
            adj.setdefault(e.v, []).append(e.u)
        seq, cur = [start], min(adj[start])
        while cur != start:
            seq.append(cur)
            cur = next(w for w in adj[cur] if w != seq[-2])
        return seq[1:]

    def visit(v: int) -> None:
        for bi in by_vertex[v]:
            if bi in seen_blocks:
                continue
            seen_blocks.add(bi)
            blk = blks[bi]
            rest = walk_cycle(blk, v) if len(blk) > 1 else [blk[0].v if blk[0].u == v else blk[0].u]
            for w in rest:
                order.append(w)
                visit(w)

    for comp in components(g):
        root = min(comp.vertex_ids)
        order.append(root)
        visit(root)
    return order


def _parabola_points(order: list[int], attempt: int) -> dict[int, Point]:
    pts = {}
    for i, vid in enumerate(order):
        x = Fraction(2**i + attempt * i * i)
        pts[vid] = (x, x * x)
    return pts


def _slopes() -> Iterator[Fraction]:
    k = 0
    while True:
        k += 1
        yield Fraction((-1) ** k * (2 * k + 1), 7)


def _free_lines(label: int) -> Iterator[RationalLine]:
    k = 0
    while True:
        k += 1
        # (s, c) on a parabola: no three candidates are concurrent
        s = Fraction((-1) ** (k + 1) * (3 * k + 2), 13)
        c = Fraction(-(k * k + 5 * k + 1), 3)
        yield RationalLine(label, s, Fraction(-1), -c)  # y = s*x + c


class _Builder:
    """Adds lines one at a time, refusing any that creates an unplanned coincidence."""

    def __init__(self, vertex_points: Iterable[Point]):
        self.lines: list[RationalLine] = []
        self.points: dict[Point, set[int]] = {}
        self.vertex_points = set(vertex_points)

    def try_add(self, line: RationalLine, allowed: set[Point]) -> bool:
        for p in self.vertex_points - allowed:
            if line.contains(p):
                return False
        hits = []
        for other in self.lines:
            pt = intersect(line, other)
            if pt is None:
                return False
            if pt not in allowed and pt in self.points:
                return False
            hits.append((pt, other.label))
        fresh = [pt for pt, _ in hits if pt not in allowed]
        if len(fresh) != len(set(fresh)):
            return False
        for pt, other in hits:
            self.points.setdefault(pt, set()).update((line.label, other))
        self.lines.append(line)
        return True


def _check_graph_for_realization(g: RelationGraph, n: int) -> None:
    if not is_cycle_separated(g):
        raise HypothesisError("realization needs a cycle-separated relation graph")
    for v in g.vertices:
        if len(v.support) != v.multiplicity:
            raise ValueError(f"vertex {v.id} carries no support of size {v.multiplicity}")
        bad = [i for i in v.support if not 1 <= i <= n]
        if bad:
            raise ValueError(f"vertex {v.id}: generator {bad[0]} out of range 1..{n}")
    labels = Counter(e.generator for e in g.edges)
    repeated = [i for i, c in labels.items() if c > 1]
    if repeated:
        raise ValueError(f"generator {repeated[0]} labels more than one edge")
    edge_of = {(e.u, e.v): e.generator for e in g.edges}
    for a, b in combinations(g.vertices, 2):
        common = a.support & b.support
        key = (min(a.id, b.id), max(a.id, b.id))
        label = edge_of.get(key, edge_of.get((key[1], key[0])))
        if len(common) > 1 or (len(common) == 1) != (label is not None):
            raise ValueError(f"supports of vertices {a.id} and {b.id} disagree with the edges")
        if label is not None and common != {label}:
            raise ValueError(f"edge between {a.id} and {b.id} is labeled {label}, supports share {common}")


def realize(g: RelationGraph, n: int) -> tuple[RationalLine, ...]:
    """Rational line arrangement with one line per generator 1..n realizing ``g``."""
    _check_graph_for_realization(g, n)
    order = _outerplanar_order(g)
    in_support = set().union(*(v.support for v in g.vertices)) if g.vertices else set()
    last_failure = "no attempt made"
    for attempt in range(MAX_ATTEMPTS):
        pts = _parabola_points(order, attempt)
        arr = _attempt(g, n, pts, in_support)
        if isinstance(arr, str):
            last_failure = arr
            continue
        problem = _verify(g, n, pts, arr)
        if problem is None:
            return tuple(sorted(arr, key=lambda l: l.label))
        last_failure = problem
    raise RealizationError(f"no realization after {MAX_ATTEMPTS} attempts: {last_failure}")


def _attempt(g: RelationGraph, n: int, pts: dict[int, Point], in_support: set[int]):
    b = _Builder(pts.values())
    drawn: set[int] = set()
    for e in g.edges:
        line = RationalLine.through(e.generator, pts[e.u], pts[e.v])
        if not b.try_add(line, {pts[e.u], pts[e.v]}):
            return f"edge line {e.generator} meets an existing point"
        drawn.add(e.generator)
    for v in sorted(g.vertices, key=lambda v: v.id):
        for label in sorted(v.support - drawn):
            for k, s in enumerate(_slopes()):
                if k >= MAX_CANDIDATES:
                    return f"no slope for line {label} through vertex {v.id}"
                if b.try_add(RationalLine.with_slope(label, pts[v.id], s), {pts[v.id]}):
                    break
            drawn.add(label)
    for label in range(1, n + 1):
        if label in in_support:
            continue
        for k, line in enumerate(_free_lines(label)):
            if k >= MAX_CANDIDATES:
                return f"no generic position for free line {label}"
            if b.try_add(line, set()):
                break
    return b.lines


def _segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Proper crossing or touching of two segments away from shared endpoints."""

    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (v > 0) - (v < 0)

    shared = {p1, p2} & {q1, q2}
    if len(shared) == 2:
        return True
    if shared:
        (sp,) = shared
        p_other = p2 if p1 == sp else p1
        q_other = q2 if q1 == sp else q1
        if orient(sp, p_other, q_other) != 0:
            return False
        dot = (p_other[0] - sp[0]) * (q_other[0] - sp[0]) + (p_other[1] - sp[1]) * (q_other[1] - sp[1])
        return dot > 0
    d1, d2 = orient(q1, q2, p1), orient(q1, q2, p2)
    d3, d4 = orient(p1, p2, q1), orient(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True

    def on_seg(a, b, c):
        return min(a[0], b[0]) <= c[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])

    return (
        (d1 == 0 and on_seg(q1, q2, p1))
        or (d2 == 0 and on_seg(q1, q2, p2))
        or (d3 == 0 and on_seg(p1, p2, q1))
        or (d4 == 0 and on_seg(p1, p2, q2))
    )


def _verify(g: RelationGraph, n: int, pts: dict[int, Point], arr: list[RationalLine]) -> str | None:
    if sorted(l.label for l in arr) != list(range(1, n + 1)):
        return "line labels are not 1..n"
    try:
        lat = lattice(arr)
    except ArrangementError as exc:
        return str(exc)
    expected = {pts[v.id]: tuple(sorted(v.support)) for v in g.vertices}
    for p in lat.points:
        want = expected.pop(p.point, None)
        if want is not None and want != p.lines:
            return f"point {p.point} carries lines {p.lines}, expected {want}"
        if want is None and p.multiplicity != 2:
            return f"unplanned multiple point {p.point} on lines {p.lines}"
    if expected:
        return f"vertex points {sorted(expected)} missing from the lattice"
    segs = [(pts[e.u], pts[e.v]) for e in g.edges]
    for (a, b), (c, d) in combinations(segs, 2):
        if _segments_cross(a, b, c, d):
            return "graph edges cross in the drawing"
    return None


# -- round trip --------------------------------------------------------------


@dataclass(frozen=True)
class RoundTripReport:
    graph_isomorphic: bool
    witness: dict[int, int] | None
    multiplicities_equal: bool
    pair_coverage_equal: bool
    incidence_equal: bool
    arrangement: tuple[RationalLine, ...]
    lattice: IntersectionLattice

    @property
    def ok(self) -> bool:
        return self.graph_isomorphic and self.multiplicities_equal and self.pair_coverage_equal and self.incidence_equal


def round_trip_check(p: Presentation) -> RoundTripReport:
    """Realize ``p``, read the arrangement back, and compare graph and incidence data."""
    if not is_conjugation_free(p):
        raise HypothesisError("round trip needs a conjugation-free presentation")
    g = build_graph(p)
    arr = realize(g, p.n)
    lat = lattice(arr)
    witness = find_isomorphism(g, fan_graph(lat))
    induced = induced_presentation(lat)
    inc_p, inc_l = incidence_of(p), incidence_of(induced)
    return RoundTripReport(
        graph_isomorphic=witness is not None,
        witness=witness,
        multiplicities_equal=inc_p.counts() == lat.counts(),
        pair_coverage_equal=lat.pair_coverage() == comb(p.n, 2) == sum(comb(len(s), 2) for s in inc_p.supports),
        incidence_equal=inc_p.supports == inc_l.supports,
        arrangement=arr,
        lattice=lat,
    )


# -- text formats ------------------------------------------------------------


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_arrangement(arr: Sequence[RationalLine]) -> str:
    return "".join(f"line {l.label} {format_rational(l.a)} {format_rational(l.b)} {format_rational(l.c)}\n" for l in arr)


def parse_arrangement(text: str) -> tuple[RationalLine, ...]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        if body[0] != "line" or len(body) != 5:
            raise ArrangementError(f"line {lineno}: expected 'line <label> <a> <b> <c>'")
        try:
            label = int(body[1])
            a, b, c = (Fraction(tok) for tok in body[2:])
        except (ValueError, ZeroDivisionError):
            raise ArrangementError(f"line {lineno}: bad number in {raw.strip()!r}") from None
        lines.append(RationalLine(label, a, b, c))
    return tuple(lines)


def format_lattice(lat: IntersectionLattice) -> str:
    return "".join(
        f"point ({format_rational(p.x)},{format_rational(p.y)}) mult={p.multiplicity} lines={','.join(map(str, p.lines))}\n"
        for p in lat.points
    )
