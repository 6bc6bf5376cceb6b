"""The relation graph of a cyclic-related presentation and its invariants.

One vertex per multiple relation (length >= 3); two vertices are joined by
an edge labeled ``i`` when their supports meet in exactly ``{i}``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .presentation import IncidenceData, Presentation


@dataclass(frozen=True)
class Vertex:
    id: int
    relation_id: int
    multiplicity: int
    support: frozenset[int]


@dataclass(frozen=True)
class Edge:
    id: int
    generator: int
    u: int
    v: int


@dataclass(frozen=True)
class RelationGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(
        cls,
        num_vertices: int,
        edges: Iterable[tuple[int, int]],
        multiplicities: Sequence[int] | None = None,
    ) -> "RelationGraph":
        """Abstract graph on vertices ``1..num_vertices``; edges get labels 1, 2, ..."""
        mults = list(multiplicities) if multiplicities is not None else [3] * num_vertices
        verts = tuple(Vertex(i, i, mults[i - 1], frozenset()) for i in range(1, num_vertices + 1))
        es = []
        seen = set()
        for k, (a, b) in enumerate(edges, start=1):
            key = (min(a, b), max(a, b))
            if a == b or key in seen:
                raise ValueError(f"edge {key} is a loop or a repeated edge")
            seen.add(key)
            es.append(Edge(k, k, key[0], key[1]))
        return cls(verts, tuple(es))

    @property
    def vertex_ids(self) -> list[int]:
        return [v.id for v in self.vertices]

    def vertex(self, vid: int) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v.id: [] for v in self.vertices}
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return adj

    def degree(self, vid: int) -> int:
        return sum((e.u == vid) + (e.v == vid) for e in self.edges)

    def subgraph(self, keep: Iterable[int]) -> "RelationGraph":
        keep = set(keep)
        return RelationGraph(
            tuple(v for v in self.vertices if v.id in keep),
            tuple(e for e in self.edges if e.u in keep and e.v in keep),
        )


def _graph_from_supports(supports: Iterable[tuple[tuple[int, ...], int]]) -> RelationGraph:
    """``supports`` yields ``(support, relation_id)`` for the multiple relations, in vertex order."""
    verts = tuple(
        Vertex(vid, rid, len(s), frozenset(s)) for vid, (s, rid) in enumerate(supports, start=1)
    )
    edges = []
    for a, b in combinations(verts, 2):
        common = a.support & b.support
        if len(common) == 1:
            edges.append(Edge(len(edges) + 1, next(iter(common)), a.id, b.id))
    return RelationGraph(verts, tuple(edges))


def build_graph(p: Presentation) -> RelationGraph:
    """Relation graph with vertex ids following the canonical relation order."""
    return _graph_from_supports(
        (r.support, rid) for rid, r in enumerate(p.relations, start=1) if r.is_multiple
    )


def graph_of_incidence(inc: IncidenceData) -> RelationGraph:
    mult = sorted((s for s in inc.supports if len(s) >= 3), key=lambda s: (-len(s), s))
    return _graph_from_supports((s, rid) for rid, s in enumerate(mult, start=1))


def components(g: RelationGraph) -> list[RelationGraph]:
    adj = g.adjacency()
    seen: set[int] = set()
    out = []
    for start in g.vertex_ids:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(g.subgraph(comp))
    return out


def betti(g: RelationGraph) -> int:
    return len(g.edges) - len(g.vertices) + len(components(g))


def blocks(g: RelationGraph) -> list[list[Edge]]:
    """Biconnected components as edge lists (iterative Hopcroft-Tarjan)."""
    inc: dict[int, list[Edge]] = {v: [] for v in g.vertex_ids}
    for e in g.edges:
        inc[e.u].append(e)
        inc[e.v].append(e)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[list[Edge]] = []
    clock = 0
    for root in g.vertex_ids:
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        estack: list[Edge] = []
        # frames: (vertex, edge used to enter it, iterator over incident edges)
        frames = [(root, None, iter(inc[root]))]
        while frames:
            u, via, it = frames[-1]
            advanced = False
            for e in it:
                if e is via:
                    continue
                w = e.v if e.u == u else e.u
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    estack.append(e)
                    frames.append((w, e, iter(inc[w])))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    estack.append(e)
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            frames.pop()
            if frames:
                parent = frames[-1][0]
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    block = []
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e is via:
                            break
                    out.append(block)
    return out


def _cycle_blocks(g: RelationGraph) -> list[list[Edge]] | None:
    """Cycle blocks of ``g``, or None when some block is neither an edge nor a simple cycle."""
    cycles = []
    for block in blocks(g):
        if len(block) == 1:
            continue
        verts = {x for e in block for x in (e.u, e.v)}
        if len(verts) != len(block):
            return None
        cycles.append(block)
    return cycles


def is_cycle_separated(g: RelationGraph) -> bool:
    """Every block is an edge or a simple cycle, and no two cycles share a vertex."""
    cycles = _cycle_blocks(g)
    if cycles is None:
        return False
    used = Counter(x for block in cycles for x in {y for e in block for y in (e.u, e.v)})
    return all(c == 1 for c in used.values())


def is_conjugation_free_graph(g: RelationGraph) -> bool:
    """Prune all vertices of degree <= 2 per round until every component has beta <= 1.

    Disconnected input (including what remains after a pruning round) is
    judged component by component. A round that prunes nothing while beta > 1
    means the graph is not conjugation-free.
    """
    parts = components(g)
    if len(parts) > 1:
        return all(is_conjugation_free_graph(c) for c in parts)
    if betti(g) <= 1:
        return True
    pruned = {v.id for v in g.vertices if g.degree(v.id) <= 2}
    if not pruned:
        return False
    return is_conjugation_free_graph(g.subgraph(set(g.vertex_ids) - pruned))


@dataclass(frozen=True)
class ContractedNode:
    kind: str  # "cycle" or "vertex"
    members: tuple[int, ...]

    @property
    def symbol(self) -> str:
        return "⊚" if self.kind == "cycle" else "●"


@dataclass(frozen=True)
class ContractedGraph:
    nodes: tuple[ContractedNode, ...]
    links: tuple[tuple[int, int], ...]  # indices into nodes

    def is_forest(self) -> bool:
        parent = list(range(len(self.nodes)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.links:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def contract(g: RelationGraph) -> ContractedGraph:
    """Collapse every cycle of a cycle-separated graph to a single node."""
    if not is_cycle_separated(g):
        raise ValueError("contract() needs a cycle-separated graph")
    cycles = _cycle_blocks(g) or []
    node_of: dict[int, int] = {}
    nodes: list[ContractedNode] = []
    cycle_edges = set()
    for block in sorted(cycles, key=lambda b: min(min(e.u, e.v) for e in b)):
        members = tuple(sorted({x for e in block for x in (e.u, e.v)}))
        for x in members:
            node_of[x] = len(nodes)
        nodes.append(ContractedNode("cycle", members))
        cycle_edges |= {e.id for e in block}
    for vid in g.vertex_ids:
        if vid not in node_of:
            node_of[vid] = len(nodes)
            nodes.append(ContractedNode("vertex", (vid,)))
    links = tuple(
        sorted((min(node_of[e.u], node_of[e.v]), max(node_of[e.u], node_of[e.v])) for e in g.edges if e.id not in cycle_edges)
    )
    return ContractedGraph(tuple(nodes), links)


def find_isomorphism(g1: RelationGraph, g2: RelationGraph) -> dict[int, int] | None:
    """Vertex bijection preserving adjacency and multiplicities, or None.

    Edge generator labels are ignored.  Backtracking over vertices ordered by
    decreasing degree, pruning on (degree, multiplicity).
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None
    adj1 = {k: set(v) for k, v in g1.adjacency().items()}
    adj2 = {k: set(v) for k, v in g2.adjacency().items()}
    sig1 = {v.id: (len(adj1[v.id]), v.multiplicity) for v in g1.vertices}
    sig2 = {v.id: (len(adj2[v.id]), v.multiplicity) for v in g2.vertices}
    if Counter(sig1.values()) != Counter(sig2.values()):
        return None

    # order g1's vertices so each one (after the first of its component) touches an earlier one
    order: list[int] = []
    placed: set[int] = set()
    for start in sorted(g1.vertex_ids, key=lambda x: (-sig1[x][0], x)):
        if start in placed:
            continue
        frontier = [start]
        while frontier:
            frontier.sort(key=lambda x: (-len(adj1[x] & placed), -sig1[x][0], x))
            x = frontier.pop(0)
            if x in placed:
                continue
            placed.add(x)
            order.append(x)
            frontier.extend(w for w in adj1[x] if w not in placed)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in g2.vertex_ids:
            if y in used or sig2[y] != sig1[x]:
                continue
            if any((mapping[w] in adj2[y]) != (w in adj1[x]) for w in mapping):
                continue
            mapping[x] = y
            used.add(y)
            if extend(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if extend(0) else None


def graphs_isomorphic(g1: RelationGraph, g2: RelationGraph) -> bool:
    return find_isomorphism(g1, g2) is not None


def format_graph(g: RelationGraph) -> str:
    """Text dump: vertex lines, edge lines, then the three invariants."""
    lines = []
    for v in g.vertices:
        support = ",".join(map(str, sorted(v.support)))
        lines.append(f"vertex {v.id} mult={v.multiplicity} support={support}")
    for e in g.edges:
        lines.append(f"edge {e.id} gen={e.generator} {e.u}-{e.v}")
    cs = str(is_cycle_separated(g)).lower()
    cf = str(is_conjugation_free_graph(g)).lower()
    lines.append(f"beta={betti(g)} cycle_separated={cs} cf_graph={cf}")
    return "\n".join(lines) + "\n"
