"""Reference computations that share no code with lcskit.

Lyndon words are enumerated directly; holonomy ranks use plain Fraction
Gaussian elimination on relators written as [x_k, sum_{j in S} x_j].
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import comb

import networkx as nx


def is_lyndon(w: tuple[int, ...]) -> bool:
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lyndon_count(k: int, n: int) -> int:
    return sum(1 for w in product(range(n), repeat=k) if is_lyndon(w))


def fraction_rank(rows: list[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            lead = min(row)
            if lead not in pivots:
                pivots[lead] = row
                break
            piv = pivots[lead]
            f = row[lead] / piv[lead]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def _index(word: tuple[int, ...], n: int) -> int:
    idx = 0
    for letter in word:
        idx = idx * n + letter - 1
    return idx


def _relators(n: int, supports) -> list[dict[tuple[int, ...], int]]:
    out = []
    for s in supports:
        for k in s:
            vec: dict[tuple[int, ...], int] = {}
            for j in s:
                if j == k:
                    continue
                vec[(k, j)] = vec.get((k, j), 0) + 1
                vec[(j, k)] = vec.get((j, k), 0) - 1
            out.append(vec)
    return out


def holonomy_phi2_ref(n: int, supports) -> int:
    rows = [{_index(w, n): c for w, c in r.items()} for r in _relators(n, supports)]
    return comb(n, 2) - fraction_rank(rows)


def holonomy_phi3_ref(n: int, supports) -> int:
    rows = []
    for r in _relators(n, supports):
        for l in range(1, n + 1):
            vec: dict[int, int] = {}
            for w, c in r.items():
                for word, sign in ((w + (l,), c), ((l,) + w, -c)):
                    i = _index(word, n)
                    vec[i] = vec.get(i, 0) + sign
            rows.append({i: c for i, c in vec.items() if c})
    return lyndon_count(3, n) - fraction_rank(rows)


def nx_relation_graph(supports) -> nx.MultiGraph:
    big = [frozenset(s) for s in supports if len(s) >= 3]
    g = nx.MultiGraph()
    g.add_nodes_from(range(len(big)))
    for (i, a), (j, b) in combinations(enumerate(big), 2):
        if len(a & b) == 1:
            g.add_edge(i, j)
    return g


def nx_cycle_separated(g: nx.Graph) -> bool:
    """Every block is a bridge or a cycle, and no vertex lies on two cycles."""
    on_cycle: set = set()
    for comp in nx.biconnected_components(nx.Graph(g)):
        if len(comp) <= 2:
            continue
        sub = g.subgraph(comp)
        if sub.number_of_edges() != len(comp):
            return False
        if on_cycle & comp:
            return False
        on_cycle |= comp
    return True


def nx_betti(g: nx.Graph) -> int:
    return g.number_of_edges() - g.number_of_nodes() + nx.number_connected_components(g)
