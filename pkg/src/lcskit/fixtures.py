"""Named example presentations and random generators of valid inputs."""

from __future__ import annotations

import random
from itertools import combinations

from .presentation import IncidenceData, Presentation, parse_presentation

# Conjugation-free group on 7 generators whose graph is a triangle; the
# commutators for {1,4} and {3,6} are left implicit.
H_TEXT = """\
generators 7
relation 1 2 3
relation 3 4 5
relation 1 5 6
relation 2 4
relation 2 5
relation 2 6
relation 4 6
relation 1 7
relation 2 7
relation 3 7
relation 4 7
relation 5 7
relation 6 7
"""

# Same supports on 6 generators, but x3 is conjugated by x4 in the first
# triple and x2 by x3 in the commutator with x5.
G2_TEXT = """\
generators 6
relation 1 2 3 conj e ; e ; x4
relation 1 5 6
relation 3 4 5
relation 2 4
relation 2 5 conj x3 ; e
relation 2 6
relation 4 6
"""

# Three triple points on a triangle of lines, plus nodes.
X3_TEXT = """\
generators 6
relation 1 2 3
relation 3 4 5
relation 1 5 6
"""

# Generic 6-line section of the braid arrangement: four triple points, three nodes.
BRAID_TEXT = """\
generators 6
strict
relation 1 2 3
relation 1 4 5
relation 2 4 6
relation 3 5 6
relation 1 6
relation 2 5
relation 3 4
"""

ABELIAN_TEXT = """\
generators 4
"""


def example_h() -> Presentation:
    return parse_presentation(H_TEXT)


def example_g2() -> Presentation:
    return parse_presentation(G2_TEXT)


def example_x3() -> Presentation:
    return parse_presentation(X3_TEXT)


def braid_section() -> Presentation:
    return parse_presentation(BRAID_TEXT)


def pencil(n: int) -> Presentation:
    return Presentation.from_relations(n, [tuple(range(1, n + 1))])


def generic(n: int) -> Presentation:
    return Presentation.from_relations(n, [])


def random_cycle_separated(
    rng: random.Random,
    max_n: int = 10,
    max_vertices: int = 4,
    max_mult: int = 5,
    free_prob: float = 0.3,
) -> Presentation:
    """Random conjugation-free presentation whose relation graph is cycle-separated.

    A cycle-separated graph is grown by attaching pendant vertices, pendant
    cycles, or new components; every edge gets its own generator, every vertex
    is padded with fresh generators up to its multiplicity, and labels are
    shuffled.  Each generator labels at most one edge.
    """
    while True:
        m = rng.randint(1, max_vertices)
        edges: list[tuple[int, int]] = []
        in_cycle: set[int] = set()
        count = 1
        while count < m:
            choice = rng.random()
            room = m - count
            if choice < 0.5 and room >= 2:
                # pendant cycle through an existing vertex not on a cycle, or a fresh triangle
                anchors = [v for v in range(count) if v not in in_cycle]
                length = rng.randint(3, min(4, room + 1))
                if anchors and rng.random() < 0.7:
                    a = rng.choice(anchors)
                    cyc = [a] + list(range(count, count + length - 1))
                    count += length - 1
                elif room >= 3:
                    cyc = list(range(count, count + 3))
                    count += 3
                    if rng.random() < 0.6:
                        edges.append((rng.randrange(cyc[0]), cyc[0]))
                else:
                    continue
                in_cycle |= set(cyc)
                edges += [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
            elif choice < 0.9:
                edges.append((rng.randrange(count), count))
                count += 1
            else:
                count += 1  # new component
        deg = [0] * m
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        mults = [max(3, d, rng.choice((3, 3, rng.randint(3, max_mult)))) for d in deg]
        used = sum(mults) - len(edges)
        if used > max_n:
            continue
        n_free = 0
        while used + n_free < max_n and rng.random() < free_prob:
            n_free += 1
        n = used + n_free
        labels = list(range(1, n + 1))
        rng.shuffle(labels)
        supports: list[set[int]] = [set() for _ in range(m)]
        it = iter(labels)
        for a, b in edges:
            g = next(it)
            supports[a].add(g)
            supports[b].add(g)
        for v in range(m):
            while len(supports[v]) < mults[v]:
                supports[v].add(next(it))
        return Presentation.from_relations(n, [tuple(sorted(s)) for s in supports])


def random_incidence(rng: random.Random, max_n: int = 8) -> IncidenceData:
    """Random valid pair-covering incidence with no constraint on its graph.

    Greedily adds subsets of size 3..4 whose pairs are still uncovered, then
    fills the remaining pairs with length-2 supports.
    """
    n = rng.randint(2, max_n)
    covered: set[tuple[int, int]] = set()
    supports: list[tuple[int, ...]] = []
    for _ in range(rng.randint(0, 3 * n)):
        size = rng.choice((3, 3, 3, 4))
        if size > n:
            continue
        cand = tuple(sorted(rng.sample(range(1, n + 1), size)))
        pairs = set(combinations(cand, 2))
        if pairs & covered:
            continue
        covered |= pairs
        supports.append(cand)
    supports += [p for p in combinations(range(1, n + 1), 2) if p not in covered]
    return IncidenceData(n, tuple(supports))
