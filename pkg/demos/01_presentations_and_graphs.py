"""From a group presentation to its relation graph.

We parse the seven-generator group H, confirm it is cyclic-related and
conjugation-free, and look at its relation graph: three triple relations that
pairwise share one generator, so the graph is a triangle.  Then we contrast it
with a group whose graph is K4.
"""

from lcskit import fixtures
from lcskit.presentation import format_presentation, is_conjugation_free, validate
from lcskit.relgraph import betti, build_graph, contract, format_graph, is_cycle_separated

h = fixtures.example_h()
print("Canonical form of H:")
print(format_presentation(h))
print("cyclic-related:", validate(h).ok)

g = build_graph(h)
print("\nRelation graph of H:")
print(format_graph(g))

# A cycle-separated graph collapses to a forest once each cycle becomes one node.
c = contract(g)
print("contracted nodes:", " ".join(n.symbol for n in c.nodes), "links:", c.links)

# The braid section has four triples, each pair sharing a generator.
braid = build_graph(fixtures.braid_section())
print("\nBraid section graph: beta =", betti(braid), "cycle-separated =", is_cycle_separated(braid))

# G2 has the same graph as a conjugation-free group, but one relation is conjugated.
g2 = fixtures.example_g2()
print("G2 conjugation-free:", is_conjugation_free(g2))
