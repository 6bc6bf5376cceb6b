"""Realizing a presentation as a real line arrangement.

Every conjugation-free presentation with a cycle-separated graph comes from a
line arrangement whose multiple points are the graph's vertices.  We build
one over the rationals for H, compute its intersection lattice exactly, and
read the presentation back off the lattice.
"""

from lcskit import fixtures
from lcskit.arrangement import fan_graph, format_arrangement, format_lattice, induced_presentation, lattice, realize
from lcskit.presentation import incidence_of
from lcskit.relgraph import build_graph, find_isomorphism

h = fixtures.example_h()
arr = realize(build_graph(h), h.n)
print("Lines a*x + b*y = c:")
print(format_arrangement(arr))

lat = lattice(arr)
print("Multiple points:")
print("\n".join(row for row in format_lattice(lat).splitlines() if "mult=2" not in row))
print("point census:", lat.counts())

witness = find_isomorphism(build_graph(h), fan_graph(lat))
print("\nFan graph matches the relation graph via", witness)
print("incidence read back equals H's:", incidence_of(induced_presentation(lat)) == incidence_of(h))
