"""Checking the formula against the holonomy Lie algebra.

The holonomy oracle linearizes each relation into degree-2 Lie relators and
computes exact ranks in degrees 2 and 3.  For H the two agree.  For the
braid section they do not: the formula predicts 8 in degree 3 while the
holonomy algebra has rank 10, because its graph K4 is not cycle-separated.
"""

from lcskit import fixtures
from lcskit.holonomy import oracle_report
from lcskit.presentation import incidence_of
from lcskit.ranks import phi_formula

for name, p in [("H", fixtures.example_h()), ("X3", fixtures.example_x3()), ("braid section", fixtures.braid_section())]:
    inc = incidence_of(p)
    table = phi_formula(inc, 3, assume_decomposable=True)
    rep = oracle_report(inc)
    tag = " (conjectural)" if table.conjectural else ""
    verdict = "agree" if rep.phi3 == table[3] else f"gap of {rep.phi3 - table[3]}"
    print(f"{name}: phi2 formula/oracle = {table[2]}/{rep.phi2}, phi3 formula{tag}/oracle = {table[3]}/{rep.phi3} -> {verdict}")
