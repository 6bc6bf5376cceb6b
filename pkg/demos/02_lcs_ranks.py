"""Closed-form lower central series ranks.

When the relation graph is cycle-separated, phi_k depends only on how many
relations of each length occur: every relation of length i contributes the
rank of the degree-k part of a free Lie algebra on i - 1 generators.  We
tabulate H and a pencil, then confirm the product identity
prod (1 - t^k)^phi_k = (1 - t)^(n - b2) prod_p (1 - (m_p - 1) t).
"""

from lcskit import fixtures
from lcskit.presentation import incidence_of
from lcskit.ranks import b2, lcs_series_check, phi_formula, witt

K = 8

for name, p in [("H", fixtures.example_h()), ("pencil of 5", fixtures.pencil(5))]:
    inc = incidence_of(p)
    table = phi_formula(inc, K)
    check = lcs_series_check(inc, K, table.phi)
    print(f"{name}: relation census {inc.counts()}, b2 = {b2(inc)}")
    print("  phi_1..phi_8 =", table.as_list())
    print("  product identity up to t^8:", "holds" if check.ok else f"fails at t^{check.first_difference}")

print("\nA pencil of n lines has phi_k equal to the Witt number for n - 1 letters:")
print("  witt(k, 4), k = 1..8:", [witt(k, 4) for k in range(1, K + 1)])

# Outside the hypothesis the formula is refused unless explicitly requested.
braid = incidence_of(fixtures.braid_section())
table = phi_formula(braid, 3, assume_decomposable=True)
print("\nBraid section, formula marked conjectural:", table.as_list(), table.notes)
