"""Congruence lattices of small lattices.

Con(N5) has five congruences and looks like B_2 with a new bottom; the
pentagon's only atom collapses the interval [a, b].
"""

from sdlattice import catalog
from sdlattice.catalog import describe
from sdlattice.congruence import all_congruences, atoms, is_simple, principal_congruence, quotient

N5 = catalog.n5()
con = all_congruences(N5)
print(f"Con(N5): {len(con)} congruences, shape {describe(con.carrier)}")
for theta in con:
    print(f"  {theta}")
print("atoms:", [str(a) for a in atoms(con)])

theta = principal_congruence(N5, "0", "c")
print(f"con(0, c) = {theta}; N5/con(0, c) has {quotient(N5, theta).n} elements")

for L in (catalog.chain(2), catalog.chain(4), catalog.m3(), N5):
    c = all_congruences(L)
    print(f"{L.name:7} |Con| = {len(c)}  shape {describe(c.carrier):14} simple {is_simple(L)}")
