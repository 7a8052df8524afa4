"""Doubling elements and antichains.

Doubling an element u splits it into u.0 ≺ u.1.  Collapsing that pair is a
congruence mu, it is an atom of the new congruence lattice, and the quotient
gives back the original lattice.
"""

from sdlattice import catalog
from sdlattice.catalog import describe
from sdlattice.congruence import all_congruences, quotient
from sdlattice.core import is_isomorphic
from sdlattice.doubling import check_boolean_embedding, double_antichain, double_element, mu
from sdlattice.sd import is_semidistributive

N5 = catalog.n5()
D = double_element(N5, "c")
theta = mu(D, "c")
print(f"N5[c] has {D.result.n} elements, semidistributive {is_semidistributive(D.result)}")
print(f"mu_c = {theta}; N5[c]/mu_c ≅ N5: {is_isomorphic(quotient(D.result, theta), N5) is not None}")

# A simple lattice doubled at an atom: Con becomes the 3-element chain.
D = double_element(catalog.m3(), "x")
con = all_congruences(D.result)
print(f"Con(M3[x]) ≅ {describe(con.carrier)}")

# Doubling an antichain U embeds B_|U| into Con via V -> mu[V].
D = double_antichain(catalog.boolean(2), ["p", "q"])
r = check_boolean_embedding(D)
print(f"B_2[p,q]: B_{r.size} embeds {r.embedding_ok}, |Con| = {r.con_size}, "
      f"Con = image + top {r.image_plus_top}")

# Doubling a bound behaves differently: the 2-chain doubled at 0 is the 3-chain,
# whose congruence lattice is B_2 rather than a 3-chain.
D = double_element(catalog.chain(2), "0")
print(f"2-chain doubled at 0: Con ≅ {describe(all_congruences(D.result).carrier)}")
