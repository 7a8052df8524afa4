"""Semidistributivity on the two smallest non-distributive lattices.

N5 is semidistributive, M3 is not.  The direct triple scan and the
ideal/filter criterion are run side by side; they must agree.
"""

from sdlattice import catalog
from sdlattice.sd import check_join_sd_filters, check_meet_sd_ideals, check_sd_direct, meet_ideal

for L in (catalog.n5(), catalog.m3()):
    r = check_sd_direct(L)
    ideals, _ = check_meet_sd_ideals(L)
    filters, _ = check_join_sd_filters(L)
    print(f"{L.name}: SD-meet {r.meet_sd} (ideals {ideals}), SD-join {r.join_sd} (filters {filters})")
    if r.witness:
        side, (x, y, z) = r.witness
        print(f"  {side} failure: {x}∧{y} = {x}∧{z} = {L.meet(x, y)} but {x}∧({y}∨{z}) = {L.meet(x, L.join(y, z))}")

# The set {x : v ∧ x = u} is an ideal above u exactly when SD-meet holds for u < v.
N5, M3 = catalog.n5(), catalog.m3()
w = meet_ideal(N5, "0", "b")
print(f"N5: {{x : b ∧ x = 0}} = {sorted(w.set)}, closed: {w.failure is None}")
w = meet_ideal(M3, "0", "x")
print(f"M3: {{t : x ∧ t = 0}} = {sorted(w.set)}, join of {w.failure} escapes")
