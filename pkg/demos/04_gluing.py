"""Replacing an isolated interval by another lattice.

In N5 the interval [a, b] is isolated.  Putting M3 in its place keeps the
congruence lattice; in the 4-chain it does not, because a congruence can
glue a to 0 without touching b, and that information is lost once a is
deleted.
"""

from sdlattice import catalog
from sdlattice.catalog import describe
from sdlattice.congruence import all_congruences
from sdlattice.glue import check_glue_sd, glue, leaking_congruences, verify_con_isomorphism

M3 = catalog.m3()
for L in (catalog.n5(), catalog.chain(4)):
    ctx = glue(L, ("a", "b"), M3)
    r = verify_con_isomorphism(ctx)
    sd = check_glue_sd(ctx)
    print(f"{L.name} with [a,b] := M3 -> K with {ctx.K.n} elements")
    print(f"  P = {ctx.P}, Q = {ctx.Q}, R = {ctx.R}")
    print(f"  K semidistributive {sd.k_semidistributive}; all failures inside F {sd.violations_inside_f}")
    print(f"  |Con L| = {r.con_l}, |Con K| = {r.con_k}, Con K ≅ {describe(all_congruences(ctx.K).carrier)}")
    print(f"  transfer is an isomorphism: {r.isomorphism}")
    for alpha in leaking_congruences(L, ctx.interval):
        print(f"    leaks: {alpha}")
    for note in r.counterexamples[:3]:
        print(f"    {note}")
