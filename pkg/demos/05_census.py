"""Census of congruence lattices over every lattice with at most 8 elements.

Among semidistributive lattices, the only simple one is the 2-element chain,
and none has a 3-element chain as its congruence lattice.
"""

import time

from sdlattice.catalog import census

start = time.perf_counter()
r = census(8, "sd")
print(f"{r.selected} semidistributive lattices among {r.examined} "
      f"({time.perf_counter() - start:.1f} s)")
print("per size:", r.per_size)
for shape, count in sorted(r.con_classes.items(), key=lambda kv: -kv[1])[:10]:
    print(f"  {shape:28} {count}")
print("Con ≅ 3-chain:", r.three_chain or "none")
print("simple:", r.simple)
print("non-distributive Con:", r.non_distributive_con or "none")
