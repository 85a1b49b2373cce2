"""
Horizontal versus vertical pruning
==================================

Vertical pruning stops at empty intersections. Horizontal pruning also
merges duplicate cones at every level of the tree, which pays off on the
highly symmetric cyclic polytopes. Pass a larger n_max on the command line
to extend the table (n = 8 takes about a minute in vertical mode).
"""

import sys
import time

from pretropisms import build_polytope, find_pretropisms, reduced_cyclic_supports

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 7

print(f"{'n':>2} {'v_int':>9} {'v_con':>7} {'v_sum':>9} {'h_int':>8} {'h_con':>6} {'h_sum':>8} {'ratio':>8} {'secs':>6}")
for n in range(4, n_max + 1):
    polys = [build_polytope(s) for s in reduced_cyclic_supports(n).supports]
    start = time.perf_counter()
    v = find_pretropisms(polys, "vertical").stats
    h = find_pretropisms(polys, "horizontal").stats
    secs = time.perf_counter() - start
    print(f"{n:>2} {v.intersections:>9} {v.containments:>7} {v.sum:>9} "
          f"{h.intersections:>8} {h.containments:>6} {h.sum:>8} {v.sum / h.sum:>8.5f} {secs:>6.1f}")

# Dropping cones contained in other cones as well does even less work and
# finds the same rays.
polys = [build_polytope(s) for s in reduced_cyclic_supports(6).supports]
loose = find_pretropisms(polys, "horizontal")
strict = find_pretropisms(polys, "horizontal", prune_contained=True)
print("\nn = 6 with containment pruning:", strict.stats.sum, "vs", loose.stats.sum,
      "- same rays:", strict.rays == loose.rays)
