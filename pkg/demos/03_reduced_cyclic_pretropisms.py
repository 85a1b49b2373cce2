"""
Pretropisms of reduced cyclic n-roots
=====================================

Substituting x_i = y_i / y_0 in the first n-1 cyclic equations removes one
variable and much of the symmetry. The pretropisms of the reduced system
map back to the original one by prepending a zero coordinate.
"""

from pretropisms import (
    brute_force_pretropisms,
    build_polytope,
    cyclic_supports,
    find_pretropisms,
    lift_pretropism,
    reduced_cyclic_supports,
    validate_pretropism,
)

for n in (4, 5, 6):
    polys = [build_polytope(s) for s in reduced_cyclic_supports(n).supports]
    report = find_pretropisms(polys)
    print(f"reduced cyclic {n}: {len(report.rays)} pretropisms, "
          f"{report.stats.intersections} intersections, {report.stats.containments} containments")

    # The brute-force oracle intersects every tuple of edge cones.
    oracle = brute_force_pretropisms(polys)
    print("  agrees with oracle:", oracle.rays == report.validated_rays)

    full = [build_polytope(s) for s in cyclic_supports(n).supports[:-1]]
    for v in report.rays:
        w = lift_pretropism(v)
        print(f"  {v} -> {w}  valid on cyclic {n}: {validate_pretropism(full, w)}")

# Restricting to rays with a positive first coordinate keeps only the
# directions relevant for series expansions.
polys = [build_polytope(s) for s in reduced_cyclic_supports(6).supports]
print("lower hull rays, n = 6:", find_pretropisms(polys, lower_hull=True).rays)
