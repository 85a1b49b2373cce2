"""
Exact cone algebra
==================

Cones are kept in both descriptions: extreme rays plus lineality, and
halfspaces plus equalities. Intersection, containment and canonical keys
are what the pruned search is built from.
"""

from pretropisms import cone_from_generators, contains, cone_key, interior_ray, intersect, is_trivial

quadrant = cone_from_generators([(1, 0), (0, 1)])
wedge = cone_from_generators([(1, 1), (-1, 1)])

meet = intersect(quadrant, wedge)
print("quadrant & wedge rays:", meet.rays)
print("halfspaces:", meet.halfspaces)

# Containment only checks generators against inequalities.
print("quadrant contains ray (1, 2)?", contains(quadrant, cone_from_generators([(1, 2)])))

# Redundant generators do not change the point set, hence not the key.
same = cone_from_generators([(1, 0), (1, 1), (0, 1)])
print("keys equal:", cone_key(same) == cone_key(quadrant))

opposite = cone_from_generators([(-1, 0), (0, -1)])
print("quadrant & opposite quadrant is {0}:", is_trivial(intersect(quadrant, opposite)))

# Random rays in the relative interior are reproducible by seed.
print("interior rays:", [interior_ray(quadrant, s) for s in range(4)])
