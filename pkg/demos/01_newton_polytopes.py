"""
Newton polytopes and their edge skeletons
=========================================

A polynomial's Newton polytope is the convex hull of its exponent vectors.
The search for pretropisms only needs the edges of these polytopes, each
edge carrying its neighbours and its cone of inner normals.
"""

from pretropisms import build_polytope, reduced_cyclic_supports, support_face

# The support of 1 + x + y + xy is the unit square.
square = build_polytope([(0, 0), (1, 0), (0, 1), (1, 1)])
print("square vertices:", square.vertices)
for e in square.edges:
    a, b = (square.vertices[i] for i in e.endpoints)
    print(f"  edge {e.id}: {a} -- {b}  normal ray {e.normal_cone.rays[0]}"
          f"  neighbours {sorted(e.neighbor_edge_ids)}")

# A direction r picks out the face where <a, r> is smallest.
for r in [(0, 1), (1, 1)]:
    face = support_face(square, r)
    print(f"face selected by {r}: {sorted(square.vertices[i] for i in face.vertices)} (dim {face.dim})")

# Not every polytope is full dimensional. The second equation of reduced
# cyclic 4 has a planar Newton polygon in 3-space, so each edge cone contains
# the normal of that plane as a lineality direction.
quad = build_polytope(reduced_cyclic_supports(4).supports[1])
print("\nreduced cyclic 4, equation 2: dim", quad.dim, "in ambient dim", quad.ambient_dim)
print("affine hull:", [(list(n), str(c)) for n, c in quad.affine_hull_equalities])
for e in quad.edges:
    print(f"  edge {e.endpoints}: rays {e.normal_cone.rays} lineality {e.normal_cone.lineality}")
