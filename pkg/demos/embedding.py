"""Minimal embeddings: eliminating variables that linear equations determine.

Whenever a generator has a linear term, the corresponding coordinate is a
function of the others on the cone, and the cone re-embeds in a smaller
affine space.  Smoothness at the origin is exactly "nothing is left".
"""

from gradedcones import (
    GradingMap,
    PolyRing,
    homogeneous_ideal,
    linear_part,
    minimal_embedding,
    smooth_at_origin,
)

ring = PolyRing(("x", "y", "z"))
grading = GradingMap(ring, [(2,), (1,), (3,)])
cone = homogeneous_ideal([ring.parse("x + y^2"), ring.parse("z + y^3")], grading)

print("generators:", ", ".join(str(g) for g in cone.base.generators))
lp = linear_part(cone)
print("linear part dimension:", lp.dimension(), "->", ", ".join(str(f) for f in lp.forms))

emb = minimal_embedding(cone)
print("\neliminated:", [ring.names[i] for i in emb.eliminated])
print("substitutions on the cone:")
for i in sorted(emb.substitution):
    print(f"  {ring.names[i]} = {emb.substitution[i]}")
print("embedded ideal in", list(emb.embedded.ring.names), "=",
      [str(g) for g in emb.embedded.base.generators] or "(0)")

report = smooth_at_origin(cone)
print(f"\nsmooth at the origin: {report.smooth}")
print(f"  dim = {report.cone_dim}, ambient {report.ambient}, "
      f"tangent space {report.tangent_dim}")

print("\na cone that stays singular:")
quadric = homogeneous_ideal([ring.parse("x z - y^2")], GradingMap(ring, [(1,), (1,), (1,)]))
report = smooth_at_origin(quadric)
print(f"  x z = y^2 -> smooth: {report.smooth} "
      f"(dim {report.cone_dim} < tangent {report.tangent_dim})")
