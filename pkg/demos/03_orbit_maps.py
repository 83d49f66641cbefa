"""Maps that shuffle the orbit partition: involution, projection, splash.

Shows the three ways a side subplane turns into a scattered linear set on
the axis, the projection-vertex census, and the fixed-plane searches.
"""

from figplane import (ProjectivePlane, build_field_tower, format_point,
                      partition_orbits, pr_set, sp_set, vertex_census)
from figplane.linear_sets import fixed_subplane, sls_points, t_plane
from figplane.maps import (involution_line_image, mu_fixed_planes,
                           phi_fixed_planes)

ctx = build_field_tower(3, 1)
q = ctx.q

theta = 2  # a norm class with norm != 1
B = t_plane(ctx, theta)
print(f"side subplane for theta = {theta} (norm class {ctx.norm_class(theta)}):")
print(f"  projection image  = linear set of norm class "
      f"{ctx.norm_class(ctx.mul(theta, theta))}")
assert pr_set(ctx, B) == sls_points(ctx, ctx.mul(theta, theta))
print(f"  splash image      = linear set of norm class "
      f"{ctx.norm_class(ctx.neg(ctx.mul(theta, theta)))}")
assert sp_set(ctx, B) == sls_points(ctx, ctx.neg(ctx.mul(theta, theta)))
print(f"  involution image  = linear set of norm class "
      f"{ctx.norm_class(ctx.neg(ctx.inv(theta)))}")
assert involution_line_image(ctx, B) == sls_points(ctx, ctx.neg(ctx.inv(theta)))
print()

plane = ProjectivePlane(ctx)
vc = vertex_census(plane, fixed_subplane(ctx))
total = sum(len(v) for v in vc.by_class.values())
print(f"projection vertices for the fixed subplane: {total} "
      f"(= q^3 - q^2 - q - 1 = {q**3 - q**2 - q - 1})")
for j, vs in vc.by_class.items():
    print(f"  onto norm class {j}: {len(vs)} vertices")
print(f"  plus {vc.club} vertices with club images and {vc.other} others")
print()

for p, k in ((3, 1), (2, 2)):
    c = build_field_tower(p, k)
    pl = ProjectivePlane(c)
    cls = partition_orbits(pl)
    phif = phi_fixed_planes(pl, cls)
    muf = mu_fixed_planes(pl, cls)
    print(f"q = {c.q}: {len(phif)} collineation-fixed subplanes "
          f"({' '.join(format_point(x.rep) for x in phif)}), "
          f"{len(muf)} involution-fixed")
