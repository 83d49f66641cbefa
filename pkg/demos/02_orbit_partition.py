"""The stabilizer orbit partition of PG(2, q^3) and its seven categories.

The stabilizer of the frame triangle (fixing the invariant subplane and
the axis setwise) has q^2+q+1 elements; its point orbits partition the
plane into three fixed vertices, scattered linear sets on the triangle
sides, and subplanes of order q, with four point/line type profiles.
"""

from figplane import ProjectivePlane, build_field_tower, census_of, partition_orbits
from figplane.collineation import CATEGORIES, TYPE_NAMES

for p, k in ((3, 1), (2, 2)):
    ctx = build_field_tower(p, k)
    plane = ProjectivePlane(ctx)
    classes = partition_orbits(plane)
    cen = census_of(plane, classes)
    q = ctx.q
    print(f"q = {q}: {plane.size} points, {cen.total_orbits} orbit classes")
    print(f"  {'category':<16}{'classes':>8}{'closed form':>14}")
    for cat in CATEGORIES:
        print(f"  {cat:<16}{cen.orbit_counts[cat]:>8}{cen.expected()[cat]:>14}")
    sls = next(cl for cl in classes if cl.category == "sls_III")
    print(f"  a scattered linear set class: side {sls.side}, "
          f"norm class {sls.norm_class}, {len(sls.members)} points, "
          f"all Type {TYPE_NAMES[sls.point_type]}")
    print()
