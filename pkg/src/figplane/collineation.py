"""The order-3 collineation, the triangle stabilizer and its orbit census.

The collineation acts as

    point (x,y,z) |-> (z^q, x^q, y^q)        line [d,e,f] |-> [f^q, d^q, e^q]

and fixes pointwise exactly one subplane of order q.  A point is Type I,
II or III when its orbit under the collineation is a single point, three
collinear points or a triangle; dually for lines.  Both are read off as
the rank (1, 2 or 3) of a 3x3 matrix built from the object and its two
conjugates.

The triangle stabilizer is the group of q^2+q+1 projectivities
(x,y,z) |-> (t x, t^q y, t^q^2 z) fixing the frame triangle vertexwise;
its point orbits partition PG(2,q^3) into seven kinds of classes, and
``partition_orbits`` plus ``census_of`` compute and count them all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldContext, FieldError
from .plane import (ANCHOR, ANCHOR_1, ANCHOR_2, ProjectivePlane, Triple,
                    canonical)

TYPE_I, TYPE_II, TYPE_III = 1, 2, 3

TYPE_NAMES = {TYPE_I: "I", TYPE_II: "II", TYPE_III: "III"}

# The seven orbit categories, in fixed report order.
CATEGORIES = ("vertex", "sls_II", "sls_III", "plane_I_I",
              "plane_II_III", "plane_III_II", "plane_III_III")


def collineate_point(ctx: FieldContext, P: Triple, times: int = 1) -> Triple:
    f = ctx.frob
    for _ in range(times % 3):
        P = canonical(ctx, (f(P[2]), f(P[0]), f(P[1])))
    return P


def collineate_line(ctx: FieldContext, l: Triple, times: int = 1) -> Triple:
    f = ctx.frob
    for _ in range(times % 3):
        l = canonical(ctx, (f(l[2]), f(l[0]), f(l[1])))
    return l


def point_orbit_matrix(ctx: FieldContext, P: Triple):
    """Rows: P and its two conjugates, written out coordinate by coordinate."""
    x, y, z = P
    f1, f2 = ctx.frob, lambda a: ctx.frob(a, 2)
    return ((x, y, z),
            (f1(z), f1(x), f1(y)),
            (f2(y), f2(z), f2(x)))


def line_orbit_matrix(ctx: FieldContext, l: Triple):
    d, e, f = l
    f1, f2 = ctx.frob, lambda a: ctx.frob(a, 2)
    return ((d, f1(f), f2(e)),
            (e, f1(d), f2(f)),
            (f, f1(e), f2(d)))


def det3(ctx: FieldContext, M) -> int:
    mul, sub, add = ctx.mul, ctx.sub, ctx.add
    (a, b, c), (d, e, f), (g, h, i) = M
    t1 = mul(a, sub(mul(e, i), mul(f, h)))
    t2 = mul(b, sub(mul(d, i), mul(f, g)))
    t3 = mul(c, sub(mul(d, h), mul(e, g)))
    return add(sub(t1, t2), t3)


def rank3(ctx: FieldContext, M) -> int:
    """Rank over GF(q^3) by Gaussian elimination; exact field arithmetic."""
    rows = [list(r) for r in M]
    rank = 0
    for col in range(3):
        pivot = next((r for r in range(rank, 3) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ctx.inv(rows[rank][col])
        for r in range(rank + 1, 3):
            if rows[r][col] == 0:
                continue
            factor = ctx.mul(rows[r][col], inv)
            for c in range(col, 3):
                rows[r][c] = ctx.sub(rows[r][c], ctx.mul(factor, rows[rank][c]))
        rank += 1
    return rank


def point_type(ctx: FieldContext, P: Triple) -> int:
    return rank3(ctx, point_orbit_matrix(ctx, P))


def line_type(ctx: FieldContext, l: Triple) -> int:
    return rank3(ctx, line_orbit_matrix(ctx, l))


def apply_stabilizer(ctx: FieldContext, t: int, P: Triple) -> Triple:
    """The projectivity (x,y,z) |-> (t x, t^q y, t^q^2 z); t nonzero."""
    if t == 0:
        raise FieldError("stabilizer parameter must be nonzero")
    x, y, z = P
    return canonical(ctx, (ctx.mul(t, x),
                           ctx.mul(ctx.frob(t), y),
                           ctx.mul(ctx.frob(t, 2), z)))


def stabilizer_orbit(ctx: FieldContext, P: Triple) -> frozenset[Triple]:
    """Orbit of P under the stabilizer.

    Parameters t and lambda*t (lambda in GF(q)*) induce the same
    projectivity, so t runs over the q^2+q+1 coset representatives
    g^i, i = 0 .. q^2+q.
    """
    n = ctx.n
    x, y, z = P
    out = set()
    q, q2 = ctx.q, ctx.q * ctx.q
    for i in range(ctx.sub_order):
        nx = (x - 1 + i) % n + 1 if x else 0
        ny = (y - 1 + i * q) % n + 1 if y else 0
        nz = (z - 1 + i * q2) % n + 1 if z else 0
        out.add(canonical(ctx, (nx, ny, nz)))
    return frozenset(out)


def norm_det_identity(ctx: FieldContext, P: Triple) -> bool:
    """Check the norm/determinant relation tying a point off the triangle
    sides to the secant line of its stabilizer orbit.

    For P = (x,y,z) with xyz != 0, l = [yz, zx, xy], and
    X = x^(1+q) - y z^q (cyclically Y, Z), each of
    norm(X) - norm(x) det(M_P) equals -det(M_l).
    """
    x, y, z = P
    if x == 0 or y == 0 or z == 0:
        raise FieldError("identity requires all three coordinates nonzero")
    mul, sub, f = ctx.mul, ctx.sub, ctx.frob
    X = sub(mul(x, f(x)), mul(y, f(z)))
    Y = sub(mul(y, f(y)), mul(z, f(x)))
    Z = sub(mul(z, f(z)), mul(x, f(y)))
    dP = det3(ctx, point_orbit_matrix(ctx, P))
    line = (mul(y, z), mul(z, x), mul(x, y))
    target = ctx.neg(det3(ctx, line_orbit_matrix(ctx, line)))
    return all(sub(ctx.norm(w), mul(ctx.norm(c), dP)) == target
               for w, c in ((X, x), (Y, y), (Z, z)))


@dataclass(frozen=True)
class OrbitClass:
    rep: Triple                    # member of minimal enumeration index
    members: tuple[int, ...]       # sorted point indices
    category: str                  # one of CATEGORIES
    point_type: int
    line_type: int | None          # secant-line type, planes only
    side: int | None               # 0/1/2: triangle side, vertices and slses
    norm_class: int | None         # slses only


@dataclass
class Census:
    q: int
    orbit_counts: dict[str, int]
    point_counts: dict[str, int]

    def expected(self) -> dict[str, int]:
        q = self.q
        return {
            "vertex": 3,
            "sls_II": 3,
            "sls_III": 3 * (q - 2),
            "plane_I_I": 1,
            "plane_II_III": q ** 3 - q - 3,
            "plane_III_II": q ** 3 - q - 3,
            "plane_III_III": q ** 4 - 3 * q ** 3 + q + 6,
        }

    def matches_expected(self) -> bool:
        return self.orbit_counts == self.expected()

    @property
    def total_orbits(self) -> int:
        return sum(self.orbit_counts.values())

    @property
    def total_points(self) -> int:
        return sum(self.point_counts.values())


class OrbitInconsistency(RuntimeError):
    """An orbit class whose members disagree on type; indicates a bug."""


def _side_of(P: Triple) -> int | None:
    """Which triangle side a point lies on, by its zero coordinate.

    Side 0 is the axis (opposite ANCHOR, z = 0), side 1 is x = 0
    (opposite ANCHOR_1), side 2 is y = 0 (opposite ANCHOR_2).
    """
    zeros = [i for i in range(3) if P[i] == 0]
    if len(zeros) != 1:
        return None
    return {2: 0, 0: 1, 1: 2}[zeros[0]]


def point_types_table(plane: ProjectivePlane) -> list[int]:
    ctx = plane.ctx
    return [point_type(ctx, P) for P in plane.points]


def line_types_table(plane: ProjectivePlane) -> list[int]:
    ctx = plane.ctx
    return [line_type(ctx, l) for l in plane.lines]


def partition_orbits(plane: ProjectivePlane,
                     types: list[int] | None = None) -> list[OrbitClass]:
    """Partition all points into stabilizer orbits, classified and counted.

    Orbits are discovered by scanning points in index order; each class
    representative is its minimal-index member, so output is deterministic.
    """
    ctx = plane.ctx
    if types is None:
        types = point_types_table(plane)
    idx = plane.point_index
    visited = bytearray(plane.size)
    classes: list[OrbitClass] = []
    for i, P in enumerate(plane.points):
        if visited[i]:
            continue
        orbit = stabilizer_orbit(ctx, P)
        members = sorted(idx[Q] for Q in orbit)
        for j in members:
            visited[j] = 1
        ptypes = {types[j] for j in members}
        if len(ptypes) != 1:
            raise OrbitInconsistency(
                f"orbit of {P} mixes point types {sorted(ptypes)}")
        ptype = ptypes.pop()
        if len(members) == 1:
            if P not in (ANCHOR, ANCHOR_1, ANCHOR_2):
                raise OrbitInconsistency(f"unexpected singleton orbit at {P}")
            side = (ANCHOR, ANCHOR_1, ANCHOR_2).index(P)
            classes.append(OrbitClass(P, tuple(members), "vertex",
                                      ptype, None, side, None))
            continue
        if len(members) != ctx.sub_order:
            raise OrbitInconsistency(
                f"orbit of {P} has size {len(members)}, not {ctx.sub_order}")
        side = _side_of(P)
        if side is not None:
            category = "sls_II" if ptype == TYPE_II else "sls_III"
            nz = _sls_norm_class(ctx, P, side)
            classes.append(OrbitClass(P, tuple(members), category,
                                      ptype, None, side, nz))
            continue
        secant = canonical(ctx, (ctx.mul(P[1], P[2]),
                                 ctx.mul(P[2], P[0]),
                                 ctx.mul(P[0], P[1])))
        ltype = line_type(ctx, secant)
        category = {(TYPE_I, TYPE_I): "plane_I_I",
                    (TYPE_II, TYPE_III): "plane_II_III",
                    (TYPE_III, TYPE_II): "plane_III_II",
                    (TYPE_III, TYPE_III): "plane_III_III"}.get((ptype, ltype))
        if category is None:
            raise OrbitInconsistency(
                f"plane orbit of {P} has point type {ptype}, line type {ltype}")
        classes.append(OrbitClass(P, tuple(members), category,
                                  ptype, ltype, None, None))
    return classes


def _sls_norm_class(ctx: FieldContext, P: Triple, side: int) -> int:
    """Norm class identifying the scattered linear set through P."""
    Q = collineate_point(ctx, P, (3 - side) % 3)   # move to the axis
    a, b, _ = Q
    return ctx.norm_class(ctx.div(a, b))


def census_of(plane: ProjectivePlane,
              classes: list[OrbitClass] | None = None) -> Census:
    if classes is None:
        classes = partition_orbits(plane)
    orbit_counts = {c: 0 for c in CATEGORIES}
    point_counts = {c: 0 for c in CATEGORIES}
    for cl in classes:
        orbit_counts[cl.category] += 1
        point_counts[cl.category] += len(cl.members)
    return Census(plane.ctx.q, orbit_counts, point_counts)


def type_counts(plane: ProjectivePlane,
                point_types: list[int] | None = None,
                line_types: list[int] | None = None):
    """Point and line tallies per type, computed by direct classification."""
    if point_types is None:
        point_types = point_types_table(plane)
    if line_types is None:
        line_types = line_types_table(plane)
    pts = {t: 0 for t in (TYPE_I, TYPE_II, TYPE_III)}
    lns = {t: 0 for t in (TYPE_I, TYPE_II, TYPE_III)}
    for t in point_types:
        pts[t] += 1
    for t in line_types:
        lns[t] += 1
    return pts, lns


def expected_type_counts(q: int) -> dict[int, int]:
    s = q * q + q + 1
    type2 = (q ** 3 - q) * s
    return {TYPE_I: s, TYPE_II: type2, TYPE_III: q ** 6 + q ** 3 + 1 - s - type2}
