"""Distinguished stabilizer orbits in closed form.

Three families, all parametrized by a nonzero field element theta whose
norm alone decides the object:

* scattered linear sets on the triangle sides, ``sls_points``: on the
  axis these are the norm fibers {(x theta, x^q, 0)}, one per norm class,
  of q^2+q+1 points each;
* the pencils joining the anchor to such a set, ``pencil_lines``;
* the subplanes of order q ("theta-planes") {(r theta^(q+1), r^q, r^q^2 theta)},
  ``t_plane``, with the q = norm-1 member being the pointwise fixed subplane.

Sides are numbered as in :mod:`figplane.plane`: 0 is the axis, 1 and 2
its images under the collineation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldContext, FieldError
from .plane import ANCHOR, Triple, canonical, join
from .collineation import collineate_line, collineate_point, line_type


@dataclass(frozen=True)
class SlsId:
    """A scattered linear set on a triangle side, keyed by norm class."""
    side: int
    norm_class: int


@dataclass(frozen=True)
class SubplaneSet:
    points: frozenset[Triple]
    lines: frozenset[Triple]
    tag: str


def sls_points(ctx: FieldContext, theta: int, side: int = 0) -> frozenset[Triple]:
    """The scattered linear set {(x theta, x^q, 0)}, pushed to ``side``."""
    if theta == 0:
        raise FieldError("theta must be nonzero")
    pts = {canonical(ctx, (ctx.mul(x, theta), ctx.frob(x), 0))
           for x in ctx.units()}
    if side:
        pts = {collineate_point(ctx, P, side) for P in pts}
    out = frozenset(pts)
    assert len(out) == ctx.sub_order
    return out


def sls_id_of_point(ctx: FieldContext, P: Triple) -> SlsId:
    """Identify the side and norm class of a point on a triangle side."""
    zeros = [i for i in range(3) if P[i] == 0]
    if len(zeros) != 1:
        raise FieldError(f"{P} is not on exactly one triangle side")
    side = {2: 0, 0: 1, 1: 2}[zeros[0]]
    Q = collineate_point(ctx, P, (3 - side) % 3)
    return SlsId(side, ctx.norm_class(ctx.div(Q[0], Q[1])))


def sls_for_id(ctx: FieldContext, ident: SlsId) -> frozenset[Triple]:
    return sls_points(ctx, ctx.norm_class_rep(ident.norm_class), ident.side)


def pencil_lines(ctx: FieldContext, theta: int) -> frozenset[Triple]:
    """Lines joining the anchor to the axis linear set of theta."""
    return frozenset(join(ctx, ANCHOR, P) for P in sls_points(ctx, theta))


def pencil_type(ctx: FieldContext, theta: int) -> int:
    """Common type of the pencil lines, verified to be uniform."""
    kinds = {line_type(ctx, l) for l in pencil_lines(ctx, theta)}
    assert len(kinds) == 1, f"pencil of {theta} mixes line types {kinds}"
    return kinds.pop()


def t_plane(ctx: FieldContext, theta: int) -> SubplaneSet:
    """The orbit subplane of theta, with its q^2+q+1 secant lines."""
    if theta == 0:
        raise FieldError("theta must be nonzero")
    f = ctx.frob
    tq1 = ctx.mul(theta, f(theta))           # theta^(q+1)
    pts = {canonical(ctx, (ctx.mul(r, tq1), f(r), ctx.mul(f(r, 2), theta)))
           for r in ctx.units()}
    lns = {canonical(ctx, (s, ctx.mul(f(s), tq1), ctx.mul(f(s, 2), f(theta))))
           for s in ctx.units()}
    sub = ctx.sub_order
    assert len(pts) == sub and len(lns) == sub
    return SubplaneSet(frozenset(pts), frozenset(lns), f"t_plane[{theta}]")


def fixed_subplane(ctx: FieldContext) -> SubplaneSet:
    """The subplane of order q fixed pointwise by the collineation."""
    B = t_plane(ctx, ctx.one)
    return SubplaneSet(B.points, B.lines, "fixed_subplane")


def plane_from_rep(ctx: FieldContext, P: Triple) -> SubplaneSet:
    """Stabilizer orbit of a point off the triangle sides, plus its secants.

    Points are (t x, t^q y, t^q^2 z) and lines [yz s, xz s^q, xy s^q^2];
    the line set does not depend on the chosen representative.
    """
    x, y, z = P
    if x == 0 or y == 0 or z == 0:
        raise FieldError(f"{P} lies on a triangle side")
    f2 = lambda a: ctx.frob(a, 2)
    pts = {canonical(ctx, (ctx.mul(t, x), ctx.mul(ctx.frob(t), y), ctx.mul(f2(t), z)))
           for t in ctx.units()}
    yz, xz, xy = ctx.mul(y, z), ctx.mul(x, z), ctx.mul(x, y)
    lns = {canonical(ctx, (ctx.mul(yz, s), ctx.mul(xz, ctx.frob(s)), ctx.mul(xy, f2(s))))
           for s in ctx.units()}
    sub = ctx.sub_order
    assert len(pts) == sub and len(lns) == sub
    return SubplaneSet(frozenset(pts), frozenset(lns), "orbit_plane")


def conjugate_subplane(ctx: FieldContext, B: SubplaneSet, times: int = 1) -> SubplaneSet:
    return SubplaneSet(frozenset(collineate_point(ctx, P, times) for P in B.points),
                       frozenset(collineate_line(ctx, l, times) for l in B.lines),
                       B.tag + f"^phi{times % 3}")


def is_subplane_closed(ctx: FieldContext, B: SubplaneSet) -> bool:
    """Closure as a subplane of order q: member point pairs join inside the
    member lines, and each member line carries exactly q + 1 member points."""
    from .plane import incident
    pts = list(B.points)
    for i, P in enumerate(pts):
        for Q in pts[i + 1:]:
            if join(ctx, P, Q) not in B.lines:
                return False
    for l in B.lines:
        if sum(1 for P in B.points if incident(ctx, P, l)) != ctx.q + 1:
            return False
    return True
