"""Figueroa blocks, assembly of the Figueroa plane, and its structure checks.

For a Type III point A with involution image line m, the block of A is

    E(A)  the q^2+q+1 Type II points of m,   union
    F(A)  the involution images of the Type III lines through A,

a set of q^3+1 points.  The Figueroa plane FIG(q^3) keeps every Type I
and Type II line of PG(2,q^3) and replaces each Type III line m by the
block anchored at the involution image of m.  ``check_axioms`` verifies
the projective plane axioms of the resulting incidence structure, either
exactly (one integer matrix product per axiom family) or on sampled
pairs for larger orders.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .field import FieldContext
from .plane import (ANCHOR, ANCHOR_1, ANCHOR_2, AXIS, GeometryError,
                    ProjectivePlane, Triple, format_line, format_point,
                    lines_through_point, points_on_line)
from .collineation import (TYPE_I, TYPE_II, TYPE_III, collineate_point,
                           line_type, point_type)
from .linear_sets import sls_points, t_plane
from .maps import (TypeRestrictionError, conjugate_join, conjugate_meet,
                   project_from_anchor, splash)


@dataclass(frozen=True)
class FigBlock:
    anchor: Triple
    line: Triple                     # involution image of the anchor
    e_points: frozenset[Triple]      # Type II points on that line
    f_points: frozenset[Triple]      # involution images of Type III lines through the anchor

    @property
    def points(self) -> frozenset[Triple]:
        return self.e_points | self.f_points


def fig_block(ctx: FieldContext, anchor: Triple) -> FigBlock:
    """Construct the block of a Type III anchor point."""
    if point_type(ctx, anchor) != TYPE_III:
        raise TypeRestrictionError(f"anchor {anchor} is not Type III")
    m = conjugate_join(ctx, anchor)
    e_pts = frozenset(P for P in points_on_line(ctx, m)
                      if point_type(ctx, P) == TYPE_II)
    f_pts = frozenset(conjugate_meet(ctx, l)
                      for l in lines_through_point(ctx, anchor)
                      if line_type(ctx, l) == TYPE_III)
    block = FigBlock(anchor, m, e_pts, f_pts)
    q = ctx.q
    assert len(e_pts) == ctx.sub_order
    assert len(block.points) == q ** 3 + 1
    return block


@dataclass
class IncidencePlane:
    """Point/block incidence structure over dense point indices."""
    plane: ProjectivePlane
    blocks: list[tuple[int, ...]]
    tags: list[str]                  # per block: line_I | line_II | fig

    @property
    def size(self) -> int:
        return self.plane.size


def pg_incidence(plane: ProjectivePlane) -> IncidencePlane:
    """PG(2,q^3) itself, as a reference incidence structure."""
    ctx = plane.ctx
    blocks, tags = [], []
    for l in plane.lines:
        blocks.append(tuple(sorted(plane.points_on(l))))
        tags.append("line_I" if line_type(ctx, l) == TYPE_I
                    else "line_II" if line_type(ctx, l) == TYPE_II else "line_III")
    return IncidencePlane(plane, blocks, tags)


def build_fig_plane(plane: ProjectivePlane) -> IncidencePlane:
    """Assemble FIG(q^3); blocks are indexed by the line they replace."""
    ctx = plane.ctx
    if not ctx.figueroa_ok:
        raise GeometryError(
            f"q = {ctx.q}: the Figueroa construction needs a prime power q > 2")
    idx = plane.point_index
    ptypes = [point_type(ctx, P) for P in plane.points]
    ltypes = [line_type(ctx, l) for l in plane.lines]
    # the involution pairs each Type III line with its anchor point;
    # precomputing it once covers both directions of the block build
    mu_of_line = {l: conjugate_meet(ctx, l)
                  for l, t in zip(plane.lines, ltypes) if t == TYPE_III}
    blocks: list[tuple[int, ...]] = []
    tags: list[str] = []
    for l, t in zip(plane.lines, ltypes):
        members = plane.points_on(l)
        if t == TYPE_I:
            blocks.append(tuple(sorted(members)))
            tags.append("line_I")
        elif t == TYPE_II:
            blocks.append(tuple(sorted(members)))
            tags.append("line_II")
        else:
            anchor = mu_of_line[l]
            e_idx = [i for i in members if ptypes[i] == TYPE_II]
            f_idx = [idx[mu_of_line[m]]
                     for m in lines_through_point(ctx, anchor)
                     if m in mu_of_line]
            block = tuple(sorted(e_idx + f_idx))
            assert len(block) == ctx.q ** 3 + 1
            blocks.append(block)
            tags.append("fig")
    return IncidencePlane(plane, blocks, tags)


@dataclass
class AxiomReport:
    ok: bool
    mode: str                        # "full" | "sampled"
    block_size_ok: bool
    point_degree_ok: bool
    point_pairs_ok: bool
    block_pairs_ok: bool
    checked_pairs: int
    witnesses: list[str] = field(default_factory=list)


def check_axioms(structure: IncidencePlane, sample_pairs: int | None = None,
                 seed: int = 0, max_witnesses: int = 5) -> AxiomReport:
    """Verify the projective plane axioms of an incidence structure.

    Full mode builds the 0/1 incidence matrix B and checks that both
    Gram products B B^T and B^T B are (k-1) I + J with k = q^3 + 1: off
    diagonal entries count the blocks through a point pair and the
    common points of a block pair, so the structure is a projective
    plane exactly when every off-diagonal entry is 1.  Entries stay
    below 2**24, so float32 BLAS products are exact.

    Sampled mode draws uniformly random point pairs and block pairs and
    checks each via set intersections.
    """
    n = structure.size
    k = len(structure.blocks[0]) if structure.blocks else 0
    witnesses: list[str] = []
    block_size_ok = all(len(b) == k for b in structure.blocks) and \
        len(structure.blocks) == n and k == structure.plane.ctx.q ** 3 + 1
    points = structure.plane.points

    if sample_pairs is None:
        B = np.zeros((n, n), dtype=np.float32)
        rows = np.repeat(np.arange(n), [len(b) for b in structure.blocks])
        cols = np.concatenate([np.asarray(b, dtype=np.int64)
                               for b in structure.blocks])
        B[rows, cols] = 1.0
        off = ~np.eye(n, dtype=bool)

        gram_pts = B.T @ B
        point_degree_ok = bool(np.all(gram_pts.diagonal() == k))
        bad = np.argwhere((gram_pts != 1.0) & off)
        point_pairs_ok = bad.size == 0
        for i, j in bad[:max_witnesses]:
            cnt = int(gram_pts[i, j])
            witnesses.append(
                f"point pair {format_point(points[i])} , {format_point(points[j])}"
                f" lies in {cnt} blocks")
        del gram_pts

        gram_blocks = B @ B.T
        bad = np.argwhere((gram_blocks != 1.0) & off)
        block_pairs_ok = bad.size == 0
        for i, j in bad[:max(0, max_witnesses - len(witnesses))]:
            cnt = int(gram_blocks[i, j])
            witnesses.append(f"blocks {i} and {j} share {cnt} points")
        del gram_blocks, B
        checked = n * (n - 1)  # ordered point pairs plus block pairs, via Gram
        mode = "full"
    else:
        rng = random.Random(seed)
        blocks_of: list[set[int]] = [set() for _ in range(n)]
        for bi, b in enumerate(structure.blocks):
            for i in b:
                blocks_of[i].add(bi)
        point_degree_ok = all(len(s) == k for s in blocks_of)
        members = [set(b) for b in structure.blocks]
        point_pairs_ok = block_pairs_ok = True
        for _ in range(sample_pairs):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            common = len(blocks_of[i] & blocks_of[j])
            if common != 1:
                point_pairs_ok = False
                if len(witnesses) < max_witnesses:
                    witnesses.append(
                        f"point pair {format_point(points[i])} , "
                        f"{format_point(points[j])} lies in {common} blocks")
            bi, bj = rng.randrange(n), rng.randrange(n)
            if bi == bj:
                continue
            common = len(members[bi] & members[bj])
            if common != 1:
                block_pairs_ok = False
                if len(witnesses) < max_witnesses:
                    witnesses.append(f"blocks {bi} and {bj} share {common} points")
        checked = 2 * sample_pairs
        mode = "sampled"

    ok = block_size_ok and point_degree_ok and point_pairs_ok and block_pairs_ok
    return AxiomReport(ok, mode, block_size_ok, point_degree_ok,
                       point_pairs_ok, block_pairs_ok, checked, witnesses)


def pr_fig_block(ctx: FieldContext, which: int = 0) -> frozenset[Triple]:
    """Projection from the anchor of the block at the anchor's conjugate
    ``which`` (0, 1 or 2); the anchor itself, a member of the conjugate
    blocks, is skipped since projection is undefined there."""
    block = fig_block(ctx, collineate_point(ctx, ANCHOR, which))
    return frozenset(project_from_anchor(ctx, P)
                     for P in block.points if P != ANCHOR)


def expected_pr_fig_block(ctx: FieldContext, which: int = 0) -> frozenset[Triple]:
    """Closed form for the projection of a block from the anchor.

    For the anchor's own block: the whole axis when q is even; for odd q
    the two axis vertices, the norm minus-one linear set, and the linear
    sets whose norm class is a nonzero square.  For the conjugate blocks
    the image is the axis minus the norm-one linear set and minus the
    co-vertex that is the conjugate's own projection shadow.
    """
    axis_pts = frozenset(points_on_line(ctx, AXIS))
    if which == 0:
        if ctx.q % 2 == 0:
            return axis_pts
        img = {ANCHOR_1, ANCHOR_2}
        img.update(sls_points(ctx, ctx.neg_one))
        for c in ctx.base_squares():
            img.update(sls_points(ctx, c))
        return frozenset(img)
    s1 = sls_points(ctx, ctx.one)
    gone = {ANCHOR_1} if which == 1 else {ANCHOR_2}
    return axis_pts - s1 - gone


@dataclass
class ArchingCensus:
    """For each pencil (by norm class), how many of the q-1 subplanes it
    arches over, i.e. meets once on every pencil line."""
    per_class: dict[int, int]

    def sorted_counts(self) -> tuple[int, ...]:
        return tuple(sorted(self.per_class.values(), reverse=True))


def arching_census(ctx: FieldContext) -> ArchingCensus:
    from .plane import incident
    from .linear_sets import pencil_lines
    q = ctx.q
    planes = [t_plane(ctx, ctx.norm_class_rep(j)).points for j in range(q - 1)]
    per_class: dict[int, int] = {}
    for j in range(q - 1):
        pencil = pencil_lines(ctx, ctx.norm_class_rep(j))
        arched = 0
        for pts in planes:
            if all(sum(1 for P in pts if incident(ctx, P, l)) == 1 for l in pencil):
                arched += 1
        per_class[j] = arched
    return ArchingCensus(per_class)


@dataclass
class CharacterizationReport:
    ok: bool
    vertex_count: int                # including the anchor
    expected_count: int
    mismatches: list[str]


def characterize_fig_points(plane: ProjectivePlane,
                            jobs: int = 1) -> CharacterizationReport:
    """Exhaustive equivalence scan: a point off the axis and distinct from
    the anchor projects the fixed subplane onto a side linear set exactly
    when it belongs to the anchor's block."""
    from .linear_sets import fixed_subplane
    from .maps import vertex_census
    ctx = plane.ctx
    q = ctx.q
    B = fixed_subplane(ctx)
    vc = vertex_census(plane, B, jobs=jobs)
    vertices = set()
    for vs in vc.by_class.values():
        vertices.update(vs)
    block = fig_block(ctx, ANCHOR)
    off_axis_members = {P for P in block.points if P[2] != 0}
    mismatches = []
    for P in sorted(vertices - {ANCHOR} - off_axis_members)[:5]:
        mismatches.append(f"{format_point(P)} projects to a side set but is no block member")
    for P in sorted(off_axis_members - vertices)[:5]:
        mismatches.append(f"block member {format_point(P)} fails to project to a side set")
    count = len(vertices)
    expected = q ** 3 - q ** 2 - q - 1
    ok = not mismatches and ANCHOR in vertices and count == expected
    return CharacterizationReport(ok, count, expected, mismatches)


@dataclass
class EvenStructureReport:
    ok: bool
    per_vertex_ok: tuple[bool, bool, bool]
    witnesses: list[str]


def even_structure_check(ctx: FieldContext,
                         block: FigBlock | None = None) -> EvenStructureReport:
    """Even q only: through each triangle vertex, every line carries
    exactly one point of the conjugate block's Type III part or exactly
    one point of its Type II part, never both.

    The sets tested at the conjugate vertices are the conjugates of the
    anchor block's parts, matching the collineation equivariance of the
    construction.
    """
    if ctx.q % 2:
        raise GeometryError("even-order structure check requires q even")
    if block is None:
        block = fig_block(ctx, ANCHOR)
    witnesses: list[str] = []
    vertex_ok = []
    for i, V in enumerate((ANCHOR, ANCHOR_1, ANCHOR_2)):
        e_set = {collineate_point(ctx, P, i) for P in block.e_points}
        f_set = {collineate_point(ctx, P, i) for P in block.f_points}
        good = True
        for l in lines_through_point(ctx, V):
            pts = points_on_line(ctx, l)
            nf = sum(1 for P in pts if P in f_set)
            ne = sum(1 for P in pts if P in e_set)
            if (nf, ne) not in ((1, 0), (0, 1)):
                good = False
                if len(witnesses) < 5:
                    witnesses.append(
                        f"vertex {format_point(V)}: line {format_line(l)} carries"
                        f" {nf} Type III and {ne} Type II block points")
        vertex_ok.append(good)
    return EvenStructureReport(all(vertex_ok), tuple(vertex_ok), witnesses)


@dataclass
class SplashInvolutionReport:
    ok: bool
    injective: bool
    image_matches: bool
    image_all_type3_iff_even: bool
    image_size: int


def splash_involution_check(ctx: FieldContext) -> SplashInvolutionReport:
    """Compose splash after the involution over the Type III part of the
    anchor block: the result must biject onto the axis minus the norm-one
    linear set, and hit exactly the Type III axis points iff q is even."""
    block = fig_block(ctx, ANCHOR)
    images = [splash(ctx, conjugate_join(ctx, P)) for P in sorted(block.f_points)]
    injective = len(set(images)) == len(images)
    expected = frozenset(points_on_line(ctx, AXIS)) - sls_points(ctx, ctx.one)
    image = frozenset(images)
    image_matches = image == expected
    type3_axis = frozenset(P for P in points_on_line(ctx, AXIS)
                           if point_type(ctx, P) == TYPE_III)
    iff_even = (image == type3_axis) == (ctx.q % 2 == 0)
    return SplashInvolutionReport(injective and image_matches and iff_even,
                                  injective, image_matches, iff_even, len(image))


def emit_plane(structure: IncidencePlane, path: str) -> None:
    """Write the incidence structure: header ``FIG <q^3> <npoints>``, then
    one block per line as space-separated point indices."""
    q3 = structure.plane.ctx.q ** 3
    with open(path, "w") as fh:
        fh.write(f"FIG {q3} {structure.size}\n")
        for b in structure.blocks:
            fh.write(" ".join(map(str, b)) + "\n")
