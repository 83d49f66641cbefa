"""Exhaustive finite-geometry computations in PG(2, q^3).

The package builds the field tower GF(p) < GF(q) < GF(q^3), the plane
PG(2, q^3), an order-3 planar collineation and the stabilizer of its
distinguished triangle, partitions the plane into stabilizer orbits,
constructs the scattered linear sets and subplanes that arise, and
assembles and verifies the Figueroa plane FIG(q^3).
"""

from .field import FieldContext, FieldError, build_field_tower, context_for_q
from .plane import (ANCHOR, ANCHOR_1, ANCHOR_2, AXIS, GeometryError,
                    ProjectivePlane, canonical, format_line, format_point,
                    incident, join, meet, parse_triple)
from .collineation import (TYPE_I, TYPE_II, TYPE_III, Census, OrbitClass,
                           apply_stabilizer, census_of, collineate_line,
                           collineate_point, line_type, norm_det_identity,
                           partition_orbits, point_type, stabilizer_orbit)
from .linear_sets import (SlsId, SubplaneSet, fixed_subplane, pencil_lines,
                          pencil_type, plane_from_rep, sls_points, t_plane)
from .maps import (LinearSetImage, TypeRestrictionError, conjugate_join,
                   conjugate_meet, mu_fixed_planes, phi_fixed_planes, pr_set,
                   project_from_anchor, project_from_vertex,
                   projection_vertices, sp_set, splash, vertex_census)
from .figueroa import (FigBlock, IncidencePlane, arching_census,
                       build_fig_plane, characterize_fig_points, check_axioms,
                       even_structure_check, fig_block, pg_incidence,
                       pr_fig_block, splash_involution_check)

__version__ = "0.1.0"
