"""The layered solid tori ``T_m``, their meridian discs and quad surfaces.

``T_m`` stacks tetrahedra ``D_1 .. D_m`` (indices ``0 .. m-1``). For
``j >= 2`` the face ``D_j(012)`` is glued to ``D_{j-1}(013)`` by ``0 1 2 ->
1 0 3``, and a second face is glued by the identity: ``(123)`` for even
``j`` and ``(023)`` for odd ``j``. This keeps every interior edge at
degree four and leaves ``D_1(012)``, ``D_1(023)`` on the boundary.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Tuple

from topology_engine.errors import InvalidParameter, TopologyEngineError
from topology_engine.families.marked import FramedTorusBoundary, MarkedSolidTorus
from topology_engine.normal.analysis import boundary_curves
from topology_engine.normal.coordinates import NormalSurfaceVector, quad_sides, quad_type
from topology_engine.triangulation.perm import IDENTITY, Perm4
from topology_engine.triangulation.skeleton import face_vertices, skeleton
from topology_engine.triangulation.triangulation import TriangulationBuilder

logger = logging.getLogger(__name__)

LAYER_PERM = Perm4((1, 0, 3, 2))


def second_face(j: int) -> int:
    """The identity-glued face of ``D_j`` (1-based ``j >= 2``)."""
    return 0 if j % 2 == 0 else 1


def tm_boundary_faces(m: int) -> Tuple[Tuple[int, int], ...]:
    last = (m - 1, 2), (m - 1, second_face(m + 1))
    if m == 1:
        return ((0, 3), (0, 1), (0, 2), (0, 0))
    return ((0, 3), (0, 1)) + last


def solid_torus_tm(m: int) -> MarkedSolidTorus:
    """Builds ``T_m``.

    Raises:
        InvalidParameter: ``m < 1``.
    """
    if m < 1:
        raise InvalidParameter(f"T_m needs m >= 1, got {m}")
    builder = TriangulationBuilder(m)
    for j in range(2, m + 1):
        builder.join(j - 1, 3, j - 2, LAYER_PERM)
        builder.join(j - 1, second_face(j), j - 2, IDENTITY)
    t = builder.build()
    sk = skeleton(t)
    identified = (((0, 0, 3), (0, 1, 2)),) if m == 1 else ()
    faces = tm_boundary_faces(m)
    boundary_edges = sk.boundary[0].edges if sk.boundary else ()
    return MarkedSolidTorus(
        triangulation=t,
        m=m,
        longitude=sk.edge_class_of(0, 0, 1),
        boundary_edges=tuple(boundary_edges),
        boundary_faces=faces,
        identified_edges=identified,
    )


def _arcs(coords: List[int], tet: int, face: int, corner: int) -> int:
    return coords[7 * tet + corner] + coords[7 * tet + 4 + quad_type(corner, face)]


def meridian_disc(st: MarkedSolidTorus) -> NormalSurfaceVector:
    """Traces the meridian disc up the layers, starting from one quad ``q03/12`` in ``D_1``.

    Each new layer receives the arcs already present on its two glued faces
    and is filled with the fewest pieces that match them.
    """
    t = st.triangulation
    coords = [0] * (7 * t.tet_count)
    coords[4 + 2] = 1
    for j in range(2, st.m + 1):
        tet = j - 1
        fa, fb = 3, second_face(j)
        x, y = sorted(set(face_vertices(fa)) & set(face_vertices(fb)))
        z, w = fb, fa
        arcs_a, arcs_b = {}, {}
        for face, store in ((fa, arcs_a), (fb, arcs_b)):
            partner, sigma = t.adjacent(tet, face)
            for u in face_vertices(face):
                store[u] = _arcs(coords, partner, sigma(face), sigma(u))
        if arcs_b[y] - arcs_a[y] != arcs_a[x] - arcs_b[x]:
            raise TopologyEngineError(f"Meridian arcs do not close up in layer {j}")
        d = arcs_b[x] - arcs_a[x]
        q_xz, q_xw = max(d, 0), max(-d, 0)
        pieces = {
            x: arcs_a[x] - q_xw,
            y: arcs_a[y] - q_xz,
            z: arcs_a[z],
            w: arcs_b[w],
        }
        if min(pieces.values()) < 0:
            raise TopologyEngineError(f"Meridian disc needs negative pieces in layer {j}")
        for vertex, count in pieces.items():
            coords[7 * tet + vertex] = count
        if q_xz:
            coords[7 * tet + 4 + quad_type(x, z)] = q_xz
        if q_xw:
            coords[7 * tet + 4 + quad_type(x, w)] = q_xw
        logger.debug("meridian layer %d: %s", j, coords[7 * tet : 7 * tet + 7])
    return NormalSurfaceVector(t, tuple(coords))


def _quad_partner(k: int, v: int) -> int:
    for side in quad_sides(k):
        if v in side:
            return side[0] if side[1] == v else side[1]
    raise ValueError(v)


def quad_surfaces_tm(st: MarkedSolidTorus) -> Tuple[NormalSurfaceVector, NormalSurfaceVector, NormalSurfaceVector]:
    """The one-quad-per-tetrahedron surfaces seeded by ``q01/23``, ``q02/13``, ``q03/12`` in ``D_1``."""
    t = st.triangulation
    surfaces = []
    for seed in range(3):
        quads = [seed]
        for j in range(2, st.m + 1):
            tet = j - 1
            choices = set()
            for face in (3, second_face(j)):
                partner, sigma = t.adjacent(tet, face)
                back = sigma.inverse()
                f = sigma(face)
                choices.add(quad_type(back(f), back(_quad_partner(quads[-1], f))))
            if len(choices) != 1:
                raise TopologyEngineError(f"Quad surface {seed} forks in layer {j}: {sorted(choices)}")
            quads.append(choices.pop())
        coords = [0] * (7 * t.tet_count)
        for tet, k in enumerate(quads):
            coords[7 * tet + 4 + k] = 1
        surfaces.append(NormalSurfaceVector(t, tuple(coords)))
    return tuple(surfaces)


def framing_tm(st: MarkedSolidTorus) -> FramedTorusBoundary:
    """Longitude ``D_1(01)`` and the meridian read off the meridian disc's boundary.

    Raises:
        InvalidParameter: ``m < 2``; ``T_1`` carries its edge identification
            only as metadata, so its boundary is not a torus.
    """
    if st.m < 2:
        raise InvalidParameter("The boundary of T_1 is not a torus without its edge identification")
    edges = st.boundary_edges
    curves = boundary_curves(meridian_disc(st), 0)
    if len(curves) != 1:
        raise TopologyEngineError(f"Meridian disc of T_{st.m} has {len(curves)} boundary curves")
    mu = tuple(curves[0].get(e, 0) for e in edges)
    lam = tuple(1 if e == st.longitude else 0 for e in edges)
    return FramedTorusBoundary(component=0, edges=tuple(edges), mu=mu, lam=lam)


def meridian_layer_counts(st: MarkedSolidTorus) -> Dict[int, Tuple[int, int]]:
    """Triangles and quads the meridian disc places in each layer (1-based)."""
    disc = meridian_disc(st)
    return {
        tet + 1: (
            sum(disc.triangles(tet, v) for v in range(4)),
            sum(disc.quads(tet, k) for k in range(3)),
        )
        for tet in range(st.m)
    }
