"""Dehn filling by layered solid tori and coning off boundary surfaces."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

from topology_engine.errors import InvalidParameter, NoSimplicialMatching
from topology_engine.families.marked import FramedTorusBoundary, LayeredSolidTorus
from topology_engine.normal.analysis import SlopePQ, slope_from_weights
from topology_engine.triangulation.orientation import is_orientable
from topology_engine.triangulation.perm import Perm4
from topology_engine.triangulation.skeleton import boundary_neighbour, face_vertices, skeleton
from topology_engine.triangulation.triangulation import Triangulation, TriangulationBuilder

logger = logging.getLogger(__name__)

# (lst tet, lst face, t tet, perm from lst labels to t labels)
FaceGluing = Tuple[int, int, int, Perm4]


@dataclass(frozen=True)
class FillingGluing:
    """How the boundary of a layered solid torus lands on a boundary torus."""

    faces: Tuple[FaceGluing, FaceGluing]
    edge_map: Dict[int, int]


def _component_faces(t: Triangulation, component: int) -> Tuple[Tuple[int, int], ...]:
    boundary = skeleton(t).boundary
    if not 0 <= component < len(boundary):
        raise InvalidParameter(f"No boundary component {component}")
    comp = boundary[component]
    if not comp.is_one_vertex_torus():
        raise NoSimplicialMatching(f"Boundary component {component} is not a two-triangle one-vertex torus")
    return comp.faces


def component_of_face(t: Triangulation, tet: int, face: int) -> int:
    """Index of the boundary component containing the unglued face ``(tet, face)``."""
    for comp in skeleton(t).boundary:
        if (tet, face) in comp.faces:
            return comp.index
    raise InvalidParameter(f"Face {face} of tetrahedron {tet} is not on the boundary")


def _face_maps(src_face: int, dst_face: int):
    for images in permutations(face_vertices(dst_face)):
        yield Perm4.from_face_images(src_face, images)


def _edge_map(l: LayeredSolidTorus, t: Triangulation, gluings: Sequence[FaceGluing]) -> Optional[Dict[int, int]]:
    lsk, tsk = skeleton(l.triangulation), skeleton(t)
    mapping: Dict[int, Tuple[int, int]] = {}
    for ltet, lface, ttet, perm in gluings:
        for a, b in combinations(face_vertices(lface), 2):
            source = lsk.edge_class_of(ltet, a, b)
            target = tsk.edge_class_of(ttet, perm(a), perm(b))
            twist = lsk.edge_direction(ltet, a, b) * tsk.edge_direction(ttet, perm(a), perm(b))
            if mapping.setdefault(source, (target, twist)) != (target, twist):
                return None
    if len({target for target, _ in mapping.values()}) != len(mapping):
        return None
    return {source: target for source, (target, _) in mapping.items()}


def filling_gluings(
    t: Triangulation, component: int, l: LayeredSolidTorus, matching: Sequence[Tuple[int, int]]
) -> List[FillingGluing]:
    """Every simplicial identification of the LST boundary with a boundary torus of ``t``.

    ``matching`` lists ``(lst edge class, t edge class)`` pairs the
    identification must respect; two pairs pin it down up to the torus's
    symmetries.
    """
    targets = _component_faces(t, component)
    sources = l.boundary_faces
    found = []
    for order in (targets, targets[::-1]):
        (s1, s2), (d1, d2) = sources, order
        for p1 in _face_maps(s1[1], d1[1]):
            for p2 in _face_maps(s2[1], d2[1]):
                gluings = ((s1[0], s1[1], d1[0], p1), (s2[0], s2[1], d2[0], p2))
                edge_map = _edge_map(l, t, gluings)
                if edge_map is None:
                    continue
                if all(edge_map.get(a) == b for a, b in matching):
                    found.append(FillingGluing(gluings, edge_map))
    return found


def _assemble(t: Triangulation, l: LayeredSolidTorus, gluing: FillingGluing) -> Triangulation:
    builder = TriangulationBuilder()
    builder.add(t)
    offset = builder.add(l.triangulation)
    for ltet, lface, ttet, perm in gluing.faces:
        builder.join(offset + ltet, lface, ttet, perm)
    return builder.build()


def fill_boundary(
    t: Triangulation, component: int, l: LayeredSolidTorus, matching: Sequence[Tuple[int, int]]
) -> Triangulation:
    """Glues a layered solid torus onto a two-triangle boundary torus of ``t``.

    The tetrahedra of ``t`` keep their indices and the LST follows them. An
    orientable result is preferred when one exists.

    Raises:
        NoSimplicialMatching: no simplicial identification respects ``matching``.
    """
    candidates = filling_gluings(t, component, l, matching)
    if not candidates:
        raise NoSimplicialMatching(
            f"No simplicial map from the boundary of LST({l.j}, {l.k}) onto component {component} respects {list(matching)}"
        )
    results = [_assemble(t, l, g) for g in candidates]
    for filled in results:
        if is_orientable(filled):
            return filled
    logger.warning("LST(%d, %d) filling of component %d has no orientable gluing", l.j, l.k, component)
    return results[0]


def filling_slope(
    t: Triangulation, framing: FramedTorusBoundary, l: LayeredSolidTorus, matching: Sequence[Tuple[int, int]]
) -> Optional[SlopePQ]:
    """The slope on ``framing`` that bounds the meridian disc of the glued-in LST."""
    candidates = filling_gluings(t, framing.component, l, matching)
    if not candidates:
        raise NoSimplicialMatching(f"No simplicial identification respects {list(matching)}")
    weights = {candidates[0].edge_map[e]: w for e, w in l.weights.items()}
    return slope_from_weights(t, framing, weights)


# Cones


@dataclass(frozen=True)
class BoundaryCones:
    """One cone tetrahedron per unglued face, apex at vertex 3.

    ``placement[(tet, face)] = (cone, psi)`` where ``psi`` sends the labels
    of ``tet`` to those of the cone: the face's vertices in increasing order
    go to 0, 1, 2 and ``face`` goes to the apex.
    """

    triangulation: Triangulation
    placement: Dict[Tuple[int, int], Tuple[int, Perm4]]


def boundary_cones(t: Triangulation) -> BoundaryCones:
    """Cones over the boundary of ``t`` glued to each other along their sides.

    The base faces (face 3) are left unglued.
    """
    faces = t.boundary_faces()
    placement = {}
    for cone, (tet, face) in enumerate(faces):
        images = [0] * 4
        for i, v in enumerate(face_vertices(face)):
            images[v] = i
        images[face] = 3
        placement[(tet, face)] = (cone, Perm4(tuple(images)))

    builder = TriangulationBuilder(len(faces))
    for (tet, face), (cone, psi) in placement.items():
        for x, y in combinations(face_vertices(face), 2):
            side = psi(next(v for v in face_vertices(face) if v not in (x, y)))
            ntet, nface, nx, ny = boundary_neighbour(t, tet, face, x, y)
            ncone, npsi = placement[(ntet, nface)]
            nside = npsi(next(v for v in face_vertices(nface) if v not in (nx, ny)))
            images = [0] * 4
            images[psi(x)] = npsi(nx)
            images[psi(y)] = npsi(ny)
            images[3] = 3
            images[side] = nside
            builder.join(cone, side, ncone, Perm4(tuple(images)))
    return BoundaryCones(builder.build(), placement)


def cone_over_boundary(t: Triangulation) -> Tuple[Triangulation, BoundaryCones]:
    """Closes every boundary component of ``t`` off with a cone; each apex becomes an ideal vertex.

    The tetrahedra of ``t`` keep their indices and the cones follow them.
    """
    cones = boundary_cones(t)
    builder = TriangulationBuilder()
    builder.add(t)
    offset = builder.add(cones.triangulation)
    for (tet, face), (cone, psi) in cones.placement.items():
        builder.join(offset + cone, 3, tet, psi.inverse())
    return builder.build(), cones
