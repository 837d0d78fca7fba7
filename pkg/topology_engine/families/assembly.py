"""Named triangulations assembled from solid tori, cones and the literal tables.

``t_kn`` glues ``T_k`` to ``T_n`` along their boundary tori. The link
complement ``N`` is the same gluing done on cones over those tori, so its
cone apexes are the two filled cusps. ``T'`` is the literal table with its
two boundary tori framed, and ``t_prime_kn`` fills them with layered solid
tori. ``u_kn`` replaces the two copies of ``T_3`` in the ``U_{3,3}`` table.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from topology_engine.errors import InvalidParameter, TopologyEngineError
from topology_engine.families.filling import (
    boundary_cones,
    component_of_face,
    fill_boundary,
)
from topology_engine.families.layered import lst
from topology_engine.families.marked import FramedTorusBoundary, LayeredSolidTorus, MarkedTriangulation
from topology_engine.families.solid_tori import solid_torus_tm
from topology_engine.families.tables import link_complement_table, truncated_exterior_table, u33_table
from topology_engine.normal.analysis import relation_columns
from topology_engine.triangulation.isosig import is_isomorphic
from topology_engine.triangulation.perm import IDENTITY, Perm4
from topology_engine.triangulation.skeleton import skeleton
from topology_engine.triangulation.triangulation import Triangulation, TriangulationBuilder, restrict

logger = logging.getLogger(__name__)


def _require_odd(**params: int) -> None:
    for name, value in params.items():
        if value < 3 or value % 2 == 0:
            raise InvalidParameter(f"{name} must be odd and at least 3, got {value}")


# Interface gluings as (T^1 tet, T^1 face, T^2 tet, perm).
def interface_gluings(k: int, n: int) -> List[Tuple[int, int, int, Perm4]]:
    return [
        (0, 3, 0, Perm4.from_face_images(3, (1, 2, 0))),
        (k - 1, 2, 0, Perm4.from_face_images(2, (0, 3, 2))),
        (0, 1, n - 1, Perm4.from_face_images(1, (3, 2, 1))),
        (k - 1, 0, n - 1, Perm4.from_face_images(0, (1, 3, 0))),
    ]


# e1..e4 as (tet, a, b) inside a single solid torus T_m.
INTERFACE_EDGE_SITES = {"e1": (0, 0, 1), "e2": (0, 2, 3), "e3": (0, 0, 2), "e4": (0, 0, 3)}


def t_kn(k: int, n: int) -> Triangulation:
    """One-vertex ideal triangulation of ``M_{k,n}`` with ``k + n`` tetrahedra.

    Raises:
        InvalidParameter: ``k`` or ``n`` is even or below 3.
    """
    _require_odd(k=k, n=n)
    builder = TriangulationBuilder()
    builder.add(solid_torus_tm(k).triangulation)
    offset = builder.add(solid_torus_tm(n).triangulation)
    for tet1, face1, tet2, perm in interface_gluings(k, n):
        builder.join(tet1, face1, offset + tet2, perm)
    return builder.build()


def interface_edges(k: int, n: int) -> Dict[str, int]:
    """Edge classes ``e1 .. e4`` of the gluing interface in ``t_kn(k, n)``."""
    sk = skeleton(t_kn(k, n))
    return {name: sk.edge_class_of(*site) for name, site in INTERFACE_EDGE_SITES.items()}


# Link complement N


def link_complement_from_cones() -> MarkedTriangulation:
    """``N`` as two cones over the solid-torus boundary glued across the interface.

    Tetrahedra 0..3 cone off the first torus and 4..7 the second. The two
    apexes are the cusps ``red`` and ``blue``; the third cusp is
    ``interface``.
    """
    cones = boundary_cones(solid_torus_tm(3).triangulation)
    builder = TriangulationBuilder()
    builder.add(cones.triangulation)
    offset = builder.add(cones.triangulation)
    for tet1, face1, tet2, phi in interface_gluings(3, 3):
        c1, psi1 = cones.placement[(tet1, face1)]
        c2, psi2 = cones.placement[(tet2, phi(face1))]
        builder.join(c1, 3, offset + c2, psi2 * phi * psi1.inverse())
    t = builder.build()
    sk = skeleton(t)
    vertices = {
        "red": sk.vertex_of[0][3],
        "blue": sk.vertex_of[offset][3],
        "interface": sk.vertex_of[0][0],
    }
    return MarkedTriangulation(triangulation=t, vertices=vertices)


@lru_cache(maxsize=None)
def link_complement_n() -> MarkedTriangulation:
    """The eight-tetrahedron table of ``N`` with its cusps marked."""
    table = link_complement_table()
    cones = link_complement_from_cones()
    iso = is_isomorphic(cones.triangulation, table)
    if iso is None:
        logger.warning("Cone construction of N does not match the gluing table; cusps left unmarked")
        return MarkedTriangulation(triangulation=table)
    sk_cones, sk = skeleton(cones.triangulation), skeleton(table)
    vertices = {}
    for name, vertex in cones.vertices.items():
        tet, v = sk_cones.vertices[vertex].corners[0]
        vertices[name] = sk.vertex_of[iso.tet_map[tet]][iso.vertex_maps[tet](v)]
    return MarkedTriangulation(triangulation=table, vertices=vertices)


# T'

T_PRIME_EDGE_SITES = {
    "e0": (3, 0, 1),
    "e2": (0, 0, 3),
    "e4": (0, 1, 3),
    "e18": (16, 0, 3),
    "e19": (15, 0, 1),
    "e20": (16, 0, 2),
}
T_PRIME_BOUNDARY_FACES = {"∂1": (0, 2), "∂2": (15, 2)}
# Edges receiving the LST boundary edges of meridian weight 1, m and m + 1.
T_PRIME_FILLINGS = {"∂1": ("e2", "e0", "e4"), "∂2": ("e19", "e20", "e18")}


def _relation_signs(t: Triangulation, component: int, edges: Tuple[int, ...]) -> Tuple[int, ...]:
    """Signs ``eps`` with ``sum(eps_i * e_i) == 0`` in the homology of a one-vertex torus."""
    faces = skeleton(t).boundary[component].faces
    return tuple(relation_columns(t, edges, faces[:1])[0])


@lru_cache(maxsize=None)
def t_prime() -> MarkedTriangulation:
    """The seventeen-tetrahedron ``T'`` with named edges and framed boundary tori.

    On ``∂1`` the edge ``e0`` runs along ``mu^2 lam``, ``e2`` along ``mu lam``
    and ``e4`` along ``mu^-1``. On ``∂2`` the edge ``e18`` runs along ``lam``,
    ``e19`` along ``mu`` and ``e20`` along ``mu^-1 lam``.
    """
    t = truncated_exterior_table()
    sk = skeleton(t)
    edges = {name: sk.edge_class_of(*site) for name, site in T_PRIME_EDGE_SITES.items()}

    first = component_of_face(t, *T_PRIME_BOUNDARY_FACES["∂1"])
    ring1 = (edges["e0"], edges["e2"], edges["e4"])
    _, eps2, eps4 = _relation_signs(t, first, ring1)
    framing1 = FramedTorusBoundary(
        component=first,
        edges=ring1,
        mu=(0, 0, 1),
        lam=(0, eps2 * eps4, -1),
        names=("e0", "e2", "e4"),
    )

    second = component_of_face(t, *T_PRIME_BOUNDARY_FACES["∂2"])
    ring2 = (edges["e18"], edges["e19"], edges["e20"])
    eps18, eps19, _ = _relation_signs(t, second, ring2)
    framing2 = FramedTorusBoundary(
        component=second,
        edges=ring2,
        mu=(0, -eps18 * eps19, 0),
        lam=(1, 0, 0),
        names=("e18", "e19", "e20"),
    )
    vertices = {"ideal": v for v in sk.ideal_vertices()[:1]}
    return MarkedTriangulation(
        triangulation=t,
        edges=edges,
        framings={"∂1": framing1, "∂2": framing2},
        vertices=vertices,
    )


def _filling_matching(l: LayeredSolidTorus, pairs: Dict[int, int]) -> List[Tuple[int, int]]:
    matching = []
    for weight, target in pairs.items():
        edge = l.edge_with_weight(weight)
        if edge is None:
            raise InvalidParameter(f"LST({l.j}, {l.k}) has no unique edge of weight {weight}")
        matching.append((edge, target))
    return matching


def fill_t_prime(t: Triangulation, boundary: str, l: LayeredSolidTorus, pairs: Dict[int, str]) -> Triangulation:
    """Fills ``∂1`` or ``∂2`` of a triangulation that starts with the tetrahedra of ``T'``.

    ``pairs`` sends LST meridian-disc weights to ``T'`` edge names; edges
    are located by their positions in ``T'``, which earlier fillings keep.
    """
    sk = skeleton(t)
    component = component_of_face(t, *T_PRIME_BOUNDARY_FACES[boundary])
    targets = {weight: sk.edge_class_of(*T_PRIME_EDGE_SITES[name]) for weight, name in pairs.items()}
    return fill_boundary(t, component, l, _filling_matching(l, targets))


def t_prime_kn(k: int, n: int) -> Triangulation:
    """``T'`` with ``LST(1, k-1)`` filled into ``∂1`` and ``LST(1, n)`` into ``∂2``.

    The weight-1 edges land on ``e2`` and ``e19``.

    Raises:
        InvalidParameter: ``k`` or ``n`` is even or below 3.
    """
    _require_odd(k=k, n=n)
    t = t_prime().triangulation
    for boundary, m in (("∂1", k - 1), ("∂2", n)):
        longitudinal, middle, _ = T_PRIME_FILLINGS[boundary]
        t = fill_t_prime(t, boundary, lst(1, m), {1: longitudinal, m: middle})
    return t


def meridional_filling(edge: str) -> Triangulation:
    """``T'`` with ``LST(0, 1)`` glued so its meridional edge lies on ``edge``."""
    boundary = "∂1" if edge in ("e0", "e2", "e4") else "∂2"
    return fill_t_prime(t_prime().triangulation, boundary, lst(0, 1), {0: edge})


# U_kn


# U_{3,3} tetrahedron -> (copy, layer of T_3, labels of T_3 -> labels of U)
_U33_COPIES = {
    0: (0, 1, IDENTITY),
    1: (0, 2, IDENTITY),
    4: (0, 3, IDENTITY),
    5: (1, 1, Perm4((0, 1, 3, 2))),
    7: (1, 2, Perm4((0, 1, 3, 2))),
    6: (1, 3, Perm4((3, 2, 0, 1))),
}
_U33_CENTRAL = (2, 3)


def _central_faces(k: int, n: int) -> Iterator[Tuple[int, int, int, int, Perm4]]:
    """Outer faces of the central tetrahedra of ``U_{3,3}`` and where they land.

    Yields ``(central index, face, copy, tetrahedron of that copy's T_m,
    perm from central labels to T_m labels)``; copy 0 is ``T_k`` and copy 1
    is ``T_n``.
    """
    table = u33_table()
    sizes = (k, n)
    for index, tet in enumerate(_U33_CENTRAL):
        for face in range(4):
            partner, tau = table.adjacent(tet, face)
            if partner in _U33_CENTRAL:
                continue
            copy, layer, psi = _U33_COPIES[partner]
            if layer == 2:
                raise TopologyEngineError(f"Central face {face} of tetrahedron {tet} meets a middle layer")
            yield index, face, copy, 0 if layer == 1 else sizes[copy] - 1, psi.inverse() * tau


def u_kn(k: int, n: int) -> Triangulation:
    """``T_k`` and ``T_n`` attached to the two central tetrahedra of ``U_{3,3}``.

    Tetrahedra ``0 .. k-1`` are ``T_k``, then the two central ones, then ``T_n``.

    Raises:
        InvalidParameter: ``k`` or ``n`` is even or below 3.
    """
    _require_odd(k=k, n=n)
    builder = TriangulationBuilder()
    builder.add(solid_torus_tm(k).triangulation)
    central = builder.add(restrict(u33_table(), _U33_CENTRAL))
    offsets = (0, builder.add(solid_torus_tm(n).triangulation))
    for index, face, copy, tet, perm in _central_faces(k, n):
        builder.join(central + index, face, offsets[copy] + tet, perm)
    return builder.build()


def u_cusped() -> Triangulation:
    """``U_{3,3}`` with each copy of ``T_3`` replaced by a cone over its boundary torus.

    Tetrahedra 0 and 1 are the central ones, 2..5 and 6..9 the two cones;
    the cone apexes are two of the three ideal vertices.
    """
    cones = boundary_cones(solid_torus_tm(3).triangulation)
    builder = TriangulationBuilder()
    central = builder.add(restrict(u33_table(), _U33_CENTRAL))
    offsets = (builder.add(cones.triangulation), builder.add(cones.triangulation))
    for index, face, copy, tet, perm in _central_faces(3, 3):
        cone, psi = cones.placement[(tet, perm(face))]
        builder.join(central + index, face, offsets[copy] + cone, psi * perm)
    return builder.build()
