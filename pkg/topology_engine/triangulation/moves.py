"""Pachner moves and greedy simplification.

Every move removes some tetrahedra, appends the new ones at the end, and
reglues the outer faces through a face map from each new face to the old
face it replaces.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from topology_engine.errors import Inapplicable, TopologyEngineError
from topology_engine.triangulation.perm import IDENTITY, Perm4
from topology_engine.triangulation.skeleton import EdgeClass, face_vertices, skeleton
from topology_engine.triangulation.triangulation import Triangulation, TriangulationBuilder

logger = logging.getLogger(__name__)

SWAP_23 = Perm4((0, 1, 3, 2))
MOVE_KINDS = ("2-3", "3-2", "4-4", "2-0")

# (old tet, old face) -> (new tet, new face, map from new labels to old labels)
FaceMap = Dict[Tuple[int, int], Tuple[int, int, Perm4]]


def _replace(
    t: Triangulation,
    removed: Sequence[int],
    new_count: int,
    internal: Sequence[Tuple[int, int, int, Perm4]],
    face_map: FaceMap,
) -> Triangulation:
    removed_set = set(removed)
    kept = [i for i in range(t.tet_count) if i not in removed_set]
    index = {old: new for new, old in enumerate(kept)}
    base = len(kept)
    builder = TriangulationBuilder(base + new_count)
    try:
        for tet, face, partner, perm in t.rows():
            if tet in removed_set or partner in removed_set:
                continue
            builder.join(index[tet], face, index[partner], perm)
        for i, f, j, perm in internal:
            builder.join(base + i, f, base + j, perm)
        for (old_tet, old_face), (new_tet, new_face, phi) in face_map.items():
            g = t.adjacent(old_tet, old_face)
            if g is None:
                continue
            partner, tau = g
            if partner in removed_set:
                other = face_map.get((partner, tau(old_face)))
                if other is None:
                    raise Inapplicable(f"Face {old_face} of tetrahedron {old_tet} leaves the move region")
                o_tet, o_face, o_phi = other
                builder.join(base + new_tet, new_face, base + o_tet, o_phi.inverse() * tau * phi)
            else:
                builder.join(base + new_tet, new_face, index[partner], tau * phi)
    except Inapplicable:
        raise
    except TopologyEngineError as exc:
        raise Inapplicable(f"Move produces an invalid gluing: {exc}") from exc
    return builder.build()


def move_2_3(t: Triangulation, tet: int, face: int) -> Triangulation:
    """Replaces the two tetrahedra meeting at ``(tet, face)`` by three."""
    g = t.adjacent(tet, face)
    if g is None:
        raise Inapplicable(f"Face {face} of tetrahedron {tet} is on the boundary")
    other, sigma = g
    if other == tet:
        raise Inapplicable(f"Face {face} of tetrahedron {tet} is glued to the same tetrahedron")
    x = face_vertices(face)
    face_map: FaceMap = {}
    internal = []
    for i in range(3):
        xi, xj, xk = x[i], x[(i + 1) % 3], x[(i + 2) % 3]
        face_map[(tet, xi)] = (i, 1, Perm4((face, xi, xj, xk)))
        face_map[(other, sigma(xi))] = (i, 0, Perm4((sigma(xi), sigma(face), sigma(xj), sigma(xk))))
        internal.append((i, 2, (i + 1) % 3, SWAP_23))
    return _replace(t, (tet, other), 3, internal, face_map)


def _edge_or_raise(t: Triangulation, edge: int) -> EdgeClass:
    sk = skeleton(t)
    if not 0 <= edge < len(sk.edges):
        raise Inapplicable(f"No edge class {edge}")
    return sk.edges[edge]


def move_3_2(t: Triangulation, edge: int) -> Triangulation:
    """Replaces the three tetrahedra around a degree-3 interior edge by two."""
    e = _edge_or_raise(t, edge)
    if e.boundary or e.degree != 3:
        raise Inapplicable(f"Edge {edge} has degree {e.degree}{' on the boundary' if e.boundary else ''}")
    tets = [emb.tet for emb in e.embeddings]
    if len(set(tets)) != 3:
        raise Inapplicable(f"Edge {edge} meets a tetrahedron more than once")
    face_map: FaceMap = {}
    for j, emb in enumerate(e.embeddings):
        p = emb.perm
        here, ahead, opposite = 1 + j, 1 + (j + 1) % 3, 1 + (j + 2) % 3
        top = [0] * 4
        # Ring vertex p(3) of this embedding is p(2) of the previous one.
        top[0], top[here], top[ahead], top[opposite] = p(0), p(3), p(2), p(1)
        bottom = list(top)
        bottom[0], bottom[opposite] = p(1), p(0)
        face_map[(emb.tet, p(1))] = (0, opposite, Perm4(tuple(top)))
        face_map[(emb.tet, p(0))] = (1, opposite, Perm4(tuple(bottom)))
    return _replace(t, tets, 2, [(0, 0, 1, IDENTITY)], face_map)


def move_4_4(t: Triangulation, edge: int, axis: int = 0) -> Triangulation:
    """Retriangulates the octahedron around a degree-4 interior edge."""
    e = _edge_or_raise(t, edge)
    if e.boundary or e.degree != 4:
        raise Inapplicable(f"Edge {edge} has degree {e.degree}{' on the boundary' if e.boundary else ''}")
    if len({emb.tet for emb in e.embeddings}) != 4:
        raise Inapplicable(f"Edge {edge} meets a tetrahedron more than once")
    emb = e.embeddings[axis % 2]
    p = emb.perm
    face = p(3)
    moved = move_2_3(t, emb.tet, face)
    x = face_vertices(face)
    i = x.index(p(2))
    new_tet = t.tet_count - 2 + i
    new_edge = skeleton(moved).edge_class_of(new_tet, 2, 3)
    return move_3_2(moved, new_edge)


def move_2_0_edge(t: Triangulation, edge: int) -> Triangulation:
    """Flattens the pillow of two tetrahedra around a degree-2 interior edge."""
    e = _edge_or_raise(t, edge)
    if e.boundary or e.degree != 2:
        raise Inapplicable(f"Edge {edge} has degree {e.degree}{' on the boundary' if e.boundary else ''}")
    (e0, e1) = e.embeddings
    if e0.tet == e1.tet:
        raise Inapplicable(f"Edge {edge} lies twice in tetrahedron {e0.tet}")
    p0, p1 = e0.perm, e1.perm
    sk = skeleton(t)
    ring0 = sk.edge_class_of(e0.tet, p0(2), p0(3))
    ring1 = sk.edge_class_of(e1.tet, p1(2), p1(3))
    if ring0 == ring1:
        raise Inapplicable(f"Flattening edge {edge} would fold an edge onto itself")
    if sk.edges[ring0].boundary and sk.edges[ring1].boundary:
        raise Inapplicable(f"Flattening edge {edge} would join two boundary edges")

    pillow = {e0.tet, e1.tet}
    corr = p1 * SWAP_23 * p0.inverse()
    joins = []
    for end in (0, 1):
        f0, f1 = p0(end), p1(end)
        g0, g1 = t.adjacent(e0.tet, f0), t.adjacent(e1.tet, f1)
        if g0 is None or g1 is None:
            raise Inapplicable(f"Edge {edge} has a pillow face on the boundary")
        (x, alpha), (y, beta) = g0, g1
        if x in pillow or y in pillow:
            raise Inapplicable(f"Pillow around edge {edge} is glued to itself")
        if x == y and alpha(f0) == beta(f1):
            raise Inapplicable(f"Flattening edge {edge} would glue a face to itself")
        joins.append((x, alpha(f0), y, beta * corr * alpha.inverse()))

    kept = [i for i in range(t.tet_count) if i not in pillow]
    index = {old: new for new, old in enumerate(kept)}
    builder = TriangulationBuilder(len(kept))
    try:
        for tet, face, partner, perm in t.rows():
            if tet in pillow or partner in pillow:
                continue
            builder.join(index[tet], face, index[partner], perm)
        for x, fx, y, perm in joins:
            builder.join(index[x], fx, index[y], perm)
    except TopologyEngineError as exc:
        raise Inapplicable(f"Flattening edge {edge} produces an invalid gluing: {exc}") from exc
    return builder.build()


def pachner_move(t: Triangulation, kind: str, location: int, face: Optional[int] = None) -> Triangulation:
    """Dispatches a move by kind.

    ``location`` is a tetrahedron for 2-3 (with ``face``) and an edge class
    otherwise.
    """
    if kind == "2-3":
        if face is None:
            raise Inapplicable("A 2-3 move needs a face")
        return move_2_3(t, location, face)
    if kind == "3-2":
        return move_3_2(t, location)
    if kind == "4-4":
        return move_4_4(t, location, face or 0)
    if kind == "2-0":
        return move_2_0_edge(t, location)
    raise Inapplicable(f"Unknown move kind: {kind}")


def _try_reduce(t: Triangulation) -> Optional[Triangulation]:
    sk = skeleton(t)
    for e in sk.edges:
        if not e.boundary and e.degree == 3:
            try:
                return move_3_2(t, e.index)
            except Inapplicable:
                pass
    for e in sk.edges:
        if not e.boundary and e.degree == 2:
            try:
                return move_2_0_edge(t, e.index)
            except Inapplicable:
                pass
    return None


def _greedy(t: Triangulation) -> Triangulation:
    while True:
        reduced = _try_reduce(t)
        if reduced is None:
            return t
        t = reduced


def simplify(t: Triangulation, effort: int = 200, seed: int = 0) -> Triangulation:
    """Greedy 3-2 and 2-0 reductions interleaved with random 4-4 and 2-3 moves.

    Deterministic for a given ``effort`` and ``seed``; never returns more
    tetrahedra than it was given.
    """
    rng = np.random.default_rng(seed)
    best = _greedy(t)
    current = best
    for attempt in range(effort):
        sk = skeleton(current)
        four = [e.index for e in sk.edges if not e.boundary and e.degree == 4]
        try:
            if four and rng.random() < 0.75:
                candidate = move_4_4(current, four[int(rng.integers(len(four)))], int(rng.integers(2)))
            else:
                interior = [
                    (tet, f)
                    for tet in range(current.tet_count)
                    for f in range(4)
                    if current.adjacent(tet, f) is not None
                ]
                if not interior or current.tet_count > best.tet_count + 2:
                    current = best
                    continue
                tet, f = interior[int(rng.integers(len(interior)))]
                candidate = move_2_3(current, tet, f)
        except Inapplicable:
            continue
        current = _greedy(candidate)
        if current.tet_count < best.tet_count:
            logger.debug("simplify: %d tetrahedra after %d attempts", current.tet_count, attempt + 1)
            best = current
    return best
