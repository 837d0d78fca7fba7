"""Connected components, orientability and boundary curves of normal surfaces.

Normal pieces are ordered inside each tetrahedron so that arcs match across
faces by position: triangles of type ``v`` are numbered outward from vertex
``v``, and quads of type ``k`` are numbered from the side holding vertex 0.
In a face, the arcs cutting off a corner are listed from that corner outward:
the triangles first, then the quads.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from topology_engine.errors import InvalidParameter, InvalidSlope
from topology_engine.families.marked import FramedTorusBoundary
from topology_engine.homology.smith import smith_normal_form, solve_integer
from topology_engine.normal.coordinates import (
    NormalSurfaceVector,
    edge_weights,
    quad_sides,
    quad_type,
    separating_quads,
)
from topology_engine.triangulation.perm import Perm4
from topology_engine.triangulation.skeleton import Skeleton, face_vertices, skeleton
from topology_engine.triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)

# ("t", tet, vertex, index) or ("q", tet, quad type, index)
Piece = Tuple[str, int, int, int]


def _quad_position(v: NormalSurfaceVector, tet: int, k: int, corner: int, offset: int) -> int:
    """Index of the quad whose arc sits ``offset`` quads out from ``corner``."""
    if corner in quad_sides(k)[0]:
        return offset
    return v.quads(tet, k) - 1 - offset


def piece_at(v: NormalSurfaceVector, tet: int, face: int, corner: int, i: int) -> Piece:
    """The piece owning arc ``i`` (counted from ``corner``) in ``face`` of ``tet``."""
    triangles = v.triangles(tet, corner)
    if i < triangles:
        return ("t", tet, corner, i)
    k = quad_type(corner, face)
    return ("q", tet, k, _quad_position(v, tet, k, corner, i - triangles))


def _pieces(v: NormalSurfaceVector) -> List[Piece]:
    out = []
    for tet in range(v.triangulation.tet_count):
        for x in range(4):
            out.extend(("t", tet, x, i) for i in range(v.triangles(tet, x)))
        for k in range(3):
            out.extend(("q", tet, k, i) for i in range(v.quads(tet, k)))
    return out


def _arc_direction(piece: Piece, corner: int) -> int:
    """+1 when the piece's positive side faces ``corner``."""
    if piece[0] == "t":
        return 1
    return 1 if corner in quad_sides(piece[2])[0] else -1


def _face_matches(v: NormalSurfaceVector):
    """Pairs of pieces meeting along a normal arc in an interior face."""
    t = v.triangulation
    sk = skeleton(t)
    for f in sk.faces:
        if f.boundary:
            continue
        tet, face = f.front
        partner, sigma = t.adjacent(tet, face)
        for corner in face_vertices(face):
            for i in range(v.arcs(tet, face, corner)):
                yield (
                    piece_at(v, tet, face, corner, i),
                    corner,
                    piece_at(v, partner, sigma(face), sigma(corner), i),
                    sigma(corner),
                    sigma,
                )


@dataclass(frozen=True)
class ComponentInfo:
    pieces: int
    euler: int
    orientable: bool
    two_sided: bool
    closed: bool
    vertex_linking: bool


@dataclass(frozen=True)
class SurfaceAnalysis:
    components: Tuple[ComponentInfo, ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def euler(self) -> int:
        return sum(c.euler for c in self.components)

    @property
    def orientable(self) -> bool:
        return all(c.orientable for c in self.components)

    @property
    def closed(self) -> bool:
        return all(c.closed for c in self.components)

    @property
    def connected(self) -> bool:
        return len(self.components) == 1


def _points_on_edges(v: NormalSurfaceVector, sk: Skeleton):
    """The piece through every intersection point, one embedding per edge class."""
    for e in sk.edges:
        emb = e.embeddings[0]
        tet, a, b = emb.tet, emb.perm(0), emb.perm(1)
        for i in range(v.triangles(tet, a)):
            yield ("t", tet, a, i)
        for k in separating_quads(a, b):
            for j in range(v.quads(tet, k)):
                yield ("q", tet, k, _quad_position(v, tet, k, a, j))
        for i in reversed(range(v.triangles(tet, b))):
            yield ("t", tet, b, i)


def analyze_surface(v: NormalSurfaceVector) -> SurfaceAnalysis:
    """Splits an admissible surface into components and describes each one."""
    edge_weights(v)
    t = v.triangulation
    sk = skeleton(t)
    pieces = _pieces(v)
    neighbours: Dict[Piece, List[Tuple[Piece, int, int, Perm4]]] = defaultdict(list)
    for p, pc, q, qc, sigma in _face_matches(v):
        neighbours[p].append((q, pc, qc, sigma))
        neighbours[q].append((p, qc, pc, sigma.inverse()))

    component_of: Dict[Piece, int] = {}
    side: Dict[Piece, Tuple[int, int]] = {}
    flags: List[Dict[str, bool]] = []
    for start in pieces:
        if start in component_of:
            continue
        index = len(flags)
        flags.append({"two_sided": True, "orientable": True})
        component_of[start] = index
        side[start] = (1, 1)
        stack = [start]
        while stack:
            p = stack.pop()
            tau, s = side[p]
            for q, pc, qc, sigma in neighbours[p]:
                q_tau = tau * _arc_direction(p, pc) * _arc_direction(q, qc)
                q_s = -sigma.sign() * s
                if q not in component_of:
                    component_of[q] = index
                    side[q] = (q_tau, q_s)
                    stack.append(q)
                    continue
                old_tau, old_s = side[q]
                if old_tau != q_tau:
                    flags[index]["two_sided"] = False
                if old_tau * old_s != q_tau * q_s:
                    flags[index]["orientable"] = False

    count = len(flags)
    faces_of = Counter(component_of[p] for p in pieces)
    arcs_of: Counter = Counter()
    open_components = set()
    for f in sk.faces:
        tet, face = f.front
        for corner in face_vertices(face):
            for i in range(v.arcs(tet, face, corner)):
                c = component_of[piece_at(v, tet, face, corner, i)]
                arcs_of[c] += 1
                if f.boundary:
                    open_components.add(c)
    points_of = Counter(component_of[p] for p in _points_on_edges(v, sk))

    corners_of: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    quads_in = set()
    for p in pieces:
        if p[0] == "q":
            quads_in.add(component_of[p])
        else:
            corners_of[component_of[p]].append((p[1], p[2]))

    infos = []
    for c in range(count):
        linking = False
        if c not in quads_in:
            classes = {sk.vertex_of[tet][x] for tet, x in corners_of[c]}
            if len(classes) == 1:
                expected = sorted(sk.vertices[classes.pop()].corners)
                linking = sorted(corners_of[c]) == expected
        infos.append(
            ComponentInfo(
                pieces=faces_of[c],
                euler=points_of[c] - arcs_of[c] + faces_of[c],
                orientable=flags[c]["orientable"],
                two_sided=flags[c]["two_sided"],
                closed=c not in open_components,
                vertex_linking=linking,
            )
        )
    return SurfaceAnalysis(tuple(infos))


# Boundary curves


@dataclass(frozen=True, order=True)
class SlopePQ:
    """The curve class ``p * lam + q * mu``, sign-normalized."""

    p: int
    q: int

    @classmethod
    def normalized(cls, p: int, q: int) -> "SlopePQ":
        if (p, q) == (0, 0):
            raise InvalidSlope("The zero class is not a slope")
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    @property
    def primitive(self) -> bool:
        return gcd(abs(self.p), abs(self.q)) == 1

    def __str__(self) -> str:
        return f"{self.p}λ + {self.q}μ"


@dataclass(frozen=True)
class BoundarySlopes:
    slopes: Tuple[Tuple[SlopePQ, int], ...]
    trivial: int

    @property
    def curve_count(self) -> int:
        return self.trivial + sum(m for _, m in self.slopes)


def _component_faces(t: Triangulation, component: int) -> Tuple[Tuple[int, int], ...]:
    boundary = skeleton(t).boundary
    if not 0 <= component < len(boundary):
        raise InvalidParameter(f"No boundary component {component}")
    return boundary[component].faces


def _oriented_edge(sk: Skeleton, tet: int, a: int, b: int) -> Tuple[int, int]:
    return sk.edge_class_of(tet, a, b), sk.edge_direction(tet, a, b)


def boundary_curves(v: NormalSurfaceVector, component: int) -> List[Dict[int, int]]:
    """Traces the curves a surface cuts on one boundary component.

    Each curve is returned as an integral 1-cycle over the component's edge
    classes, obtained by pushing every crossing point to the tail of its edge.
    """
    t = v.triangulation
    sk = skeleton(t)
    weights = edge_weights(v)
    faces = _component_faces(t, component)

    def point(tet, corner, other, i):
        e, direction = _oriented_edge(sk, tet, corner, other)
        return e, i if direction > 0 else weights[e] - 1 - i

    arcs = []
    at_point: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for tet, face in faces:
        for corner in face_vertices(face):
            x, y = (u for u in face_vertices(face) if u != corner)
            for i in range(v.arcs(tet, face, corner)):
                p1, p2 = point(tet, corner, x, i), point(tet, corner, y, i)
                push = defaultdict(int)
                e, d = _oriented_edge(sk, tet, corner, x)
                if d < 0:
                    push[e] += 1
                e, d = _oriented_edge(sk, tet, corner, y)
                if d < 0:
                    push[e] -= 1
                at_point[p1].append(len(arcs))
                at_point[p2].append(len(arcs))
                arcs.append((p1, p2, dict(push)))

    used = [False] * len(arcs)
    curves = []
    for first in range(len(arcs)):
        if used[first]:
            continue
        cycle: Dict[int, int] = defaultdict(int)
        index, forward = first, True
        start = arcs[first][0]
        while True:
            used[index] = True
            p1, p2, push = arcs[index]
            sign = 1 if forward else -1
            for e, c in push.items():
                cycle[e] += sign * c
            here = p2 if forward else p1
            if here == start:
                break
            nxt = [a for a in at_point[here] if not used[a]]
            if not nxt:
                break
            index = nxt[0]
            forward = arcs[index][0] == here
        curves.append({e: c for e, c in cycle.items() if c})
    return curves


def relation_columns(t: Triangulation, edges: Sequence[int], faces) -> List[List[int]]:
    sk = skeleton(t)
    position = {e: i for i, e in enumerate(edges)}
    columns = []
    for tet, face in faces:
        a, b, c = face_vertices(face)
        col = [0] * len(edges)
        for (x, y), s in (((b, c), 1), ((a, c), -1), ((a, b), 1)):
            e, d = _oriented_edge(sk, tet, x, y)
            col[position[e]] += s * d
        columns.append(col)
    return columns


def slope_of_cycle(t: Triangulation, framing: FramedTorusBoundary, cycle: Dict[int, int]) -> Tuple[int, int]:
    """Coordinates ``(p, q)`` of a boundary cycle in the basis ``lam``, ``mu``.

    Raises:
        InvalidParameter: the cycle is not in the span of the framing.
    """
    faces = _component_faces(t, framing.component)
    edges = list(framing.edges)
    target = [cycle.get(e, 0) for e in edges]
    columns = [list(framing.lam), list(framing.mu)] + relation_columns(t, edges, faces)
    matrix = [[col[r] for col in columns] for r in range(len(edges))]
    solution = solve_integer(matrix, target, len(columns))
    if solution is None:
        raise InvalidParameter(f"Cycle {cycle} is not a boundary class of component {framing.component}")
    return solution[0], solution[1]


def _incidence(t: Triangulation, framing: FramedTorusBoundary) -> List[List[int]]:
    sk = skeleton(t)
    faces = _component_faces(t, framing.component)
    vertices = sorted({sk.vertex_of[tet][x] for tet, face in faces for x in face_vertices(face)})
    incidence = [[0] * len(framing.edges) for _ in vertices]
    for col, e in enumerate(framing.edges):
        emb = sk.edges[e].embeddings[0]
        incidence[vertices.index(sk.vertex_of[emb.tet][emb.perm(1)])][col] += 1
        incidence[vertices.index(sk.vertex_of[emb.tet][emb.perm(0)])][col] -= 1
    return incidence


def framing_generates(t: Triangulation, framing: FramedTorusBoundary) -> bool:
    """Whether ``lam`` and ``mu`` are cycles that generate the torus's first homology.

    Two generators of a rank-two free group form a basis, so this is the
    determinant +-1 condition.
    """
    incidence = _incidence(t, framing)
    for vector in (framing.lam, framing.mu):
        if any(sum(a * b for a, b in zip(row, vector)) for row in incidence):
            return False
    width = len(framing.edges)
    form = smith_normal_form(incidence, width)
    for j in range(form.rank, width):
        cycle = {e: form.V[i][j] for i, e in enumerate(framing.edges) if form.V[i][j]}
        try:
            slope_of_cycle(t, framing, cycle)
        except InvalidParameter:
            return False
    return True


def boundary_slopes(v: NormalSurfaceVector, framing: FramedTorusBoundary) -> BoundarySlopes:
    """Boundary curves on a framed torus grouped by slope, plus the trivial ones."""
    t = v.triangulation
    counts: Counter = Counter()
    trivial = 0
    for cycle in boundary_curves(v, framing.component):
        p, q = slope_of_cycle(t, framing, cycle)
        if (p, q) == (0, 0):
            trivial += 1
            continue
        counts[SlopePQ.normalized(p, q)] += 1
    logger.debug("boundary slopes on component %d: %s, %d trivial", framing.component, dict(counts), trivial)
    return BoundarySlopes(tuple(sorted(counts.items())), trivial)


def edge_slopes(t: Triangulation, framing: FramedTorusBoundary) -> Dict[int, Tuple[int, int]]:
    """Each boundary edge loop in the framing basis."""
    out = {}
    for e in framing.edges:
        out[e] = slope_of_cycle(t, framing, {e: 1})
    return out


def slope_from_weights(
    t: Triangulation, framing: FramedTorusBoundary, weights: Dict[int, int]
) -> Optional[SlopePQ]:
    """The slope meeting each edge loop of a one-vertex torus as often as ``weights`` says.

    Intersection with an edge of class ``(a, b)`` is ``|a q - b p|``.
    """
    classes = edge_slopes(t, framing)
    bound = max(weights.values(), default=0) + 1
    for q in range(0, bound + 1):
        for p in range(-bound, bound + 1):
            if (p, q) == (0, 0) or gcd(abs(p), q) != 1:
                continue
            if q == 0 and p < 0:
                continue
            if all(abs(a * q - b * p) == weights[e] for e, (a, b) in classes.items()):
                return SlopePQ(p, q)
    return None
