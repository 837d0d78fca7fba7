"""Skeleton of a triangulation: edge, vertex and face classes, vertex links
and boundary components.

Classes are numbered by their lexicographically least (tet, subsimplex)
member. Within a tetrahedron edges are numbered 01, 02, 03, 12, 13, 23.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from topology_engine.errors import InvalidEdgeIdentification
from topology_engine.triangulation.perm import Perm4
from topology_engine.triangulation.triangulation import Triangulation

EDGE_VERTICES: Tuple[Tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX: Dict[Tuple[int, int], int] = {}
for _i, (_a, _b) in enumerate(EDGE_VERTICES):
    EDGE_INDEX[(_a, _b)] = _i
    EDGE_INDEX[(_b, _a)] = _i


def face_vertices(face: int) -> Tuple[int, int, int]:
    return tuple(v for v in range(4) if v != face)


def edge_embedding_perm(a: int, b: int) -> Perm4:
    """A permutation with images ``(a, b, c, d)`` where ``c < d`` complete the labels."""
    c, d = (v for v in range(4) if v not in (a, b))
    return Perm4((a, b, c, d))


@dataclass(frozen=True)
class EdgeEmbedding:
    """Position of an edge class inside one tetrahedron.

    ``perm(0) -> perm(1)`` runs along the class direction; walking to the next
    embedding crosses the face opposite ``perm(3)``.
    """

    tet: int
    perm: Perm4

    @property
    def edge(self) -> int:
        return EDGE_INDEX[(self.perm(0), self.perm(1))]


@dataclass(frozen=True)
class EdgeClass:
    index: int
    embeddings: Tuple[EdgeEmbedding, ...]
    boundary: bool

    @property
    def degree(self) -> int:
        return len(self.embeddings)


@dataclass(frozen=True)
class VertexLink:
    """The triangulated link of a vertex class."""

    vertex: int
    triangles: int
    euler: int
    orientable: bool
    closed: bool

    @property
    def kind(self) -> str:
        if self.closed and self.euler == 2:
            return "sphere"
        if self.closed and self.euler == 0 and self.orientable:
            return "torus"
        if not self.closed and self.euler == 1:
            return "disc"
        return "other"

    @property
    def is_ideal(self) -> bool:
        return self.kind not in ("sphere", "disc")


@dataclass(frozen=True)
class VertexClass:
    index: int
    corners: Tuple[Tuple[int, int], ...]
    link: VertexLink

    @property
    def boundary(self) -> bool:
        return not self.link.closed


@dataclass(frozen=True)
class FaceClass:
    index: int
    front: Tuple[int, int]
    back: Optional[Tuple[int, int]]

    @property
    def boundary(self) -> bool:
        return self.back is None


@dataclass(frozen=True)
class BoundaryComponent:
    """A connected component of the real boundary, built from unglued faces."""

    index: int
    faces: Tuple[Tuple[int, int], ...]
    edges: Tuple[int, ...]
    vertices: Tuple[int, ...]

    @property
    def euler(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def is_one_vertex_torus(self) -> bool:
        return len(self.faces) == 2 and len(self.vertices) == 1 and self.euler == 0


@dataclass(frozen=True)
class Skeleton:
    tet_count: int
    edge_of: Tuple[Tuple[int, ...], ...]
    edge_sign: Tuple[Tuple[int, ...], ...]
    vertex_of: Tuple[Tuple[int, ...], ...]
    face_of: Tuple[Tuple[int, ...], ...]
    edges: Tuple[EdgeClass, ...]
    vertices: Tuple[VertexClass, ...]
    faces: Tuple[FaceClass, ...]
    boundary: Tuple[BoundaryComponent, ...]

    def edge_class_of(self, tet: int, a: int, b: int) -> int:
        return self.edge_of[tet][EDGE_INDEX[(a, b)]]

    def edge_direction(self, tet: int, a: int, b: int) -> int:
        """+1 if ``a -> b`` in ``tet`` runs along its class direction, else -1."""
        sign = self.edge_sign[tet][EDGE_INDEX[(a, b)]]
        return sign if a < b else -sign

    def degrees(self) -> List[int]:
        return [e.degree for e in self.edges]

    def interior_edges(self) -> List[int]:
        return [e.index for e in self.edges if not e.boundary]

    def interior_faces(self) -> List[int]:
        return [f.index for f in self.faces if not f.boundary]

    def ideal_vertices(self) -> List[int]:
        return [v.index for v in self.vertices if v.link.is_ideal]

    def links(self) -> List[VertexLink]:
        return [v.link for v in self.vertices]


def _edge_classes(t: Triangulation):
    n = t.tet_count
    edge_of = [[-1] * 6 for _ in range(n)]
    edge_sign = [[0] * 6 for _ in range(n)]
    classes = []
    for tet in range(n):
        for e in range(6):
            if edge_of[tet][e] >= 0:
                continue
            index = len(classes)
            edge_of[tet][e] = index
            edge_sign[tet][e] = 1
            stack = [(tet, e)]
            boundary = False
            while stack:
                ct, ce = stack.pop()
                a, b = EDGE_VERTICES[ce]
                sign = edge_sign[ct][ce]
                for face in (v for v in range(4) if v not in (a, b)):
                    g = t.adjacent(ct, face)
                    if g is None:
                        boundary = True
                        continue
                    partner, perm = g
                    na, nb = perm(a), perm(b)
                    ne = EDGE_INDEX[(na, nb)]
                    nsign = sign if na < nb else -sign
                    if edge_of[partner][ne] < 0:
                        edge_of[partner][ne] = index
                        edge_sign[partner][ne] = nsign
                        stack.append((partner, ne))
                    elif edge_sign[partner][ne] != nsign:
                        raise InvalidEdgeIdentification(
                            f"Edge {EDGE_VERTICES[ne]} of tetrahedron {partner} is identified with itself in reverse"
                        )
            classes.append((tet, e, boundary))

    edges = []
    for index, (tet, e, boundary) in enumerate(classes):
        a, b = EDGE_VERTICES[e]
        edges.append(EdgeClass(index, tuple(_walk_edge(t, tet, a, b, boundary)), boundary))
    return edge_of, edge_sign, edges


def _walk_edge(t: Triangulation, tet: int, a: int, b: int, boundary: bool) -> List[EdgeEmbedding]:
    start = EdgeEmbedding(tet, edge_embedding_perm(a, b))
    if boundary:
        # Rewind to the embedding whose backward face is unglued.
        current = start
        while True:
            p = current.perm
            g = t.adjacent(current.tet, p(2))
            if g is None:
                break
            partner, sigma = g
            current = EdgeEmbedding(partner, Perm4((sigma(p(0)), sigma(p(1)), sigma(p(3)), sigma(p(2)))))
        start = current
    walk = [start]
    current = start
    while True:
        p = current.perm
        g = t.adjacent(current.tet, p(3))
        if g is None:
            break
        partner, sigma = g
        current = EdgeEmbedding(partner, Perm4((sigma(p(0)), sigma(p(1)), sigma(p(3)), sigma(p(2)))))
        if current == start:
            break
        walk.append(current)
    return walk


def _union_find_classes(items: List[Tuple[int, ...]], pairs) -> Dict[Tuple[int, ...], int]:
    parent = {item: item for item in items}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            parent[ry] = rx

    numbering: Dict[Tuple[int, ...], int] = {}
    result = {}
    for item in items:
        root = find(item)
        if root not in numbering:
            numbering[root] = len(numbering)
        result[item] = numbering[root]
    return result


def _vertex_classes(t: Triangulation) -> Tuple[List[List[int]], List[VertexClass]]:
    n = t.tet_count
    corners = [(tet, v) for tet in range(n) for v in range(4)]
    pairs = []
    for tet in range(n):
        for face in range(4):
            g = t.adjacent(tet, face)
            if g is None:
                continue
            partner, perm = g
            for v in face_vertices(face):
                pairs.append(((tet, v), (partner, perm(v))))
    cls = _union_find_classes(corners, pairs)
    vertex_of = [[cls[(tet, v)] for v in range(4)] for tet in range(n)]
    count = len(set(cls.values()))
    members: List[List[Tuple[int, int]]] = [[] for _ in range(count)]
    for corner in corners:
        members[cls[corner]].append(corner)
    vertices = [
        VertexClass(i, tuple(members[i]), _vertex_link(t, i, members[i])) for i in range(count)
    ]
    return vertex_of, vertices


def _vertex_link(t: Triangulation, index: int, corners: List[Tuple[int, int]]) -> VertexLink:
    # Link vertices are the tet-edges (t, v, w) leaving the vertex; sides lie in faces.
    points = [(tet, v, w) for tet, v in corners for w in range(4) if w != v]
    pairs = []
    boundary_sides = 0
    orient: Dict[Tuple[int, int], int] = {corners[0]: 1}
    orientable = True
    queue = [corners[0]]
    for tet, v in corners:
        for face in range(4):
            if face == v:
                continue
            g = t.adjacent(tet, face)
            if g is None:
                boundary_sides += 1
                continue
            partner, perm = g
            for w in face_vertices(face):
                if w != v:
                    pairs.append(((tet, v, w), (partner, perm(v), perm(w))))
    while queue:
        tet, v = queue.pop()
        for face in range(4):
            if face == v:
                continue
            g = t.adjacent(tet, face)
            if g is None:
                continue
            partner, perm = g
            nxt = (partner, perm(v))
            expected = -perm.sign() * orient[(tet, v)]
            if nxt not in orient:
                orient[nxt] = expected
                queue.append(nxt)
            elif orient[nxt] != expected:
                orientable = False
    link_vertices = len(set(_union_find_classes(points, pairs).values()))
    triangles = len(corners)
    sides = (3 * triangles + boundary_sides) // 2
    return VertexLink(
        vertex=index,
        triangles=triangles,
        euler=link_vertices - sides + triangles,
        orientable=orientable,
        closed=boundary_sides == 0,
    )


def _face_classes(t: Triangulation):
    n = t.tet_count
    face_of = [[-1] * 4 for _ in range(n)]
    faces = []
    for tet in range(n):
        for face in range(4):
            if face_of[tet][face] >= 0:
                continue
            g = t.adjacent(tet, face)
            index = len(faces)
            face_of[tet][face] = index
            if g is None:
                faces.append(FaceClass(index, (tet, face), None))
            else:
                partner, perm = g
                face_of[partner][perm(face)] = index
                faces.append(FaceClass(index, (tet, face), (partner, perm(face))))
    return face_of, faces


def boundary_neighbour(t: Triangulation, tet: int, face: int, a: int, b: int) -> Tuple[int, int, int, int]:
    """The boundary face across edge ``ab`` of unglued face ``(tet, face)``.

    Walks around the edge through the interior. Returns ``(tet', face', a', b')``
    with ``a'``, ``b'`` the images of ``a``, ``b``.
    """
    c, d = (v for v in range(4) if v not in (a, b))
    exit_face = d if face == c else c
    while True:
        g = t.adjacent(tet, exit_face)
        if g is None:
            return tet, exit_face, a, b
        partner, sigma = g
        entry = sigma(exit_face)
        tet, a, b = partner, sigma(a), sigma(b)
        c, d = (v for v in range(4) if v not in (a, b))
        exit_face = d if entry == c else c


def _boundary_components(t: Triangulation, edge_of, vertex_of) -> List[BoundaryComponent]:
    remaining = set(t.boundary_faces())
    components = []
    for start in t.boundary_faces():
        if start not in remaining:
            continue
        remaining.discard(start)
        stack, faces = [start], []
        while stack:
            tet, face = stack.pop()
            faces.append((tet, face))
            verts = face_vertices(face)
            for i in range(3):
                for j in range(i + 1, 3):
                    nt, nf, _, _ = boundary_neighbour(t, tet, face, verts[i], verts[j])
                    if (nt, nf) in remaining:
                        remaining.discard((nt, nf))
                        stack.append((nt, nf))
        faces.sort()
        edges = sorted(
            {edge_of[tet][EDGE_INDEX[(a, b)]] for tet, face in faces for a, b in EDGE_VERTICES if face not in (a, b)}
        )
        vertices = sorted({vertex_of[tet][v] for tet, face in faces for v in face_vertices(face)})
        components.append(BoundaryComponent(len(components), tuple(faces), tuple(edges), tuple(vertices)))
    return components


@lru_cache(maxsize=512)
def skeleton(t: Triangulation) -> Skeleton:
    """Computes the skeleton of ``t``.

    Raises:
        InvalidEdgeIdentification: an edge is glued to itself in reverse.
    """
    edge_of, edge_sign, edges = _edge_classes(t)
    vertex_of, vertices = _vertex_classes(t)
    face_of, faces = _face_classes(t)
    boundary = _boundary_components(t, edge_of, vertex_of)
    return Skeleton(
        tet_count=t.tet_count,
        edge_of=tuple(tuple(r) for r in edge_of),
        edge_sign=tuple(tuple(r) for r in edge_sign),
        vertex_of=tuple(tuple(r) for r in vertex_of),
        face_of=tuple(tuple(r) for r in face_of),
        edges=tuple(edges),
        vertices=tuple(vertices),
        faces=tuple(faces),
        boundary=tuple(boundary),
    )


def vertex_links(t: Triangulation) -> List[VertexLink]:
    return skeleton(t).links()


def boundary_components(t: Triangulation) -> List[BoundaryComponent]:
    return list(skeleton(t).boundary)
