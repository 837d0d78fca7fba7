"""Normal surface coordinates, matching equations and linear invariants.

Standard coordinates hold seven numbers per tetrahedron: triangles
t0..t3 (cutting off vertex i) followed by the quadrilaterals q01/23,
q02/13, q03/12. Quad coordinates keep only the last three.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from topology_engine.errors import IncompatibleQuadTypes, InconsistentWeights, InvalidParameter, NotAdmissible
from topology_engine.homology.smith import IntMatrix
from topology_engine.triangulation.skeleton import EDGE_VERTICES, face_vertices, skeleton
from topology_engine.triangulation.triangulation import Triangulation

SYSTEMS = ("standard", "quad")
QUAD_NAMES = ("q01/23", "q02/13", "q03/12")
PIECE_NAMES = ("t0", "t1", "t2", "t3") + QUAD_NAMES


def quad_type(a: int, b: int) -> int:
    """The quad type whose two sides are ``{a, b}`` and its complement."""
    other = b if a == 0 else a if b == 0 else None
    if other is None:
        other = ({1, 2, 3} - {a, b}).pop()
    return other - 1


def quad_sides(k: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    low = (0, k + 1)
    high = tuple(v for v in (1, 2, 3) if v != k + 1)
    return low, high


def separating_quads(a: int, b: int) -> Tuple[int, int]:
    """The two quad types that meet edge ``ab``."""
    own = quad_type(a, b)
    return tuple(k for k in range(3) if k != own)


def width(system: str) -> int:
    if system not in SYSTEMS:
        raise InvalidParameter(f"Unknown coordinate system: {system}")
    return 7 if system == "standard" else 3


@dataclass(frozen=True)
class NormalSurfaceVector:
    triangulation: Triangulation
    coords: Tuple[int, ...]
    system: str = "standard"

    def __post_init__(self):
        expected = width(self.system) * self.triangulation.tet_count
        if len(self.coords) != expected:
            raise InvalidParameter(f"Expected {expected} coordinates, got {len(self.coords)}")

    @classmethod
    def from_pieces(cls, t: Triangulation, pieces: Dict[Tuple[int, str], int]) -> "NormalSurfaceVector":
        """Builds a standard vector from ``{(tet, "t0" | "q03/12" | ...): count}``."""
        coords = [0] * (7 * t.tet_count)
        for (tet, name), count in pieces.items():
            coords[7 * tet + PIECE_NAMES.index(name)] += count
        return cls(t, tuple(coords))

    def triangles(self, tet: int, v: int) -> int:
        if self.system != "standard":
            return 0
        return self.coords[7 * tet + v]

    def quads(self, tet: int, k: int) -> int:
        offset = 4 if self.system == "standard" else 0
        return self.coords[width(self.system) * tet + offset + k]

    def quad_types(self, tet: int) -> List[int]:
        return [k for k in range(3) if self.quads(tet, k)]

    def arcs(self, tet: int, face: int, v: int) -> int:
        """Normal arcs in ``face`` of ``tet`` cutting off vertex ``v``."""
        return self.triangles(tet, v) + self.quads(tet, quad_type(v, face))

    def pieces(self) -> Dict[Tuple[int, str], int]:
        out = {}
        for tet in range(self.triangulation.tet_count):
            for i, name in enumerate(PIECE_NAMES):
                count = self.triangles(tet, i) if i < 4 else self.quads(tet, i - 4)
                if count:
                    out[(tet, name)] = count
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def scaled(self, factor: int) -> "NormalSurfaceVector":
        return NormalSurfaceVector(self.triangulation, tuple(factor * c for c in self.coords), self.system)


def matching_matrix(t: Triangulation, system: str = "standard") -> IntMatrix:
    """Matching equations as rows over the chosen coordinates."""
    w = width(system)
    n = w * t.tet_count
    sk = skeleton(t)
    rows: IntMatrix = []
    if system == "standard":
        for f in sk.faces:
            if f.boundary:
                continue
            tet, face = f.front
            partner, sigma = t.adjacent(tet, face)
            for v in face_vertices(face):
                row = [0] * n
                row[7 * tet + v] += 1
                row[7 * tet + 4 + quad_type(v, face)] += 1
                row[7 * partner + sigma(v)] -= 1
                row[7 * partner + 4 + quad_type(sigma(v), sigma(face))] -= 1
                rows.append(row)
        return rows
    for e in sk.edges:
        if e.boundary:
            continue
        row = [0] * n
        for emb in e.embeddings:
            p = emb.perm
            row[3 * emb.tet + quad_type(p(0), p(2))] += 1
            row[3 * emb.tet + quad_type(p(0), p(3))] -= 1
        rows.append(row)
    return rows


def satisfies_matching(v: NormalSurfaceVector) -> bool:
    return all(
        sum(a * b for a, b in zip(row, v.coords)) == 0
        for row in matching_matrix(v.triangulation, v.system)
    )


def is_admissible(v: NormalSurfaceVector) -> bool:
    """Nonnegative, matching, and at most one quad type per tetrahedron."""
    if any(c < 0 for c in v.coords):
        return False
    if any(len(v.quad_types(tet)) > 1 for tet in range(v.triangulation.tet_count)):
        return False
    return satisfies_matching(v)


def _require_standard_admissible(v: NormalSurfaceVector) -> None:
    if v.system != "standard":
        raise InvalidParameter("This invariant needs standard coordinates")
    if not is_admissible(v):
        raise NotAdmissible("Vector is not an admissible normal surface")


def tet_edge_weight(v: NormalSurfaceVector, tet: int, a: int, b: int) -> int:
    return v.triangles(tet, a) + v.triangles(tet, b) + sum(v.quads(tet, k) for k in separating_quads(a, b))


def edge_weights(v: NormalSurfaceVector) -> List[int]:
    """Weight of each edge class, checked across every incidence.

    Raises:
        InconsistentWeights: two incidences of one class disagree.
    """
    _require_standard_admissible(v)
    return _edge_weights_unchecked(v)


def _edge_weights_unchecked(v: NormalSurfaceVector) -> List[int]:
    t = v.triangulation
    sk = skeleton(t)
    weights: List[int] = [-1] * len(sk.edges)
    for tet in range(t.tet_count):
        for e, (a, b) in enumerate(EDGE_VERTICES):
            cls = sk.edge_of[tet][e]
            w = tet_edge_weight(v, tet, a, b)
            if weights[cls] < 0:
                weights[cls] = w
            elif weights[cls] != w:
                raise InconsistentWeights(f"Edge class {cls} has weights {weights[cls]} and {w}")
    return weights


def arc_total(v: NormalSurfaceVector) -> int:
    """Normal arcs counted once per face class."""
    total = 0
    for f in skeleton(v.triangulation).faces:
        tet, face = f.front
        total += sum(v.arcs(tet, face, x) for x in face_vertices(face))
    return total


def piece_total(v: NormalSurfaceVector) -> int:
    return sum(v.coords) if v.system == "standard" else 0


def euler_characteristic(v: NormalSurfaceVector) -> int:
    """Points on edges minus arcs plus pieces."""
    _require_standard_admissible(v)
    return sum(_edge_weights_unchecked(v)) - arc_total(v) + piece_total(v)


def haken_sum(
    a: NormalSurfaceVector, b: NormalSurfaceVector, wa: int = 1, wb: int = 1
) -> NormalSurfaceVector:
    """The vector ``wa * a + wb * b`` of two compatible surfaces.

    Raises:
        InvalidParameter: a weight is not positive or the triangulations differ.
        IncompatibleQuadTypes: some tetrahedron carries different quad types.
    """
    if wa <= 0 or wb <= 0:
        raise InvalidParameter(f"Haken sum weights must be positive, got {wa} and {wb}")
    if a.triangulation != b.triangulation or a.system != b.system:
        raise InvalidParameter("Haken sum needs vectors over the same triangulation and system")
    for tet in range(a.triangulation.tet_count):
        if len(set(a.quad_types(tet)) | set(b.quad_types(tet))) > 1:
            raise IncompatibleQuadTypes(f"Tetrahedron {tet} carries quad types {a.quad_types(tet)} and {b.quad_types(tet)}")
    coords = tuple(wa * x + wb * y for x, y in zip(a.coords, b.coords))
    return NormalSurfaceVector(a.triangulation, coords, a.system)


def vertex_link_vector(t: Triangulation, vertex: int) -> NormalSurfaceVector:
    """One triangle at every corner of the vertex class."""
    sk = skeleton(t)
    coords = [0] * (7 * t.tet_count)
    for tet, v in sk.vertices[vertex].corners:
        coords[7 * tet + v] = 1
    return NormalSurfaceVector(t, tuple(coords))


def quad_surface_vector(t: Triangulation, quads: Sequence[int]) -> NormalSurfaceVector:
    """One quad of type ``quads[i]`` in tetrahedron ``i``."""
    coords = [0] * (7 * t.tet_count)
    for tet, k in enumerate(quads):
        coords[7 * tet + 4 + k] = 1
    return NormalSurfaceVector(t, tuple(coords))
