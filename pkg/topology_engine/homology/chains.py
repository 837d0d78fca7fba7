"""Chain complexes of triangulations and the homology computed from them.

Two cell structures are used:

* the dual complex of the truncated manifold: a 0-cell per tetrahedron, a
  1-cell per interior face, a 2-cell per interior edge, and a 3-cell per
  interior material vertex (sphere link);
* the pseudo-manifold itself: vertex, edge and face classes and tetrahedra.

Mod-2 second homology is read through Lefschetz duality as
H^1(M, dM; Z2): a class is a mod-2 labelling of the edge classes that
vanishes on real-boundary edges and sums to zero around every interior
face, taken modulo the coboundaries of interior material vertices. The
labelling is exactly the parity with which a transverse surface meets each
edge, which is the form normal-surface arguments use.
"""

from __future__ import annotations

import logging
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np

from topology_engine.errors import EdgeNotOnBoundary, InvalidParameter, TopologyEngineError
from topology_engine.homology.groups import AbelianGroup, BoundaryPattern, Z2Class, all_nonzero_sums
from topology_engine.homology.smith import (
    IntMatrix,
    gf2_nullspace,
    gf2_rank,
    gf2_reduce,
    gf2_row_reduce,
    integer_rank,
    smith_normal_form,
    zeros,
)
from topology_engine.triangulation.skeleton import Skeleton, face_vertices, skeleton
from topology_engine.triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)

COEFFICIENTS = ("Z", "Z2")
IDEAL_POLICIES = ("truncate", "keep")


def dual_boundary_1(sk: Skeleton) -> IntMatrix:
    """Rows are tetrahedra, columns interior faces; a face runs front to back."""
    faces = [f for f in sk.faces if not f.boundary]
    m = zeros(sk.tet_count, len(faces))
    for col, f in enumerate(faces):
        m[f.back[0]][col] += 1
        m[f.front[0]][col] -= 1
    return m


def dual_boundary_2(sk: Skeleton) -> IntMatrix:
    """Rows are interior faces, columns interior edges (dual discs)."""
    face_col = {f.index: i for i, f in enumerate(f for f in sk.faces if not f.boundary)}
    edges = [e for e in sk.edges if not e.boundary]
    m = zeros(len(face_col), len(edges))
    for col, e in enumerate(edges):
        for emb in e.embeddings:
            crossed = emb.perm(3)
            face = sk.faces[sk.face_of[emb.tet][crossed]]
            sign = 1 if face.front == (emb.tet, crossed) else -1
            m[face_col[face.index]][col] += sign
    return m


def dual_boundary_3(sk: Skeleton) -> IntMatrix:
    """Rows are interior edges, columns interior material vertices; mod 2 only."""
    edges = [e for e in sk.edges if not e.boundary]
    material = [v for v in sk.vertices if v.link.kind == "sphere"]
    m = zeros(len(edges), len(material))
    column = {v.index: i for i, v in enumerate(material)}
    for row, e in enumerate(edges):
        emb = e.embeddings[0]
        for end in (emb.perm(0), emb.perm(1)):
            v = sk.vertex_of[emb.tet][end]
            if v in column:
                m[row][column[v]] += 1
    return m


def simplicial_boundaries(sk: Skeleton) -> Tuple[IntMatrix, IntMatrix]:
    """Boundary maps edges -> vertices and faces -> edges of the pseudo-manifold."""
    d1 = zeros(len(sk.vertices), len(sk.edges))
    for e in sk.edges:
        emb = e.embeddings[0]
        tail, head = emb.perm(0), emb.perm(1)
        d1[sk.vertex_of[emb.tet][head]][e.index] += 1
        d1[sk.vertex_of[emb.tet][tail]][e.index] -= 1
    d2 = zeros(len(sk.edges), len(sk.faces))
    for f in sk.faces:
        tet, face = f.front
        a, b, c = face_vertices(face)
        for (x, y), coeff in (((b, c), 1), ((a, c), -1), ((a, b), 1)):
            d2[sk.edge_class_of(tet, x, y)][f.index] += coeff * sk.edge_direction(tet, x, y)
    return d1, d2


def _h1_from(n1: int, d1: IntMatrix, d2: IntMatrix, coefficients: str) -> AbelianGroup:
    if coefficients == "Z2":
        dim = n1 - gf2_rank(d1) - gf2_rank(d2)
        return AbelianGroup.z2_vector_space(dim)
    r1 = integer_rank(d1)
    if d2 and d2[0]:
        snf = smith_normal_form(d2)
        r2, torsion = snf.rank, snf.torsion()
    else:
        r2, torsion = 0, []
    return AbelianGroup.from_invariants(n1 - r1 - r2, torsion)


def homology_h1(t: Triangulation, coefficients: str = "Z", ideal_policy: str = "truncate") -> AbelianGroup:
    """First homology with integer or mod-2 coefficients.

    With ``truncate``, vertices whose links are not spheres or discs are
    removed, giving the homology of the compact manifold with boundary. With
    ``keep``, the pseudo-manifold's own cell structure is used.
    """
    if coefficients not in COEFFICIENTS:
        raise InvalidParameter(f"Unknown coefficients: {coefficients}")
    if ideal_policy not in IDEAL_POLICIES:
        raise InvalidParameter(f"Unknown ideal vertex policy: {ideal_policy}")
    if t.tet_count == 0:
        return AbelianGroup(0)
    sk = skeleton(t)
    if ideal_policy == "keep":
        d1, d2 = simplicial_boundaries(sk)
        return _h1_from(len(sk.edges), d1, d2, coefficients)
    n1 = len(sk.interior_faces())
    return _h1_from(n1, dual_boundary_1(sk), dual_boundary_2(sk), coefficients)


def betti_z2(t: Triangulation, dimension: int) -> int:
    """Mod-2 Betti number of the truncated manifold from the dual complex."""
    sk = skeleton(t)
    d1, d2, d3 = dual_boundary_1(sk), dual_boundary_2(sk), dual_boundary_3(sk)
    n = [sk.tet_count, len(sk.interior_faces()), len(sk.interior_edges()), len(d3[0]) if d3 else 0]
    ranks = [0, gf2_rank(d1), gf2_rank(d2), gf2_rank(d3), 0]
    if not 0 <= dimension <= 3:
        raise InvalidParameter(f"Dimension {dimension} outside 0..3")
    return n[dimension] - ranks[dimension] - ranks[dimension + 1]


def face_parity_matrix(sk: Skeleton) -> Tuple[np.ndarray, List[int]]:
    """Rows are interior faces, columns the non-boundary edge classes."""
    columns = [e.index for e in sk.edges if not e.boundary]
    position = {e: i for i, e in enumerate(columns)}
    faces = [f for f in sk.faces if not f.boundary]
    m = np.zeros((len(faces), len(columns)), dtype=np.uint8)
    for row, f in enumerate(faces):
        tet, face = f.front
        a, b, c = face_vertices(face)
        for x, y in ((a, b), (a, c), (b, c)):
            e = sk.edge_class_of(tet, x, y)
            if e in position:
                m[row, position[e]] ^= 1
    return m, columns


def _vertex_coboundaries(sk: Skeleton, columns: Sequence[int]) -> np.ndarray:
    position = {e: i for i, e in enumerate(columns)}
    material = [v for v in sk.vertices if v.link.kind == "sphere"]
    rows = np.zeros((len(material), len(columns)), dtype=np.uint8)
    for r, v in enumerate(material):
        for e in sk.edges:
            if e.index not in position:
                continue
            emb = e.embeddings[0]
            ends = [sk.vertex_of[emb.tet][emb.perm(0)], sk.vertex_of[emb.tet][emb.perm(1)]]
            rows[r, position[e.index]] = ends.count(v.index) % 2
    return rows


def h2_z2_basis(t: Triangulation) -> Tuple[AbelianGroup, List[Z2Class]]:
    """Mod-2 second homology with explicit edge-labelling representatives.

    Representatives are reduced against the coboundary space, so the basis
    is deterministic for a given triangulation.
    """
    sk = skeleton(t)
    parity, columns = face_parity_matrix(sk)
    cocycles = gf2_nullspace(parity, len(columns))
    coboundaries = _vertex_coboundaries(sk, columns)
    if len(coboundaries):
        b_echelon, b_pivots = gf2_row_reduce(coboundaries, len(columns))
    else:
        b_echelon, b_pivots = np.zeros((0, len(columns)), dtype=np.uint8), []

    echelon, pivots = b_echelon, list(b_pivots)
    chosen: List[np.ndarray] = []
    for z in cocycles:
        reduced = gf2_reduce(z, echelon, pivots)
        if not reduced.any():
            continue
        chosen.append(gf2_reduce(z, b_echelon, b_pivots))
        stacked = np.vstack([echelon, reduced[None, :]]) if len(echelon) else reduced[None, :]
        echelon, pivots = gf2_row_reduce(stacked, len(columns))

    basis = []
    for vec in chosen:
        labels = [0] * len(sk.edges)
        for col, e in enumerate(columns):
            labels[e] = int(vec[col])
        basis.append(Z2Class(tuple(labels)))

    expected = betti_z2(t, 2)
    if expected != len(basis):
        raise TopologyEngineError(
            f"Mod-2 second homology rank {len(basis)} disagrees with dual complex rank {expected}"
        )
    return AbelianGroup.z2_vector_space(len(basis)), basis


def nonzero_classes(t: Triangulation) -> List[Z2Class]:
    return all_nonzero_sums(h2_z2_basis(t)[1])


def satisfies_face_parity(t: Triangulation, c: Z2Class) -> bool:
    sk = skeleton(t)
    for f in sk.faces:
        tet, face = f.front
        a, b, cc = face_vertices(face)
        total = sum(c.labelling[sk.edge_class_of(tet, x, y)] for x, y in ((a, b), (a, cc), (b, cc)))
        if total % 2:
            return False
    return True


def boundary_pattern(
    c: Z2Class,
    t: Triangulation,
    boundary_edges: Sequence[Sequence[int]],
    edge_map: Optional[Mapping[int, int]] = None,
) -> BoundaryPattern:
    """Parities of ``c`` on the listed boundary edges of ``t``.

    ``c`` may live on a filling of ``t``; ``edge_map`` then sends edge classes
    of ``t`` to those of the filling.

    Raises:
        EdgeNotOnBoundary: a listed edge is interior to ``t``.
    """
    sk = skeleton(t)
    patterns = []
    for component in boundary_edges:
        row = []
        for e in component:
            if not 0 <= e < len(sk.edges) or not sk.edges[e].boundary:
                raise EdgeNotOnBoundary(f"Edge class {e} is not on the boundary")
            target = edge_map[e] if edge_map is not None else e
            row.append(c.labelling[target])
        patterns.append(tuple(row))
    return BoundaryPattern(tuple(patterns))
