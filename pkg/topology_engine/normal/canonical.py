"""Canonical normal representatives of mod-2 second homology classes.

A class labels every edge with 0 or 1. Inside one tetrahedron the labels of
its six edges decide the pieces: all zero means nothing, the three edges at
vertex ``v`` means a triangle cutting off ``v``, and the four edges met by a
quadrilateral mean that quadrilateral.
"""

from __future__ import annotations

import logging
from typing import Dict, Tuple

from topology_engine.errors import NoRepresentative
from topology_engine.homology.groups import Z2Class
from topology_engine.normal.coordinates import NormalSurfaceVector, separating_quads, tet_edge_weight
from topology_engine.triangulation.skeleton import EDGE_VERTICES, skeleton
from topology_engine.triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)

Parities = Tuple[int, int, int, int, int, int]


def _piece_parities() -> Dict[Parities, int]:
    """Edge-parity pattern of each single piece, keyed to its standard coordinate."""
    patterns = {}
    for v in range(4):
        patterns[tuple(int(v in edge) for edge in EDGE_VERTICES)] = v
    for k in range(3):
        patterns[tuple(int(k in separating_quads(a, b)) for a, b in EDGE_VERTICES)] = 4 + k
    return patterns


PIECE_PARITIES = _piece_parities()


def canonical_z2_representative(t: Triangulation, c: Z2Class) -> NormalSurfaceVector:
    """The normal surface whose edge weights are exactly the labels of ``c``.

    Raises:
        NoRepresentative: some tetrahedron sees a parity pattern no single
            piece produces, so ``c`` violates face parity.
    """
    sk = skeleton(t)
    if len(c.labelling) != len(sk.edges):
        raise NoRepresentative(f"Labelling has {len(c.labelling)} entries for {len(sk.edges)} edge classes")
    coords = [0] * (7 * t.tet_count)
    for tet in range(t.tet_count):
        pattern = tuple(c.labelling[sk.edge_of[tet][e]] % 2 for e in range(6))
        if not any(pattern):
            continue
        piece = PIECE_PARITIES.get(pattern)
        if piece is None:
            raise NoRepresentative(f"Tetrahedron {tet} has edge parities {pattern}, which no normal piece realizes")
        coords[7 * tet + piece] = 1
    v = NormalSurfaceVector(t, tuple(coords))
    for tet in range(t.tet_count):
        for e, (a, b) in enumerate(EDGE_VERTICES):
            if tet_edge_weight(v, tet, a, b) != c.labelling[sk.edge_of[tet][e]] % 2:
                raise NoRepresentative(f"Pieces in tetrahedron {tet} do not reproduce the labelling")
    logger.debug("canonical representative of %s: %s", c.bits(), v.pieces())
    return v


def is_one_quad_per_tet(v: NormalSurfaceVector) -> bool:
    """Exactly one quadrilateral and no triangles in every tetrahedron."""
    for tet in range(v.triangulation.tet_count):
        if sum(v.triangles(tet, x) for x in range(4)):
            return False
        if sorted(v.quads(tet, k) for k in range(3)) != [0, 0, 1]:
            return False
    return True
