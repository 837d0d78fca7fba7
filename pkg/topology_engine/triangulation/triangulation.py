"""The triangulation data type and its builder.

Face ``i`` of a tetrahedron is the face opposite vertex ``i``. A gluing of
face ``f`` of tetrahedron ``t`` to tetrahedron ``t'`` is stored with the
permutation ``sigma`` that sends vertex labels of ``t`` to those of ``t'``;
the face of ``t'`` that is used is ``sigma(f)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from topology_engine.errors import (
    FaceGluedToItselfIdentically,
    IndexOutOfRange,
    NonInvolutiveGluing,
)
from topology_engine.triangulation.perm import IDENTITY, ORDERED, Perm4

Gluing = Optional[Tuple[int, Perm4]]
GluingRow = Tuple[int, int, int, Perm4]


@dataclass(frozen=True)
class Triangulation:
    """An immutable generalized triangulation of a 3-pseudo-manifold."""

    tet_count: int
    gluings: Tuple[Tuple[Gluing, Gluing, Gluing, Gluing], ...]

    def adjacent(self, tet: int, face: int) -> Gluing:
        return self.gluings[tet][face]

    def is_boundary_face(self, tet: int, face: int) -> bool:
        return self.gluings[tet][face] is None

    def boundary_faces(self) -> List[Tuple[int, int]]:
        return [(t, f) for t in range(self.tet_count) for f in range(4) if self.gluings[t][f] is None]

    def rows(self) -> List[GluingRow]:
        """Every gluing once, from the lexicographically smaller side."""
        out = []
        for t in range(self.tet_count):
            for f in range(4):
                g = self.gluings[t][f]
                if g is None:
                    continue
                partner, perm = g
                if (t, f) <= (partner, perm(f)):
                    out.append((t, f, partner, perm))
        return out

    def components(self) -> List[List[int]]:
        """Connected components as sorted lists of tetrahedron indices."""
        seen = [False] * self.tet_count
        comps = []
        for start in range(self.tet_count):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], []
            while stack:
                t = stack.pop()
                comp.append(t)
                for g in self.gluings[t]:
                    if g is not None and not seen[g[0]]:
                        seen[g[0]] = True
                        stack.append(g[0])
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_closed(self) -> bool:
        return not self.boundary_faces()


class TriangulationBuilder:
    """Mutable assembly area for a triangulation, checked on every join."""

    def __init__(self, tet_count: int = 0):
        self._gluings: List[List[Gluing]] = [[None] * 4 for _ in range(tet_count)]

    @property
    def tet_count(self) -> int:
        return len(self._gluings)

    def new_tet(self) -> int:
        self._gluings.append([None] * 4)
        return len(self._gluings) - 1

    def add(self, triangulation: Triangulation) -> int:
        """Copies a whole triangulation in and returns the index offset."""
        offset = self.tet_count
        for _ in range(triangulation.tet_count):
            self.new_tet()
        for t, f, p, perm in triangulation.rows():
            self.join(t + offset, f, p + offset, perm)
        return offset

    def adjacent(self, tet: int, face: int) -> Gluing:
        return self._gluings[tet][face]

    def join(self, tet: int, face: int, partner: int, perm: Perm4) -> None:
        for index in (tet, partner):
            if not 0 <= index < self.tet_count:
                raise IndexOutOfRange(f"Tetrahedron {index} outside 0..{self.tet_count - 1}")
        if not 0 <= face <= 3:
            raise IndexOutOfRange(f"Face {face} outside 0..3")
        other = perm(face)
        if partner == tet and other == face:
            raise FaceGluedToItselfIdentically(f"Face {face} of tetrahedron {tet} glued to itself")
        inverse = perm.inverse()
        for (a, fa, b, s) in ((tet, face, partner, perm), (partner, other, tet, inverse)):
            current = self._gluings[a][fa]
            if current is not None and current != (b, s):
                raise NonInvolutiveGluing(
                    f"Face {fa} of tetrahedron {a} already glued to {current[0]} ({current[1]})"
                )
        self._gluings[tet][face] = (partner, perm)
        self._gluings[partner][other] = (tet, inverse)

    def unjoin(self, tet: int, face: int) -> None:
        g = self._gluings[tet][face]
        if g is None:
            return
        partner, perm = g
        self._gluings[tet][face] = None
        self._gluings[partner][perm(face)] = None

    def build(self) -> Triangulation:
        return Triangulation(
            tet_count=len(self._gluings),
            gluings=tuple(tuple(row) for row in self._gluings),
        )


def build_triangulation(tet_count: int, rows: Iterable[GluingRow]) -> Triangulation:
    """Builds a triangulation from gluing rows, completing inverse entries.

    Raises:
        IndexOutOfRange: a tetrahedron or face index is out of range.
        NonInvolutiveGluing: two rows disagree about a face.
        FaceGluedToItselfIdentically: a face is paired with itself.
    """
    builder = TriangulationBuilder(tet_count)
    for tet, face, partner, perm in rows:
        builder.join(tet, face, partner, perm)
    return builder.build()


def relabel(
    t: Triangulation, tet_map: Sequence[int], vertex_maps: Sequence[Perm4]
) -> Triangulation:
    """Renames tetrahedron ``i`` to ``tet_map[i]`` and its vertex ``v`` to ``vertex_maps[i](v)``."""
    builder = TriangulationBuilder(t.tet_count)
    for tet, face, partner, perm in t.rows():
        vi, vj = vertex_maps[tet], vertex_maps[partner]
        builder.join(tet_map[tet], vi(face), tet_map[partner], vj * perm * vi.inverse())
    return builder.build()


def random_relabel(
    t: Triangulation, rng: np.random.Generator
) -> Tuple[Triangulation, List[int], List[Perm4]]:
    tet_map = [int(i) for i in rng.permutation(t.tet_count)]
    vertex_maps = [ORDERED[int(rng.integers(24))] for _ in range(t.tet_count)]
    return relabel(t, tet_map, vertex_maps), tet_map, vertex_maps


def disjoint_union(parts: Sequence[Triangulation]) -> Triangulation:
    builder = TriangulationBuilder()
    for part in parts:
        builder.add(part)
    return builder.build()


def single_tetrahedron() -> Triangulation:
    return TriangulationBuilder(1).build()


def restrict(t: Triangulation, tets: Sequence[int]) -> Triangulation:
    """The tetrahedra ``tets`` (renumbered in the given order) and the gluings among them."""
    index = {tet: i for i, tet in enumerate(tets)}
    builder = TriangulationBuilder(len(tets))
    for tet, face, partner, perm in t.rows():
        if tet in index and partner in index:
            builder.join(index[tet], face, index[partner], perm)
    return builder.build()


__all__ = [
    "IDENTITY",
    "Triangulation",
    "TriangulationBuilder",
    "build_triangulation",
    "relabel",
    "random_relabel",
    "disjoint_union",
    "single_tetrahedron",
    "restrict",
]
