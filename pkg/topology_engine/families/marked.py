"""Triangulations carrying named edges, vertex marks and boundary framings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from topology_engine.errors import InvalidParameter
from topology_engine.triangulation.skeleton import skeleton
from topology_engine.triangulation.triangulation import Triangulation

# Edge vectors are coefficient tuples over the component's edges in order.
EdgeVector = Tuple[int, ...]


@dataclass(frozen=True)
class FramedTorusBoundary:
    """A boundary torus with meridian and longitude written over its edge classes.

    Attributes:
        component: Index into ``boundary_components(t)``.
        edges: Edge classes of the torus in documented order.
        mu: Meridian as a cycle over ``edges``.
        lam: Longitude as a cycle over ``edges``.
        names: Optional display names for ``edges``.
    """

    component: int
    edges: Tuple[int, ...]
    mu: EdgeVector
    lam: EdgeVector
    names: Tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.mu) != len(self.edges) or len(self.lam) != len(self.edges):
            raise InvalidParameter("Framing vectors must have one entry per boundary edge")

    def position(self, edge: int) -> int:
        return self.edges.index(edge)

    def name_of(self, edge: int) -> str:
        return self.names[self.position(edge)] if self.names else f"e{edge}"


@dataclass(frozen=True)
class MarkedTriangulation:
    """A triangulation plus the labels the constructions attach to it."""

    triangulation: Triangulation
    edges: Dict[str, int] = field(default_factory=dict)
    framings: Dict[str, FramedTorusBoundary] = field(default_factory=dict)
    vertices: Dict[str, int] = field(default_factory=dict)

    def edge(self, name: str) -> int:
        try:
            return self.edges[name]
        except KeyError:
            raise InvalidParameter(f"No edge named {name}; have {sorted(self.edges)}") from None


@dataclass(frozen=True)
class MarkedSolidTorus:
    """The layered solid torus ``T_m`` with its longitude edge.

    ``identified_edges`` records edge identifications that are not induced
    by face gluings; only ``T_1`` has one.
    """

    triangulation: Triangulation
    m: int
    longitude: int
    boundary_edges: Tuple[int, ...]
    boundary_faces: Tuple[Tuple[int, int], ...]
    identified_edges: Tuple[Tuple[Tuple[int, int, int], Tuple[int, int, int]], ...] = ()


@dataclass(frozen=True)
class LayeredSolidTorus:
    """``LST(j, k)`` with the meridian-disc weight of each boundary edge.

    Attributes:
        weights: Boundary edge class -> meridian-disc weight.
        roles: ``"shared"``, ``"a"``, ``"b"`` -> boundary edge class.
        top: The tetrahedron carrying both boundary faces.
        boundary_faces: The two boundary faces of ``top``.
    """

    triangulation: Triangulation
    j: int
    k: int
    weights: Dict[int, int]
    roles: Dict[str, int]
    top: int = 0
    boundary_faces: Tuple[Tuple[int, int], ...] = ((0, 2), (0, 3))

    def edge_with_weight(self, weight: int) -> Optional[int]:
        hits = [e for e, w in sorted(self.weights.items()) if w == weight]
        return hits[0] if len(hits) == 1 else None

    @property
    def meridional_edge(self) -> Optional[int]:
        return self.edge_with_weight(0)

    @property
    def longitudinal_edge(self) -> Optional[int]:
        if min(self.j, self.k) != 1 or max(self.j, self.k) < 2:
            return None
        return self.edge_with_weight(1)

    def boundary_weights(self) -> Tuple[int, int, int]:
        """Meridian-disc weights sorted ascending, e.g. ``(1, 4, 5)``."""
        return tuple(sorted(self.weights.values()))


def boundary_edge_classes(t: Triangulation) -> Tuple[int, ...]:
    return tuple(e.index for e in skeleton(t).edges if e.boundary)
