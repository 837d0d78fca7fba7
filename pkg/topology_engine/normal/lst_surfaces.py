"""Normal surfaces inside layered solid tori ``LST(1, m)``.

Boundary weights are written in the order of the meridian-disc weights of
the three boundary edges, so the longitudinal edge comes first and the
meridian disc of ``LST(1, m)`` reads ``(1, m, m + 1)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from topology_engine.errors import InvalidParameter, LimitExceeded
from topology_engine.families.marked import LayeredSolidTorus
from topology_engine.normal.analysis import boundary_curves
from topology_engine.normal.coordinates import NormalSurfaceVector, edge_weights, euler_characteristic
from topology_engine.normal.enumeration import EnumerationLimits, fundamental_surfaces
from topology_engine.triangulation.skeleton import skeleton
from topology_engine.triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)

Weights = Tuple[int, int, int]


@dataclass(frozen=True)
class LstSurfaceEntry:
    """One rung of the ladder of surfaces with connected essential boundary."""

    weights: Weights
    euler: int
    kind: str


def _require_lst_1m(l: LayeredSolidTorus) -> int:
    if min(l.j, l.k) != 1 or max(l.j, l.k) < 2:
        raise InvalidParameter(f"Expected LST(1, m) with m >= 2, got LST({l.j}, {l.k})")
    return max(l.j, l.k)


def ordered_boundary_edges(l: LayeredSolidTorus) -> Tuple[int, int, int]:
    """Boundary edge classes sorted by meridian-disc weight."""
    return tuple(sorted(l.weights, key=lambda e: (l.weights[e], e)))


def lst_essential_catalogue(l: LayeredSolidTorus) -> List[LstSurfaceEntry]:
    """Surfaces in ``LST(1, m)`` with connected essential boundary and the largest χ for each.

    The meridian disc comes first. Each further rung lowers the second and
    third weights by two (the second one reflecting through zero) and χ by
    one, ending at ``(1, 1, 0)`` for odd ``m`` and ``(1, 0, 1)`` for even ``m``.

    Raises:
        InvalidParameter: ``l`` is not an ``LST(1, m)`` with ``m >= 2``.
    """
    m = _require_lst_1m(l)
    entries = [LstSurfaceEntry((1, m, m + 1), 1, "disc")]
    for j in range(1, (m + 1) // 2 + 1):
        weights = (1, abs(m - 2 * j), m + 1 - 2 * j)
        kind = "mobius" if j == 1 else "one-sided"
        entries.append(LstSurfaceEntry(weights, 1 - j, kind))
    return entries


def surface_boundary_weights(v: NormalSurfaceVector, l: LayeredSolidTorus) -> Weights:
    weights = edge_weights(v)
    return tuple(weights[e] for e in ordered_boundary_edges(l))


def has_connected_essential_boundary(v: NormalSurfaceVector, l: LayeredSolidTorus) -> bool:
    """One boundary curve whose edge weights are ``(x, y, x + y)`` in some order.

    A trivial curve on a one-vertex torus crosses every edge twice, which
    never has that shape.
    """
    if len(skeleton(l.triangulation).boundary) != 1:
        return False
    if len(boundary_curves(v, 0)) != 1:
        return False
    a, b, c = sorted(surface_boundary_weights(v, l))
    return c > 0 and c == a + b


@lru_cache(maxsize=64)
def _fundamentals(t: Triangulation, limits: EnumerationLimits) -> Tuple[NormalSurfaceVector, ...]:
    return tuple(fundamental_surfaces(t, "standard", "all", limits))


def _best_combination(
    pieces: Sequence[Tuple[Weights, int, int]], target: Weights, quad_masks: Sequence[Dict[int, int]]
) -> Optional[int]:
    """Largest total χ of a compatible multiset of ``pieces`` whose weights add to ``target``.

    ``pieces`` are ``(weights, euler, index)``; ``quad_masks[index]`` maps a
    tetrahedron to the quad type the piece uses there.
    """
    best: Optional[int] = None

    def search(start: int, remaining: Weights, euler: int, quads: Dict[int, int]) -> None:
        nonlocal best
        if not any(remaining):
            if best is None or euler > best:
                best = euler
            return
        for i in range(start, len(pieces)):
            weights, chi, index = pieces[i]
            if any(w > r for w, r in zip(weights, remaining)):
                continue
            used = quad_masks[index]
            if any(quads.get(tet, k) != k for tet, k in used.items()):
                continue
            rest = tuple(r - w for r, w in zip(remaining, weights))
            search(i, rest, euler + chi, {**quads, **used})

    search(0, target, 0, {})
    return best


def extend_into_lst(
    weights: Weights,
    l: LayeredSolidTorus,
    limits: EnumerationLimits = EnumerationLimits(),
) -> Optional[int]:
    """The largest χ of a normal surface in ``l`` with the given boundary weights, or None.

    Fundamental surfaces of ``l`` are combined to meet ``weights`` exactly.
    Results for weight 1 on the longitudinal edge are compared with
    :func:`lst_essential_catalogue`. When ``l`` exceeds the enumeration
    limits the catalogue answers on its own for those weights.

    Raises:
        LimitExceeded: ``l`` is too large to enumerate and the weights fall
            outside the catalogue's reach.
    """
    weights = tuple(weights)
    catalogued = _catalogue_lookup(weights, l)
    try:
        fundamentals = _fundamentals(l.triangulation, limits)
    except LimitExceeded:
        if weights[0] != 1:
            raise
        logger.info("LST(%d, %d) beyond enumeration limits; using the catalogue for %s", l.j, l.k, weights)
        return catalogued

    pieces, quad_masks = [], []
    for index, v in enumerate(fundamentals):
        boundary = surface_boundary_weights(v, l)
        chi = euler_characteristic(v)
        quad_masks.append({tet: v.quad_types(tet)[0] for tet in range(l.triangulation.tet_count) if v.quad_types(tet)})
        if any(boundary):
            pieces.append((boundary, chi, index))
        elif chi > 0:
            logger.warning("LST(%d, %d) carries a closed normal surface with positive χ", l.j, l.k)
    best = _best_combination(pieces, weights, quad_masks)
    if catalogued is not None and _catalogue_applies(weights) and best != catalogued:
        logger.warning(
            "Enumeration gives χ=%s for %s in LST(%d, %d); catalogue gives %s", best, weights, l.j, l.k, catalogued
        )
    logger.debug("extension of %s into LST(%d, %d): %s", weights, l.j, l.k, best)
    return best


def _catalogue_applies(weights: Weights) -> bool:
    a, b, c = sorted(weights)
    return c == a + b and c > 0


def _catalogue_lookup(weights: Weights, l: LayeredSolidTorus) -> Optional[int]:
    if min(l.j, l.k) != 1 or max(l.j, l.k) < 2:
        return None
    for entry in lst_essential_catalogue(l):
        if entry.weights == weights:
            return entry.euler
    return None
