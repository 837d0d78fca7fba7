"""Vertex and fundamental normal surfaces.

Vertex surfaces come from the double description method run over the
nonnegative orthant, one matching equation at a time, discarding any ray
that carries two quad types in one tetrahedron. Fundamental surfaces are
the Hilbert basis of the admissible cone: every maximal family of
compatible vertex surfaces spans a cone, each simplicial subcone
contributes the lattice points of its half-open parallelepiped, and the
candidates that do not dominate another candidate are kept.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from math import gcd
from typing import Dict, Iterator, List, Sequence, Set, Tuple

from sympy import Rational, floor

from topology_engine.errors import BudgetExhausted, InvalidParameter, LimitExceeded, TopologyEngineError
from topology_engine.homology.smith import integer_rank, smith_normal_form
from topology_engine.normal.coordinates import NormalSurfaceVector, matching_matrix, width
from topology_engine.triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)

FILTERS = ("closed", "with-boundary", "all")
Ray = Tuple[int, ...]


@dataclass(frozen=True)
class EnumerationLimits:
    """Size limits for enumeration.

    Attributes:
        max_tets: Largest triangulation enumerated without ``allow_long``.
        hilbert_budget: Cap on subcones plus lattice points visited while
            building a Hilbert basis.
        allow_long: Lifts ``max_tets``.
    """

    max_tets: int = 8
    hilbert_budget: int = 200_000
    allow_long: bool = False


def _check_limits(t: Triangulation, limits: EnumerationLimits) -> None:
    if t.tet_count > limits.max_tets and not limits.allow_long:
        raise LimitExceeded(
            f"Enumeration limited to {limits.max_tets} tetrahedra, triangulation has {t.tet_count}"
        )


def _quad_masks(t: Triangulation, system: str) -> List[int]:
    step, first = (7, 4) if system == "standard" else (3, 0)
    return [sum(1 << (step * tet + first + k) for k in range(3)) for tet in range(t.tet_count)]


def _allowed_coordinates(t: Triangulation, system: str, surface_filter: str) -> List[int]:
    """Coordinates a surface may use; closed surfaces avoid pieces meeting boundary faces."""
    step = width(system)
    if surface_filter != "closed":
        return list(range(step * t.tet_count))
    allowed = []
    for tet in range(t.tet_count):
        open_faces = [f for f in range(4) if t.is_boundary_face(tet, f)]
        if system == "standard":
            allowed.extend(7 * tet + v for v in range(4) if all(f == v for f in open_faces))
        if not open_faces:
            allowed.extend(step * tet + (step - 3) + k for k in range(3))
    return sorted(allowed)


def _support(ray: Ray) -> int:
    mask = 0
    for i, x in enumerate(ray):
        if x:
            mask |= 1 << i
    return mask


def _compatible(support: int, quad_masks: Sequence[int]) -> bool:
    return all(bin(support & m).count("1") <= 1 for m in quad_masks)


def _primitive(vector: Sequence[int]) -> Ray:
    g = 0
    for x in vector:
        g = gcd(g, abs(x))
    return tuple(x // g for x in vector) if g > 1 else tuple(vector)


def _double_description(
    matrix: Sequence[Sequence[int]], allowed: Sequence[int], size: int, quad_masks: Sequence[int]
) -> List[Ray]:
    rays: List[Ray] = []
    for i in allowed:
        unit = [0] * size
        unit[i] = 1
        rays.append(tuple(unit))
    full = (1 << size) - 1
    for row_index, row in enumerate(matrix):
        if not any(row[i] for i in allowed):
            continue
        dots = [sum(row[i] * r[i] for i in allowed) for r in rays]
        zeros = [full & ~_support(r) for r in rays]
        positive = [i for i, d in enumerate(dots) if d > 0]
        negative = [i for i, d in enumerate(dots) if d < 0]
        kept = [rays[i] for i, d in enumerate(dots) if d == 0]
        for p in positive:
            for n in negative:
                if not _compatible(_support(rays[p]) | _support(rays[n]), quad_masks):
                    continue
                common = zeros[p] & zeros[n]
                if any(r not in (p, n) and zeros[r] & common == common for r in range(len(rays))):
                    continue
                combined = [dots[p] * b - dots[n] * a for a, b in zip(rays[p], rays[n])]
                kept.append(_primitive(combined))
        rays = kept
        logger.debug("equation %d: %d rays", row_index, len(rays))
    return sorted(set(rays))


def _verify(t: Triangulation, system: str, vectors: Sequence[Ray]) -> None:
    matrix = matching_matrix(t, system)
    for v in vectors:
        if any(sum(a * b for a, b in zip(row, v)) for row in matrix):
            raise TopologyEngineError(f"Enumerated vector {v} fails the matching equations")


def _apply_filter(t: Triangulation, system: str, surface_filter: str, vectors: List[Ray]) -> List[Ray]:
    if surface_filter != "with-boundary":
        return vectors
    closed = set(_allowed_coordinates(t, system, "closed"))
    return [v for v in vectors if any(x and i not in closed for i, x in enumerate(v))]


def _check_arguments(system: str, surface_filter: str) -> None:
    width(system)
    if surface_filter not in FILTERS:
        raise InvalidParameter(f"Unknown surface filter {surface_filter}; expected one of {FILTERS}")


def vertex_surfaces(
    t: Triangulation,
    system: str = "standard",
    surface_filter: str = "all",
    limits: EnumerationLimits = EnumerationLimits(),
) -> List[NormalSurfaceVector]:
    """Admissible vertex surfaces, as primitive vectors in lexicographic order.

    Raises:
        LimitExceeded: the triangulation is larger than ``limits`` allow.
    """
    _check_arguments(system, surface_filter)
    _check_limits(t, limits)
    if t.tet_count == 0:
        return []
    rays = _vertex_rays(t, system, surface_filter)
    rays = _apply_filter(t, system, surface_filter, rays)
    logger.info("%d vertex surfaces (%s, %s) over %d tetrahedra", len(rays), system, surface_filter, t.tet_count)
    return [NormalSurfaceVector(t, r, system) for r in rays]


def _vertex_rays(t: Triangulation, system: str, surface_filter: str) -> List[Ray]:
    size = width(system) * t.tet_count
    allowed = _allowed_coordinates(t, system, surface_filter)
    rays = _double_description(matching_matrix(t, system), allowed, size, _quad_masks(t, system))
    _verify(t, system, rays)
    return rays


# Hilbert basis


def _maximal_compatible_families(rays: Sequence[Ray], quad_masks: Sequence[int]) -> List[Tuple[int, ...]]:
    supports = [_support(r) for r in rays]
    neighbours: Dict[int, Set[int]] = {
        i: {j for j in range(len(rays)) if j != i and _compatible(supports[i] | supports[j], quad_masks)}
        for i in range(len(rays))
    }
    families: List[Tuple[int, ...]] = []

    def extend(chosen: Set[int], candidates: Set[int], excluded: Set[int]) -> None:
        if not candidates and not excluded:
            families.append(tuple(sorted(chosen)))
            return
        for v in sorted(candidates):
            extend(chosen | {v}, candidates & neighbours[v], excluded & neighbours[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    extend(set(), set(range(len(rays))), set())
    return families


def _parallelepiped_points(rays: Sequence[Ray]) -> Iterator[Ray]:
    """Nonzero lattice points of ``{sum(c_i * r_i) : 0 <= c_i < 1}`` for independent ``rays``."""
    size = len(rays[0])
    columns = [[r[i] for r in rays] for i in range(size)]
    form = smith_normal_form(columns)
    diagonal = form.diagonal
    for residues in product(*(range(d) for d in diagonal)):
        if not any(residues):
            continue
        mu = [Rational(a, d) for a, d in zip(residues, diagonal)]
        lam = [sum(v * m for v, m in zip(row, mu)) for row in form.V]
        lam = [c - floor(c) for c in lam]
        point = [sum(c * r[i] for c, r in zip(lam, rays)) for i in range(size)]
        yield tuple(int(x) for x in point)


def _dominates(big: Ray, small: Ray) -> bool:
    return big != small and all(b >= s for b, s in zip(big, small))


def fundamental_surfaces(
    t: Triangulation,
    system: str = "standard",
    surface_filter: str = "all",
    limits: EnumerationLimits = EnumerationLimits(),
) -> List[NormalSurfaceVector]:
    """The Hilbert basis of the admissible cone, in lexicographic order.

    Raises:
        LimitExceeded: the triangulation is larger than ``limits`` allow.
        BudgetExhausted: the search visited more than ``limits.hilbert_budget``
            subcones and lattice points.
    """
    _check_arguments(system, surface_filter)
    _check_limits(t, limits)
    if t.tet_count == 0:
        return []
    cone_filter = "closed" if surface_filter == "closed" else "all"
    rays = _vertex_rays(t, system, cone_filter)
    quad_masks = _quad_masks(t, system)
    candidates: Set[Ray] = set(rays)
    spent = 0
    for family in _maximal_compatible_families(rays, quad_masks):
        members = [rays[i] for i in family]
        rank = integer_rank([list(r) for r in members])
        for subset in combinations(members, rank):
            spent += 1
            if len(subset) < 2 or integer_rank([list(r) for r in subset]) < rank:
                continue
            for point in _parallelepiped_points(subset):
                spent += 1
                candidates.add(point)
            if spent > limits.hilbert_budget:
                raise BudgetExhausted(
                    f"Hilbert basis search passed {limits.hilbert_budget} steps with {len(candidates)} candidates"
                )
    basis = sorted(c for c in candidates if not any(_dominates(c, other) for other in candidates))
    _verify(t, system, basis)
    basis = _apply_filter(t, system, surface_filter, basis)
    logger.info("%d fundamental surfaces from %d candidates, %d steps", len(basis), len(candidates), spent)
    return [NormalSurfaceVector(t, b, system) for b in basis]
