"""Strict angle structures by exact linear programming.

Angles are coefficients of pi, three per tetrahedron in the order of the
edge pairs 01/23, 02/13, 03/12. Writing every angle as ``y + eps`` with
``y >= 0`` turns strict positivity into the maximization of ``eps``; the
structure exists exactly when that optimum is positive. The LP is solved
by a two-phase tableau simplex with Bland's rule over sympy rationals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import Rational

from topology_engine.normal.coordinates import quad_type
from topology_engine.triangulation.skeleton import skeleton
from topology_engine.triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)

Angles = Tuple[Rational, Rational, Rational]
ZERO, ONE, TWO = Rational(0), Rational(1), Rational(2)


@dataclass(frozen=True)
class AngleStructure:
    """Per tetrahedron, three positive rationals summing to one (times pi)."""

    angles: Tuple[Angles, ...]

    def as_strings(self) -> List[List[str]]:
        return [[str(a) for a in tet] for tet in self.angles]


@dataclass(frozen=True)
class AngleSearch:
    """Outcome of the slack maximization.

    ``slack`` is the optimal smallest angle, or None when even the closed
    polytope is empty. ``certificate`` states why no structure exists.
    """

    structure: Optional[AngleStructure]
    slack: Optional[Rational]
    certificate: str = ""

    @property
    def feasible(self) -> bool:
        return self.structure is not None


def angle_equations(t: Triangulation) -> Tuple[List[List[Rational]], List[Rational]]:
    """Rows over the ``3 * tet_count`` angles: tetrahedron sums, then interior edge sums."""
    n = 3 * t.tet_count
    rows, rhs = [], []
    for tet in range(t.tet_count):
        row = [ZERO] * n
        for k in range(3):
            row[3 * tet + k] = ONE
        rows.append(row)
        rhs.append(ONE)
    for edge in skeleton(t).edges:
        if edge.boundary:
            continue
        row = [ZERO] * n
        for emb in edge.embeddings:
            row[3 * emb.tet + quad_type(emb.perm(0), emb.perm(1))] += ONE
        rows.append(row)
        rhs.append(TWO)
    return rows, rhs


def is_angle_structure(t: Triangulation, angles: Sequence[Sequence[Rational]]) -> bool:
    """Checks positivity and every equation exactly."""
    flat = [Rational(a) for tet in angles for a in tet]
    if len(flat) != 3 * t.tet_count or any(a <= 0 for a in flat):
        return False
    rows, rhs = angle_equations(t)
    return all(sum(r * a for r, a in zip(row, flat)) == b for row, b in zip(rows, rhs))


class _Tableau:
    """Rows ``[A | b]`` in canonical form for the current basis."""

    def __init__(self, rows: List[List[Rational]], rhs: List[Rational]):
        self.rows = [list(row) + [b] for row, b in zip(rows, rhs)]
        self.basis: List[int] = []

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else 0

    def pivot(self, r: int, c: int) -> None:
        factor = self.rows[r][c]
        self.rows[r] = [x / factor for x in self.rows[r]]
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                m = row[c]
                self.rows[i] = [x - m * y for x, y in zip(row, self.rows[r])]
        self.basis[r] = c

    def value(self, cost: Sequence[Rational]) -> Rational:
        return sum((cost[b] * row[-1] for b, row in zip(self.basis, self.rows)), ZERO)

    def maximize(self, cost: Sequence[Rational], columns: Sequence[int]) -> None:
        """Bland's rule: lowest-index improving column, lowest-index basic variable on ties."""
        while True:
            entering = None
            for j in columns:
                if j in self.basis:
                    continue
                reduced = cost[j] - sum((cost[b] * row[j] for b, row in zip(self.basis, self.rows)), ZERO)
                if reduced > 0:
                    entering = j
                    break
            if entering is None:
                return
            leaving, best = None, None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leaving]):
                        leaving, best = i, ratio
            if leaving is None:
                raise ArithmeticError("Angle LP is unbounded")
            self.pivot(leaving, entering)

    def solution(self) -> List[Rational]:
        x = [ZERO] * self.width
        for b, row in zip(self.basis, self.rows):
            x[b] = row[-1]
        return x


def _solve(rows: List[List[Rational]], rhs: List[Rational], cost: List[Rational]) -> Optional[List[Rational]]:
    """Maximizes ``cost . z`` subject to ``rows z = rhs`` and ``z >= 0``; None if infeasible."""
    n, m = len(cost), len(rows)
    signed = [(row, b) if b >= 0 else ([-x for x in row], -b) for row, b in zip(rows, rhs)]
    extended = [list(row) + [ONE if i == j else ZERO for j in range(m)] for i, (row, _) in enumerate(signed)]
    tableau = _Tableau(extended, [b for _, b in signed])
    tableau.basis = list(range(n, n + m))

    phase_one = [ZERO] * n + [-ONE] * m
    tableau.maximize(phase_one, range(n + m))
    if tableau.value(phase_one) < 0:
        return None

    for r in range(len(tableau.rows) - 1, -1, -1):
        if tableau.basis[r] < n:
            continue
        column = next((j for j in range(n) if tableau.rows[r][j] != 0), None)
        if column is None:
            del tableau.rows[r]
            del tableau.basis[r]
        else:
            tableau.pivot(r, column)
    tableau.rows = [row[:n] + [row[-1]] for row in tableau.rows]
    tableau.maximize(cost, range(n))
    return tableau.solution()


def find_angle_structure(t: Triangulation) -> AngleSearch:
    """Maximizes the smallest angle over the closed angle polytope."""
    if t.tet_count == 0:
        return AngleSearch(None, None, "empty triangulation")
    rows, rhs = angle_equations(t)
    n = 3 * t.tet_count
    # Columns: y_0 .. y_{n-1}, then eps.
    lifted = [row + [sum(row, ZERO)] for row in rows]
    cost = [ZERO] * n + [ONE]
    z = _solve(lifted, rhs, cost)
    if z is None:
        logger.info("angle polytope of %d tetrahedra is empty", t.tet_count)
        return AngleSearch(None, None, "equations have no nonnegative solution")
    eps = z[-1]
    if eps <= 0:
        logger.info("angle polytope of %d tetrahedra has no interior point", t.tet_count)
        return AngleSearch(None, eps, "every solution has a zero angle (optimal slack 0)")
    values = [y + eps for y in z[:n]]
    structure = AngleStructure(tuple(tuple(values[3 * i : 3 * i + 3]) for i in range(t.tet_count)))
    if not is_angle_structure(t, structure.angles):
        raise ArithmeticError("Simplex returned a point outside the angle polytope")
    logger.debug("angle structure with slack %s", eps)
    return AngleSearch(structure, eps)


def angle_structure_exists(t: Triangulation) -> Optional[AngleStructure]:
    """A strict angle structure on ``t`` if one exists.

    Equations are imposed on interior edges only, so boundary edges of a
    truncated triangulation carry no condition.
    """
    return find_angle_structure(t).structure
