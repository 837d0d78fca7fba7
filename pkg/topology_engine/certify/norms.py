"""Norms of the three nonzero mod-2 classes of ``M_{k,n}``.

A surface in ``T'_{k,n}`` splits into a piece in ``T'`` and pieces in the
two layered solid tori. The pieces in ``T'`` come from candidate tables:
boundary edge weights on ``∂1`` and ``∂2`` plus the Euler characteristic.
Each candidate is extended into the layered solid tori and the best total
Euler characteristic gives the norm. Candidate tables are data; a fresh
enumeration of ``T'`` can replace them without touching the pipeline.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from topology_engine.certify.table3 import COMPATIBILITY_CLASSES, combined_row
from topology_engine.errors import InvalidParameter
from topology_engine.families.assembly import T_PRIME_FILLINGS
from topology_engine.families.layered import lst
from topology_engine.normal.enumeration import EnumerationLimits
from topology_engine.normal.lst_surfaces import extend_into_lst

logger = logging.getLogger(__name__)

BOUNDARY_EDGES = {"∂1": ("e0", "e2", "e4"), "∂2": ("e18", "e19", "e20")}
NORM_LIMITS = EnumerationLimits(max_tets=4)

ASSUMPTIONS = (
    "Boundary candidates in T' are the built-in tables, not a fresh fundamental enumeration of T'.",
    "Candidates for the third class are the seven compatibility classes, filtered by weight 1 on both longitudinal edges.",
    "Layered solid tori beyond the enumeration limit are extended through the catalogue of surfaces with connected essential boundary.",
)


@dataclass(frozen=True)
class BoundaryCandidate:
    """A surface piece in ``T'`` meeting one or both boundary tori."""

    weights: Dict[str, Tuple[int, int, int]]
    euler: int
    source: str


ALPHA1_CANDIDATES = (
    BoundaryCandidate({"∂1": (2, 1, 1)}, -1, "fundamental surface with boundary pattern (0, 1, 1) on ∂1"),
    BoundaryCandidate({"∂1": (0, 1, 1)}, -2, "fundamental surface with boundary pattern (0, 1, 1) on ∂1"),
)
ALPHA2_CANDIDATES = (
    BoundaryCandidate({"∂2": (0, 1, 1)}, -1, "fundamental surface with boundary pattern (0, 1, 1) on ∂2"),
    BoundaryCandidate({"∂2": (2, 1, 3)}, -2, "fundamental surface with boundary pattern (0, 1, 1) on ∂2"),
    BoundaryCandidate({"∂2": (2, 1, 1)}, -2, "fundamental surface with boundary pattern (0, 1, 1) on ∂2"),
)


def alpha3_candidates(parameter_range: int = 4) -> List[BoundaryCandidate]:
    """Compatibility-class rows with weight 1 on ``e2`` and ``e19``."""
    out = []
    for cls in COMPATIBILITY_CLASSES:
        for a, b in product(range(parameter_range), repeat=2):
            row = combined_row(cls, a, b)
            if row[1] != 1 or row[4] != 1:
                continue
            candidate = BoundaryCandidate({"∂1": row[0:3], "∂2": row[3:6]}, row[6], f"class {cls.number} at ({a}, {b})")
            if candidate not in out:
                out.append(candidate)
    return out


@dataclass(frozen=True)
class CandidateResult:
    candidate: BoundaryCandidate
    extensions: Dict[str, Optional[int]]

    @property
    def total(self) -> Optional[int]:
        if any(x is None for x in self.extensions.values()):
            return None
        return self.candidate.euler + sum(self.extensions.values())


@dataclass(frozen=True)
class ClassNorm:
    name: str
    results: Tuple[CandidateResult, ...]

    @property
    def norm(self) -> Optional[int]:
        totals = [r.total for r in self.results if r.total is not None]
        return -max(totals) if totals else None

    @property
    def best(self) -> Optional[CandidateResult]:
        ranked = [r for r in self.results if r.total is not None]
        return max(ranked, key=lambda r: r.total) if ranked else None


@dataclass(frozen=True)
class NormReport:
    k: int
    n: int
    classes: Tuple[ClassNorm, ClassNorm, ClassNorm]
    assumptions: Tuple[str, ...] = ASSUMPTIONS

    @property
    def norms(self) -> Tuple[Optional[int], ...]:
        return tuple(c.norm for c in self.classes)

    @property
    def strict_triangle(self) -> bool:
        """``|a3| < |a1| + |a2|``."""
        a1, a2, a3 = self.norms
        return None not in (a1, a2, a3) and a3 < a1 + a2


def lst_order(boundary: str, weights: Tuple[int, int, int]) -> Tuple[int, int, int]:
    """Reorders ``T'`` boundary weights to the meridian-weight order of the filling LST."""
    by_name = dict(zip(BOUNDARY_EDGES[boundary], weights))
    return tuple(by_name[name] for name in T_PRIME_FILLINGS[boundary])


def _evaluate(candidate: BoundaryCandidate, k: int, n: int, limits: EnumerationLimits) -> CandidateResult:
    fillings = {"∂1": lst(1, k - 1), "∂2": lst(1, n)}
    extensions = {}
    for boundary, weights in candidate.weights.items():
        extensions[boundary] = extend_into_lst(lst_order(boundary, weights), fillings[boundary], limits)
    return CandidateResult(candidate, extensions)


def norm_report(k: int, n: int, limits: EnumerationLimits = NORM_LIMITS) -> NormReport:
    """Norms of the three classes of ``M_{k,n}``, e.g. ``(3, 4, 5)`` for ``(5, 7)``.

    Raises:
        InvalidParameter: ``k`` or ``n`` is even or below 3.
    """
    for name, value in (("k", k), ("n", n)):
        if value < 3 or value % 2 == 0:
            raise InvalidParameter(f"{name} must be odd and at least 3, got {value}")
    tables = (("alpha1", ALPHA1_CANDIDATES), ("alpha2", ALPHA2_CANDIDATES), ("alpha3", alpha3_candidates()))
    classes = tuple(
        ClassNorm(name, tuple(_evaluate(c, k, n, limits) for c in candidates)) for name, candidates in tables
    )
    report = NormReport(k, n, classes)
    logger.info("norms for M_{%d,%d}: %s", k, n, report.norms)
    return report
