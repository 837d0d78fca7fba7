"""Compatibility classes of candidate surfaces in ``T'`` for the third class.

Each class is a Haken sum ``w1 * H1 + w2 * H2`` of fundamental surfaces
(class 1 is a single surface). A row lists the edge weights on
``e0, e2, e4`` (boundary ``∂1``), on ``e18, e19, e20`` (boundary ``∂2``)
and the Euler characteristic. Weights and combined rows are linear forms
``a*k + b*l + c`` in the summand parameters.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import List, Tuple

logger = logging.getLogger(__name__)

COLUMNS = ("w(e0)", "w(e2)", "w(e4)", "w(e18)", "w(e19)", "w(e20)", "chi")
Row = Tuple[int, int, int, int, int, int, int]
Linear = Tuple[int, int, int]


@dataclass(frozen=True)
class CompatibilityClass:
    number: int
    summands: Tuple[Tuple[Row, Linear], ...]
    printed: Tuple[Linear, ...]


def _const(*values: int) -> Tuple[Linear, ...]:
    return tuple((0, 0, v) for v in values)


ODD_K, ODD_L, EVEN_L = (2, 0, 1), (0, 2, 1), (0, 2, 0)

COMPATIBILITY_CLASSES: Tuple[CompatibilityClass, ...] = (
    CompatibilityClass(1, (((2, 1, 1, 0, 1, 1, -2), (0, 0, 1)),), _const(2, 1, 1, 0, 1, 1, -2)),
    CompatibilityClass(
        2,
        (((2, 0, 2, 2, 1, 1, -2), ODD_K), ((2, 1, 3, 2, 2, 0, -3), ODD_L)),
        ((4, 4, 4), (0, 2, 1), (4, 6, 5), (4, 4, 4), (2, 4, 3), (2, 0, 1), (-4, -6, -5)),
    ),
    CompatibilityClass(
        3,
        (((2, 0, 2, 2, 1, 1, -2), ODD_K), ((2, 1, 1, 2, 0, 2, -1), ODD_L)),
        ((4, 4, 4), (0, 2, 1), (4, 2, 3), (4, 4, 4), (2, 0, 1), (2, 4, 3), (-4, -2, -3)),
    ),
    CompatibilityClass(
        4,
        (((0, 1, 1, 0, 1, 1, -1), ODD_K), ((2, 2, 0, 2, 1, 3, -2), EVEN_L)),
        ((0, 4, 0), (2, 4, 1), (2, 0, 1), (0, 4, 0), (2, 2, 1), (2, 6, 1), (-2, -4, -1)),
    ),
    CompatibilityClass(
        5,
        (((2, 1, 1, 2, 0, 2, -1), ODD_K), ((2, 2, 0, 2, 1, 3, -2), ODD_L)),
        ((4, 4, 4), (2, 4, 3), (2, 0, 1), (4, 4, 4), (0, 2, 1), (4, 6, 5), (-2, -4, -3)),
    ),
    CompatibilityClass(
        6,
        (((0, 1, 1, 0, 1, 1, -1), ODD_K), ((2, 1, 3, 2, 2, 0, -3), EVEN_L)),
        ((0, 4, 0), (2, 2, 1), (2, 6, 1), (0, 4, 0), (2, 4, 1), (2, 0, 1), (-2, -6, -1)),
    ),
    CompatibilityClass(
        7,
        (((0, 1, 1, 0, 1, 1, -1), ODD_K), ((2, 3, 1, 2, 2, 4, -3), EVEN_L)),
        ((0, 4, 0), (2, 6, 1), (2, 2, 1), (0, 4, 0), (2, 4, 1), (2, 8, 1), (-2, -6, -1)),
    ),
)


def evaluate(form: Linear, k: int, l: int) -> int:
    a, b, c = form
    return a * k + b * l + c


def combined_row(cls: CompatibilityClass, k: int, l: int) -> Row:
    """The Haken sum of the summands at parameters ``(k, l)``, computed column by column."""
    total = [0] * len(COLUMNS)
    for row, weight in cls.summands:
        w = evaluate(weight, k, l)
        total = [t + w * x for t, x in zip(total, row)]
    return tuple(total)


def printed_row(cls: CompatibilityClass, k: int, l: int) -> Row:
    return tuple(evaluate(form, k, l) for form in cls.printed)


@dataclass(frozen=True)
class Mismatch:
    k: int
    l: int
    column: str
    printed: int
    computed: int


@dataclass(frozen=True)
class ClassCheck:
    number: int
    cases: int
    mismatches: Tuple[Mismatch, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


@dataclass(frozen=True)
class Table3Check:
    classes: Tuple[ClassCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.classes)


def compat_table_check(parameter_range: int = 4) -> Table3Check:
    """Compares every printed combined row with its summands for ``0 <= k, l < parameter_range``."""
    checks: List[ClassCheck] = []
    for cls in COMPATIBILITY_CLASSES:
        mismatches = []
        cases = list(product(range(parameter_range), repeat=2))
        for k, l in cases:
            for column, printed, computed in zip(COLUMNS, printed_row(cls, k, l), combined_row(cls, k, l)):
                if printed != computed:
                    mismatches.append(Mismatch(k, l, column, printed, computed))
        if mismatches:
            logger.warning("class %d: %d mismatches, first %s", cls.number, len(mismatches), mismatches[0])
        checks.append(ClassCheck(cls.number, len(cases), tuple(mismatches)))
    return Table3Check(tuple(checks))
