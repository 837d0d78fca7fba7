"""Smith normal form over the integers and elimination over GF(2)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors, smith_normal_decomp

IntMatrix = List[List[int]]


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(len(row))) for j in range(cols)] for row in a]


@dataclass(frozen=True)
class SmithForm:
    """``U * m * V == D`` with ``D`` diagonal and ``d1 | d2 | ...``."""

    D: Tuple[Tuple[int, ...], ...]
    U: Tuple[Tuple[int, ...], ...]
    V: Tuple[Tuple[int, ...], ...]

    @property
    def diagonal(self) -> List[int]:
        width = len(self.D[0]) if self.D else 0
        return [self.D[i][i] for i in range(min(len(self.D), width))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    def torsion(self) -> List[int]:
        return [d for d in self.diagonal if d > 1]


def to_domain_matrix(m: Sequence[Sequence[int]], cols: int = 0) -> DomainMatrix:
    """``m`` as a dense matrix over ``ZZ``; ``cols`` gives the width when ``m`` has no rows."""
    rows = len(m)
    cols = len(m[0]) if rows else cols
    if rows == 0 or cols == 0:
        return DomainMatrix.zeros((rows, cols), ZZ).to_dense()
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in m], (rows, cols), ZZ)


def _freeze(mat: DomainMatrix) -> Tuple[Tuple[int, ...], ...]:
    rows, cols = mat.shape
    if cols == 0:
        return tuple(() for _ in range(rows))
    return tuple(tuple(int(x) for x in row) for row in mat.to_list())


def smith_normal_form(m: Sequence[Sequence[int]], cols: int = 0) -> SmithForm:
    """Computes the Smith normal form of an integer matrix.

    ``cols`` gives the width when ``m`` has no rows.
    """
    d, u, v = smith_normal_decomp(to_domain_matrix(m, cols))
    return SmithForm(_freeze(d), _freeze(u), _freeze(v))


def integer_rank(m: Sequence[Sequence[int]]) -> int:
    if not m or not m[0]:
        return 0
    return sum(1 for f in invariant_factors(to_domain_matrix(m)) if f)


def solve_integer(m: Sequence[Sequence[int]], b: Sequence[int], cols: int = 0) -> Optional[List[int]]:
    """An integer solution of ``m x = b``, or None if there is none."""
    form = smith_normal_form(m, cols)
    width = len(form.V)
    c = [sum(u * x for u, x in zip(row, b)) for row in form.U]
    diagonal = form.diagonal
    y = [0] * width
    for i, value in enumerate(c):
        d = diagonal[i] if i < len(diagonal) else 0
        if d == 0:
            if value:
                return None
        elif value % d:
            return None
        else:
            y[i] = value // d
    return [sum(v * yi for v, yi in zip(row, y)) for row in form.V]


def gf2_row_reduce(m, cols: int = 0) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over GF(2) and its pivot columns."""
    a = (np.array(m, dtype=np.int64) % 2).astype(np.uint8)
    if a.ndim != 2:
        a = a.reshape(0, cols)
    rows, width = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(width):
        if r == rows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        k = r + int(hits[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        for i in np.nonzero(a[:, c])[0]:
            if i != r:
                a[i] ^= a[r]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def gf2_rank(m) -> int:
    if len(m) == 0 or len(m[0]) == 0:
        return 0
    return len(gf2_row_reduce(m)[1])


def gf2_nullspace(m, cols: int) -> np.ndarray:
    """Basis (as rows) of ``{x : m x = 0}`` over GF(2)."""
    if len(m) == 0:
        return np.eye(cols, dtype=np.uint8)
    reduced, pivots = gf2_row_reduce(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, p in zip(reduced, pivots):
            if row[f]:
                basis[k, p] = 1
    return basis


def gf2_reduce(vector, echelon: np.ndarray, pivots: Sequence[int]) -> np.ndarray:
    """Reduces ``vector`` against a reduced echelon basis."""
    v = np.array(vector, dtype=np.uint8) % 2
    for row, p in zip(echelon, pivots):
        if v[p]:
            v ^= row
    return v
