"""Abelian groups, mod-2 classes and boundary patterns."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from sympy import factorint


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank`` plus cyclic torsion factors in divisibility-chain form."""

    rank: int
    torsion: Tuple[int, ...] = ()

    @classmethod
    def from_invariants(cls, rank: int, factors: Iterable[int]) -> "AbelianGroup":
        """Normalizes arbitrary cyclic orders into invariant factors."""
        powers = defaultdict(list)
        for order in factors:
            order = abs(int(order))
            if order == 0:
                rank += 1
                continue
            for prime, exp in factorint(order).items():
                powers[prime].append(prime**exp)
        length = max((len(v) for v in powers.values()), default=0)
        invariants = [1] * length
        for prime_powers in powers.values():
            prime_powers.sort()
            offset = length - len(prime_powers)
            for i, pp in enumerate(prime_powers):
                invariants[offset + i] *= pp
        return cls(rank, tuple(d for d in invariants if d > 1))

    @classmethod
    def z2_vector_space(cls, dimension: int) -> "AbelianGroup":
        return cls(0, (2,) * dimension)

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z_{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Z2Class:
    """A mod-2 labelling of the edge classes of one triangulation."""

    labelling: Tuple[int, ...]

    @classmethod
    def zero(cls, edge_count: int) -> "Z2Class":
        return cls((0,) * edge_count)

    def __add__(self, other: "Z2Class") -> "Z2Class":
        return Z2Class(tuple(a ^ b for a, b in zip(self.labelling, other.labelling)))

    def is_zero(self) -> bool:
        return not any(self.labelling)

    def bits(self) -> str:
        return "".join(str(b) for b in self.labelling)

    def support(self) -> List[int]:
        return [i for i, b in enumerate(self.labelling) if b]


@dataclass(frozen=True)
class BoundaryPattern:
    """Per boundary torus, the parities on its edge classes in documented order."""

    parities: Tuple[Tuple[int, ...], ...]

    def component(self, index: int) -> Tuple[int, ...]:
        return self.parities[index]

    def is_zero(self) -> bool:
        return not any(any(p) for p in self.parities)


def all_nonzero_sums(basis: Sequence[Z2Class]) -> List[Z2Class]:
    """Every nonzero element of the span, ordered by the binary index of its coefficients."""
    out = []
    for mask in range(1, 2 ** len(basis)):
        total = None
        for i, element in enumerate(basis):
            if mask >> i & 1:
                total = element if total is None else total + element
        out.append(total)
    return out
