"""Permutations of the four vertex labels of a tetrahedron."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Tuple


@dataclass(frozen=True, order=True)
class Perm4:
    """A bijection of {0, 1, 2, 3}, stored as its tuple of images.

    Composition follows function composition: ``(p * q)(i) == p(q(i))``.
    """

    images: Tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [0, 1, 2, 3]:
            raise ValueError(f"Not a permutation of 0..3: {self.images}")

    @classmethod
    def identity(cls) -> "Perm4":
        return IDENTITY

    @classmethod
    def of(cls, *images: int) -> "Perm4":
        return cls(tuple(images))

    @classmethod
    def from_face_images(cls, face: int, images: Iterable[int]) -> "Perm4":
        """Builds the permutation behind a gluing-table entry such as ``2 (013)``.

        The three vertices of ``face`` in increasing order map to ``images``
        in order, and ``face`` maps to the remaining label.
        """
        images = tuple(images)
        source = [v for v in range(4) if v != face]
        if len(images) != 3 or len(set(images)) != 3:
            raise ValueError(f"Face images must be three distinct labels: {images}")
        result = [0] * 4
        for src, img in zip(source, images):
            result[src] = img
        result[face] = ({0, 1, 2, 3} - set(images)).pop()
        return cls(tuple(result))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm4") -> "Perm4":
        return Perm4(tuple(self.images[other.images[i]] for i in range(4)))

    def inverse(self) -> "Perm4":
        inv = [0] * 4
        for i, img in enumerate(self.images):
            inv[img] = i
        return Perm4(tuple(inv))

    def pre_image_of(self, image: int) -> int:
        return self.images.index(image)

    def sign(self) -> int:
        inversions = sum(
            1 for i in range(4) for j in range(i + 1, 4) if self.images[i] > self.images[j]
        )
        return -1 if inversions % 2 else 1

    def ordered_index(self) -> int:
        """Index of this permutation in lexicographic order of image tuples."""
        return ORDERED.index(self)

    @classmethod
    def from_ordered_index(cls, index: int) -> "Perm4":
        return ORDERED[index]

    def __str__(self) -> str:
        return "".join(str(i) for i in self.images)


ORDERED: Tuple[Perm4, ...] = tuple(Perm4(p) for p in permutations(range(4)))
IDENTITY = ORDERED[0]
