"""Isomorphism signatures and isomorphism testing.

The encoding is the published base64 scheme used by Regina for 3-manifold
triangulations, so signatures interchange with that software verbatim.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from topology_engine.errors import MalformedSignature, TopologyEngineError
from topology_engine.triangulation.perm import IDENTITY, ORDERED, Perm4
from topology_engine.triangulation.triangulation import (
    Triangulation,
    TriangulationBuilder,
    relabel,
)

logger = logging.getLogger(__name__)

_ALPHABET = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-"
_VALUE = {c: i for i, c in enumerate(_ALPHABET)}


def _encode_int(value: int, n_chars: int) -> str:
    out = []
    for _ in range(n_chars):
        out.append(_ALPHABET[value & 0x3F])
        value >>= 6
    return "".join(out)


def _encode_trits(trits: Sequence[int]) -> str:
    packed = 0
    for shift, trit in zip((0, 2, 4), trits):
        packed |= trit << shift
    return _ALPHABET[packed]


@dataclass(frozen=True)
class CanonicalLabelling:
    """Result of a canonical traversal of one connected component."""

    signature: str
    image: Dict[int, int]
    vertex_map: Dict[int, Perm4]

    def pre_image(self) -> List[int]:
        inverse = [0] * len(self.image)
        for tet, img in self.image.items():
            inverse[img] = tet
        return inverse


def _signature_from(t: Triangulation, start: int, vertices: Perm4) -> CanonicalLabelling:
    image: Dict[int, int] = {start: 0}
    vertex_map: Dict[int, Perm4] = {start: vertices.inverse()}
    pre_image = [start]
    actions: List[int] = []
    join_dest: List[int] = []
    join_gluing: List[int] = []

    simp_img = 0
    while simp_img < len(pre_image):
        src = pre_image[simp_img]
        for facet_img in range(4):
            facet_src = vertex_map[src].pre_image_of(facet_img)
            g = t.adjacent(src, facet_src)
            if g is None:
                actions.append(0)
                continue
            dest, gluing = g
            if dest in image:
                if image[dest] < image[src] or (
                    dest == src and vertex_map[src](gluing(facet_src)) < vertex_map[src](facet_src)
                ):
                    continue
            if dest not in image:
                actions.append(1)
                image[dest] = len(pre_image)
                pre_image.append(dest)
                vertex_map[dest] = vertex_map[src] * gluing.inverse()
                continue
            actions.append(2)
            join_dest.append(image[dest])
            join_gluing.append((vertex_map[dest] * gluing * vertex_map[src].inverse()).ordered_index())
        simp_img += 1

    n = len(pre_image)
    if n < 63:
        n_chars = 1
        parts = []
    else:
        n_chars, tmp = 0, n
        while tmp > 0:
            tmp >>= 6
            n_chars += 1
        parts = [_ALPHABET[63], _ALPHABET[n_chars]]
    parts.append(_encode_int(n, n_chars))
    for i in range(0, len(actions), 3):
        parts.append(_encode_trits(actions[i:i + 3]))
    for dest in join_dest:
        parts.append(_encode_int(dest, n_chars))
    for index in join_gluing:
        parts.append(_ALPHABET[index])
    return CanonicalLabelling("".join(parts), image, vertex_map)


def _component(t: Triangulation, tets: Sequence[int]) -> Triangulation:
    position = {tet: i for i, tet in enumerate(tets)}
    builder = TriangulationBuilder(len(tets))
    for tet, face, partner, perm in t.rows():
        if tet in position:
            builder.join(position[tet], face, position[partner], perm)
    return builder.build()


def canonical_labelling(t: Triangulation) -> CanonicalLabelling:
    """Lexicographically least traversal over every start; ``t`` must be connected."""
    best: Optional[CanonicalLabelling] = None
    for start in range(t.tet_count):
        for vertices in ORDERED:
            current = _signature_from(t, start, vertices)
            if best is None or current.signature < best.signature:
                best = current
    if best is None:
        return CanonicalLabelling(_ALPHABET[0], {}, {})
    return best


def iso_signature(t: Triangulation) -> str:
    """Signature of ``t``; components are encoded separately, sorted and concatenated."""
    if t.tet_count == 0:
        return _ALPHABET[0]
    pieces = sorted(canonical_labelling(_component(t, comp)).signature for comp in t.components())
    return "".join(pieces)


class _Reader:
    def __init__(self, sig: str):
        self.sig = sig
        self.pos = 0

    def done(self) -> bool:
        return self.pos >= len(self.sig)

    def single(self) -> int:
        if self.pos >= len(self.sig):
            raise MalformedSignature(f"Signature {self.sig!r} ends unexpectedly")
        char = self.sig[self.pos]
        if char not in _VALUE:
            raise MalformedSignature(f"Invalid character {char!r} in signature {self.sig!r}")
        self.pos += 1
        return _VALUE[char]

    def integer(self, n_chars: int) -> int:
        value = 0
        for i in range(n_chars):
            value |= self.single() << (6 * i)
        return value


def _decode_component(reader: _Reader, builder: TriangulationBuilder) -> None:
    n = reader.single()
    n_chars = 1
    if n == 63:
        n_chars = reader.single()
        n = reader.integer(n_chars)
    if n == 0:
        return

    total = 4 * n
    actions: List[int] = []
    facets = 0
    joins = 0
    while facets < total:
        packed = reader.single()
        for j in range(3):
            trit = (packed >> (2 * j)) & 3
            if facets == total:
                if trit != 0:
                    raise MalformedSignature(f"Nonzero padding trit in {reader.sig!r}")
                continue
            if trit == 0:
                facets += 1
            elif trit == 1:
                facets += 2
            elif trit == 2:
                facets += 2
                joins += 1
            else:
                raise MalformedSignature(f"Invalid facet action in {reader.sig!r}")
            if facets > total:
                raise MalformedSignature(f"Facet actions overrun in {reader.sig!r}")
            actions.append(trit)
    dests = [reader.integer(n_chars) for _ in range(joins)]
    gluings = [reader.single() for _ in range(joins)]
    if any(d >= n for d in dests) or any(g >= 24 for g in gluings):
        raise MalformedSignature(f"Join data out of range in {reader.sig!r}")

    offset = builder.tet_count
    for _ in range(n):
        builder.new_tet()
    next_unused = 1
    action_pos = 0
    join_pos = 0
    try:
        for i in range(n):
            for j in range(4):
                if builder.adjacent(offset + i, j) is not None:
                    continue
                if action_pos >= len(actions):
                    raise MalformedSignature(f"Too few facet actions in {reader.sig!r}")
                action = actions[action_pos]
                action_pos += 1
                if action == 1:
                    if next_unused >= n:
                        raise MalformedSignature(f"Too many new tetrahedra in {reader.sig!r}")
                    builder.join(offset + i, j, offset + next_unused, IDENTITY)
                    next_unused += 1
                elif action == 2:
                    dest, gluing = dests[join_pos], ORDERED[gluings[join_pos]]
                    join_pos += 1
                    if dest >= next_unused or builder.adjacent(offset + dest, gluing(j)) is not None:
                        raise MalformedSignature(f"Invalid join in {reader.sig!r}")
                    builder.join(offset + i, j, offset + dest, gluing)
    except MalformedSignature:
        raise
    except TopologyEngineError as exc:
        raise MalformedSignature(f"Inconsistent gluing in {reader.sig!r}: {exc}") from exc
    if next_unused != n:
        raise MalformedSignature(f"Signature {reader.sig!r} is disconnected within a component")


def decode_iso_signature(sig: str) -> Triangulation:
    """Rebuilds a triangulation from its signature.

    Raises:
        MalformedSignature: the string is not a valid signature.
    """
    sig = sig.strip()
    if not sig:
        raise MalformedSignature("Empty signature")
    reader = _Reader(sig)
    builder = TriangulationBuilder()
    while not reader.done():
        _decode_component(reader, builder)
    return builder.build()


@dataclass(frozen=True)
class Isomorphism:
    """Sends tetrahedron ``i`` to ``tet_map[i]`` with vertex relabelling ``vertex_maps[i]``."""

    tet_map: Tuple[int, ...]
    vertex_maps: Tuple[Perm4, ...]

    def apply(self, t: Triangulation) -> Triangulation:
        return relabel(t, self.tet_map, self.vertex_maps)


def is_isomorphic(a: Triangulation, b: Triangulation) -> Optional[Isomorphism]:
    """Returns an isomorphism from ``a`` to ``b``, or None."""
    if a.tet_count != b.tet_count:
        return None
    comps_a = [(canonical_labelling(_component(a, c)), c) for c in a.components()]
    comps_b = [(canonical_labelling(_component(b, c)), c) for c in b.components()]
    comps_a.sort(key=lambda item: item[0].signature)
    comps_b.sort(key=lambda item: item[0].signature)
    if [c[0].signature for c in comps_a] != [c[0].signature for c in comps_b]:
        return None

    tet_map = [0] * a.tet_count
    vertex_maps = [IDENTITY] * a.tet_count
    for (label_a, tets_a), (label_b, tets_b) in zip(comps_a, comps_b):
        back_b = label_b.pre_image()
        for local_a, tet_a in enumerate(tets_a):
            canon = label_a.image[local_a]
            local_b = back_b[canon]
            tet_map[tet_a] = tets_b[local_b]
            vertex_maps[tet_a] = label_b.vertex_map[local_b].inverse() * label_a.vertex_map[local_a]
    return Isomorphism(tuple(tet_map), tuple(vertex_maps))
