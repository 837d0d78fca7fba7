"""Certificates that an ideal triangulation meets the sum-of-norms lower bound.

For a rank-two subgroup of the mod-2 second homology, the canonical normal
representatives of its three nonzero classes are built. The certificate
holds when every representative is a single quadrilateral in every
tetrahedron, the three together use each quad type of each tetrahedron
once, and their negative Euler characteristics add up to the number of
tetrahedra. Tautness of the representatives is an input, not something
checked here.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from topology_engine.errors import NoRepresentative, RankTooSmall, WrongVertexStructure
from topology_engine.homology.chains import h2_z2_basis
from topology_engine.homology.groups import Z2Class, all_nonzero_sums
from topology_engine.normal.canonical import canonical_z2_representative, is_one_quad_per_tet
from topology_engine.normal.coordinates import NormalSurfaceVector, euler_characteristic
from topology_engine.triangulation.isosig import iso_signature
from topology_engine.triangulation.orientation import is_orientable
from topology_engine.triangulation.skeleton import skeleton
from topology_engine.triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)

TAUTNESS_CAVEAT = (
    "Tautness of the canonical representatives is assumed, not certified; "
    "the inequality applies when each representative realizes the norm of its class."
)


@dataclass(frozen=True)
class ClassEvidence:
    labelling: str
    vector: Optional[Tuple[int, ...]]
    one_quad_per_tet: bool
    euler: Optional[int]


@dataclass(frozen=True)
class TightnessCertificate:
    signature: str
    tet_count: int
    h2_rank: int
    classes: Tuple[ClassEvidence, ...]
    quad_partition: bool
    caveat: str = TAUTNESS_CAVEAT

    @property
    def negative_euler_sum(self) -> Optional[int]:
        if any(c.euler is None for c in self.classes):
            return None
        return -sum(c.euler for c in self.classes)

    @property
    def verdict(self) -> bool:
        return (
            self.negative_euler_sum == self.tet_count
            and all(c.one_quad_per_tet for c in self.classes)
            and self.quad_partition
        )


def _check_vertex_structure(t: Triangulation) -> None:
    sk = skeleton(t)
    if not is_orientable(t):
        raise WrongVertexStructure("Triangulation is not orientable")
    if not t.is_closed() or len(sk.vertices) != 1 or sk.vertices[0].link.kind != "torus":
        kinds = [v.link.kind for v in sk.vertices]
        raise WrongVertexStructure(f"Expected one ideal vertex with torus link, found links {kinds}")


def _subgroups(basis: List[Z2Class]) -> List[Tuple[Z2Class, Z2Class, Z2Class]]:
    """Every rank-two subgroup spanned by basis elements and their sums, as its three nonzero classes."""
    classes = all_nonzero_sums(basis)
    seen, out = set(), []
    for i, a in enumerate(classes):
        for b in classes[i + 1 :]:
            triple = tuple(sorted((a, b, a + b), key=lambda c: c.bits()))
            key = frozenset(c.bits() for c in triple)
            if key not in seen:
                seen.add(key)
                out.append(triple)
    return out


def _evidence(t: Triangulation, c: Z2Class) -> Tuple[ClassEvidence, Optional[NormalSurfaceVector]]:
    try:
        v = canonical_z2_representative(t, c)
    except NoRepresentative as exc:
        logger.info("class %s has no canonical representative: %s", c.bits(), exc)
        return ClassEvidence(c.bits(), None, False, None), None
    return ClassEvidence(c.bits(), v.coords, is_one_quad_per_tet(v), euler_characteristic(v)), v


def _partitions_quads(t: Triangulation, vectors: List[Optional[NormalSurfaceVector]]) -> bool:
    if any(v is None for v in vectors):
        return False
    for tet in range(t.tet_count):
        used = sorted(k for v in vectors for k in v.quad_types(tet))
        if used != [0, 1, 2]:
            return False
    return True


def _certificate_for(t: Triangulation, rank: int, triple: Tuple[Z2Class, ...]) -> TightnessCertificate:
    evidence, vectors = zip(*(_evidence(t, c) for c in triple))
    return TightnessCertificate(
        signature=iso_signature(t),
        tet_count=t.tet_count,
        h2_rank=rank,
        classes=tuple(evidence),
        quad_partition=_partitions_quads(t, list(vectors)),
    )


def tightness_certificate(t: Triangulation) -> TightnessCertificate:
    """Checks the canonical representatives of a rank-two subgroup of ``H_2(M; Z_2)``.

    When the rank exceeds two, the first subgroup with a true verdict is
    reported, otherwise the first subgroup tried.

    Raises:
        WrongVertexStructure: ``t`` is not an orientable one-vertex ideal
            triangulation with torus link.
        RankTooSmall: ``H_2(M; Z_2)`` has rank below two.
    """
    _check_vertex_structure(t)
    _, basis = h2_z2_basis(t)
    rank = len(basis)
    if rank < 2:
        raise RankTooSmall(f"H_2(M; Z_2) has rank {rank}; need at least 2")
    first = None
    for triple in _subgroups(basis):
        certificate = _certificate_for(t, rank, triple)
        if certificate.verdict:
            logger.info("tight: %s with %d tetrahedra", certificate.signature, t.tet_count)
            return certificate
        first = first or certificate
    logger.info("not certified: %s, -chi sum %s for %d tetrahedra", first.signature, first.negative_euler_sum, t.tet_count)
    return first
