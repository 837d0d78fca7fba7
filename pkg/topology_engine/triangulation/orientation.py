"""Coherent orientation of triangulations."""

from typing import List

from topology_engine.errors import NotOrientable
from topology_engine.triangulation.perm import IDENTITY, Perm4
from topology_engine.triangulation.triangulation import Triangulation, relabel

SWAP_23 = Perm4((0, 1, 3, 2))


def orientation_signs(t: Triangulation) -> List[int]:
    """Per-tetrahedron signs making every gluing orientation-reversing.

    Raises:
        NotOrientable: propagation meets a conflicting sign (an odd cycle).
    """
    signs = [0] * t.tet_count
    for root in range(t.tet_count):
        if signs[root]:
            continue
        signs[root] = 1
        stack = [root]
        while stack:
            tet = stack.pop()
            for face in range(4):
                g = t.adjacent(tet, face)
                if g is None:
                    continue
                partner, perm = g
                expected = -signs[tet] * perm.sign()
                if not signs[partner]:
                    signs[partner] = expected
                    stack.append(partner)
                elif signs[partner] != expected:
                    raise NotOrientable(
                        f"Gluing of face {face} of tetrahedron {tet} to tetrahedron {partner} closes an odd cycle"
                    )
    return signs


def is_orientable(t: Triangulation) -> bool:
    try:
        orientation_signs(t)
    except NotOrientable:
        return False
    return True


def is_oriented(t: Triangulation) -> bool:
    return all(perm.sign() == -1 for _, _, _, perm in t.rows())


def orient(t: Triangulation) -> Triangulation:
    """Relabels negatively signed tetrahedra by swapping vertices 2 and 3."""
    signs = orientation_signs(t)
    if all(s == 1 for s in signs):
        return t
    vertex_maps = [IDENTITY if s == 1 else SWAP_23 for s in signs]
    return relabel(t, list(range(t.tet_count)), vertex_maps)
