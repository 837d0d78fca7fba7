"""Layered solid tori ``LST(j, k)``.

Tetrahedron 0 is always the top of the stack; its faces 2 and 3 form the
two-triangle boundary torus. The three boundary edges are named by role:

- ``shared``: edge 01, lying in both boundary faces;
- ``a``: edge 02 of face (012), identified with 31 of face (013);
- ``b``: edge 03 of face (013), identified with 21 of face (012).

``LST(1, 2)`` is a single tetrahedron with face (123) glued to face (023)
by ``0 1 2 3 -> 1 2 3 0``. Every larger one layers a new tetrahedron on a
boundary edge of a smaller one.
"""

from __future__ import annotations

import logging
from math import gcd
from typing import Dict, List, Tuple

from topology_engine.errors import InvalidParameter, NotCoprime
from topology_engine.families.marked import LayeredSolidTorus
from topology_engine.triangulation.perm import IDENTITY, Perm4
from topology_engine.triangulation.skeleton import face_vertices, skeleton
from topology_engine.triangulation.triangulation import TriangulationBuilder, relabel

logger = logging.getLogger(__name__)

ROLES = ("shared", "a", "b")
ROLE_EDGES = {"shared": (0, 1), "a": (0, 2), "b": (0, 3)}
BASE_GLUING = Perm4((1, 2, 3, 0))
SWAP_23 = Perm4((0, 1, 3, 2))

# role -> boundary face of the top -> (tail, head) in class direction
_ROLE_IN_FACE = {
    "shared": {2: (0, 1), 3: (0, 1)},
    "a": {3: (0, 2), 2: (3, 1)},
    "b": {2: (0, 3), 3: (2, 1)},
}
_ROLE_OF_PAIR_IN_FACE_3 = {frozenset((0, 1)): "shared", frozenset((0, 2)): "a", frozenset((1, 2)): "b"}


def lst_meridian_weights(j: int, k: int) -> Tuple[int, int, int]:
    """Meridian-disc weights ``(j, k, j + k)`` sorted ascending."""
    return tuple(sorted((j, k, j + k)))


def _other_diagonal(removed: int, y: int, z: int) -> int:
    total, difference = y + z, abs(y - z)
    return difference if removed == total and total != difference else total


class _Stack:
    """A layered solid torus under construction, top tetrahedron last."""

    def __init__(self):
        self.builder = TriangulationBuilder(1)
        self.builder.join(0, 0, 0, BASE_GLUING)
        self.top = 0
        self.weights: Dict[str, int] = {"shared": 3, "a": 2, "b": 1}

    def layer(self, role: str) -> None:
        y, z = (self.weights[r] for r in ROLES if r != role)
        new_weight = _other_diagonal(self.weights[role], y, z)
        perms = []
        for new_face, old_face in ((0, 2), (1, 3)):
            tail, head = _ROLE_IN_FACE[role][old_face]
            rest = next(v for v in face_vertices(old_face) if v not in (tail, head))
            images = [0, 0, tail, head]
            images[new_face] = old_face
            images[1 - new_face] = rest
            perms.append(Perm4(tuple(images)))
        r2, _, tail2, head2 = perms[1].images
        a_role = _ROLE_OF_PAIR_IN_FACE_3[frozenset((r2, tail2))]
        b_role = _ROLE_OF_PAIR_IN_FACE_3[frozenset((r2, head2))]
        weights = {"shared": new_weight, "a": self.weights[a_role], "b": self.weights[b_role]}
        if weights["a"] == 1 and weights["b"] != 1:
            perms = [p * SWAP_23 for p in perms]
            weights["a"], weights["b"] = weights["b"], weights["a"]
        new = self.builder.new_tet()
        self.builder.join(new, 0, self.top, perms[0])
        self.builder.join(new, 1, self.top, perms[1])
        self.top = new
        self.weights = weights
        logger.debug("layered on %s: weights %s", role, weights)

    def role_with_weight(self, weight: int) -> str:
        hits = [r for r in ROLES if self.weights[r] == weight]
        if len(hits) != 1:
            raise InvalidParameter(f"Layering needs a unique edge of weight {weight}, have {self.weights}")
        return hits[0]


def _layering_plan(j: int, k: int) -> List[Tuple[int, int]]:
    """Pairs ``(a, b)`` from ``(1, 2)`` up to ``(j, k)``, each one layer apart."""
    plan = []
    a, b = j, k
    while (a, b) not in ((1, 2),):
        plan.append((a, b))
        if (a, b) == (0, 1):
            a, b = 1, 1
        elif (a, b) == (1, 1):
            a, b = 1, 2
        else:
            a, b = min(a, b - a), max(a, b - a)
    plan.reverse()
    return plan


def lst(j: int, k: int) -> LayeredSolidTorus:
    """Builds ``LST(j, k)`` for coprime nonnegative ``j``, ``k``.

    Raises:
        InvalidParameter: a parameter is negative or both are zero.
        NotCoprime: ``gcd(j, k) != 1``.
    """
    if j < 0 or k < 0 or (j, k) == (0, 0):
        raise InvalidParameter(f"LST parameters must be nonnegative and not both zero, got ({j}, {k})")
    if gcd(j, k) != 1:
        raise NotCoprime(f"LST({j}, {k}) needs coprime parameters")
    a, b = sorted((j, k))
    stack = _Stack()
    for target in _layering_plan(a, b):
        if target == (1, 1):
            stack.layer(stack.role_with_weight(3))
        elif target == (0, 1):
            stack.layer(stack.role_with_weight(2))
        else:
            stack.layer(stack.role_with_weight(target[1] - target[0]))

    t = stack.builder.build()
    n = t.tet_count
    t = relabel(t, [n - 1 - i for i in range(n)], [IDENTITY] * n)
    sk = skeleton(t)
    roles = {role: sk.edge_class_of(0, *ROLE_EDGES[role]) for role in ROLES}
    weights = {roles[role]: stack.weights[role] for role in ROLES}
    if sorted(weights.values()) != list(lst_meridian_weights(a, b)):
        raise InvalidParameter(f"LST({a}, {b}) came out with weights {sorted(weights.values())}")
    return LayeredSolidTorus(triangulation=t, j=a, k=b, weights=weights, roles=roles)
