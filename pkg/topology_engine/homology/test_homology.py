"""Tests for Smith normal form, GF(2) elimination and homology groups."""

import numpy as np
import pytest
from rich.console import Console
from sympy import Matrix

from topology_engine.errors import EdgeNotOnBoundary, InvalidParameter
from topology_engine.families.assembly import T_PRIME_EDGE_SITES, t_kn, t_prime, t_prime_kn
from topology_engine.families.layered import lst
from topology_engine.homology.chains import (
    betti_z2,
    boundary_pattern,
    h2_z2_basis,
    homology_h1,
    nonzero_classes,
    satisfies_face_parity,
)
from topology_engine.homology.groups import AbelianGroup, Z2Class, all_nonzero_sums
from topology_engine.homology.smith import (
    gf2_nullspace,
    gf2_rank,
    integer_rank,
    matmul,
    smith_normal_form,
    solve_integer,
)
from topology_engine.triangulation.skeleton import skeleton

console = Console()


# Smith normal form


def _is_unimodular(m) -> bool:
    return abs(Matrix(m).det()) == 1


def test_smith_identity_on_random_matrices():
    rng = np.random.default_rng(0)
    for _ in range(200):
        rows, cols = int(rng.integers(1, 9)), int(rng.integers(1, 9))
        m = rng.integers(-20, 21, size=(rows, cols)).tolist()
        form = smith_normal_form(m)
        assert matmul(matmul(form.U, m), form.V) == [list(row) for row in form.D]
        d = form.diagonal
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert form.D[i][j] == 0
        nonzero = [x for x in d if x]
        assert all(x > 0 for x in nonzero)
        assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
        assert d[len(nonzero):] == [0] * (len(d) - len(nonzero))
        assert _is_unimodular(form.U) and _is_unimodular(form.V)


def test_smith_small_example():
    form = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert form.diagonal == [2, 6, 12]
    assert form.rank == 3
    assert form.torsion() == [2, 6, 12]


def test_integer_rank_and_solve():
    m = [[1, 2], [2, 4]]
    assert integer_rank(m) == 1
    assert solve_integer([[2, 0], [0, 3]], [4, 9]) == [2, 3]
    assert solve_integer([[2, 0], [0, 3]], [1, 0]) is None
    x = solve_integer(m, [3, 6])
    assert x is not None and x[0] + 2 * x[1] == 3


def test_gf2_elimination():
    m = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert gf2_rank(m) == 2
    null = gf2_nullspace(m, 3)
    assert null.tolist() == [[1, 1, 1]]
    assert gf2_rank([]) == 0


# Groups


def test_abelian_group_normal_form():
    assert AbelianGroup.from_invariants(1, [4, 2]) == AbelianGroup(1, (2, 4))
    assert AbelianGroup.from_invariants(0, [6, 10]) == AbelianGroup(0, (2, 30))
    assert AbelianGroup.from_invariants(0, [0, 1]) == AbelianGroup(1)
    assert str(AbelianGroup(1, (2, 4))) == "Z + Z_2 + Z_4"
    assert str(AbelianGroup(3)) == "Z^3"
    assert str(AbelianGroup(0)) == "0"


def test_z2_class_arithmetic():
    a, b = Z2Class((1, 0, 1)), Z2Class((1, 1, 0))
    assert (a + b).labelling == (0, 1, 1)
    assert (a + a).is_zero()
    assert a.bits() == "101"
    assert a.support() == [0, 2]
    sums = all_nonzero_sums([a, b])
    assert [c.bits() for c in sums] == ["101", "110", "011"]


# Homology of triangulations


def test_t33_homology():
    t = t_kn(3, 3)
    assert homology_h1(t) == AbelianGroup(1, (2, 4))
    assert homology_h1(t, "Z2") == AbelianGroup.z2_vector_space(3)
    assert betti_z2(t, 1) == 3
    assert betti_z2(t, 2) == 2
    assert homology_h1(t, ideal_policy="keep").rank <= 1


def test_h2_basis_classes_satisfy_face_parity():
    for k, n in [(3, 3), (3, 5), (5, 7)]:
        t = t_kn(k, n)
        group, basis = h2_z2_basis(t)
        assert group == AbelianGroup.z2_vector_space(2)
        classes = nonzero_classes(t)
        assert len(classes) == 3
        assert all(satisfies_face_parity(t, c) for c in classes)
        assert len({c.bits() for c in classes}) == 3
    console.print(f"T_(5,7) classes: {[c.bits() for c in classes]}")


def test_h2_basis_is_deterministic():
    assert h2_z2_basis(t_kn(3, 5)) == h2_z2_basis(t_kn(3, 5))


def test_bad_arguments():
    t = t_kn(3, 3)
    with pytest.raises(InvalidParameter):
        homology_h1(t, "Q")
    with pytest.raises(InvalidParameter):
        homology_h1(t, ideal_policy="cone")
    with pytest.raises(InvalidParameter):
        betti_z2(t, 4)


def test_boundary_pattern_of_lst():
    t = lst(1, 3).triangulation
    sk = skeleton(t)
    boundary = [e.index for e in sk.edges if e.boundary]
    interior = [e.index for e in sk.edges if not e.boundary]
    c = Z2Class(tuple(1 if e in boundary[:1] else 0 for e in range(len(sk.edges))))
    pattern = boundary_pattern(c, t, [boundary])
    assert pattern.component(0) == (1, 0, 0)
    assert not pattern.is_zero()
    with pytest.raises(EdgeNotOnBoundary):
        boundary_pattern(c, t, [interior])


@pytest.mark.parametrize("k, n", [(3, 3), (5, 7)])
def test_boundary_patterns_on_t_prime(k, n):
    marked = t_prime()
    filled = t_prime_kn(k, n)
    filled_sk = skeleton(filled)
    edge_map = {marked.edge(name): filled_sk.edge_class_of(*site) for name, site in T_PRIME_EDGE_SITES.items()}
    rings = [[marked.edge(name) for name in ("e0", "e2", "e4")], [marked.edge(name) for name in ("e18", "e19", "e20")]]

    patterns = set()
    for c in nonzero_classes(filled):
        pattern = boundary_pattern(c, marked.triangulation, rings, edge_map)
        patterns.add((pattern.component(0), pattern.component(1)))
    assert patterns == {((0, 1, 1), (0, 0, 0)), ((0, 0, 0), (0, 1, 1)), ((0, 1, 1), (0, 1, 1))}

    zero = Z2Class((0,) * len(filled_sk.edges))
    assert boundary_pattern(zero, marked.triangulation, rings, edge_map).is_zero()
