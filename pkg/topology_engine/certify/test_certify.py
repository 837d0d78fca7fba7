"""Tests for Bredon-Wood values, angle structures, tightness certificates and norms."""

from itertools import product

import numpy as np
import pytest
from rich.console import Console
from sympy import Rational

from topology_engine.certify.angles import angle_equations, angle_structure_exists, find_angle_structure, is_angle_structure
from topology_engine.certify.bredon_wood import ORACLE, bredon_wood, bredon_wood_path, normalize_slope
from topology_engine.certify.norms import (
    ALPHA1_CANDIDATES,
    ALPHA2_CANDIDATES,
    alpha3_candidates,
    lst_order,
    norm_report,
)
from topology_engine.certify.table3 import COMPATIBILITY_CLASSES, combined_row, compat_table_check
from topology_engine.certify.tightness import tightness_certificate
from topology_engine.errors import Inapplicable, InvalidParameter, InvalidSlope, RankTooSmall, WrongVertexStructure
from topology_engine.families.assembly import link_complement_n, t_kn
from topology_engine.families.layered import lst
from topology_engine.normal.lst_surfaces import extend_into_lst
from topology_engine.triangulation.isosig import decode_iso_signature, iso_signature
from topology_engine.triangulation.moves import move_2_3
from topology_engine.triangulation.perm import Perm4
from topology_engine.triangulation.skeleton import skeleton
from topology_engine.triangulation.triangulation import TriangulationBuilder, random_relabel

console = Console()

ODD = (3, 5, 7, 9)


# Bredon-Wood


@pytest.mark.parametrize("p", range(1, 21))
def test_bredon_wood_base_case(p):
    assert bredon_wood(2 * p, 1) == p - 1


@pytest.mark.parametrize("m", [3, 5, 7, 9, 11])
def test_bredon_wood_neighbours_of_tm(m):
    assert bredon_wood(m + 1, 1) == (m - 1) // 2
    assert bredon_wood(m - 1, 1) == (m - 3) // 2


def test_bredon_wood_recursion():
    assert bredon_wood(2, 3) == 0
    assert bredon_wood(8, 3) == 1
    assert bredon_wood_path(8, 3) == [(8, 3), (2, 1)]


@pytest.mark.parametrize("key", sorted(ORACLE))
def test_bredon_wood_agrees_with_oracle(key):
    assert bredon_wood(*key) == ORACLE[key]


@pytest.mark.slow
@pytest.mark.parametrize(
    "key, torus, weights",
    [
        ((2, 1), (1, 2), (1, 0, 1)),
        ((4, 1), (1, 3), (1, 1, 0)),
        ((6, 1), (1, 5), (1, 1, 0)),
        ((8, 1), (1, 7), (1, 1, 0)),
        ((8, 3), (3, 5), (1, 1, 0)),
    ],
)
def test_oracle_matches_enumerated_surfaces(key, torus, weights):
    chi = extend_into_lst(weights, lst(*torus))
    console.print(f"{key} in LST{torus}: χ = {chi}")
    assert chi == -ORACLE[key]
    assert chi == -bredon_wood(*key)


def test_bredon_wood_invariant_under_twist_and_reflection():
    for p in range(1, 5):
        for q in range(1, 2 * p, 2):
            if np.gcd(2 * p, q) != 1:
                continue
            base = bredon_wood(2 * p, q)
            for s in range(-2, 3):
                assert bredon_wood(2 * p, q + 2 * p * s) == base
                assert bredon_wood(2 * p, -q + 2 * p * s) == base
    assert normalize_slope(8, 13) == 3


@pytest.mark.parametrize("two_p, q", [(4, 2), (3, 1), (0, 1), (-2, 1)])
def test_bredon_wood_rejects_bad_slopes(two_p, q):
    with pytest.raises(InvalidSlope):
        bredon_wood(two_p, q)


# Angle structures


def test_link_complement_has_angle_structure():
    t = link_complement_n().triangulation
    search = find_angle_structure(t)
    assert search.feasible
    assert search.slack > 0
    assert is_angle_structure(t, search.structure.angles)
    console.print(f"N: smallest angle {search.slack}")


def test_link_complement_half_quarter_quarter_assignment():
    t = link_complement_n().triangulation
    half, quarter = Rational(1, 2), Rational(1, 4)
    rotations = [(half, quarter, quarter), (quarter, half, quarter), (quarter, quarter, half)]
    rows, rhs = angle_equations(t)
    found = None
    for choice in product(rotations, repeat=t.tet_count):
        flat = [a for tet in choice for a in tet]
        if all(sum(r * a for r, a in zip(row, flat)) == b for row, b in zip(rows, rhs)):
            found = choice
            break
    assert found is not None
    assert is_angle_structure(t, found)


def test_angle_equations_shape():
    t = t_kn(3, 3)
    rows, rhs = angle_equations(t)
    assert len(rows) == 2 * t.tet_count
    assert all(len(row) == 3 * t.tet_count for row in rows)
    assert rhs[: t.tet_count] == [1] * t.tet_count


def test_t33_angle_search_is_self_consistent():
    t = t_kn(3, 3)
    search = find_angle_structure(t)
    if search.feasible:
        assert is_angle_structure(t, search.structure.angles)
    else:
        assert search.certificate


def _folded_tetrahedron():
    builder = TriangulationBuilder(1)
    builder.join(0, 2, 0, Perm4.of(0, 1, 3, 2))
    return builder.build()


def test_interior_degree_one_edge_blocks_angle_structure():
    t = _folded_tetrahedron()
    edge = skeleton(t).edges[skeleton(t).edge_class_of(0, 0, 1)]
    assert not edge.boundary and edge.degree == 1
    assert angle_structure_exists(t) is None
    search = find_angle_structure(t)
    assert not search.feasible
    assert search.certificate


def test_rejects_nonpositive_angles():
    t = link_complement_n().triangulation
    assert not is_angle_structure(t, [(1, 0, 0)] * t.tet_count)
    assert not is_angle_structure(t, [(Rational(1, 3),) * 3])


# Tightness


@pytest.mark.parametrize("k, n", [(3, 3), (3, 5), (5, 5), (7, 3)])
def test_t_kn_is_tight(k, n):
    certificate = tightness_certificate(t_kn(k, n))
    assert certificate.verdict
    assert certificate.negative_euler_sum == k + n
    assert certificate.quad_partition
    assert certificate.h2_rank >= 2
    assert certificate.caveat
    console.print(f"T_({k},{n}): {certificate.signature} sum {certificate.negative_euler_sum}")


def test_certificate_is_relabelling_invariant():
    t = t_kn(3, 5)
    relabelled, _, _ = random_relabel(t, np.random.default_rng(7))
    a, b = tightness_certificate(t), tightness_certificate(relabelled)
    assert a.verdict == b.verdict
    assert a.signature == b.signature == iso_signature(relabelled)
    assert a.negative_euler_sum == b.negative_euler_sum


def test_two_three_move_loses_tightness():
    t = t_kn(3, 3)
    for tet, face in product(range(t.tet_count), range(4)):
        try:
            bigger = move_2_3(t, tet, face)
        except Inapplicable:
            continue
        break
    else:
        pytest.fail("no 2-3 move applies")
    certificate = tightness_certificate(bigger)
    assert certificate.tet_count == t.tet_count + 1
    assert not certificate.verdict


def test_tightness_rejects_multiple_cusps():
    with pytest.raises(WrongVertexStructure):
        tightness_certificate(link_complement_n().triangulation)


def test_tightness_rejects_boundary():
    with pytest.raises(WrongVertexStructure):
        tightness_certificate(lst(1, 3).triangulation)


def test_tightness_needs_rank_two():
    figure_eight = decode_iso_signature("cPcbbbiht")
    with pytest.raises(RankTooSmall):
        tightness_certificate(figure_eight)


# Compatibility table


def test_compat_table_passes():
    check = compat_table_check()
    assert check.passed
    assert [c.number for c in check.classes] == list(range(1, 8))
    assert all(c.cases == 16 for c in check.classes)


def test_class_two_euler_characteristic():
    cls = COMPATIBILITY_CLASSES[1]
    for k, l in product(range(4), repeat=2):
        assert combined_row(cls, k, l)[6] == -4 * k - 6 * l - 5


def test_class_seven_weight_on_e20():
    cls = COMPATIBILITY_CLASSES[6]
    for k, l in product(range(4), repeat=2):
        assert combined_row(cls, k, l)[5] == 2 * k + 8 * l + 1


def test_class_one_is_a_single_surface():
    cls = COMPATIBILITY_CLASSES[0]
    assert combined_row(cls, 0, 0) == combined_row(cls, 3, 2) == (2, 1, 1, 0, 1, 1, -2)


# Norms


def test_lst_order():
    assert lst_order("∂1", (0, 1, 1)) == (1, 0, 1)
    assert lst_order("∂2", (0, 1, 1)) == (1, 1, 0)
    assert lst_order("∂2", (2, 1, 3)) == (1, 3, 2)


def test_alpha3_candidates_have_unit_longitudes():
    candidates = alpha3_candidates()
    assert candidates
    for c in candidates:
        assert c.weights["∂1"][1] == 1
        assert c.weights["∂2"][1] == 1


@pytest.mark.parametrize("k, n", list(product(ODD, ODD)))
def test_norm_report(k, n):
    report = norm_report(k, n)
    assert report.norms == ((k + 1) // 2, (n + 1) // 2, (k + n - 2) // 2)
    assert report.strict_triangle
    assert report.assumptions
    console.print(f"M_({k},{n}): {report.norms}")


def test_norm_extensions():
    report = norm_report(5, 7)
    alpha1, alpha2, _ = report.classes
    by_source = {r.candidate.weights["∂1"]: r for r in alpha1.results}
    assert by_source[(2, 1, 1)].total is None
    assert by_source[(0, 1, 1)].extensions["∂1"] == -1
    assert alpha1.best.candidate == ALPHA1_CANDIDATES[1]
    assert alpha2.best.candidate == ALPHA2_CANDIDATES[0]
    assert alpha2.best.extensions["∂2"] == -3


@pytest.mark.parametrize("k, n", [(2, 3), (3, 1), (4, 5)])
def test_norm_report_rejects_parameters(k, n):
    with pytest.raises(InvalidParameter):
        norm_report(k, n)
