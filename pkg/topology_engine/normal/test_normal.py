"""Tests for normal surface coordinates, analysis, canonical representatives and enumeration."""

from itertools import combinations

import pytest
from rich.console import Console

from topology_engine.errors import (
    BudgetExhausted,
    IncompatibleQuadTypes,
    InvalidParameter,
    LimitExceeded,
    NoRepresentative,
)
from topology_engine.families.assembly import t_kn
from topology_engine.families.layered import lst
from topology_engine.families.solid_tori import meridian_disc, solid_torus_tm
from topology_engine.homology.chains import nonzero_classes
from topology_engine.homology.groups import Z2Class
from topology_engine.normal.analysis import analyze_surface
from topology_engine.normal.canonical import canonical_z2_representative, is_one_quad_per_tet
from topology_engine.normal.coordinates import (
    NormalSurfaceVector,
    edge_weights,
    euler_characteristic,
    haken_sum,
    is_admissible,
    matching_matrix,
    quad_surface_vector,
    vertex_link_vector,
)
from topology_engine.normal.enumeration import EnumerationLimits, fundamental_surfaces, vertex_surfaces
from topology_engine.normal.lst_surfaces import (
    extend_into_lst,
    has_connected_essential_boundary,
    lst_essential_catalogue,
    ordered_boundary_edges,
    surface_boundary_weights,
)
from topology_engine.triangulation.skeleton import skeleton
from topology_engine.triangulation.triangulation import TriangulationBuilder

console = Console()


# Coordinates


def test_vertex_link_of_t33():
    t = t_kn(3, 3)
    link = vertex_link_vector(t, 0)
    assert is_admissible(link)
    assert euler_characteristic(link) == 0
    analysis = analyze_surface(link)
    assert analysis.component_count == 1
    assert analysis.orientable
    assert analysis.closed


def test_doubled_vertex_link_keeps_euler_zero():
    link = vertex_link_vector(t_kn(3, 3), 0)
    doubled = link.scaled(2)
    analysis = analyze_surface(doubled)
    assert analysis.euler == 0
    assert euler_characteristic(doubled) == 0
    console.print(f"2 x vertex link: {analysis.component_count} component(s)")


def test_edge_weights_agree_across_incidences():
    t = t_kn(3, 5)
    sk = skeleton(t)
    link = vertex_link_vector(t, 0)
    weights = edge_weights(link)
    assert len(weights) == len(sk.edges)
    assert set(weights) == {2}


def test_haken_sum_rejects_mixed_quads():
    t = solid_torus_tm(1).triangulation
    a = quad_surface_vector(t, [0])
    b = quad_surface_vector(t, [1])
    with pytest.raises(IncompatibleQuadTypes):
        haken_sum(a, b)
    with pytest.raises(InvalidParameter):
        haken_sum(a, a, 0, 1)


def test_matching_matrix_sizes():
    t = t_kn(3, 3)
    sk = skeleton(t)
    assert len(matching_matrix(t)) == 3 * len(sk.faces)
    assert len(matching_matrix(t, "quad")) == len(sk.edges)


def test_meridian_disc_weights_in_layered_torus():
    disc = meridian_disc(solid_torus_tm(4))
    assert is_admissible(disc)
    assert analyze_surface(disc).component_count == 1


# Canonical representatives


@pytest.mark.parametrize("k,n", [(3, 3), (3, 5), (5, 5), (5, 7), (7, 7)])
def test_canonical_representatives_of_t_kn(k, n):
    t = t_kn(k, n)
    classes = nonzero_classes(t)
    assert len(classes) == 3
    total = 0
    for c in classes:
        v = canonical_z2_representative(t, c)
        weights = edge_weights(v)
        assert set(weights) <= {0, 1}
        assert tuple(weights) == tuple(x % 2 for x in c.labelling)
        assert is_admissible(v)
        assert is_one_quad_per_tet(v)
        total += euler_characteristic(v)
    assert total == -(k + n)


def test_canonical_representatives_are_non_orientable():
    t = t_kn(3, 3)
    for c in nonzero_classes(t):
        analysis = analyze_surface(canonical_z2_representative(t, c))
        assert analysis.connected
        assert not analysis.orientable
        assert analysis.euler == -2


def test_canonical_rejects_parity_violation():
    t = t_kn(3, 3)
    labelling = [0] * len(skeleton(t).edges)
    labelling[0] = 1
    with pytest.raises(NoRepresentative):
        canonical_z2_representative(t, Z2Class(tuple(labelling)))


def test_canonical_rejects_wrong_length():
    with pytest.raises(NoRepresentative):
        canonical_z2_representative(t_kn(3, 3), Z2Class((1, 0)))


# Enumeration


def test_enumeration_of_empty_triangulation():
    empty = TriangulationBuilder(0).build()
    assert vertex_surfaces(empty) == []
    assert fundamental_surfaces(empty) == []


def test_enumeration_respects_tet_limit():
    with pytest.raises(LimitExceeded):
        vertex_surfaces(t_kn(5, 5))
    with pytest.raises(LimitExceeded):
        fundamental_surfaces(t_kn(3, 3), limits=EnumerationLimits(max_tets=4))


def test_enumeration_stops_when_budget_runs_out():
    with pytest.raises(BudgetExhausted, match="Hilbert basis search"):
        fundamental_surfaces(t_kn(3, 3), surface_filter="closed", limits=EnumerationLimits(hilbert_budget=0))


def test_enumeration_rejects_unknown_filter():
    with pytest.raises(InvalidParameter):
        vertex_surfaces(lst(1, 2).triangulation, surface_filter="spun")


def test_vertex_surfaces_of_smallest_lst_include_meridian_disc():
    l = lst(1, 2)
    surfaces = vertex_surfaces(l.triangulation)
    assert surfaces
    assert all(is_admissible(v) for v in surfaces)
    discs = [v for v in surfaces if surface_boundary_weights(v, l) == (1, 2, 3)]
    assert discs
    assert euler_characteristic(discs[0]) == 1


def test_fundamental_surfaces_of_smallest_lst():
    l = lst(1, 2)
    fundamentals = fundamental_surfaces(l.triangulation)
    vertices = vertex_surfaces(l.triangulation)
    assert {v.coords for v in vertices} <= {v.coords for v in fundamentals}
    assert any(surface_boundary_weights(v, l) == (1, 2, 3) for v in fundamentals)
    assert [v.coords for v in fundamentals] == sorted(v.coords for v in fundamentals)


def test_vertex_surfaces_closed_filter():
    t = t_kn(3, 3)
    closed = vertex_surfaces(t, surface_filter="closed")
    every = vertex_surfaces(t)
    assert {v.coords for v in closed} == {v.coords for v in every}
    assert vertex_surfaces(t, surface_filter="with-boundary") == []
    assert any(v.coords == vertex_link_vector(t, 0).coords for v in closed)


def test_quad_vertex_surfaces_satisfy_matching():
    t = t_kn(3, 3)
    matrix = matching_matrix(t, "quad")
    surfaces = vertex_surfaces(t, "quad")
    assert surfaces
    for v in surfaces:
        assert all(sum(a * b for a, b in zip(row, v.coords)) == 0 for row in matrix)
        assert all(len(v.quad_types(tet)) <= 1 for tet in range(t.tet_count))


def test_euler_characteristic_is_linear():
    t = t_kn(3, 3)
    surfaces = vertex_surfaces(t)
    checked = 0
    for a, b in combinations(surfaces, 2):
        try:
            total = haken_sum(a, b, 2, 3)
        except IncompatibleQuadTypes:
            continue
        assert euler_characteristic(total) == 2 * euler_characteristic(a) + 3 * euler_characteristic(b)
        wa, wb, wt = edge_weights(a), edge_weights(b), edge_weights(total)
        assert wt == [2 * x + 3 * y for x, y in zip(wa, wb)]
        checked += 1
    assert checked


@pytest.mark.slow
def test_fundamental_surfaces_of_t33():
    t = t_kn(3, 3)
    surfaces = fundamental_surfaces(t, surface_filter="closed")
    analyses = [analyze_surface(v) for v in surfaces]
    console.print(f"T_3,3: {len(surfaces)} fundamental surfaces")
    assert len(surfaces) == 11
    vertex_linking = [a for a in analyses if a.components[0].vertex_linking]
    orientable = [a for a in analyses if a.orientable and not a.components[0].vertex_linking]
    one_sided = [a for a in analyses if not a.orientable]
    assert len(vertex_linking) == 1
    assert len(orientable) == 7
    assert all(a.euler <= -2 for a in orientable)
    assert len(one_sided) == 3


# Layered solid tori


def test_catalogue_for_three():
    entries = lst_essential_catalogue(lst(1, 3))
    assert [e.weights for e in entries] == [(1, 3, 4), (1, 1, 2), (1, 1, 0)]
    assert [e.euler for e in entries] == [1, 0, -1]
    assert entries[1].kind == "mobius"


@pytest.mark.parametrize("m", range(2, 10))
def test_catalogue_endpoints(m):
    entries = lst_essential_catalogue(lst(1, m))
    assert entries[0].weights == (1, m, m + 1)
    assert all(e.weights[0] == 1 for e in entries)
    last = entries[-1]
    if m % 2:
        assert last.weights == (1, 1, 0)
        assert 2 * last.euler == 1 - m
    else:
        assert last.weights == (1, 0, 1)
        assert 2 * last.euler == 2 - m


def test_catalogue_rejects_other_tori():
    with pytest.raises(InvalidParameter):
        lst_essential_catalogue(lst(2, 3))


def test_ordered_boundary_edges_follow_meridian_weights():
    l = lst(1, 4)
    assert [l.weights[e] for e in ordered_boundary_edges(l)] == [1, 4, 5]
    assert ordered_boundary_edges(l)[0] == l.longitudinal_edge


@pytest.mark.parametrize("m", range(2, 7))
def test_connected_essential_boundary_meets_longitude_once(m):
    l = lst(1, m)
    found = 0
    for v in vertex_surfaces(l.triangulation):
        if has_connected_essential_boundary(v, l):
            assert surface_boundary_weights(v, l)[0] == 1
            found += 1
    assert found
    console.print(f"LST(1,{m}): {found} vertex surfaces with connected essential boundary")


def test_extensions_into_layered_tori():
    # (1, 0, 1) is the last rung for even m; (1, 1, 0) and (1, 1, 2) for odd m.
    assert extend_into_lst((1, 0, 1), lst(1, 2)) == 0
    assert extend_into_lst((1, 0, 1), lst(1, 4)) == -1
    assert extend_into_lst((1, 1, 0), lst(1, 3)) == -1
    assert extend_into_lst((1, 1, 2), lst(1, 3)) == 0
    assert extend_into_lst((1, 2, 3), lst(1, 2)) == 1


@pytest.mark.slow
@pytest.mark.parametrize("m", range(2, 6))
def test_catalogue_matches_enumeration(m):
    l = lst(1, m)
    for entry in lst_essential_catalogue(l):
        assert extend_into_lst(entry.weights, l) == entry.euler, entry


def test_extensions_that_do_not_exist():
    assert extend_into_lst((1, 2, 1), lst(1, 2)) is None
    assert extend_into_lst((1, 3, 2), lst(1, 3)) is None


def test_extension_beyond_limits_uses_catalogue():
    limits = EnumerationLimits(max_tets=1)
    assert extend_into_lst((1, 1, 0), lst(1, 7), limits) == -3
    assert extend_into_lst((1, 4, 3), lst(1, 7), limits) is None
    with pytest.raises(LimitExceeded):
        extend_into_lst((2, 2, 2), lst(1, 7), limits)


def test_vectors_report_pieces():
    t = solid_torus_tm(1).triangulation
    v = NormalSurfaceVector.from_pieces(t, {(0, "q03/12"): 2})
    assert v.quads(0, 2) == 2
    assert v.pieces() == {(0, "q03/12"): 2}
