"""Tests for the triangulation families: solid tori, LSTs, fillings and the named assemblies."""

import pytest
from rich.console import Console

from topology_engine.errors import InvalidParameter, NoSimplicialMatching, NotCoprime
from topology_engine.families.assembly import (
    INTERFACE_EDGE_SITES,
    interface_edges,
    link_complement_from_cones,
    link_complement_n,
    meridional_filling,
    t_kn,
    t_prime,
    t_prime_kn,
    u_cusped,
    u_kn,
)
from topology_engine.families.filling import cone_over_boundary, fill_boundary, filling_gluings
from topology_engine.families.layered import lst
from topology_engine.families.solid_tori import (
    framing_tm,
    meridian_disc,
    meridian_layer_counts,
    quad_surfaces_tm,
    solid_torus_tm,
)
from topology_engine.families.tables import link_complement_table, u33_table
from topology_engine.homology.chains import h2_z2_basis, homology_h1
from topology_engine.homology.groups import AbelianGroup
from topology_engine.normal.analysis import SlopePQ, analyze_surface, boundary_slopes, edge_slopes, framing_generates
from topology_engine.normal.coordinates import edge_weights, euler_characteristic, is_admissible
from topology_engine.triangulation.isosig import iso_signature, is_isomorphic
from topology_engine.triangulation.orientation import is_orientable
from topology_engine.triangulation.skeleton import skeleton, vertex_links

console = Console()

ODD = (3, 5, 7, 9)


# Solid tori T_m


def test_solid_torus_shape():
    st = solid_torus_tm(3)
    sk = skeleton(st.triangulation)
    assert st.triangulation.tet_count == 3
    assert len(sk.vertices) == 2
    assert len(sk.boundary) == 1
    assert len(sk.boundary[0].faces) == 4
    assert len(sk.boundary[0].vertices) == 2
    assert sk.boundary[0].euler == 0


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8, 9])
def test_solid_torus_interior_degrees(m):
    sk = skeleton(solid_torus_tm(m).triangulation)
    interior = [e.degree for e in sk.edges if not e.boundary]
    assert interior
    assert set(interior) == {4}


def test_solid_torus_single_tetrahedron():
    st = solid_torus_tm(1)
    assert st.triangulation.tet_count == 1
    assert len(st.triangulation.boundary_faces()) == 4
    assert st.identified_edges == (((0, 0, 3), (0, 1, 2)),)


def test_solid_torus_rejects_zero():
    with pytest.raises(InvalidParameter):
        solid_torus_tm(0)


def test_meridian_disc_first_layers():
    disc1 = meridian_disc(solid_torus_tm(1))
    assert disc1.pieces() == {(0, "q03/12"): 1}

    disc2 = meridian_disc(solid_torus_tm(2))
    assert disc2.triangles(1, 0) == 1
    assert disc2.triangles(1, 3) == 1
    assert sum(disc2.quads(1, k) for k in range(3)) == 0

    disc3 = meridian_disc(solid_torus_tm(3))
    assert disc3.triangles(2, 1) == 1
    assert disc3.triangles(2, 3) == 1
    assert disc3.quads(2, 0) == 1


@pytest.mark.parametrize("m", range(1, 10))
def test_meridian_disc_is_a_disc(m):
    st = solid_torus_tm(m)
    disc = meridian_disc(st)
    assert is_admissible(disc)
    assert euler_characteristic(disc) == 1
    analysis = analyze_surface(disc)
    assert analysis.connected
    assert analysis.euler == 1
    console.print(f"T_{m} meridian layer counts (triangles, quads): {meridian_layer_counts(st)}")


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_quad_surfaces_partition_quad_types(m):
    st = solid_torus_tm(m)
    surfaces = quad_surfaces_tm(st)
    for tet in range(m):
        used = sorted(k for s in surfaces for k in s.quad_types(tet))
        assert used == [0, 1, 2]


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_quad_surface_slopes(m):
    st = solid_torus_tm(m)
    framing = framing_tm(st)
    f1, f2, f3 = quad_surfaces_tm(st)

    assert boundary_slopes(f1, framing).slopes == ((SlopePQ(1, 0), 2),)

    (slope2, count2), = boundary_slopes(f2, framing).slopes
    (slope3, count3), = boundary_slopes(f3, framing).slopes
    assert count2 == count3 == 1
    assert (abs(slope2.p), slope2.q) == (m + 1, 1)
    assert (abs(slope3.p), slope3.q) == (m - 1, 1)


def test_meridian_curve_is_a_single_boundary_slope():
    st = solid_torus_tm(5)
    slopes = boundary_slopes(meridian_disc(st), framing_tm(st))
    assert slopes.slopes == ((SlopePQ(0, 1), 1),)
    assert slopes.trivial == 0


def test_quad_surface_interface_weights():
    st = solid_torus_tm(5)
    sk = skeleton(st.triangulation)
    order = [sk.edge_class_of(*INTERFACE_EDGE_SITES[name]) for name in ("e1", "e2", "e3", "e4")]
    expected = [(0, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0)]
    for surface, weights in zip(quad_surfaces_tm(st), expected):
        w = edge_weights(surface)
        assert tuple(w[e] for e in order) == weights


# Layered solid tori


def test_lst_small_cases():
    assert lst(1, 2).triangulation.tet_count == 1
    l01 = lst(0, 1)
    assert l01.triangulation.tet_count == 3
    assert l01.meridional_edge is not None
    assert l01.weights[l01.meridional_edge] == 0
    assert lst(1, 4).boundary_weights() == (1, 4, 5)


@pytest.mark.parametrize("m", range(2, 9))
def test_lst_weights_and_longitude(m):
    l = lst(1, m)
    assert l.boundary_weights() == (1, m, m + 1)
    assert l.longitudinal_edge is not None
    assert l.weights[l.longitudinal_edge] == 1
    boundary = skeleton(l.triangulation).boundary
    assert len(boundary) == 1
    assert boundary[0].is_one_vertex_torus()


@pytest.mark.parametrize("j,k", [(2, 3), (3, 5), (2, 7), (1, 1)])
def test_lst_general_parameters(j, k):
    l = lst(j, k)
    assert l.boundary_weights() == tuple(sorted((j, k, j + k)))
    assert is_orientable(l.triangulation)


def test_lst_rejects_bad_parameters():
    with pytest.raises(NotCoprime):
        lst(2, 4)
    with pytest.raises(InvalidParameter):
        lst(0, 0)
    with pytest.raises(InvalidParameter):
        lst(-1, 2)


def test_lst_has_no_mod_two_second_homology():
    group, basis = h2_z2_basis(lst(1, 2).triangulation)
    assert group.torsion == ()
    assert basis == []


# T_kn


def test_t_kn_signature():
    assert iso_signature(t_kn(3, 3)) == "gLLMQbeefffehhqxhqq"


@pytest.mark.parametrize("k", ODD)
@pytest.mark.parametrize("n", ODD)
def test_t_kn_structure_and_homology(k, n):
    t = t_kn(k, n)
    sk = skeleton(t)
    assert t.tet_count == k + n
    assert t.is_closed()
    assert [v.link.kind for v in sk.vertices] == ["torus"]
    assert is_orientable(t)
    assert homology_h1(t) == AbelianGroup.from_invariants(1, [2, k + 1])


def test_t_kn_interface_edges_are_distinct():
    edges = interface_edges(3, 5)
    assert len(set(edges.values())) == 4


def test_t_kn_rejects_even():
    with pytest.raises(InvalidParameter):
        t_kn(4, 3)
    with pytest.raises(InvalidParameter):
        t_kn(3, 1)


# Link complement N


def test_link_complement_table():
    t = link_complement_table()
    sk = skeleton(t)
    assert t.tet_count == 8
    assert [v.link.kind for v in sk.vertices] == ["torus"] * 3
    assert is_orientable(t)
    assert homology_h1(t) == AbelianGroup(3)


def test_link_complement_from_cones_matches_table():
    cones = link_complement_from_cones()
    assert cones.triangulation.tet_count == 8
    assert is_isomorphic(cones.triangulation, link_complement_table()) is not None


def test_link_complement_cusp_marks():
    n = link_complement_n()
    assert set(n.vertices) == {"red", "blue", "interface"}
    assert len(set(n.vertices.values())) == 3


def test_cone_over_solid_torus_boundary():
    coned, _ = cone_over_boundary(solid_torus_tm(3).triangulation)
    sk = skeleton(coned)
    assert coned.tet_count == 3 + 4
    assert coned.is_closed()
    assert sorted(v.link.kind for v in sk.vertices).count("torus") == 1


# T'


def test_t_prime_signature():
    assert iso_signature(t_prime().triangulation) == "rfLLHMzLPMwQcddghghjnklomqopqrwgrrgfxrvqdabxs"


def test_t_prime_boundary():
    marked = t_prime()
    sk = skeleton(marked.triangulation)
    assert len(sk.boundary) == 2
    assert all(b.is_one_vertex_torus() for b in sk.boundary)
    assert len(sk.ideal_vertices()) == 1
    assert len(set(marked.edges.values())) == 6


def test_t_prime_framings():
    marked = t_prime()
    t = marked.triangulation

    def slope(framing, name):
        p, q = edge_slopes(t, framing)[marked.edge(name)]
        return (p, q) if (q > 0 or (q == 0 and p > 0)) else (-p, -q)

    first, second = marked.framings["∂1"], marked.framings["∂2"]
    assert framing_generates(t, first)
    assert framing_generates(t, second)
    assert slope(first, "e0") == (1, 2)
    assert slope(first, "e2") == (1, 1)
    assert slope(first, "e4") == (0, 1)
    assert slope(second, "e18") == (1, 0)
    assert slope(second, "e19") == (0, 1)
    assert slope(second, "e20") == (-1, 1)


def test_meridional_filling_gives_unlink():
    filled = meridional_filling("e19")
    assert homology_h1(filled) == AbelianGroup(2)


@pytest.mark.parametrize("k,n", [(3, 3), (5, 7), (3, 5)])
def test_t_prime_kn_homology(k, n):
    t = t_prime_kn(k, n)
    sk = skeleton(t)
    assert t.is_closed()
    assert len(sk.ideal_vertices()) == 1
    assert len(sk.vertices) == 3
    assert homology_h1(t) == AbelianGroup.from_invariants(1, [2, k + 1])


def test_fill_boundary_without_matching():
    t = t_prime().triangulation
    e2 = t_prime().edge("e2")
    l = lst(1, 2)
    with pytest.raises(NoSimplicialMatching):
        fill_boundary(t, 0, l, [(l.edge_with_weight(1), e2), (l.edge_with_weight(2), e2)])


def test_filling_gluings_respect_matching():
    marked = t_prime()
    l = lst(1, 2)
    matching = [(l.edge_with_weight(1), marked.edge("e2")), (l.edge_with_weight(2), marked.edge("e0"))]
    found = filling_gluings(marked.triangulation, marked.framings["∂1"].component, l, matching)
    assert found
    for gluing in found:
        assert gluing.edge_map[l.edge_with_weight(3)] == marked.edge("e4")


# U_kn


def test_u_kn_signature():
    assert iso_signature(u_kn(3, 3)) == "iLLwQPcbeefgehhhhhqhhqhqx"
    assert is_isomorphic(u_kn(3, 3), u33_table()) is not None


def test_u_cusped_signature():
    t = u_cusped()
    assert t.tet_count == 10
    assert t.is_connected()
    assert iso_signature(t) == "kLLPwLQkceefeijijijiiapuuxptxl"


def test_u_cusped_has_three_cusps():
    t = u_cusped()
    links = vertex_links(t)
    assert [link.kind for link in links] == ["torus"] * 3
    assert is_orientable(t)
    assert not t.boundary_faces()


@pytest.mark.parametrize("k,n", [(3, 5), (5, 7)])
def test_u_kn_symmetry(k, n):
    a, b = u_kn(k, n), u_kn(n, k)
    assert a.tet_count == k + n + 2
    assert is_isomorphic(a, b) is not None


def test_u_kn_homology():
    assert homology_h1(u_kn(3, 3)) == AbelianGroup.from_invariants(1, [2, 4])
    group, _ = h2_z2_basis(u_kn(3, 3))
    assert len(group.torsion) == 2
