"""Tests for gluings, signatures, the table format and Pachner moves."""

import numpy as np
import pytest
from rich.console import Console

from topology_engine.errors import (
    FaceGluedToItselfIdentically,
    Inapplicable,
    IndexOutOfRange,
    InvalidEdgeIdentification,
    MalformedSignature,
    NonInvolutiveGluing,
    NotOrientable,
)
from topology_engine.families.assembly import t_kn, u_kn
from topology_engine.families.layered import lst
from topology_engine.families.solid_tori import solid_torus_tm
from topology_engine.homology.chains import homology_h1
from topology_engine.triangulation.isosig import decode_iso_signature, is_isomorphic, iso_signature
from topology_engine.triangulation.moves import move_2_3, move_3_2, move_4_4, pachner_move, simplify
from topology_engine.triangulation.orientation import is_orientable, is_oriented, orient
from topology_engine.triangulation.perm import IDENTITY, ORDERED, Perm4
from topology_engine.triangulation.skeleton import boundary_components, skeleton, vertex_links
from topology_engine.triangulation.table_format import (
    TableFormatError,
    format_gluing_table,
    parse_gluing_table,
    read_triangulation,
)
from topology_engine.triangulation.triangulation import (
    TriangulationBuilder,
    build_triangulation,
    disjoint_union,
    random_relabel,
    restrict,
)

console = Console()

T33 = "gLLMQbeefffehhqxhqq"


def _samples():
    return {
        "T_33": t_kn(3, 3),
        "T_35": t_kn(3, 5),
        "T_5": solid_torus_tm(5).triangulation,
        "LST_14": lst(1, 4).triangulation,
        "U_33": u_kn(3, 3),
    }


# Permutations


def test_perm_composition_and_inverse():
    p, q = Perm4.of(1, 2, 3, 0), Perm4.of(1, 0, 2, 3)
    assert (p * q)(0) == p(q(0)) == 2
    for perm in ORDERED:
        assert perm * perm.inverse() == IDENTITY
        assert perm.sign() * perm.inverse().sign() == 1
    assert len(set(ORDERED)) == 24


def test_perm_from_face_images():
    perm = Perm4.from_face_images(3, (0, 1, 3))
    assert perm.images == (0, 1, 3, 2)
    with pytest.raises(ValueError):
        Perm4.from_face_images(3, (0, 0, 1))


# Builder


def test_builder_rejects_bad_gluings():
    builder = TriangulationBuilder(2)
    with pytest.raises(IndexOutOfRange):
        builder.join(0, 0, 2, IDENTITY)
    with pytest.raises(FaceGluedToItselfIdentically):
        builder.join(0, 0, 0, IDENTITY)
    builder.join(0, 0, 1, IDENTITY)
    with pytest.raises(NonInvolutiveGluing):
        builder.join(0, 0, 1, Perm4.of(0, 2, 1, 3))


def test_components_and_restrict():
    t = disjoint_union([t_kn(3, 3), lst(1, 3).triangulation])
    assert len(t.components()) == 2
    assert not t.is_connected()
    part = restrict(t, range(6))
    assert part.is_closed()
    assert iso_signature(part) == T33


def test_single_tetrahedron():
    t = build_triangulation(1, [])
    assert len(t.boundary_faces()) == 4
    sk = skeleton(t)
    assert len(sk.edges) == 6
    assert len(sk.vertices) == 4
    assert [link.kind for link in vertex_links(t)] == ["disc"] * 4
    assert [len(c.faces) for c in boundary_components(t)] == [4]


def test_edge_identified_with_itself_in_reverse():
    builder = TriangulationBuilder(1)
    builder.join(0, 0, 0, Perm4.of(1, 0, 3, 2))
    with pytest.raises(InvalidEdgeIdentification):
        skeleton(builder.build())


# Signatures


def test_t33_signature():
    assert iso_signature(t_kn(3, 3)) == T33


@pytest.mark.parametrize("name", list(_samples()))
def test_signature_relabelling_invariance(name):
    t = _samples()[name]
    sig = iso_signature(t)
    rng = np.random.default_rng(2024)
    for _ in range(100):
        relabelled, _, _ = random_relabel(t, rng)
        assert iso_signature(relabelled) == sig
    console.print(f"{name}: {sig}")


@pytest.mark.parametrize("name", list(_samples()))
def test_decode_round_trip(name):
    t = _samples()[name]
    decoded = decode_iso_signature(iso_signature(t))
    assert decoded.tet_count == t.tet_count
    assert is_isomorphic(t, decoded) is not None


def test_isomorphism_maps_one_onto_the_other():
    t = t_kn(3, 5)
    relabelled, _, _ = random_relabel(t, np.random.default_rng(3))
    iso = is_isomorphic(t, relabelled)
    assert iso is not None
    assert iso.apply(t) == relabelled
    assert is_isomorphic(t, t_kn(3, 3)) is None


@pytest.mark.parametrize("sig", ["", "@@@", "b", T33[:-3]])
def test_malformed_signatures(sig):
    with pytest.raises(MalformedSignature):
        decode_iso_signature(sig)


# Table format


def test_table_round_trip():
    t = t_kn(3, 5)
    text = format_gluing_table(t)
    assert parse_gluing_table(text) == t
    assert read_triangulation(text) == t
    assert read_triangulation(T33) == decode_iso_signature(T33)


def test_table_boundary_markers_and_comments():
    text = format_gluing_table(lst(1, 3).triangulation)
    marked = text.replace("bdry", "∂1", 1).replace("bdry", "-", 1) + "# trailing comment\n"
    assert parse_gluing_table(marked) == lst(1, 3).triangulation


def test_table_errors():
    with pytest.raises(TableFormatError):
        parse_gluing_table("0 | bdry | bdry\n")
    with pytest.raises(TableFormatError):
        parse_gluing_table("0 | 0 (012) | bdry | bdry | x\n")
    with pytest.raises(TableFormatError):
        parse_gluing_table("1 | bdry | bdry | bdry | bdry\n")


# Orientation


def test_orient():
    t, _, _ = random_relabel(t_kn(3, 3), np.random.default_rng(11))
    assert is_orientable(t)
    oriented = orient(t)
    assert is_oriented(oriented)
    assert iso_signature(oriented) == T33


def test_orientation_preserving_self_gluing():
    builder = TriangulationBuilder(1)
    builder.join(0, 3, 0, Perm4.of(0, 3, 1, 2))
    t = builder.build()
    assert not is_orientable(t)
    with pytest.raises(NotOrientable):
        orient(t)


# Moves


@pytest.mark.parametrize("name", ["T_33", "T_35", "T_5", "U_33"])
def test_pachner_moves_preserve_homology(name):
    t = _samples()[name]
    h1 = homology_h1(t)
    rng = np.random.default_rng(5)
    applied = 0
    for _ in range(200):
        if applied == 20:
            break
        sk = skeleton(t)
        try:
            if rng.random() < 0.5:
                candidate = pachner_move(t, "2-3", int(rng.integers(t.tet_count)), int(rng.integers(4)))
            else:
                edges = [e.index for e in sk.edges if not e.boundary and e.degree in (3, 4)]
                if not edges:
                    continue
                e = edges[int(rng.integers(len(edges)))]
                kind = "3-2" if sk.edges[e].degree == 3 else "4-4"
                candidate = pachner_move(t, kind, e, int(rng.integers(2)))
        except Inapplicable:
            continue
        assert homology_h1(candidate) == h1
        t = candidate
        applied += 1
    assert applied == 20
    console.print(f"{name}: 20 moves, {t.tet_count} tetrahedra")


def test_two_three_then_three_two():
    t = t_kn(3, 3)
    bigger = move_2_3(t, 0, 0) if t.adjacent(0, 0)[0] != 0 else move_2_3(t, 0, 1)
    assert bigger.tet_count == 7
    sk = skeleton(bigger)
    degree_three = [e.index for e in sk.edges if e.degree == 3]
    assert degree_three
    back = None
    for e in degree_three:
        try:
            candidate = move_3_2(bigger, e)
        except Inapplicable:
            continue
        if iso_signature(candidate) == T33:
            back = candidate
    assert back is not None


def _octahedron():
    builder = TriangulationBuilder(4)
    for i in range(4):
        builder.join(i, 3, (i - 1) % 4, Perm4.of(0, 1, 3, 2))
    return builder.build()


@pytest.mark.parametrize("name", ["T_33", "T_35", "U_33"])
def test_three_two_undoes_two_three(name):
    t = _samples()[name]
    tet, face = next((i, f) for i in range(t.tet_count) for f in range(4) if t.adjacent(i, f)[0] != i)
    bigger = move_2_3(t, tet, face)
    new_edge = skeleton(bigger).edge_class_of(bigger.tet_count - 1, 0, 1)
    assert skeleton(bigger).edges[new_edge].degree == 3
    back = move_3_2(bigger, new_edge)
    assert back.tet_count == t.tet_count
    assert iso_signature(back) == iso_signature(t)
    assert homology_h1(back) == homology_h1(t)
    assert [link.kind for link in vertex_links(back)] == [link.kind for link in vertex_links(t)]


@pytest.mark.parametrize("axis", [0, 1])
def test_four_four_on_octahedron(axis):
    t = _octahedron()
    sk = skeleton(t)
    spine = sk.edge_class_of(0, 0, 1)
    assert sk.edges[spine].degree == 4 and not sk.edges[spine].boundary
    moved = move_4_4(t, spine, axis)
    assert moved.tet_count == 4
    interior = [e for e in skeleton(moved).edges if not e.boundary]
    assert [e.degree for e in interior] == [4]
    assert iso_signature(moved) == iso_signature(t)


def test_boundary_face_move_is_inapplicable():
    t = lst(1, 3).triangulation
    tet, face = t.boundary_faces()[0]
    with pytest.raises(Inapplicable):
        move_2_3(t, tet, face)
    with pytest.raises(Inapplicable):
        pachner_move(t, "5-1", 0)


def test_simplify_never_grows():
    t = t_kn(3, 3)
    rng = np.random.default_rng(1)
    for _ in range(3):
        tet, face = int(rng.integers(t.tet_count)), int(rng.integers(4))
        try:
            t = move_2_3(t, tet, face)
        except Inapplicable:
            pass
    smaller = simplify(t, effort=100, seed=0)
    assert smaller.tet_count <= t.tet_count
    assert homology_h1(smaller) == homology_h1(t_kn(3, 3))
    assert simplify(t, effort=100, seed=0) == smaller
