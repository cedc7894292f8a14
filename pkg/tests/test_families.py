import pytest

from hyperrho import (
    FamilyId,
    HypergraphError,
    are_isomorphic,
    below_families,
    canonical_form,
    enumerate_hypertrees,
    equal_families,
    family_members_with_edges,
    gen_BD,
    gen_BD_tilde,
    gen_E,
    gen_F,
    gen_G,
    gen_H,
    gen_cycle,
    gen_edge_star,
    gen_path,
    gen_smith2,
    gen_star,
    gen_tilde_D,
)


def test_path_and_cycle_counts():
    assert gen_path(3, 1).edge_count == 1
    a2 = gen_path(3, 2)
    assert a2.vertex_count == 5
    assert gen_path(2, 3).vertex_count == 4
    assert gen_cycle(2, 3).vertex_count == 3
    assert gen_cycle(3, 3).vertex_count == 6
    assert gen_cycle(3, 2).vertex_count == 4
    with pytest.raises(HypergraphError):
        gen_cycle(3, 1)
    with pytest.raises(HypergraphError):
        gen_path(3, 0)


def test_star_counts():
    assert gen_star(3, 4).vertex_count == 9
    assert gen_star(3, 1).edge_count == 1
    assert gen_star(4, 4).vertex_count == 13


def test_f_and_g_edge_counts():
    assert gen_F(3, 2, 3, 4).edge_count == 10
    assert gen_G(3, 1, 2, 5, 1, 2).edge_count == 13
    assert gen_H(4, 1, 1, 2, 2).edge_count == 7
    assert gen_edge_star(4).edge_count == 5
    assert gen_tilde_D(3, 6).edge_count == 6
    assert gen_BD(3, 5).edge_count == 5
    assert gen_BD_tilde(3, 6).edge_count == 6


def test_aliases():
    assert are_isomorphic(gen_E(3, 2, 2, 2), gen_smith2("tildeE6").extend())
    assert are_isomorphic(gen_E(3, 1, 3, 3), gen_smith2("tildeE7").extend())
    assert are_isomorphic(gen_E(3, 1, 2, 5), gen_smith2("tildeE8").extend())
    # vertex-fork vs edge-fork families coincide at their overlap
    assert are_isomorphic(gen_F(3, 1, 2, 1), gen_F(3, 1, 1, 2))
    assert are_isomorphic(gen_G(3, 1, 1, 2, 1, 1), gen_G(3, 1, 1, 2, 1, 1))
    assert are_isomorphic(gen_edge_star(3), gen_F(3, 1, 1, 1))
    assert are_isomorphic(gen_edge_star(4), gen_H(4, 1, 1, 1, 1))
    assert are_isomorphic(gen_smith2("tildeD", 4), gen_star(2, 4))


def test_parameter_symmetry():
    assert are_isomorphic(gen_E(3, 2, 1, 5), gen_E(3, 5, 2, 1))
    assert are_isomorphic(gen_F(3, 4, 2, 3), gen_F(3, 2, 3, 4))
    assert are_isomorphic(gen_G(3, 2, 1, 3, 1, 4), gen_G(3, 1, 4, 3, 1, 2))
    assert FamilyId("G", (2, 1, 3, 1, 4), 3).params == (1, 2, 3, 1, 4)
    assert FamilyId("E", (5, 1, 2), 3).params == (1, 2, 5)


def test_extension_commutes_with_generators():
    pairs = [
        (gen_path(3, 4).extend(), gen_path(4, 4)),
        (gen_cycle(3, 5).extend(), gen_cycle(4, 5)),
        (gen_E(3, 1, 2, 2).extend(), gen_E(4, 1, 2, 2)),
        (gen_F(3, 1, 3, 14).extend(), gen_F(4, 1, 3, 14)),
        (gen_G(3, 1, 1, 2, 1, 3).extend(), gen_G(4, 1, 1, 2, 1, 3)),
        (gen_H(4, 1, 1, 2, 2).extend(), gen_H(5, 1, 1, 2, 2)),
        (gen_tilde_D(3, 7).extend(), gen_tilde_D(4, 7)),
        (gen_BD(3, 6).extend(), gen_BD(4, 6)),
        (gen_BD_tilde(3, 7).extend(), gen_BD_tilde(4, 7)),
    ]
    for extended, built in pairs:
        assert are_isomorphic(extended, built)


def test_family_id_roundtrip():
    fam = FamilyId("F", (1, 4, 8), 3)
    assert fam.edge_total() == 14
    assert fam.make().edge_count == 14
    assert fam.label() == "F_{1,4,8}^(3)"
    assert FamilyId("F", (1, 2, 4), 3).label() == "B_8^(3)"
    assert FamilyId("G", (1, 2, 0, 1, 2), 3).label() == "~B_8^(3)"
    with pytest.raises(HypergraphError):
        FamilyId("X", (1,), 3)


def test_members_with_two_edges():
    members = family_members_with_edges(3, 2)
    keys = {canonical_form(h) for _, h in members}
    assert canonical_form(gen_cycle(3, 2)) in keys
    assert canonical_form(gen_path(3, 2)) in keys
    assert len(members) == 2


def test_members_with_four_edges_rank3():
    members = family_members_with_edges(3, 4)
    keys = {canonical_form(h) for _, h in members}
    for expected in (gen_star(3, 4), gen_E(3, 1, 1, 2), gen_path(3, 4), gen_F(3, 1, 1, 1)):
        assert canonical_form(expected) in keys


def test_members_rank2_six_edges():
    members = family_members_with_edges(2, 6)
    keys = {canonical_form(h) for _, h in members}
    for expected in (
        gen_path(2, 6),
        gen_E(2, 1, 1, 4),
        gen_E(2, 1, 2, 3),
        gen_E(2, 2, 2, 2),
        gen_cycle(2, 6),
        gen_tilde_D(2, 6),
    ):
        assert canonical_form(expected) in keys
    assert len(members) == 6


def test_catalog_edges_match_declared_totals():
    for r in (2, 3, 4):
        for fam in below_families(r, 12) + equal_families(r, 12):
            assert fam.make().edge_count == fam.edge_total()


def test_hypertree_enumeration_counts():
    counts = [len(enumerate_hypertrees(3, m)) for m in range(1, 6)]
    assert counts == [1, 1, 2, 4, 8]
    for h in enumerate_hypertrees(3, 4):
        assert h.is_hypertree()


def test_smith2_tags():
    assert gen_smith2("A", 5).edge_count == 5
    assert gen_smith2("D", 4).edge_count == 4
    assert gen_smith2("E7").vertex_count == 7
    assert are_isomorphic(gen_smith2("C", 4), gen_cycle(2, 4))
    with pytest.raises(HypergraphError):
        gen_smith2("Z")
