import math
import random

import pytest

from hyperrho import (
    Hypergraph,
    HypergraphError,
    Verdict,
    are_isomorphic,
    classify,
    enumerate_hypertrees,
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
    recognize_family,
    rho_r,
    spectral_radius,
    verify_classification,
)
from helpers import random_connected


def test_rho_r_values():
    assert rho_r(2) == pytest.approx(2.0)
    assert rho_r(3) == pytest.approx(2 * 4 ** (1 / 3))
    assert rho_r(3) == pytest.approx(3.17480210, abs=5e-9)
    assert rho_r(4) == pytest.approx(6 * 4 ** 0.25)
    with pytest.raises(ValueError):
        rho_r(1)


def test_classify_spec_examples():
    assert classify(gen_F(3, 2, 2, 7)).verdict == Verdict.EQUAL
    c = classify(gen_G(3, 1, 1, 3, 1, 3))
    assert c.verdict == Verdict.BELOW and c.family.kind == "G"
    assert classify(gen_F(3, 3, 3, 3)).verdict == Verdict.ABOVE
    assert classify(gen_H(5, 1, 1, 2, 2)).verdict == Verdict.EQUAL
    assert classify(gen_edge_star(5)).verdict == Verdict.ABOVE


def test_classify_preconditions():
    with pytest.raises(HypergraphError):
        classify(Hypergraph(3, 6, ((0, 1, 2), (3, 4, 5))))
    with pytest.raises(HypergraphError):
        classify(Hypergraph(3, 1, ()))


def test_classify_nonsimple_rank3():
    assert classify(gen_cycle(3, 2)).verdict == Verdict.EQUAL
    doubled = Hypergraph(3, 3, ((0, 1, 2), (0, 1, 2)), allow_multi=True)
    assert classify(doubled).verdict == Verdict.ABOVE
    bigger = Hypergraph(3, 5, ((0, 1, 2), (0, 1, 3), (3, 4, 2)))
    assert classify(bigger).verdict == Verdict.ABOVE


def test_classify_rank2_smith():
    assert classify(gen_smith2("A", 9)).verdict == Verdict.BELOW
    assert classify(gen_smith2("D", 7)).verdict == Verdict.BELOW
    for tag in ("E6", "E7", "E8"):
        assert classify(gen_smith2(tag)).verdict == Verdict.BELOW
    for tag in ("tildeE6", "tildeE7", "tildeE8"):
        assert classify(gen_smith2(tag)).verdict == Verdict.EQUAL
    assert classify(gen_smith2("C", 8)).verdict == Verdict.EQUAL
    assert classify(gen_smith2("tildeD", 7)).verdict == Verdict.EQUAL
    assert classify(gen_E(2, 2, 2, 3)).verdict == Verdict.ABOVE
    doubled = gen_cycle(2, 2)
    assert classify(doubled).verdict == Verdict.EQUAL
    tripled = Hypergraph(2, 2, ((0, 1),) * 3, allow_multi=True)
    assert classify(tripled).verdict == Verdict.ABOVE


def test_classify_family_presence_invariant():
    # every catalog instance classifies off-Above and the reported family
    # regenerates the input up to isomorphism
    for r, bound in ((3, 12), (4, 10), (5, 10)):
        for m in range(1, bound + 1):
            for fam, h in family_members_with_edges(r, m):
                c = classify(h)
                assert c.verdict != Verdict.ABOVE
                assert c.family is not None
                assert are_isomorphic(c.family.make(), h)


def test_recognize_family_roundtrip():
    rng = random.Random(2)
    cases = [
        gen_F(3, 1, 2, 4), gen_E(3, 2, 2, 2), gen_G(3, 1, 2, 3, 1, 2),
        gen_tilde_D(3, 8), gen_BD(3, 7), gen_BD_tilde(3, 7),
        gen_cycle(3, 6), gen_star(3, 4), gen_path(3, 9), gen_H(4, 1, 1, 2, 2),
    ]
    for h in cases:
        perm = list(range(h.vertex_count))
        rng.shuffle(perm)
        fam = recognize_family(h.relabel(perm))
        assert fam is not None
        assert are_isomorphic(fam.make(), h)


def test_recognize_family_rejects_outsiders():
    # a 7-edge tree outside every list: 4-star with one lengthened arm
    from hyperrho.families import _Build

    b = _Build(3)
    c = b.vertex()
    for _ in range(3):
        b.edge(c)
    b.path(c, 4)
    h = b.done()
    assert recognize_family(h) is None
    assert classify(h).verdict == Verdict.ABOVE


def test_recognize_prefers_stated_alias():
    assert recognize_family(gen_edge_star(3)).kind == "F"
    assert recognize_family(gen_edge_star(4)).kind == "H"
    assert recognize_family(gen_edge_star(5)).kind == "EdgeStar"


def test_reduction_invariance_of_verdicts():
    for r in (4, 5):
        for m in range(1, 11):
            for fam, h in family_members_with_edges(r, m):
                if not h.is_reducible():
                    continue
                assert classify(h).verdict == classify(h.reduce()).verdict


def test_equal_families_have_below_subgraphs():
    # every connected single-edge-deleted subgraph of an Equal instance is Below
    for m in range(2, 13):
        for fam, h in family_members_with_edges(3, m):
            if classify(h).verdict != Verdict.EQUAL:
                continue
            for drop in range(h.edge_count):
                sub = h.restrict_to_edges([j for j in range(h.edge_count) if j != drop])
                if not sub.is_connected():
                    continue
                assert classify(sub).verdict == Verdict.BELOW, (fam.label(), drop)


def test_completeness_on_small_hypertrees():
    # every non-Above verdict comes with a recognized family
    for m in range(1, 9):
        for h in enumerate_hypertrees(3, m):
            c = classify(h)
            if c.verdict != Verdict.ABOVE:
                assert c.family is not None
                assert recognize_family(h) is not None


def test_soundness_on_small_hypertrees_vs_numeric():
    limit = rho_r(3)
    for m in range(1, 9):
        for h in enumerate_hypertrees(3, m):
            c = classify(h)
            res = spectral_radius(h, tol=1e-11)
            if res.upper < limit - 1e-8:
                assert c.verdict == Verdict.BELOW, h.edges
            elif res.lower > limit + 1e-8:
                assert c.verdict == Verdict.ABOVE, h.edges
            else:
                assert c.verdict == Verdict.EQUAL, h.edges


def test_soundness_on_random_cyclic_graphs():
    rng = random.Random(17)
    limit = rho_r(3)
    done = 0
    while done < 30:
        h = random_connected(rng, 3, rng.randint(2, 7))
        if h.is_hypertree():
            continue
        c = classify(h)
        res = spectral_radius(h, tol=1e-10)
        if res.upper < limit - 1e-7:
            assert c.verdict == Verdict.BELOW
        elif res.lower > limit + 1e-7:
            assert c.verdict == Verdict.ABOVE
        else:
            assert c.verdict == Verdict.EQUAL
        done += 1


def test_soundness_on_random_high_rank_graphs():
    # the reduction recursion agrees with numerics, multigraph reductions included
    rng = random.Random(4242)
    checked = 0
    while checked < 40:
        r = rng.choice([4, 5])
        h = random_connected(rng, r, rng.randint(1, 5))
        limit = rho_r(r)
        c = classify(h)
        res = spectral_radius(h, tol=1e-10)
        if res.upper < limit - 1e-7:
            assert c.verdict == Verdict.BELOW, h.edges
        elif res.lower > limit + 1e-7:
            assert c.verdict == Verdict.ABOVE, h.edges
        else:
            assert c.verdict == Verdict.EQUAL, h.edges
        checked += 1


def test_verify_classification_reports():
    rep = verify_classification(gen_cycle(3, 5))
    assert rep.agree and not rep.decisive
    rep = verify_classification(gen_path(3, 9))
    assert rep.agree and rep.decisive and rep.numeric_verdict == Verdict.BELOW
    rep = verify_classification(gen_F(3, 1, 3, 15))
    assert rep.agree and rep.decisive and rep.numeric_verdict == Verdict.ABOVE


def test_high_rank_ladder():
    assert classify(gen_cycle(4, 2)).verdict == Verdict.EQUAL
    assert classify(gen_cycle(5, 6)).verdict == Verdict.EQUAL
    assert classify(gen_tilde_D(5, 6)).verdict == Verdict.EQUAL
    assert classify(gen_star(4, 5)).verdict == Verdict.ABOVE
    assert classify(gen_H(4, 1, 2, 2, 2)).verdict == Verdict.ABOVE
    assert classify(gen_H(4, 1, 1, 1, 1)).verdict == Verdict.BELOW
    overlap = Hypergraph(4, 5, ((0, 1, 2, 3), (0, 1, 2, 4)))
    assert classify(overlap).verdict == Verdict.ABOVE


def test_witness_strings_present_for_above():
    for h in (gen_star(3, 5), gen_F(3, 3, 3, 3), gen_edge_star(5)):
        c = classify(h)
        assert c.verdict == Verdict.ABOVE and c.witness
