#!/usr/bin/env python3
"""Regenerate the bundled certificate fixtures.

Run from the repository root:  python3 tools/make_fixtures.py

Tree labelings at alpha = 1/4 are forced (unique), so those fixtures are
materialized by exact propagation from the generators.  The strictly
sub/supernormal gadget labelings are hand-entered data.  Every fixture is
verified before writing; landmark fractions are additionally asserted in
the test suite.
"""

from __future__ import annotations

import json
import pathlib
import sys
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from hyperrho import (  # noqa: E402
    Hypergraph,
    WeightedIncidence,
    check_consistent,
    check_normal,
    default_root,
    gen_cycle,
    gen_BD_tilde,
    gen_E,
    gen_F,
    gen_G,
    gen_H,
    gen_path,
    gen_star,
    gen_tilde_D,
    incidence_to_json_obj,
    tree_propagate,
)

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "hyperrho" / "fixtures"

QUARTER = Fraction(1, 4)


class Fig:
    """Explicit labeled construction: vertices, edges, rational entries."""

    def __init__(self, rank: int):
        self.rank = rank
        self.n = 0
        self.edges: list[tuple[int, ...]] = []
        self.entries: dict[tuple[int, int], Fraction] = {}

    def v(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, *anchors: int) -> int:
        fill = [self.v() for _ in range(self.rank - len(anchors))]
        self.edges.append(tuple(sorted((*anchors, *fill))))
        return len(self.edges) - 1

    def put(self, vertex: int, edge: int, num: int, den: int = 1) -> None:
        self.entries[(vertex, edge)] = Fraction(num, den)

    def graph(self, allow_multi: bool = False) -> Hypergraph:
        return Hypergraph(self.rank, self.n, tuple(self.edges), allow_multi=allow_multi)


def ladder(t: int) -> Fraction:
    """Weight arriving at a vertex from a hanging path of t edges."""
    return Fraction(t, 2 * (t + 1))


def arm(fig: Fig, anchor: int, length: int) -> None:
    """Attach a path and label it with the standard quarter-normal ladder."""
    cur = anchor
    for t in range(1, length + 1):
        nxt = fig.v()
        e = fig.edge(cur, nxt)
        fig.put(cur, e, *ladder(length - t + 1).as_integer_ratio())
        down = 1 - ladder(length - t)
        if length - t > 0:
            fig.put(nxt, e, *down.as_integer_ratio())
        cur = nxt


def strip_trivial_leaves(h: Hypergraph, entries: dict) -> dict:
    return {
        (v, e): x
        for (v, e), x in entries.items()
        if not (h.degrees[v] == 1 and x == 1)
    }


def propagation_fixture(h: Hypergraph) -> dict[tuple[int, int], Fraction]:
    out = tree_propagate(h, default_root(h), QUARTER)
    assert not out.failed and out.residual == 0, "graph is not quarter-normal"
    return strip_trivial_leaves(h, out.entries)


def constant_half_fixture(h: Hypergraph) -> dict[tuple[int, int], Fraction]:
    half = Fraction(1, 2)
    return {
        (v, j): half
        for j in range(h.edge_count)
        for v in h.edges[j]
        if h.degrees[v] > 1
    }


def write_fixture(name: str, description: str, h: Hypergraph,
                  entries: dict[tuple[int, int], Fraction], alpha: Fraction,
                  kind: str, consistent: bool) -> None:
    b = WeightedIncidence(dict(entries))
    report = check_normal(h, b, alpha)
    seen_consistent = check_consistent(h, b)
    assert report.kind == kind, f"{name}: expected {kind}, got {report.kind}"
    assert seen_consistent == consistent, f"{name}: consistency mismatch"
    obj = {
        "name": name,
        "description": description,
        "graph": h.to_json_obj(),
        **incidence_to_json_obj(b, alpha),
        "claim": {"kind": kind, "consistent": consistent},
    }
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(obj, indent=1) + "\n")
    print(f"wrote {path.name}: {kind}, consistent={consistent}")


def normal_tree(name: str, description: str, h: Hypergraph) -> None:
    write_fixture(name, description, h, propagation_fixture(h), QUARTER, "normal", True)


# -- hand-labeled gadgets ------------------------------------------------------


def fig_path_half(rank: int, n: int) -> tuple[Hypergraph, dict]:
    fig = Fig(rank)
    cur = fig.v()
    for _ in range(n):
        nxt = fig.v()
        e = fig.edge(cur, nxt)
        fig.put(cur, e, 1, 2)
        fig.put(nxt, e, 1, 2)
        cur = nxt
    return fig.graph(), fig.entries


def fig_f333() -> tuple[Hypergraph, dict]:
    fig = Fig(3)
    a, b, c = fig.v(), fig.v(), fig.v()
    center = fig.edge(a, b, c)
    for anchor in (a, b, c):
        fig.put(anchor, center, 5, 8)
        arm(fig, anchor, 3)
    return fig.graph(), fig.entries


def fig_m_gadget() -> tuple[Hypergraph, dict]:
    fig = Fig(3)
    a = [fig.v() for _ in range(6)]
    ap = [fig.v() for _ in range(3)]
    e0 = fig.edge(a[0], a[1])
    e1 = fig.edge(a[1], ap[0], a[2])
    e2 = fig.edge(a[2], ap[1], a[3])
    e3 = fig.edge(a[3], ap[2], a[4])
    e4 = fig.edge(a[4], a[5])
    pends = [fig.edge(x) for x in ap]
    fig.put(a[1], e0, 1, 4)
    fig.put(a[1], e1, 3, 4)
    fig.put(ap[0], e1, 3, 4)
    fig.put(a[2], e1, 4, 9)
    fig.put(a[2], e2, 5, 9)
    fig.put(ap[1], e2, 3, 4)
    fig.put(a[3], e2, 5, 9)
    fig.put(a[3], e3, 4, 9)
    fig.put(ap[2], e3, 3, 4)
    fig.put(a[4], e3, 3, 4)
    fig.put(a[4], e4, 1, 4)
    for apex, p in zip(ap, pends):
        fig.put(apex, p, 1, 4)
    return fig.graph(), fig.entries


def fig_fork_gadget() -> tuple[Hypergraph, dict]:
    fig = Fig(3)
    a0, a1, apex, a2, a3 = (fig.v() for _ in range(5))
    e0 = fig.edge(a0, a1)
    e1 = fig.edge(a1, apex, a2)
    p_top = fig.edge(apex)
    p_bot = fig.edge(a2)
    e2 = fig.edge(a2, a3)
    e3 = fig.edge(a3)
    fig.put(a1, e0, 1, 4)
    fig.put(a1, e1, 3, 4)
    fig.put(apex, e1, 3, 4)
    fig.put(apex, p_top, 1, 4)
    fig.put(a2, e1, 4, 9)
    fig.put(a2, p_bot, 1, 4)
    fig.put(a2, e2, 1, 3)
    fig.put(a3, e2, 3, 4)
    fig.put(a3, e3, 1, 4)
    return fig.graph(), fig.entries


def fig_g11022() -> tuple[Hypergraph, dict]:
    fig = Fig(3)
    a0, a1, ap1, s, ap2, a3, w, a4 = (fig.v() for _ in range(8))
    e0 = fig.edge(a0, a1)
    b1 = fig.edge(a1, ap1, s)
    p1 = fig.edge(ap1)
    b2 = fig.edge(s, ap2, a3)
    u1 = fig.edge(ap2, w)
    u2 = fig.edge(w)
    e3 = fig.edge(a3, a4)
    e4 = fig.edge(a4)
    fig.put(a1, e0, 1, 4)
    fig.put(a1, b1, 3, 4)
    fig.put(ap1, b1, 3, 4)
    fig.put(ap1, p1, 1, 4)
    fig.put(s, b1, 4, 9)
    fig.put(s, b2, 5, 9)
    fig.put(ap2, b2, 2, 3)
    fig.put(ap2, u1, 1, 3)
    fig.put(w, u1, 3, 4)
    fig.put(w, u2, 1, 4)
    fig.put(a3, b2, 2, 3)
    fig.put(a3, e3, 1, 3)
    fig.put(a4, e3, 3, 4)
    fig.put(a4, e4, 1, 4)
    return fig.graph(), fig.entries


def fig_h4_fork() -> tuple[Hypergraph, dict]:
    fig = Fig(4)
    a0, a1, t, b, a2 = (fig.v() for _ in range(5))
    e0 = fig.edge(a0, a1)
    f0 = fig.edge(a1, t, b, a2)
    pt = fig.edge(t)
    pb = fig.edge(b)
    g1 = fig.edge(a2)
    g2 = fig.edge(a2)
    fig.put(a1, e0, 1, 4)
    fig.put(a1, f0, 3, 4)
    fig.put(t, f0, 3, 4)
    fig.put(t, pt, 1, 4)
    fig.put(b, f0, 3, 4)
    fig.put(b, pb, 1, 4)
    fig.put(a2, f0, 1, 2)
    fig.put(a2, g1, 1, 4)
    fig.put(a2, g2, 1, 4)
    return fig.graph(), fig.entries


def fig_h4_edge() -> tuple[Hypergraph, dict]:
    fig = Fig(4)
    a0, a1, t, b, a2, t2, b2, a3 = (fig.v() for _ in range(8))
    e0 = fig.edge(a0, a1)
    f0 = fig.edge(a1, t, b, a2)
    pt = fig.edge(t)
    pb = fig.edge(b)
    e2 = fig.edge(a2, t2, b2, a3)
    pt2 = fig.edge(t2)
    pb2 = fig.edge(b2)
    fig.put(a1, e0, 1, 4)
    fig.put(a1, f0, 3, 4)
    fig.put(t, f0, 3, 4)
    fig.put(t, pt, 1, 4)
    fig.put(b, f0, 3, 4)
    fig.put(b, pb, 1, 4)
    fig.put(a2, f0, 5, 9)
    fig.put(a2, e2, 4, 9)
    fig.put(t2, e2, 3, 4)
    fig.put(t2, pt2, 1, 4)
    fig.put(b2, e2, 3, 4)
    fig.put(b2, pb2, 1, 4)
    return fig.graph(), fig.entries


_QUARTIC_CHAIN = [
    (Fraction(16, 27), Fraction(11, 27)),
    (Fraction(27, 44), Fraction(17, 44)),
    (Fraction(11, 17), Fraction(6, 17)),
    (Fraction(17, 24), Fraction(7, 24)),
    (Fraction(6, 7), Fraction(1, 4)),
]


def fig_h4_1114(extra: bool) -> tuple[Hypergraph, dict]:
    """H_{1,1,1,4} (extra=False) or H_{1,1,1,5} (extra=True), 4-uniform."""
    fig = Fig(4)
    c, t, b, d = (fig.v() for _ in range(4))
    f0 = fig.edge(c, t, b, d)
    e_left = fig.edge(c)
    pt = fig.edge(t)
    pb = fig.edge(b)
    fig.put(c, e_left, 1, 4)
    fig.put(c, f0, 3, 4)
    fig.put(t, f0, 3, 4)
    fig.put(t, pt, 1, 4)
    fig.put(b, f0, 3, 4)
    fig.put(b, pb, 1, 4)
    steps = _QUARTIC_CHAIN if extra else _QUARTIC_CHAIN[:4]
    cur = d
    prev_edge = f0
    for idx, (into, out) in enumerate(steps):
        fig.put(cur, prev_edge, *into.as_integer_ratio())
        if idx == len(steps) - 1:
            e = fig.edge(cur)
        else:
            nxt = fig.v()
            e = fig.edge(cur, nxt)
        fig.put(cur, e, *out.as_integer_ratio())
        if idx < len(steps) - 1:
            cur = nxt
        prev_edge = e
    return fig.graph(), fig.entries


def fig_edge_star5() -> tuple[Hypergraph, dict]:
    fig = Fig(5)
    anchors = [fig.v() for _ in range(5)]
    f0 = fig.edge(*anchors)
    for a in anchors:
        p = fig.edge(a)
        fig.put(a, f0, 3, 4)
        fig.put(a, p, 1, 4)
    return fig.graph(), fig.entries


def fig_overlap_pair() -> tuple[Hypergraph, dict]:
    fig = Fig(4)
    a, b, c = fig.v(), fig.v(), fig.v()
    e0 = fig.edge(a, b, c)
    e1 = fig.edge(a, b, c)
    for v in (a, b, c):
        fig.put(v, e0, 1, 2)
        fig.put(v, e1, 1, 2)
    return fig.graph(), fig.entries


def fig_c2_r3() -> tuple[Hypergraph, dict]:
    fig = Fig(3)
    a, b = fig.v(), fig.v()
    e0 = fig.edge(a, b)
    e1 = fig.edge(a, b)
    for v in (a, b):
        fig.put(v, e0, 1, 2)
        fig.put(v, e1, 1, 2)
    return fig.graph(), fig.entries


def fig_triangle_skew() -> tuple[Hypergraph, dict]:
    fig = Fig(2)
    a, b, c = fig.v(), fig.v(), fig.v()
    e0 = fig.edge(a, b)
    e1 = fig.edge(b, c)
    e2 = fig.edge(a, c)
    fig.put(a, e0, 1, 3)
    fig.put(b, e0, 2, 3)
    fig.put(b, e1, 1, 3)
    fig.put(c, e1, 2, 3)
    fig.put(c, e2, 1, 3)
    fig.put(a, e2, 2, 3)
    return fig.graph(), fig.entries


def main() -> None:
    OUT.mkdir(exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()

    # quarter-normal labelings: the equal-radius catalog
    normal_tree("star4_r3", "the 4-star of triples: all center weights 1/4",
                gen_star(3, 4))
    normal_tree("tilde_d_r3_n7", "double fork joined by a path, 7 edges",
                gen_tilde_D(3, 7))
    normal_tree("tilde_b_r3_n10", "two branching edges with 1,2-arms, chain of 2 between",
                gen_G(3, 1, 2, 2, 1, 2))
    normal_tree("bd_tilde_r3_n8", "vertex fork at one end, branching edge with two trailing edges at the other",
                gen_BD_tilde(3, 8))
    normal_tree("tilde_e6_r3", "three arms of length 2 at one vertex", gen_E(3, 2, 2, 2))
    normal_tree("tilde_e7_r3", "arms 1,3,3 at one vertex", gen_E(3, 1, 3, 3))
    normal_tree("tilde_e8_r3", "arms 1,2,5 at one vertex", gen_E(3, 1, 2, 5))
    normal_tree("f_2_3_4_r3", "arms 2,3,4 on one branching edge", gen_F(3, 2, 3, 4))
    normal_tree("f_2_2_7_r3", "arms 2,2,7 on one branching edge", gen_F(3, 2, 2, 7))
    normal_tree("f_1_5_6_r3", "arms 1,5,6 on one branching edge", gen_F(3, 1, 5, 6))
    normal_tree("f_1_4_8_r3", "arms 1,4,8 on one branching edge", gen_F(3, 1, 4, 8))
    normal_tree("f_1_3_14_r3", "arms 1,3,14 on one branching edge", gen_F(3, 1, 3, 14))
    normal_tree("g_1_1_0_1_4_r3", "adjacent branching edges with arms 1,1 and 1,4",
                gen_G(3, 1, 1, 0, 1, 4))
    normal_tree("g_1_1_6_1_3_r3", "branching edges with arms 1,1 and 1,3, chain of 6",
                gen_G(3, 1, 1, 6, 1, 3))
    normal_tree("h4_1_1_2_2", "quadruple branching edge with arms 1,1,2,2",
                gen_H(4, 1, 1, 2, 2))
    normal_tree("smith_tilde_d_r2_n6", "rank-2 double fork, 6 edges", gen_tilde_D(2, 6))
    normal_tree("smith_tilde_e6_r2", "rank-2 arms 2,2,2", gen_E(2, 2, 2, 2))
    normal_tree("smith_tilde_e7_r2", "rank-2 arms 1,3,3", gen_E(2, 1, 3, 3))
    normal_tree("smith_tilde_e8_r2", "rank-2 arms 1,2,5", gen_E(2, 1, 2, 5))

    for rank, n, name in ((3, 5, "cycle_r3_n5"), (2, 5, "cycle_r2_n5"), (4, 4, "cycle_r4_n4")):
        h = gen_cycle(rank, n)
        write_fixture(name, f"loose cycle of {n} edges at rank {rank}: all weights 1/2",
                      h, constant_half_fixture(h), QUARTER, "normal", True)

    h, entries = fig_c2_r3()
    write_fixture("c2_r3", "two triples sharing two vertices: all weights 1/2",
                  h, entries, QUARTER, "normal", True)

    h, entries = fig_triangle_skew()
    write_fixture("triangle_skew_r2", "triangle with alternating 1/3, 2/3 weights: "
                  "2/9-normal but inconsistent around the cycle",
                  h, entries, Fraction(2, 9), "normal", False)

    # strictly subnormal labelings
    h, entries = fig_path_half(3, 6)
    write_fixture("path_half_r3_n6", "loose path, all spine weights 1/2; end rows sum to 1/2",
                  h, entries, QUARTER, "strictly-subnormal", True)
    h, entries = fig_path_half(4, 5)
    write_fixture("path_half_r4_n5", "rank-4 loose path, all spine weights 1/2",
                  h, entries, QUARTER, "strictly-subnormal", True)
    h, entries = fig_h4_1114(extra=False)
    write_fixture("h4_1_1_1_4", "quadruple branching edge with arms 1,1,1,4; "
                  "final edge product 7/24 exceeds 1/4",
                  h, entries, QUARTER, "strictly-subnormal", True)

    # strictly supernormal labelings
    h, entries = fig_f333()
    write_fixture("f_3_3_3_r3", "arms 3,3,3 on one branching edge; center product (5/8)^3",
                  h, entries, QUARTER, "strictly-supernormal", True)
    h, entries = fig_m_gadget()
    write_fixture("m_gadget_r3", "three consecutive branching edges; center product 25/108",
                  h, entries, QUARTER, "strictly-supernormal", True)
    h, entries = fig_fork_gadget()
    write_fixture("fork_gadget_r3", "branching edge feeding a fork; center row 4/9+1/3+1/4 > 1",
                  h, entries, QUARTER, "strictly-supernormal", True)
    h, entries = fig_g11022()
    write_fixture("g_1_1_0_2_2_r3", "adjacent branching edges with arms 1,1 and 2,2; "
                  "center product 20/81",
                  h, entries, QUARTER, "strictly-supernormal", True)
    h, entries = fig_h4_fork()
    write_fixture("h4_fork_gadget", "quadruple branching edge into a two-edge fork; "
                  "center product 27/128",
                  h, entries, QUARTER, "strictly-supernormal", True)
    h, entries = fig_h4_edge()
    write_fixture("h4_edge_gadget", "two adjacent quadruple branching edges; "
                  "center product 15/64",
                  h, entries, QUARTER, "strictly-supernormal", True)
    h, entries = fig_h4_1114(extra=True)
    write_fixture("h4_1_1_1_5", "quadruple branching edge with arms 1,1,1,5; "
                  "row sum 6/7 + 1/4 > 1",
                  h, entries, QUARTER, "strictly-supernormal", True)
    h, entries = fig_edge_star5()
    write_fixture("edge_star_r5", "rank-5 edge-star: center product (3/4)^5 < 1/4",
                  h, entries, QUARTER, "strictly-supernormal", True)
    h, entries = fig_overlap_pair()
    write_fixture("overlap_pair_r4_s3", "two rank-4 edges sharing three vertices: "
                  "products (1/2)^3 < 1/4",
                  h, entries, QUARTER, "strictly-supernormal", True)


if __name__ == "__main__":
    main()
