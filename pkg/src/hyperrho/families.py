"""Parametric generators for the named hypergraph families.

The structural kinds are rank-generic: at rank r every edge carries enough
fresh leaves to reach r vertices, which makes each generator commute with
``extend`` (building at rank r+1 gives the one-leaf-per-edge extension of
the rank-r build).  Classical 2-uniform names are aliases:

    D_n   = E(1,1,n-2)      D'_n  = F(1,1,n-3)     B_n = F(1,2,n-4)
    B'_n  = G(1,1:n-6:1,1)  Bbar_n = G(1,1:n-7:1,2)
    Btilde_n = G(1,2:n-8:1,2)
    E_6/7/8 = E(1,2,2)/(1,2,3)/(1,2,4)
    Etilde_6/7/8 = E(2,2,2)/(1,3,3)/(1,2,5)
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_form
from .hypergraph import Hypergraph, HypergraphError


class _Build:
    """Incremental construction with explicit anchor vertices."""

    def __init__(self, rank: int):
        self.rank = rank
        self.n = 0
        self.edges: list[tuple[int, ...]] = []

    def vertex(self) -> int:
        v = self.n
        self.n += 1
        return v

    def edge(self, *anchors: int) -> int:
        if len(anchors) > self.rank:
            raise HypergraphError("too many anchors for one edge")
        fill = [self.vertex() for _ in range(self.rank - len(anchors))]
        self.edges.append(tuple(sorted((*anchors, *fill))))
        return len(self.edges) - 1

    def path(self, start: int, length: int) -> int:
        """Attach a path of ``length`` edges at ``start``; returns the far end."""
        cur = start
        for _ in range(length):
            nxt = self.vertex()
            self.edge(cur, nxt)
            cur = nxt
        return cur

    def done(self, allow_multi: bool = False) -> Hypergraph:
        return Hypergraph(self.rank, self.n, tuple(self.edges), allow_multi=allow_multi)


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise HypergraphError(msg)


def gen_path(r: int, n: int) -> Hypergraph:
    """The loose path A_n: n edges, consecutive ones sharing one vertex."""
    _check(r >= 2 and n >= 1, f"path needs r >= 2, n >= 1, got r={r}, n={n}")
    b = _Build(r)
    b.path(b.vertex(), n)
    return b.done()


def gen_cycle(r: int, n: int) -> Hypergraph:
    """The loose cycle C_n; C_2 is the pair of edges sharing two vertices."""
    _check(r >= 2 and n >= 2, f"cycle needs r >= 2, n >= 2, got r={r}, n={n}")
    b = _Build(r)
    if n == 2:
        u, v = b.vertex(), b.vertex()
        b.edge(u, v)
        b.edge(u, v)
        return b.done(allow_multi=(r == 2))
    first = b.vertex()
    cur = b.path(first, n - 1)
    b.edge(cur, first)
    return b.done()


def gen_star(r: int, k: int) -> Hypergraph:
    """S_k: k edges pairwise intersecting exactly in one center vertex."""
    _check(k >= 1, f"star needs k >= 1, got {k}")
    b = _Build(r)
    center = b.vertex()
    for _ in range(k):
        b.edge(center)
    return b.done()


def gen_E(r: int, i: int, j: int, k: int) -> Hypergraph:
    """Three paths of lengths i, j, k attached to one vertex."""
    _check(min(i, j, k) >= 1, f"E needs positive path lengths, got {(i, j, k)}")
    b = _Build(r)
    center = b.vertex()
    for length in (i, j, k):
        b.path(center, length)
    return b.done()


def gen_F(r: int, i: int, j: int, k: int) -> Hypergraph:
    """Three paths of lengths i, j, k attached to the vertices of one edge."""
    _check(r >= 3, "F needs rank >= 3")
    _check(min(i, j, k) >= 1, f"F needs positive path lengths, got {(i, j, k)}")
    b = _Build(r)
    a, c, d = b.vertex(), b.vertex(), b.vertex()
    b.edge(a, c, d)
    for anchor, length in ((a, i), (c, j), (d, k)):
        b.path(anchor, length)
    return b.done()


def gen_G(r: int, i: int, j: int, k: int, l: int, m: int) -> Hypergraph:
    """Paths i, j and l, m on the four ending vertices of a path of length k+2.

    The two end edges of the central path are the branching edges; k counts
    the edges strictly between them.
    """
    _check(r >= 3, "G needs rank >= 3")
    _check(min(i, j, l, m) >= 1 and k >= 0, f"bad G parameters {(i, j, k, l, m)}")
    b = _Build(r)
    p1, q1, s = b.vertex(), b.vertex(), b.vertex()
    b.edge(p1, q1, s)
    t = b.path(s, k)
    p2, q2 = b.vertex(), b.vertex()
    b.edge(p2, q2, t)
    for anchor, length in ((p1, i), (q1, j), (p2, l), (q2, m)):
        b.path(anchor, length)
    return b.done()


def gen_H(r: int, i: int, j: int, k: int, l: int) -> Hypergraph:
    """Four paths attached to the vertices of one edge (rank >= 4)."""
    _check(r >= 4, "H needs rank >= 4")
    _check(min(i, j, k, l) >= 1, f"H needs positive path lengths, got {(i, j, k, l)}")
    b = _Build(r)
    anchors = [b.vertex() for _ in range(4)]
    b.edge(*anchors)
    for anchor, length in zip(anchors, (i, j, k, l)):
        b.path(anchor, length)
    return b.done()


def gen_tilde_D(r: int, n: int) -> Hypergraph:
    """Two vertices carrying two pendant edges each, joined by a path; n edges."""
    _check(n >= 5, f"tilde-D needs n >= 5, got {n}")
    b = _Build(r)
    u = b.vertex()
    b.edge(u)
    b.edge(u)
    w = b.path(u, n - 4)
    b.edge(w)
    b.edge(w)
    return b.done()


def gen_BD(r: int, n: int) -> Hypergraph:
    """A (1,1)-fork at one end; the tail ends in a branching edge plus one edge."""
    _check(r >= 3, "BD needs rank >= 3")
    _check(n >= 5, f"BD needs n >= 5, got {n}")
    b = _Build(r)
    v = b.vertex()
    b.edge(v)
    b.edge(v)
    w = b.path(v, n - 5)
    apex, t = b.vertex(), b.vertex()
    b.edge(w, apex, t)
    b.edge(apex)
    b.path(t, 1)
    return b.done()


def gen_BD_tilde(r: int, n: int) -> Hypergraph:
    """Like BD but with two edges past the branching edge; n edges."""
    _check(r >= 3, "BD-tilde needs rank >= 3")
    _check(n >= 6, f"BD-tilde needs n >= 6, got {n}")
    b = _Build(r)
    v = b.vertex()
    b.edge(v)
    b.edge(v)
    w = b.path(v, n - 6)
    apex, t = b.vertex(), b.vertex()
    b.edge(w, apex, t)
    b.edge(apex)
    b.path(t, 2)
    return b.done()


def gen_edge_star(r: int) -> Hypergraph:
    """One central edge whose every vertex also lies in a private edge."""
    _check(r >= 3, "edge-star needs rank >= 3")
    b = _Build(r)
    anchors = [b.vertex() for _ in range(r)]
    b.edge(*anchors)
    for a in anchors:
        b.edge(a)
    return b.done()


_SMITH2 = {
    "A": lambda n: gen_path(2, n),
    "C": lambda n: gen_cycle(2, n),
    "tildeA": lambda n: gen_cycle(2, n),
    "D": lambda n: gen_E(2, 1, 1, n - 2),
    "tildeD": lambda n: gen_star(2, 4) if n == 4 else gen_tilde_D(2, n),
    "E6": lambda n: gen_E(2, 1, 2, 2),
    "E7": lambda n: gen_E(2, 1, 2, 3),
    "E8": lambda n: gen_E(2, 1, 2, 4),
    "tildeE6": lambda n: gen_E(2, 2, 2, 2),
    "tildeE7": lambda n: gen_E(2, 1, 3, 3),
    "tildeE8": lambda n: gen_E(2, 1, 2, 5),
}


def gen_smith2(tag: str, n: int | None = None) -> Hypergraph:
    """The classical rank-2 graphs with spectral radius at most 2."""
    if tag not in _SMITH2:
        raise HypergraphError(f"unknown rank-2 tag {tag!r}")
    return _SMITH2[tag](n if n is not None else 0)


# -- family identifiers ----------------------------------------------------

_KINDS = {"A", "C", "S", "E", "F", "G", "H", "TildeD", "BD", "BDTilde", "EdgeStar"}


@dataclass(frozen=True)
class FamilyId:
    """A structural family tag with normalized parameters at a given rank."""

    kind: str
    params: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise HypergraphError(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "params", _normalize(self.kind, tuple(self.params)))

    def make(self) -> Hypergraph:
        r, p = self.rank, self.params
        table = {
            "A": lambda: gen_path(r, *p),
            "C": lambda: gen_cycle(r, *p),
            "S": lambda: gen_star(r, *p),
            "E": lambda: gen_E(r, *p),
            "F": lambda: gen_F(r, *p),
            "G": lambda: gen_G(r, *p),
            "H": lambda: gen_H(r, *p),
            "TildeD": lambda: gen_tilde_D(r, *p),
            "BD": lambda: gen_BD(r, *p),
            "BDTilde": lambda: gen_BD_tilde(r, *p),
            "EdgeStar": lambda: gen_edge_star(r),
        }
        return table[self.kind]()

    def edge_total(self) -> int:
        k, p = self.kind, self.params
        if k in ("A", "C", "S", "TildeD", "BD", "BDTilde"):
            return p[0]
        if k == "E":
            return sum(p)
        if k in ("F", "H"):
            return sum(p) + 1
        if k == "G":
            return sum(p) + 2
        return self.rank + 1  # EdgeStar

    def label(self) -> str:
        """Classical alias where one exists, else the structural name."""
        k, p, r = self.kind, self.params, self.rank
        sup = f"^({r})"
        if k == "E":
            alias = {
                (1, 2, 2): "E_6", (1, 2, 3): "E_7", (1, 2, 4): "E_8",
                (2, 2, 2): "~E_6", (1, 3, 3): "~E_7", (1, 2, 5): "~E_8",
            }
            if p in alias:
                return alias[p] + sup
            if p[0] == 1 and p[1] == 1:
                return f"D_{p[2] + 2}" + sup
            return f"E_{{{p[0]},{p[1]},{p[2]}}}" + sup
        if k == "F":
            if p[0] == 1 and p[1] == 1:
                return f"D'_{p[2] + 3}" + sup
            if p[0] == 1 and p[1] == 2:
                return f"B_{p[2] + 4}" + sup
            return f"F_{{{p[0]},{p[1]},{p[2]}}}" + sup
        if k == "G":
            i, j, kk, l, m = p
            if (i, j, l, m) == (1, 1, 1, 1):
                return f"B'_{kk + 6}" + sup
            if (i, j, l, m) == (1, 1, 1, 2):
                return f"Bbar_{kk + 7}" + sup
            if (i, j, l, m) == (1, 2, 1, 2):
                return f"~B_{kk + 8}" + sup
            return f"G_{{{i},{j}:{kk}:{l},{m}}}" + sup
        if k == "H":
            return f"H_{{{','.join(map(str, p))}}}" + sup
        if k == "TildeD":
            return f"~D_{p[0]}" + sup
        if k in ("A", "C", "S", "BD", "BDTilde"):
            name = {"A": "A", "C": "C", "S": "S", "BD": "BD", "BDTilde": "~BD"}[k]
            return f"{name}_{p[0]}" + sup
        return f"S_{r}" + sup  # EdgeStar


def _normalize(kind: str, params: tuple[int, ...]) -> tuple[int, ...]:
    if kind in ("E", "F", "H"):
        return tuple(sorted(params))
    if kind == "G":
        i, j, k, l, m = params
        a, b = sorted((i, j)), sorted((l, m))
        lo, hi = sorted((tuple(a), tuple(b)))
        return (*lo, k, *hi)
    return params


# -- classification catalogs -------------------------------------------------


def below_families(r: int, max_edges: int) -> list[FamilyId]:
    """All family instances with spectral radius below the limit value."""
    out: list[FamilyId] = []
    if r == 2:
        for n in range(1, max_edges + 1):
            out.append(FamilyId("A", (n,), r))
        for n in range(3, max_edges + 1):
            out.append(FamilyId("E", (1, 1, n - 2), r))
        for p in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
            if sum(p) <= max_edges:
                out.append(FamilyId("E", p, r))
        return out
    # rank 3 lists; for r >= 4 the same shapes are their extensions
    for n in range(1, max_edges + 1):
        out.append(FamilyId("A", (n,), r))
    for n in range(3, max_edges + 1):
        out.append(FamilyId("E", (1, 1, n - 2), r))           # D_n
    for n in range(4, max_edges + 1):
        out.append(FamilyId("F", (1, 1, n - 3), r))           # D'_n
    for n in range(5, max_edges + 1):
        out.append(FamilyId("F", (1, 2, n - 4), r))           # B_n
        out.append(FamilyId("BD", (n,), r))
    for n in range(6, max_edges + 1):
        out.append(FamilyId("G", (1, 1, n - 6, 1, 1), r))     # B'_n
    for n in range(7, max_edges + 1):
        out.append(FamilyId("G", (1, 1, n - 7, 1, 2), r))     # Bbar_n
    exceptional = [
        ("E", (1, 2, 2)), ("E", (1, 2, 3)), ("E", (1, 2, 4)),
        ("F", (2, 3, 3)),
        *(("F", (2, 2, k)) for k in range(2, 7)),
        *(("F", (1, 3, k)) for k in range(3, 14)),
        *(("F", (1, 4, k)) for k in range(4, 8)),
        ("F", (1, 5, 5)),
        *(("G", (1, 1, k, 1, 3)) for k in range(0, 6)),
    ]
    for kind, p in exceptional:
        fam = FamilyId(kind, p, r)
        if fam.edge_total() <= max_edges:
            out.append(fam)
    if r >= 4:
        for l in range(1, 5):
            if l + 4 <= max_edges:
                out.append(FamilyId("H", (1, 1, 1, l), r))
    return out


def equal_families(r: int, max_edges: int) -> list[FamilyId]:
    """All family instances with spectral radius equal to the limit value."""
    out: list[FamilyId] = []
    if 2 <= max_edges:
        out.append(FamilyId("C", (2,), r))
    for n in range(3, max_edges + 1):
        out.append(FamilyId("C", (n,), r))
    if 4 <= max_edges:
        out.append(FamilyId("S", (4,), r))
    for n in range(5, max_edges + 1):
        out.append(FamilyId("TildeD", (n,), r))
    for p in ((2, 2, 2), (1, 3, 3), (1, 2, 5)):
        if sum(p) <= max_edges:
            out.append(FamilyId("E", p, r))
    if r == 2:
        return out
    for n in range(8, max_edges + 1):
        out.append(FamilyId("G", (1, 2, n - 8, 1, 2), r))     # ~B_n
    for n in range(6, max_edges + 1):
        out.append(FamilyId("BDTilde", (n,), r))
    exceptional = [
        ("F", (2, 3, 4)), ("F", (2, 2, 7)), ("F", (1, 5, 6)),
        ("F", (1, 4, 8)), ("F", (1, 3, 14)),
        ("G", (1, 1, 0, 1, 4)), ("G", (1, 1, 6, 1, 3)),
    ]
    for kind, p in exceptional:
        fam = FamilyId(kind, p, r)
        if fam.edge_total() <= max_edges:
            out.append(fam)
    if r >= 4 and 7 <= max_edges:
        out.append(FamilyId("H", (1, 1, 2, 2), r))
    return out


def family_members_with_edges(r: int, m: int, max_edges_bound: int = 40,
                              ) -> list[tuple[FamilyId, Hypergraph]]:
    """All catalog instances with exactly m edges, deduplicated up to isomorphism."""
    if m > max_edges_bound:
        raise HypergraphError(f"edge bound {max_edges_bound} exceeded")
    seen: dict[bytes, tuple[FamilyId, Hypergraph]] = {}
    for fam in below_families(r, m) + equal_families(r, m):
        if fam.edge_total() != m:
            continue
        h = fam.make()
        key = canonical_form(h)
        if key not in seen:
            seen[key] = (fam, h)
    return list(seen.values())


def enumerate_hypertrees(r: int, n_edges: int) -> list[Hypergraph]:
    """All connected r-uniform hypertrees with exactly ``n_edges`` edges, up to iso.

    Grown one pendant edge at a time (every hypertree has a removable leaf
    edge), deduplicated by canonical form at each level.
    """
    if n_edges < 1:
        return []
    level: dict[bytes, Hypergraph] = {}
    single = gen_path(r, 1)
    level[canonical_form(single)] = single
    for _ in range(n_edges - 1):
        nxt: dict[bytes, Hypergraph] = {}
        for h in level.values():
            for v in range(h.vertex_count):
                fresh = tuple(range(h.vertex_count, h.vertex_count + r - 1))
                grown = Hypergraph(
                    r, h.vertex_count + r - 1,
                    h.edges + (tuple(sorted((v, *fresh))),),
                )
                key = canonical_form(grown)
                if key not in nxt:
                    nxt[key] = grown
        level = nxt
    return list(level.values())
