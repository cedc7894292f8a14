"""Three-way classification against the smallest limit point rho_r.

Every connected r-uniform hypergraph compares to
rho_r = (r-1)! * 4^(1/r) as Below, Equal or Above, and the Below/Equal
side is a closed list of parametric families.  The decision procedure is
purely structural: rank 2 matches the classical radius-2 lists, rank 3
walks the case ladder (non-simple, cyclic, degrees, branching edges) with
exact parameter tables, and rank >= 4 either matches the small table of
irreducible shapes or strips one leaf per edge and recurses, which
preserves the verdict.  Numerics enter only through
``verify_classification``, the cross-check harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import families as fam
from .canon import are_isomorphic
from .hypergraph import Hypergraph, HypergraphError
from .spectral import SpectralResult, spectral_radius


class Verdict(str, Enum):
    BELOW = "Below"
    EQUAL = "Equal"
    ABOVE = "Above"


@dataclass
class Classification:
    verdict: Verdict
    family: fam.FamilyId | None = None
    witness: str | None = None


def rho_r(r: int) -> float:
    """(r-1)! * 4^(1/r): the smallest limit point of spectral radii at rank r."""
    if r < 2:
        raise ValueError(f"rank must be >= 2, got {r}")
    return math.factorial(r - 1) * 4.0 ** (1.0 / r)


# -- structural probes ---------------------------------------------------------


def _branch_edge_sets_at_vertex(h: Hypergraph, v: int) -> list[set[int]]:
    """Edge sets of the branches hanging at v (one per incident edge)."""
    out = []
    for e0 in h.incidences[v]:
        seen = {e0}
        stack = [e0]
        while stack:
            j = stack.pop()
            for u in h.edges[j]:
                if u == v:
                    continue
                for j2 in h.incidences[u]:
                    if j2 not in seen:
                        seen.add(j2)
                        stack.append(j2)
        out.append(seen)
    return out


def _branch_edges_avoiding(h: Hypergraph, u: int, banned_edge: int) -> set[int]:
    """Edges reachable from u without crossing the banned edge."""
    seen_e: set[int] = set()
    seen_v = {u}
    stack = [u]
    while stack:
        w = stack.pop()
        for j in h.incidences[w]:
            if j == banned_edge or j in seen_e:
                continue
            seen_e.add(j)
            for z in h.edges[j]:
                if z not in seen_v:
                    seen_v.add(z)
                    stack.append(z)
    return seen_e


def _tree_candidates(h: Hypergraph) -> list[fam.FamilyId]:
    r, m = h.rank, h.edge_count
    degs = h.degrees
    maxdeg = max(degs)
    nl_counts = [len(h.nonleaf_vertices(j)) for j in range(m)]
    deg3 = [v for v in range(h.vertex_count) if degs[v] == 3]
    t_edges = [j for j in range(m) if nl_counts[j] == 3]
    q_edges = [j for j in range(m) if nl_counts[j] == 4]
    wide = [j for j in range(m) if nl_counts[j] >= 5]

    if maxdeg >= 4:
        return [fam.FamilyId("S", (m,), r)] if maxdeg == m else []
    if wide:
        if r >= 5 and len(wide) == 1 and nl_counts[wide[0]] == r and m == r + 1:
            return [fam.FamilyId("EdgeStar", (), r)]
        return []
    if q_edges:
        if len(q_edges) == 1 and not t_edges and not deg3 and r >= 4:
            e = q_edges[0]
            lens = [len(_branch_edges_avoiding(h, u, e)) for u in h.nonleaf_vertices(e)]
            return [fam.FamilyId("H", tuple(sorted(lens)), r)]
        return []
    if deg3:
        if len(deg3) == 1 and not t_edges:
            sizes = sorted(len(s) for s in _branch_edge_sets_at_vertex(h, deg3[0]))
            return [fam.FamilyId("E", tuple(sizes), r)]
        if len(deg3) == 2 and not t_edges:
            return [fam.FamilyId("TildeD", (m,), r)]
        if len(deg3) == 1 and len(t_edges) == 1:
            out = []
            if m >= 5:
                out.append(fam.FamilyId("BD", (m,), r))
            if m >= 6:
                out.append(fam.FamilyId("BDTilde", (m,), r))
            return out
        return []
    # all degrees <= 2 from here
    if not t_edges:
        return [fam.FamilyId("A", (m,), r)]
    if len(t_edges) == 1:
        e = t_edges[0]
        lens = [len(_branch_edges_avoiding(h, u, e)) for u in h.nonleaf_vertices(e)]
        return [fam.FamilyId("F", tuple(sorted(lens)), r)]
    if len(t_edges) == 2:
        e1, e2 = t_edges
        outer1 = [
            u for u in h.nonleaf_vertices(e1)
            if e2 not in _branch_edges_avoiding(h, u, e1)
        ]
        outer2 = [
            u for u in h.nonleaf_vertices(e2)
            if e1 not in _branch_edges_avoiding(h, u, e2)
        ]
        if len(outer1) != 2 or len(outer2) != 2:
            return []
        l1 = [len(_branch_edges_avoiding(h, u, e1)) for u in outer1]
        l2 = [len(_branch_edges_avoiding(h, u, e2)) for u in outer2]
        k = m - 2 - sum(l1) - sum(l2)
        if k < 0:
            return []
        return [fam.FamilyId("G", (*l1, k, *l2), r)]
    return []


def recognize_family(h: Hypergraph) -> fam.FamilyId | None:
    """Structural screening followed by a canonical-form confirmation."""
    if not h.is_connected():
        raise HypergraphError("recognize_family requires a connected hypergraph")
    r, m = h.rank, h.edge_count
    if m == 0:
        return None
    if not h.is_simple():
        candidates = [fam.FamilyId("C", (2,), r)] if m == 2 else []
    elif h.find_cycle() is not None:
        candidates = [fam.FamilyId("C", (m,), r)] if m >= 3 else []
    else:
        candidates = _tree_candidates(h)
    for cand in candidates:
        try:
            g = cand.make()
        except HypergraphError:
            continue
        if are_isomorphic(h, g):
            return cand
    return None


# -- parameter tables (exact boundaries of the classification) -----------------


def _e_verdict(p: tuple[int, int, int]) -> Verdict:
    i, j, k = p
    if (i, j) == (1, 1):
        return Verdict.BELOW                      # D_{k+2}
    if p in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        return Verdict.BELOW                      # E_6, E_7, E_8
    if p in ((2, 2, 2), (1, 3, 3), (1, 2, 5)):
        return Verdict.EQUAL                      # extended E's
    return Verdict.ABOVE


def _f_verdict(p: tuple[int, int, int]) -> Verdict:
    i, j, k = p
    if i == 1:
        if j in (1, 2):
            return Verdict.BELOW                  # D'_{k+3}, B_{k+4}
        if j == 3:
            return Verdict.BELOW if k <= 13 else Verdict.EQUAL if k == 14 else Verdict.ABOVE
        if j == 4:
            return Verdict.BELOW if k <= 7 else Verdict.EQUAL if k == 8 else Verdict.ABOVE
        if j == 5:
            return Verdict.BELOW if k == 5 else Verdict.EQUAL if k == 6 else Verdict.ABOVE
        return Verdict.ABOVE
    if i == 2:
        if j == 2:
            return Verdict.BELOW if k <= 6 else Verdict.EQUAL if k == 7 else Verdict.ABOVE
        if j == 3:
            return Verdict.BELOW if k == 3 else Verdict.EQUAL if k == 4 else Verdict.ABOVE
        return Verdict.ABOVE
    return Verdict.ABOVE                          # minimum branch >= 3


def _g_verdict(p: tuple[int, int, int, int, int]) -> Verdict:
    i, j, k, l, m = p
    if (i, j) == (1, 1):
        if (l, m) == (1, 1) or (l, m) == (1, 2):
            return Verdict.BELOW                  # B'_{k+6}, Bbar_{k+7}
        if (l, m) == (1, 3):
            return Verdict.BELOW if k <= 5 else Verdict.EQUAL if k == 6 else Verdict.ABOVE
        if (l, m) == (1, 4):
            return Verdict.EQUAL if k == 0 else Verdict.ABOVE
        return Verdict.ABOVE
    if (i, j) == (1, 2) and (l, m) == (1, 2):
        return Verdict.EQUAL                      # ~B_{k+8}
    return Verdict.ABOVE


def _h_verdict(p: tuple[int, int, int, int]) -> Verdict:
    if p == (1, 1, 2, 2):
        return Verdict.EQUAL
    if p[:3] == (1, 1, 1) and p[3] <= 4:
        return Verdict.BELOW
    return Verdict.ABOVE


# -- the decision procedure ----------------------------------------------------


def classify(h: Hypergraph) -> Classification:
    """Below / Equal / Above rho_r, with the recognized family when not Above."""
    if not h.is_connected():
        raise HypergraphError("classify requires a connected hypergraph")
    if h.edge_count == 0:
        raise HypergraphError("classify needs at least one edge")
    if h.rank == 2:
        return _classify_rank2(h)
    if h.rank == 3:
        return _classify_rank3(h)
    return _classify_high_rank(h)


def _nonsimple_step(h: Hypergraph) -> Classification:
    if h.edge_count == 2 and len(set(h.edges[0]) & set(h.edges[1])) == 2:
        return Classification(Verdict.EQUAL, fam.FamilyId("C", (2,), h.rank))
    return Classification(Verdict.ABOVE, witness="properly contains two edges sharing >= 2 vertices")


def _classify_rank2(h: Hypergraph) -> Classification:
    m = h.edge_count
    if not h.is_simple():
        return _nonsimple_step(h)
    if h.find_cycle() is not None:
        if are_isomorphic(h, fam.gen_cycle(2, m)):
            return Classification(Verdict.EQUAL, fam.FamilyId("C", (m,), 2))
        return Classification(Verdict.ABOVE, witness="properly contains a cycle")
    degs = h.degrees
    if max(degs) >= 4:
        if are_isomorphic(h, fam.gen_star(2, 4)):
            return Classification(Verdict.EQUAL, fam.FamilyId("S", (4,), 2))
        return Classification(Verdict.ABOVE, witness="vertex of degree >= 4 beyond the 4-star")
    deg3 = [v for v in range(h.vertex_count) if degs[v] == 3]
    if len(deg3) >= 2:
        if m >= 5 and are_isomorphic(h, fam.gen_tilde_D(2, m)):
            return Classification(Verdict.EQUAL, fam.FamilyId("TildeD", (m,), 2))
        return Classification(Verdict.ABOVE, witness="two vertices of degree 3 beyond ~D")
    if len(deg3) == 1:
        sizes = tuple(sorted(len(s) for s in _branch_edge_sets_at_vertex(h, deg3[0])))
        family = fam.FamilyId("E", sizes, 2)
        verdict = _e_verdict(sizes)
        if verdict == Verdict.ABOVE:
            return Classification(verdict, witness=f"branch lengths {sizes} outside the lists")
        return Classification(verdict, family)
    return Classification(Verdict.BELOW, fam.FamilyId("A", (m,), 2))


def _classify_rank3(h: Hypergraph) -> Classification:
    m = h.edge_count
    if not h.is_simple():
        return _nonsimple_step(h)
    if h.find_cycle() is not None:
        if are_isomorphic(h, fam.gen_cycle(3, m)):
            return Classification(Verdict.EQUAL, fam.FamilyId("C", (m,), 3))
        return Classification(Verdict.ABOVE, witness="properly contains a cycle")
    degs = h.degrees
    if max(degs) >= 4:
        if are_isomorphic(h, fam.gen_star(3, 4)):
            return Classification(Verdict.EQUAL, fam.FamilyId("S", (4,), 3))
        return Classification(Verdict.ABOVE, witness="vertex of degree >= 4 beyond the 4-star")
    deg3 = [v for v in range(h.vertex_count) if degs[v] == 3]
    t_edges = [j for j in range(m) if len(h.nonleaf_vertices(j)) == 3]
    if len(deg3) >= 2:
        if m >= 5 and are_isomorphic(h, fam.gen_tilde_D(3, m)):
            return Classification(Verdict.EQUAL, fam.FamilyId("TildeD", (m,), 3))
        return Classification(Verdict.ABOVE, witness="two vertices of degree 3 beyond ~D")
    if len(deg3) == 1:
        sizes = sorted(len(s) for s in _branch_edge_sets_at_vertex(h, deg3[0]))
        if sizes[0] >= 2:
            if are_isomorphic(h, fam.gen_E(3, 2, 2, 2)):
                return Classification(Verdict.EQUAL, fam.FamilyId("E", (2, 2, 2), 3))
            return Classification(Verdict.ABOVE, witness="all branches of length >= 2 beyond ~E_6")
        if not t_edges:
            p = tuple(sizes)
            verdict = _e_verdict(p)
            if verdict == Verdict.ABOVE:
                return Classification(verdict, witness=f"branch lengths {p} outside the lists")
            return Classification(verdict, fam.FamilyId("E", p, 3))
        if sizes[1] >= 2:
            return Classification(
                Verdict.ABOVE,
                witness="degree-3 vertex with a long branch plus a branching edge",
            )
        if m >= 6 and are_isomorphic(h, fam.gen_BD_tilde(3, m)):
            return Classification(Verdict.EQUAL, fam.FamilyId("BDTilde", (m,), 3))
        if m >= 5 and are_isomorphic(h, fam.gen_BD(3, m)):
            return Classification(Verdict.BELOW, fam.FamilyId("BD", (m,), 3))
        return Classification(Verdict.ABOVE, witness="fork plus branching edge beyond BD/~BD")
    # all degrees <= 2
    if not t_edges:
        return Classification(Verdict.BELOW, fam.FamilyId("A", (m,), 3))
    if len(t_edges) >= 3:
        return Classification(Verdict.ABOVE, witness="three or more branching edges")
    cand = _tree_candidates(h)
    if cand and cand[0].kind == "F":
        p = cand[0].params
        verdict = _f_verdict(p)
        if verdict == Verdict.ABOVE:
            return Classification(verdict, witness=f"branch lengths {p} outside the F tables")
        return Classification(verdict, cand[0])
    if cand and cand[0].kind == "G":
        p = cand[0].params
        verdict = _g_verdict(p)
        if verdict == Verdict.ABOVE:
            return Classification(verdict, witness=f"parameters {p} outside the G tables")
        return Classification(verdict, cand[0])
    return Classification(Verdict.ABOVE, witness="branching-edge structure outside all lists")


def _classify_high_rank(h: Hypergraph) -> Classification:
    r = h.rank
    if h.is_reducible():
        inner = classify(h.reduce())
        if inner.verdict == Verdict.ABOVE:
            return Classification(Verdict.ABOVE, witness=f"reduction: {inner.witness}")
        family = recognize_family(h)
        return Classification(inner.verdict, family, witness=None)
    if r >= 5:
        return Classification(Verdict.ABOVE, witness="irreducible at rank >= 5")
    family = recognize_family(h)
    if family is not None and family.kind == "H":
        verdict = _h_verdict(family.params)
        if verdict == Verdict.ABOVE:
            return Classification(
                verdict, witness=f"irreducible branch lengths {family.params} outside the table"
            )
        return Classification(verdict, family)
    return Classification(Verdict.ABOVE, witness="irreducible at rank 4 outside the table")


# -- numeric cross-check ---------------------------------------------------------


@dataclass
class VerificationReport:
    classification: Classification
    spectral: SpectralResult
    rho_limit: float
    numeric_verdict: Verdict | None
    decisive: bool
    agree: bool


def verify_classification(h: Hypergraph, tol: float = 1e-6) -> VerificationReport:
    """Compare the structural verdict with the numeric bracket around rho_r.

    The comparison is only binding when the bracket separates from rho_r by
    more than ``tol``; near-threshold cases are reported as indecisive,
    never as disagreement.
    """
    c = classify(h)
    s = spectral_radius(h, tol=min(1e-9, tol / 10))
    limit = rho_r(h.rank)
    if s.upper < limit - tol:
        numeric: Verdict | None = Verdict.BELOW
    elif s.lower > limit + tol:
        numeric = Verdict.ABOVE
    else:
        numeric = None
    decisive = numeric is not None
    agree = (not decisive) or (numeric == c.verdict)
    return VerificationReport(c, s, limit, numeric, decisive, agree)
