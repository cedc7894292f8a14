"""Canonical forms for small uniform hypergraphs.

Two hypergraphs yield equal byte strings iff they are isomorphic.  The
search first collapses leaves: all leaves of one edge are interchangeable
under any isomorphism, so an edge is fully described by its non-leaf
members plus a leaf count.  The collapsed skeleton is then canonicalized
by color refinement with individualization on the first non-singleton
cell, taking the lexicographically smallest edge encoding over all
refinement-compatible labelings.
"""

from __future__ import annotations

from .hypergraph import Hypergraph, HypergraphError

DEFAULT_MAX_VERTICES = 64


def canonical_form(h: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bytes:
    if h.vertex_count > max_vertices:
        raise HypergraphError(
            f"canonical_form limited to {max_vertices} vertices, got {h.vertex_count}"
        )
    degrees = h.degrees
    skeleton = sorted(v for v in range(h.vertex_count) if degrees[v] > 1)
    index = {v: i for i, v in enumerate(skeleton)}
    k = len(skeleton)
    members: list[tuple[int, ...]] = []
    leaf_counts: list[int] = []
    for e in h.edges:
        mem = tuple(index[v] for v in e if degrees[v] > 1)
        members.append(mem)
        leaf_counts.append(h.rank - len(mem))
    isolated = sum(1 for v in range(h.vertex_count) if degrees[v] == 0)

    if k == 0:
        body = tuple(sorted(leaf_counts))
        return repr(("H", h.rank, h.vertex_count, isolated, body)).encode("ascii")

    incident: list[list[int]] = [[] for _ in range(k)]
    for j, mem in enumerate(members):
        for u in mem:
            incident[u].append(j)

    def refine(vcol: list[int], ecol: list[int]) -> tuple[list[int], list[int]]:
        while True:
            esig = [
                (ecol[j], leaf_counts[j], tuple(sorted(vcol[u] for u in members[j])))
                for j in range(len(members))
            ]
            new_ecol = _renumber(esig)
            vsig = [
                (vcol[u], tuple(sorted(new_ecol[j] for j in incident[u])))
                for u in range(k)
            ]
            new_vcol = _renumber(vsig)
            if new_vcol == vcol and new_ecol == ecol:
                return vcol, ecol
            vcol, ecol = new_vcol, new_ecol

    best: list[tuple] = []

    def encode(vcol: list[int]) -> tuple:
        label = [0] * k
        for pos, u in enumerate(sorted(range(k), key=vcol.__getitem__)):
            label[u] = pos
        body = sorted(
            (tuple(sorted(label[u] for u in members[j])), leaf_counts[j])
            for j in range(len(members))
        )
        return tuple(body)

    def search(vcol: list[int], ecol: list[int]) -> None:
        vcol, ecol = refine(vcol, ecol)
        cells: dict[int, list[int]] = {}
        for u in range(k):
            cells.setdefault(vcol[u], []).append(u)
        target = None
        for color in sorted(cells):
            if len(cells[color]) > 1:
                target = cells[color]
                break
        if target is None:
            cert = encode(vcol)
            if not best or cert < best[0]:
                best[:] = [cert]
            return
        fresh = max(vcol) + 1
        for u in target:
            child = list(vcol)
            child[u] = fresh
            search(child, list(ecol))

    search([0] * k, [0] * len(members))
    return repr(("H", h.rank, h.vertex_count, isolated, k, best[0])).encode("ascii")


def _renumber(signatures: list[tuple]) -> list[int]:
    ranks = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return [ranks[sig] for sig in signatures]


def are_isomorphic(a: Hypergraph, b: Hypergraph,
                   max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    if a.rank != b.rank or a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return False
    return canonical_form(a, max_vertices) == canonical_form(b, max_vertices)
