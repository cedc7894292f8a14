"""r-uniform multi-hypergraphs and their structural operations.

A hypergraph is stored as a rank, a dense vertex range ``0..n-1`` and an
ordered list of edges, each an ascending tuple of ``rank`` distinct vertex
ids.  Duplicate edges are permitted only behind ``allow_multi`` (rank
reduction of an r-uniform hypergraph can produce an (r-1)-uniform
multi-hypergraph, so the flag is threaded through automatically where
needed).

Walks, cycles, connectivity and the cycle basis are all defined on the
bipartite vertex-edge incidence graph: a hypergraph cycle
``v0 e1 v1 e2 ... el v0`` is exactly a simple cycle of that graph.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, ...]


class HypergraphError(ValueError):
    """A structural precondition was violated."""


@dataclass(frozen=True)
class Cycle:
    """A cycle ``v0 e1 v1 e2 ... el v0``: distinct vertices and edges.

    ``edge_indices[i]`` joins ``vertices[i]`` and ``vertices[(i+1) % l]``.
    """

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edge_indices):
            raise HypergraphError("cycle needs as many edges as vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise HypergraphError("cycle vertices must be distinct")
        if len(set(self.edge_indices)) != len(self.edge_indices):
            raise HypergraphError("cycle edges must be distinct")

    @property
    def length(self) -> int:
        return len(self.edge_indices)

    def steps(self) -> list[tuple[int, int, int]]:
        """Yield ``(v_prev, e, v_next)`` triples around the cycle."""
        l = self.length
        return [
            (self.vertices[i], self.edge_indices[i], self.vertices[(i + 1) % l])
            for i in range(l)
        ]


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform multi-hypergraph on the dense vertex set ``0..n-1``."""

    rank: int
    vertex_count: int
    edges: tuple[Edge, ...]
    allow_multi: bool = False
    allow_isolated: bool = False

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise HypergraphError(f"rank must be >= 2, got {self.rank}")
        if self.vertex_count < 1:
            raise HypergraphError("need at least one vertex")
        normalized = tuple(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", normalized)
        seen: set[Edge] = set()
        covered: set[int] = set()
        for e in normalized:
            if len(e) != self.rank or len(set(e)) != self.rank:
                raise HypergraphError(f"edge {e} must have {self.rank} distinct vertices")
            if e[0] < 0 or e[-1] >= self.vertex_count:
                raise HypergraphError(f"edge {e} has out-of-range vertex ids")
            if e in seen and not self.allow_multi:
                raise HypergraphError(f"duplicate edge {e} without allow_multi")
            seen.add(e)
            covered.update(e)
        degenerate = self.vertex_count == 1 and not normalized
        if not self.allow_isolated and not degenerate:
            missing = set(range(self.vertex_count)) - covered
            if missing:
                raise HypergraphError(f"isolated vertices {sorted(missing)} without allow_isolated")

    # -- basic accessors ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidences(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of edges containing it (with multiplicity)."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(row) for row in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.incidences)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise HypergraphError(f"vertex {v} out of range")
        return self.degrees[v]

    def is_leaf(self, v: int) -> bool:
        return self.degree(v) == 1

    def nonleaf_vertices(self, e: int) -> tuple[int, ...]:
        """The vertices of edge ``e`` with degree at least 2."""
        return tuple(v for v in self.edges[e] if self.degrees[v] > 1)

    # -- incidence graph ---------------------------------------------------
    # Nodes 0..n-1 are vertices, nodes n..n+m-1 are edges.

    @cached_property
    def _incidence_adj(self) -> tuple[tuple[int, ...], ...]:
        n = self.vertex_count
        adj: list[list[int]] = [[] for _ in range(n + self.edge_count)]
        for j, e in enumerate(self.edges):
            for v in e:
                adj[v].append(n + j)
                adj[n + j].append(v)
        return tuple(tuple(row) for row in adj)

    # -- connectivity and cycles -------------------------------------------

    def is_connected(self) -> bool:
        if self.edge_count == 0:
            return self.vertex_count == 1
        adj = self._incidence_adj
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(adj)

    def is_simple(self) -> bool:
        """True iff pairwise edge intersections have size <= 1 (no duplicates)."""
        m = self.edge_count
        sets = [set(e) for e in self.edges]
        for i in range(m):
            for j in range(i + 1, m):
                if len(sets[i] & sets[j]) > 1:
                    return False
        return True

    def find_cycle(self) -> Cycle | None:
        """Some cycle of minimum length, or None iff acyclic.

        Computed as the girth of the bipartite incidence graph: a cycle of
        2l incidence nodes is a hypergraph cycle of length l, so a
        non-simple pair of edges shows up as a 2-cycle.
        """
        adj = self._incidence_adj
        total = len(adj)
        best: tuple[int, int, int, dict[int, int]] | None = None  # (len, u, w, parents)
        for s in range(total):
            dist = {s: 0}
            parent: dict[int, int] = {s: -1}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                if best is not None and 2 * dist[u] >= best[0]:
                    break
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w and parent[w] != u:
                        length = dist[u] + dist[w] + 1
                        if best is None or length < best[0]:
                            best = (length, u, w, dict(parent))
            if best is not None and best[0] == 4:
                break  # girth 4 is minimal in a bipartite graph
        if best is None:
            return None
        _, u, w, parent = best
        path_u = [u]
        while parent[path_u[-1]] != -1:
            path_u.append(parent[path_u[-1]])
        path_w = [w]
        while parent[path_w[-1]] != -1:
            path_w.append(parent[path_w[-1]])
        # At a global minimum the two root paths only share the BFS source.
        nodes = path_u[::-1] + path_w[:-1]
        return self._nodes_to_cycle(nodes)

    def _nodes_to_cycle(self, nodes: list[int]) -> Cycle:
        n = self.vertex_count
        if nodes[0] >= n:
            nodes = nodes[1:] + nodes[:1]
        vertices = tuple(nodes[0::2])
        edge_indices = tuple(x - n for x in nodes[1::2])
        return Cycle(vertices, edge_indices)

    def is_hypertree(self) -> bool:
        return self.is_connected() and self.find_cycle() is None

    def cycle_basis(self) -> list[Cycle]:
        """Fundamental cycles of the incidence graph w.r.t. a BFS tree.

        The multiplicative consistency condition over weighted incidences is
        a homomorphism on closed walks, so holding on this basis makes it
        hold on every cycle.  Empty iff the hypergraph is a hypertree.
        """
        if not self.is_connected():
            raise HypergraphError("cycle_basis requires a connected hypergraph")
        adj = self._incidence_adj
        parent = {0: -1}
        depth = {0: 0}
        order = deque([0])
        while order:
            u = order.popleft()
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    order.append(w)
        basis: list[Cycle] = []
        for u in range(len(adj)):
            for w in adj[u]:
                if w <= u or parent[u] == w or parent[w] == u:
                    continue
                pu, pw = u, w
                left: list[int] = [pu]
                right: list[int] = [pw]
                while depth[pu] > depth[pw]:
                    pu = parent[pu]
                    left.append(pu)
                while depth[pw] > depth[pu]:
                    pw = parent[pw]
                    right.append(pw)
                while pu != pw:
                    pu = parent[pu]
                    pw = parent[pw]
                    left.append(pu)
                    right.append(pw)
                nodes = left[::-1] + right[:-1]  # lca ... u, w ... (lca excluded)
                basis.append(self._nodes_to_cycle(nodes))
        return basis

    # -- bridges, contraction, reduction ------------------------------------

    def two_bridges(self) -> list[int]:
        """Edges with exactly two non-leaf vertices whose removal disconnects them."""
        if not self.is_connected():
            raise HypergraphError("two_bridges requires a connected hypergraph")
        out = []
        for j in range(self.edge_count):
            nl = self.nonleaf_vertices(j)
            if len(nl) == 2 and not self._joined_avoiding(nl[0], nl[1], j):
                out.append(j)
        return out

    def _joined_avoiding(self, u: int, v: int, skip_edge: int) -> bool:
        adj = self._incidence_adj
        banned = self.vertex_count + skip_edge
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for w in adj[x]:
                if w == banned or w in seen:
                    continue
                if w == v:
                    return True
                seen.add(w)
                queue.append(w)
        return False

    def contract_with_map(self, e: int) -> tuple[Hypergraph, dict[int, int]]:
        """Contract a 2-bridge: drop edge ``e``, merge its two non-leaf ends.

        Returns the contracted hypergraph together with the old-to-new vertex
        map (the leaves of ``e`` disappear and are absent from the map).
        Restricted to simple hypergraphs, where the component split at the
        bridge is unambiguous.
        """
        if not 0 <= e < self.edge_count:
            raise HypergraphError(f"edge index {e} out of range")
        if not self.is_simple():
            raise HypergraphError("contraction is only defined on simple hypergraphs")
        if e not in self.two_bridges():
            raise HypergraphError(f"edge {e} is not a 2-bridge")
        u, v = self.nonleaf_vertices(e)
        dropped = {x for x in self.edges[e] if self.degrees[x] == 1}
        vmap: dict[int, int] = {}
        nxt = 0
        for x in range(self.vertex_count):
            if x in dropped or x == v:
                continue
            vmap[x] = nxt
            nxt += 1
        vmap[v] = vmap[u]
        new_edges = tuple(
            tuple(sorted(vmap[x] for x in edge))
            for j, edge in enumerate(self.edges)
            if j != e
        )
        contracted = Hypergraph(
            self.rank, nxt, new_edges,
            allow_multi=self.allow_multi, allow_isolated=self.allow_isolated,
        )
        return contracted, vmap

    def contract(self, e: int) -> Hypergraph:
        return self.contract_with_map(e)[0]

    def is_reducible(self) -> bool:
        """True iff every edge contains at least one leaf vertex."""
        return all(
            any(self.degrees[v] == 1 for v in e) for e in self.edges
        )

    def reduce(self) -> Hypergraph:
        """Drop one designated leaf (lowest id) from every edge; rank falls by 1.

        The result may be a multi-hypergraph.  Which leaf is dropped does not
        matter up to isomorphism, since leaves of one edge are interchangeable.
        """
        if self.rank < 3:
            raise HypergraphError("cannot reduce below rank 2")
        if not self.is_reducible():
            raise HypergraphError("reduce requires every edge to contain a leaf")
        designated = []
        for e in self.edges:
            designated.append(min(v for v in e if self.degrees[v] == 1))
        removed = set(designated)
        vmap: dict[int, int] = {}
        nxt = 0
        for x in range(self.vertex_count):
            if x not in removed:
                vmap[x] = nxt
                nxt += 1
        new_edges = tuple(
            tuple(sorted(vmap[v] for v in e if v != designated[j]))
            for j, e in enumerate(self.edges)
        )
        return Hypergraph(
            self.rank - 1, max(nxt, 1), new_edges,
            allow_multi=True, allow_isolated=self.allow_isolated,
        )

    def extend(self) -> Hypergraph:
        """Add one fresh leaf to every edge; rank rises by 1."""
        n = self.vertex_count
        new_edges = tuple(
            tuple(sorted(e + (n + j,))) for j, e in enumerate(self.edges)
        )
        return Hypergraph(
            self.rank + 1, n + self.edge_count, new_edges,
            allow_multi=self.allow_multi, allow_isolated=self.allow_isolated,
        )

    # -- plumbing ------------------------------------------------------------

    def restrict_to_edges(self, indices: Sequence[int]) -> Hypergraph:
        """The subhypergraph on the given edges, vertex ids re-densified."""
        used = sorted({v for j in indices for v in self.edges[j]})
        vmap = {v: i for i, v in enumerate(used)}
        new_edges = tuple(tuple(sorted(vmap[v] for v in self.edges[j])) for j in indices)
        return Hypergraph(self.rank, max(len(used), 1), new_edges, allow_multi=True)

    def relabel(self, perm: Sequence[int]) -> Hypergraph:
        """Apply a vertex permutation (``perm[old] = new``)."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise HypergraphError("relabel needs a permutation of all vertices")
        new_edges = tuple(tuple(sorted(perm[v] for v in e)) for e in self.edges)
        return Hypergraph(
            self.rank, self.vertex_count, new_edges,
            allow_multi=self.allow_multi, allow_isolated=self.allow_isolated,
        )

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.rank} {self.vertex_count} {self.edge_count}"]
        lines += [" ".join(str(v) for v in e) for e in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Hypergraph:
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not rows or len(rows[0]) != 3:
            raise HypergraphError("expected a header line 'r n m'")
        r, n, m = (int(x) for x in rows[0])
        edges = [tuple(int(x) for x in row) for row in rows[1:]]
        if len(edges) != m:
            raise HypergraphError(f"header announces {m} edges, found {len(edges)}")
        return cls._from_parsed(r, n, edges)

    def to_json_obj(self) -> dict:
        return {"r": self.rank, "n": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> Hypergraph:
        try:
            r, n = int(obj["r"]), int(obj["n"])
            edges = [tuple(int(v) for v in e) for e in obj["edges"]]
        except (KeyError, TypeError) as exc:
            raise HypergraphError(f"malformed hypergraph object: {exc}") from exc
        return cls._from_parsed(r, n, edges)

    @classmethod
    def _from_parsed(cls, r: int, n: int, edges: list[Edge]) -> Hypergraph:
        normalized = [tuple(sorted(e)) for e in edges]
        multi = len(set(normalized)) != len(normalized)
        covered = {v for e in normalized for v in e}
        isolated = bool(set(range(n)) - covered) and not (n == 1 and not edges)
        return cls(r, n, tuple(normalized), allow_multi=multi, allow_isolated=isolated)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> Hypergraph:
        return cls.from_json_obj(json.loads(text))


def from_edges(rank: int, edges: Iterable[Iterable[int]], vertex_count: int | None = None,
               allow_multi: bool = False) -> Hypergraph:
    """Convenience constructor; infers the vertex count when omitted."""
    es = tuple(tuple(sorted(e)) for e in edges)
    if vertex_count is None:
        vertex_count = 1 + max((v for e in es for v in e), default=0)
    return Hypergraph(rank, vertex_count, es, allow_multi=allow_multi)
