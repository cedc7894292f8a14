"""Shared test utilities: brute-force isomorphism and random graphs.

The brute-force matcher is the independent oracle for canonical-form
tests: it tries every degree-preserving vertex bijection directly, with
no shared code with the library's refinement search.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter

from hyperrho import Hypergraph


def brute_force_isomorphic(a: Hypergraph, b: Hypergraph) -> bool:
    if a.rank != b.rank or a.vertex_count != b.vertex_count:
        return False
    if a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees) != sorted(b.degrees):
        return False
    edges_b = Counter(b.edges)
    by_degree_a: dict[int, list[int]] = {}
    by_degree_b: dict[int, list[int]] = {}
    for v in range(a.vertex_count):
        by_degree_a.setdefault(a.degrees[v], []).append(v)
    for v in range(b.vertex_count):
        by_degree_b.setdefault(b.degrees[v], []).append(v)
    degrees = sorted(by_degree_a)
    pools = [itertools.permutations(by_degree_b[d]) for d in degrees]
    for combo in itertools.product(*pools):
        mapping = {}
        for d, perm in zip(degrees, combo):
            for src, dst in zip(by_degree_a[d], perm):
                mapping[src] = dst
        mapped = Counter(tuple(sorted(mapping[v] for v in e)) for e in a.edges)
        if mapped == edges_b:
            return True
    return False


def random_connected(rng: random.Random, rank: int, n_edges: int,
                     simple_only: bool = False) -> Hypergraph:
    """Grow a connected hypergraph one edge at a time, sharing 1+ vertices."""
    n = rank
    edges = [tuple(range(rank))]
    while len(edges) < n_edges:
        max_shared = 1 if simple_only else min(rank - 1, n)
        shared = 1 if max_shared == 1 else rng.choice([1] * 4 + list(range(2, max_shared + 1)))
        old = rng.sample(range(n), shared)
        fresh = list(range(n, n + rank - shared))
        n += rank - shared
        edge = tuple(sorted(old + fresh))
        if edge in edges and simple_only:
            continue
        edges.append(edge)
    multi = len(set(edges)) != len(edges)
    return Hypergraph(rank, n, tuple(edges), allow_multi=multi)


def random_connected_proper_subgraph(rng: random.Random, h: Hypergraph,
                                     attempts: int = 200) -> Hypergraph | None:
    """A connected subgraph on strictly fewer edges, or None when stuck."""
    keep = list(range(h.edge_count))
    target = rng.randint(1, h.edge_count - 1)
    while len(keep) > target:
        order = rng.sample(keep, len(keep))
        for j in order:
            rest = [x for x in keep if x != j]
            if h.restrict_to_edges(rest).is_connected():
                keep = rest
                break
        else:
            break
        attempts -= 1
        if attempts <= 0:
            break
    if len(keep) == h.edge_count:
        return None
    return h.restrict_to_edges(keep)
