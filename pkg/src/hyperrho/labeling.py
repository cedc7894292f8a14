"""Weighted incidence certificates and the hypertree solver.

A weighted incidence matrix assigns a positive weight B(v, e) to every
incident vertex-edge pair.  With row sums compared against 1 and edge
products against a target value alpha, a certificate bounds the spectral
radius from above (row sums <= 1, products >= alpha), below (row sums
>= 1, products <= alpha, plus cycle consistency), or pins it exactly
(equalities plus consistency), via rho = (r-1)! * alpha^(-1/r).

Certificates from figures are verified in exact rational arithmetic
(``fractions.Fraction``); solver output uses floats with an explicit
margin.  On hypertrees the weights are forced bottom-up from the leaves,
leaving a single residual at the root; the residual grows monotonically
with alpha, which makes bisection sound.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .hypergraph import Hypergraph, HypergraphError

Rational = Fraction
Weight = Fraction | float

NUMERIC_MARGIN = 1e-12


class CertificateError(ValueError):
    """A certificate is malformed for its hypergraph."""


@dataclass
class WeightedIncidence:
    """Sparse positive weights on incident (vertex, edge-index) pairs."""

    entries: dict[tuple[int, int], Weight]

    @property
    def exact(self) -> bool:
        return all(isinstance(x, (Fraction, int)) for x in self.entries.values())

    def value(self, v: int, e: int) -> Weight:
        return self.entries[(v, e)]

    def completed(self, h: Hypergraph) -> "WeightedIncidence":
        """Fill omitted leaf entries with the trivial weight 1."""
        one: Weight = Fraction(1) if self.exact else 1.0
        filled = dict(self.entries)
        for j, edge in enumerate(h.edges):
            for v in edge:
                if (v, j) not in filled:
                    if h.degrees[v] != 1:
                        raise CertificateError(
                            f"missing entry for non-leaf incidence (v={v}, e={j})"
                        )
                    filled[(v, j)] = one
        return WeightedIncidence(filled)

    def validate(self, h: Hypergraph) -> None:
        for (v, j), x in self.entries.items():
            if not (0 <= j < h.edge_count) or v not in h.edges[j]:
                raise CertificateError(f"entry at (v={v}, e={j}) is outside the incidence")
            if x <= 0:
                raise CertificateError(f"non-positive weight at (v={v}, e={j})")


@dataclass
class NormalcyReport:
    """Per-vertex and per-edge comparison outcome of a certificate check.

    ``row_status[v]`` compares the weight sum at v against 1 and
    ``edge_status[j]`` compares the weight product on edge j against alpha,
    each as -1, 0 or +1.  ``consistent`` stays None unless cycle
    consistency was checked.
    """

    alpha: Weight
    row_status: tuple[int, ...]
    edge_status: tuple[int, ...]
    consistent: bool | None = None

    @property
    def is_normal(self) -> bool:
        return all(s == 0 for s in self.row_status) and all(s == 0 for s in self.edge_status)

    @property
    def is_subnormal(self) -> bool:
        return all(s <= 0 for s in self.row_status) and all(s >= 0 for s in self.edge_status)

    @property
    def is_supernormal(self) -> bool:
        return all(s >= 0 for s in self.row_status) and all(s <= 0 for s in self.edge_status)

    @property
    def strictly_subnormal(self) -> bool:
        return self.is_subnormal and not self.is_normal

    @property
    def strictly_supernormal(self) -> bool:
        return self.is_supernormal and not self.is_normal

    @property
    def kind(self) -> str:
        if self.is_normal:
            return "normal"
        if self.is_subnormal:
            return "strictly-subnormal"
        if self.is_supernormal:
            return "strictly-supernormal"
        return "none"


def _cmp(x: Weight, target: Weight, exact: bool, margin: float) -> int:
    if exact:
        return (x > target) - (x < target)
    d = float(x) - float(target)
    if abs(d) <= margin:
        return 0
    return 1 if d > 0 else -1


def _assess(h: Hypergraph, b: WeightedIncidence, alpha: Weight,
            margin: float = NUMERIC_MARGIN) -> NormalcyReport:
    b.validate(h)
    full = b.completed(h)
    exact = full.exact and isinstance(alpha, (Fraction, int))
    rows = []
    for v in range(h.vertex_count):
        total: Weight = Fraction(0) if exact else 0.0
        for j in h.incidences[v]:
            total += full.value(v, j)
        rows.append(_cmp(total, Fraction(1) if exact else 1.0, exact, margin))
    cols = []
    for j, edge in enumerate(h.edges):
        prod: Weight = Fraction(1) if exact else 1.0
        for v in edge:
            prod *= full.value(v, j)
        cols.append(_cmp(prod, alpha, exact, margin))
    return NormalcyReport(alpha, tuple(rows), tuple(cols))


def check_normal(h: Hypergraph, b: WeightedIncidence, alpha: Weight,
                 margin: float = NUMERIC_MARGIN) -> NormalcyReport:
    """Row sums = 1 at every vertex and edge products = alpha on every edge."""
    return _assess(h, b, alpha, margin)


def check_subnormal(h: Hypergraph, b: WeightedIncidence, alpha: Weight,
                    margin: float = NUMERIC_MARGIN) -> NormalcyReport:
    """Row sums <= 1 and edge products >= alpha; strict when not normal."""
    return _assess(h, b, alpha, margin)


def check_supernormal(h: Hypergraph, b: WeightedIncidence, alpha: Weight,
                      margin: float = NUMERIC_MARGIN) -> NormalcyReport:
    """Row sums >= 1 and edge products <= alpha; strict when not normal."""
    return _assess(h, b, alpha, margin)


def check_consistent(h: Hypergraph, b: WeightedIncidence,
                     margin: float = NUMERIC_MARGIN) -> bool:
    """Multiplicative cycle condition over a fundamental cycle basis.

    Vacuously true on hypertrees.  Raises if a basis cycle touches a
    missing entry.
    """
    full = b.completed(h)
    exact = full.exact
    for cyc in h.cycle_basis():
        prod: Weight = Fraction(1) if exact else 1.0
        for v_prev, e, v_next in cyc.steps():
            try:
                prod *= full.value(v_next, e)
                prod /= full.value(v_prev, e)
            except KeyError as exc:
                raise CertificateError(f"missing entry on basis cycle at edge {e}") from exc
        if _cmp(prod, Fraction(1) if exact else 1.0, exact, margin) != 0:
            return False
    return True


def rho_from_alpha(r: int, alpha: float | Fraction) -> float:
    """rho = (r-1)! * alpha^(-1/r)."""
    a = float(alpha)
    if a <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return math.factorial(r - 1) * a ** (-1.0 / r)


def alpha_from_rho(r: int, rho: float) -> float:
    """alpha = ((r-1)!/rho)^r, the inverse of :func:`rho_from_alpha`."""
    if rho <= 0:
        raise ValueError(f"rho must be positive, got {rho}")
    return (math.factorial(r - 1) / rho) ** r


# -- hypertree propagation and bisection --------------------------------------


@dataclass
class Propagation:
    """Outcome of one bottom-up sweep at a fixed alpha.

    ``failed`` means some forced weight dropped to zero or below, which
    happens once alpha exceeds the feasible range (alpha too large).
    Otherwise ``residual`` is the root row sum minus 1 and ``entries``
    holds the forced weights.
    """

    failed: bool
    residual: Weight | None = None
    entries: dict[tuple[int, int], Weight] | None = None


def default_root(h: Hypergraph) -> int:
    """A maximum-degree vertex, ties broken by lowest id."""
    return max(range(h.vertex_count), key=lambda v: (h.degrees[v], -v))


def _orient(h: Hypergraph, root: int) -> tuple[list[int], list[int], list[int]]:
    """BFS edge order from the root; per edge its root-side vertex and depth."""
    parent_vertex = [-1] * h.edge_count
    depth = [-1] * h.edge_count
    seen_v = {root}
    queue: deque[tuple[int, int]] = deque([(root, 0)])
    order: list[int] = []
    while queue:
        v, d = queue.popleft()
        for j in h.incidences[v]:
            if parent_vertex[j] != -1:
                continue
            parent_vertex[j] = v
            depth[j] = d
            order.append(j)
            for u in h.edges[j]:
                if u not in seen_v:
                    seen_v.add(u)
                    queue.append((u, d + 1))
    return order, parent_vertex, depth


def tree_propagate(h: Hypergraph, root: int, alpha: Weight) -> Propagation:
    """Force the weights of a hypertree bottom-up from the leaves.

    For each non-root vertex u below its parent edge e,
    B(u, e) = 1 - sum of B(u, e') over the child edges e' at u; the
    root-side entry absorbs the edge product constraint,
    B(v, e) = alpha / prod of the other members.  The root row sum minus 1
    is the residual; a root residual of zero together with positivity is
    exactly an alpha-normal certificate.
    """
    if not h.is_hypertree():
        raise HypergraphError("tree_propagate requires a hypertree")
    if h.edge_count == 0:
        raise HypergraphError("tree_propagate needs at least one edge")
    exact = isinstance(alpha, (Fraction, int))
    one: Weight = Fraction(1) if exact else 1.0
    order, parent_vertex, depth = _orient(h, root)
    entries: dict[tuple[int, int], Weight] = {}
    # child sums per vertex accumulate as deeper edges finish first
    up_sum: dict[int, Weight] = {}
    for j in sorted(order, key=lambda j: -depth[j]):
        pv = parent_vertex[j]
        prod: Weight = one
        for u in h.edges[j]:
            if u == pv:
                continue
            w = one - up_sum.get(u, Fraction(0) if exact else 0.0)
            if w <= 0:
                return Propagation(failed=True)
            entries[(u, j)] = w
            prod *= w
        top = alpha / prod
        entries[(pv, j)] = top
        up_sum[pv] = up_sum.get(pv, Fraction(0) if exact else 0.0) + top
    residual = up_sum.get(root, Fraction(0) if exact else 0.0) - one
    return Propagation(failed=False, residual=residual, entries=entries)


@dataclass
class TreeSolve:
    """Bisection result: alpha bracket, certificate and derived rho bracket."""

    alpha: float
    alpha_low: float
    alpha_high: float
    incidence: WeightedIncidence
    residual: float
    iterations: int
    root: int

    def rho_bracket(self, r: int) -> tuple[float, float]:
        lo = rho_from_alpha(r, self.alpha_high)
        hi = rho_from_alpha(r, self.alpha_low)
        pad = 1e-13 * hi
        return lo - pad, hi + pad


def tree_alpha_solve(h: Hypergraph, tol: float = 1e-12,
                     root: int | None = None, max_iter: int = 200) -> TreeSolve:
    """Find the alpha with zero root residual by bisection on (0, 1].

    The residual increases with alpha and propagation failure only occurs
    past the root (alpha too large), so failures are driven downward.  The
    spectral radius is rho_from_alpha(rank, alpha).
    """
    if not h.is_hypertree() or h.edge_count == 0:
        raise HypergraphError("tree_alpha_solve requires a hypertree with edges")
    if root is None:
        root = default_root(h)
    lo, hi = 1e-9, 1.0
    out_lo = tree_propagate(h, root, lo)
    guard = 0
    while out_lo.failed or out_lo.residual >= 0:
        lo *= 0.125
        out_lo = tree_propagate(h, root, lo)
        guard += 1
        if guard > 200:
            raise HypergraphError("could not bracket the residual from below")
    iterations = 0
    for _ in range(max_iter):
        iterations += 1
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        out = tree_propagate(h, root, mid)
        if out.failed or out.residual > 0:
            hi = mid
        elif out.residual < 0:
            lo = mid
            out_lo = out
        else:
            lo = hi = mid
            out_lo = out
            break
        if hi - lo <= 1e-17 * hi and abs(float(out_lo.residual)) <= tol:
            break
    alpha = 0.5 * (lo + hi)
    final = tree_propagate(h, root, alpha)
    if final.failed:
        final = out_lo
        alpha = lo
    if abs(float(final.residual)) > 1e-6:
        # the residual is monotone on every tree we can test; a gross
        # residual after a collapsed bracket means that assumption broke
        raise HypergraphError(
            f"bisection bracket anomaly: residual {float(final.residual):.3e} at alpha={alpha}"
        )
    return TreeSolve(
        alpha=alpha, alpha_low=lo, alpha_high=hi,
        incidence=WeightedIncidence(dict(final.entries)),
        residual=float(final.residual), iterations=iterations, root=root,
    )


def cert_to_vector(h: Hypergraph, b: WeightedIncidence) -> list[float]:
    """The positive eigenvector determined by a consistent certificate.

    Built by fixing the value 1 at vertex 0 and pushing
    x_u = x_v * (B(v,e)/B(u,e))^(1/r) along incidences; consistency makes
    the outcome path-independent.  Returned with unit r-norm.
    """
    full = b.completed(h)
    r = h.rank
    x = [0.0] * h.vertex_count
    x[0] = 1.0
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for j in h.incidences[v]:
            for u in h.edges[j]:
                if u in seen:
                    continue
                ratio = float(full.value(v, j)) / float(full.value(u, j))
                x[u] = x[v] * ratio ** (1.0 / r)
                seen.add(u)
                queue.append(u)
    norm = sum(t ** r for t in x) ** (1.0 / r)
    return [t / norm for t in x]


def lift_through_contraction(h: Hypergraph, bridge: int, contracted: Hypergraph,
                             vmap: dict[int, int],
                             b_contracted: WeightedIncidence) -> WeightedIncidence:
    """Extend a certificate on H/e back to H across the 2-bridge e.

    Surviving entries pull back through the vertex map; on the bridge the
    merged weight splits as B(u,e) = 1 - x and B(v,e) = x with x the weight
    mass of the u-side component, so row sums at both ends stay 1 and the
    bridge product is x(1-x).  The result is normal at alpha = 1/4 iff the
    split is even, and supernormal otherwise.
    """
    full = b_contracted.completed(contracted)
    u, v = h.nonleaf_vertices(bridge)
    entries: dict[tuple[int, int], Weight] = {}
    for j, edge in enumerate(h.edges):
        if j == bridge:
            continue
        jc = j if j < bridge else j - 1
        for w in edge:
            entries[(w, j)] = full.value(vmap[w], jc)
    exact = full.exact
    one: Weight = Fraction(1) if exact else 1.0
    x: Weight = Fraction(0) if exact else 0.0
    for j in h.incidences[u]:
        if j != bridge:
            x += entries[(u, j)]
    entries[(u, bridge)] = one - x
    entries[(v, bridge)] = x
    for w in h.edges[bridge]:
        if w not in (u, v):
            entries[(w, bridge)] = one
    return WeightedIncidence(entries)


# -- serialization -------------------------------------------------------------


def _weight_to_json(x: Weight) -> str | float:
    if isinstance(x, (Fraction, int)):
        return str(Fraction(x))
    return float(f"{x:.17g}")


def _weight_from_json(x: str | float | int) -> Weight:
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    return float(x)


def incidence_to_json_obj(b: WeightedIncidence, alpha: Weight) -> dict:
    entries = [
        {"v": v, "e": e, "val": _weight_to_json(x)}
        for (v, e), x in sorted(b.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))
    ]
    return {"alpha": _weight_to_json(alpha), "entries": entries}


def incidence_from_json_obj(obj: dict) -> tuple[Weight, WeightedIncidence]:
    try:
        alpha = _weight_from_json(obj["alpha"])
        entries = {
            (int(item["v"]), int(item["e"])): _weight_from_json(item["val"])
            for item in obj["entries"]
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed certificate object: {exc}") from exc
    return alpha, WeightedIncidence(entries)
