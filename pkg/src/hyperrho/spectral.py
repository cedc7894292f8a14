"""Numerical spectral radius of connected uniform hypergraphs.

The spectral radius is the maximum of the polynomial form
``r! * sum_e prod_{v in e} x_v`` over the unit r-norm sphere.  On a
connected hypergraph the maximizer is strictly positive and satisfies the
stationarity condition

    (r-1)! * sum_{e : v in e} prod_{u in e, u != v} x_u = rho * x_v^(r-1).

Power iteration on that map, started from a positive vector, gives
two-sided bounds at every step: the minimum and maximum over vertices of
y_v / x_v^(r-1) bracket rho.  A positive diagonal shift keeps the
iteration aperiodic (plain iteration oscillates on bipartite-like
structures such as 2-uniform trees); the bounds are computed on the
unshifted map, so they stay valid certificates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hypergraph import Hypergraph, HypergraphError
from .labeling import WeightedIncidence, tree_alpha_solve, cert_to_vector, rho_from_alpha


@dataclass
class SpectralResult:
    """A bracketed spectral radius estimate with its positive eigenvector."""

    rho: float
    vector: np.ndarray
    lower: float
    upper: float
    iterations: int
    converged: bool
    method: str = "power"


def polynomial_form(h: Hypergraph, x: np.ndarray | list[float]) -> float:
    """r! * sum over edges (with multiplicity) of the product of entries."""
    x = np.asarray(x, dtype=float)
    if x.shape != (h.vertex_count,):
        raise ValueError(f"expected a vector of length {h.vertex_count}, got {x.shape}")
    if h.edge_count == 0:
        return 0.0
    edges = np.array(h.edges, dtype=np.intp)
    return math.factorial(h.rank) * float(np.prod(x[edges], axis=1).sum())


def rayleigh(h: Hypergraph, x: np.ndarray | list[float]) -> float:
    """polynomial_form(x) / ||x||_r^r; never exceeds the spectral radius."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("rayleigh needs a nonnegative vector")
    denom = float(np.sum(x ** h.rank))
    if denom == 0.0:
        raise ValueError("rayleigh needs a nonzero vector")
    return polynomial_form(h, x) / denom


def power_method(h: Hypergraph, tol: float = 1e-10, max_iter: int = 10 ** 6,
                 shift: float = 1.0) -> SpectralResult:
    """Shifted power iteration with min/max eigenvalue bracketing.

    Stops once the bracket width drops to ``tol``.  Non-convergence within
    ``max_iter`` is flagged on the result, not raised; the final bracket is
    still valid.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if h.edge_count == 0:
        raise HypergraphError("power_method needs at least one edge")
    if not h.is_connected():
        raise HypergraphError("power_method requires a connected hypergraph")
    r = h.rank
    n = h.vertex_count
    fact = float(math.factorial(r - 1))
    edges = np.array(h.edges, dtype=np.intp)
    x = np.full(n, n ** (-1.0 / r))
    lower, upper = -math.inf, math.inf
    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        xe = x[edges]                      # m x r gather
        prods = np.prod(xe, axis=1)
        y = np.zeros(n)
        np.add.at(y, edges.ravel(), (fact * prods[:, None] / xe).ravel())
        lam = y / x ** (r - 1)
        lower = max(lower, float(lam.min()))
        upper = min(upper, float(lam.max()))
        if upper < lower:                  # rounding collision at convergence
            lower, upper = upper, lower
        if upper - lower <= tol:
            converged = True
            break
        z = y + shift * x ** (r - 1)
        x = z ** (1.0 / (r - 1))
        x /= np.sum(x ** r) ** (1.0 / r)
    return SpectralResult(
        rho=0.5 * (lower + upper), vector=x, lower=lower, upper=upper,
        iterations=iterations, converged=converged, method="power",
    )


def eigen_to_incidence(h: Hypergraph, res: SpectralResult) -> WeightedIncidence:
    """The weighted incidence induced by an eigenvector:

    B(v, e) = (r-1)! * prod_{u in e} x_u / (rho * x_v^r) for v in e.

    For a converged result this is approximately consistently alpha-normal
    with alpha = ((r-1)!/rho)^r.
    """
    if not res.converged:
        raise ValueError("eigen_to_incidence needs a converged result")
    x = np.asarray(res.vector, dtype=float)
    if np.any(x <= 0):
        raise ValueError("eigenvector must be strictly positive")
    fact = math.factorial(h.rank - 1)
    entries: dict[tuple[int, int], float] = {}
    for j, e in enumerate(h.edges):
        prod = float(np.prod(x[list(e)]))
        for v in e:
            entries[(v, j)] = fact * prod / (res.rho * float(x[v]) ** h.rank)
    return WeightedIncidence(entries)


def spectral_radius(h: Hypergraph, tol: float = 1e-10) -> SpectralResult:
    """Dispatch: hypertrees go through the exact-residual alpha solver,
    everything else through power iteration."""
    if not h.is_connected():
        raise HypergraphError("spectral_radius requires a connected hypergraph")
    if h.edge_count == 0:
        raise HypergraphError("spectral_radius needs at least one edge")
    if h.is_hypertree():
        solve = tree_alpha_solve(h, tol=min(tol, 1e-12))
        lo, hi = solve.rho_bracket(h.rank)
        vec = np.array(cert_to_vector(h, solve.incidence))
        return SpectralResult(
            rho=rho_from_alpha(h.rank, solve.alpha), vector=vec,
            lower=lo, upper=hi, iterations=solve.iterations,
            converged=True, method="tree-alpha",
        )
    return power_method(h, tol=tol)
