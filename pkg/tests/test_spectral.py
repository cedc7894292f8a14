import math
import random

import numpy as np
import pytest

from hyperrho import (
    HypergraphError,
    alpha_from_rho,
    check_consistent,
    check_normal,
    eigen_to_incidence,
    gen_E,
    gen_F,
    gen_cycle,
    gen_path,
    gen_star,
    polynomial_form,
    power_method,
    rayleigh,
    rho_r,
    spectral_radius,
)
from helpers import random_connected, random_connected_proper_subgraph

RHO3 = 2 * 4 ** (1 / 3)


def test_polynomial_form():
    single = gen_path(3, 1)
    assert polynomial_form(single, [1.0, 1.0, 1.0]) == pytest.approx(6.0)
    u = 3 ** (-1 / 3)
    assert polynomial_form(single, [u, u, u]) == pytest.approx(2.0)
    assert polynomial_form(gen_cycle(3, 3), np.zeros(6)) == 0.0
    with pytest.raises(ValueError):
        polynomial_form(single, [1.0, 1.0])


def test_polynomial_form_counts_multiplicity():
    doubled = gen_cycle(3, 2).reduce()  # two copies of one rank-2 edge
    assert polynomial_form(doubled, [1.0, 1.0]) == pytest.approx(4.0)


def test_rayleigh():
    assert rayleigh(gen_path(3, 1), [1, 1, 1]) == pytest.approx(2.0)
    assert rayleigh(gen_path(2, 1), [1, 1]) == pytest.approx(1.0)
    c2 = gen_cycle(3, 2)
    assert rayleigh(c2, np.ones(4)) == pytest.approx(3.0)
    assert rayleigh(c2, np.ones(4)) <= RHO3
    with pytest.raises(ValueError):
        rayleigh(c2, np.zeros(4))
    with pytest.raises(ValueError):
        rayleigh(c2, [-1, 1, 1, 1])


def test_rayleigh_scale_invariance():
    h = gen_E(3, 1, 2, 2)
    rng = random.Random(5)
    x = np.array([rng.uniform(0.1, 2.0) for _ in range(h.vertex_count)])
    assert rayleigh(h, 3.7 * x) == pytest.approx(rayleigh(h, x), rel=1e-12)


def test_power_method_simple_values():
    res = power_method(gen_path(3, 1), tol=1e-11)
    assert res.converged and res.rho == pytest.approx(2.0, abs=1e-10)
    res = power_method(gen_path(3, 2), tol=1e-11)
    assert res.rho == pytest.approx(2 * 2 ** (1 / 3), abs=1e-9)
    for n in (3, 4, 5, 6):
        res = power_method(gen_cycle(3, n), tol=1e-10)
        assert res.lower - 1e-9 <= RHO3 <= res.upper + 1e-9
        assert res.upper - res.lower <= 1e-8


def test_power_method_preconditions():
    with pytest.raises(HypergraphError):
        power_method(gen_path(3, 1).extend().reduce().restrict_to_edges([]))
    from hyperrho import Hypergraph

    with pytest.raises(HypergraphError):
        power_method(Hypergraph(3, 6, ((0, 1, 2), (3, 4, 5))))


def test_power_method_bracket_always_contains_rho():
    res = power_method(gen_F(3, 2, 2, 2), tol=1e-3, max_iter=3)
    assert not res.converged
    exact = spectral_radius(gen_F(3, 2, 2, 2), tol=1e-11).rho
    assert res.lower - 1e-9 <= exact <= res.upper + 1e-9


def test_rank2_path_matches_closed_form():
    # ordinary path on n edges has spectral radius 2 cos(pi / (n + 2))
    for n in (1, 2, 3, 5, 8):
        res = spectral_radius(gen_path(2, n), tol=1e-11)
        assert res.rho == pytest.approx(2 * math.cos(math.pi / (n + 2)), abs=1e-9)


def test_rank2_matches_dense_adjacency_eigenvalues():
    # independent oracle: largest eigenvalue of the (multiplicity-counting)
    # adjacency matrix
    rng = random.Random(31)
    for _ in range(15):
        g = random_connected(rng, 2, rng.randint(1, 9))
        adj = np.zeros((g.vertex_count, g.vertex_count))
        for u, v in g.edges:
            adj[u, v] += 1
            adj[v, u] += 1
        dense = float(np.linalg.eigvalsh(adj)[-1])
        res = spectral_radius(g, tol=1e-11)
        assert res.rho == pytest.approx(dense, abs=1e-8)


def test_rank3_matches_direct_rayleigh_maximization():
    # independent oracle: numerically maximize the Rayleigh quotient itself
    from scipy.optimize import minimize

    rng = random.Random(13)
    graphs = [gen_path(3, 2), gen_cycle(3, 2), gen_E(3, 1, 1, 1), gen_cycle(3, 3)]
    graphs += [random_connected(rng, 3, 4) for _ in range(3)]
    for g in graphs:
        expected = spectral_radius(g, tol=1e-11).rho

        def negated(t):
            return -rayleigh(g, t * t + 1e-12)

        best = -math.inf
        for _ in range(6):
            t0 = np.array([rng.uniform(0.2, 1.0) for _ in range(g.vertex_count)])
            out = minimize(negated, t0, method="Nelder-Mead",
                           options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 20000})
            best = max(best, -float(out.fun))
        assert best == pytest.approx(expected, abs=1e-6)
        assert best <= expected + 1e-8


def test_eigen_to_incidence():
    res = power_method(gen_path(3, 1), tol=1e-12)
    b = eigen_to_incidence(gen_path(3, 1), res)
    assert all(x == pytest.approx(1.0, abs=1e-9) for x in b.entries.values())
    c5 = gen_cycle(2, 5)
    res = power_method(c5, tol=1e-13)
    b = eigen_to_incidence(c5, res)
    assert all(x == pytest.approx(0.5, abs=1e-9) for x in b.entries.values())
    alpha = alpha_from_rho(2, res.rho)
    report = check_normal(c5, b, alpha, margin=1e-8)
    assert report.is_normal
    assert check_consistent(c5, b, margin=1e-8)
    a2 = gen_path(3, 2)
    res = power_method(a2, tol=1e-13)
    b = eigen_to_incidence(a2, res)
    center = max(range(5), key=a2.degrees.__getitem__)
    assert b.entries[(center, 0)] == pytest.approx(0.5, abs=1e-8)
    assert alpha_from_rho(3, res.rho) == pytest.approx(0.5, abs=1e-8)


def test_spectral_radius_dispatch_and_landmarks():
    d4 = gen_E(3, 1, 1, 2)
    res = spectral_radius(d4)
    assert res.method == "tree-alpha"
    assert res.rho < rho_r(3)
    assert spectral_radius(gen_E(3, 2, 2, 2)).rho == pytest.approx(rho_r(3), abs=1e-9)
    assert spectral_radius(gen_F(3, 3, 3, 3)).rho > rho_r(3)
    assert spectral_radius(gen_cycle(3, 4)).method == "power"


def test_tree_and_power_agree():
    for h in (gen_E(3, 1, 2, 3), gen_F(3, 1, 1, 4), gen_star(3, 4), gen_path(4, 3)):
        tree = spectral_radius(h, tol=1e-11)
        power = power_method(h, tol=1e-10)
        assert tree.rho == pytest.approx(power.rho, abs=5e-9)


def test_eigen_residual_bound():
    for h in (gen_cycle(3, 5), gen_star(3, 4), gen_cycle(2, 4)):
        tol = 1e-10
        res = power_method(h, tol=tol)
        assert res.converged
        x = res.vector
        r = h.rank
        fact = math.factorial(r - 1)
        for v in range(h.vertex_count):
            acc = 0.0
            for j in h.incidences[v]:
                prod = 1.0
                for u in h.edges[j]:
                    if u != v:
                        prod *= x[u]
                acc += fact * prod
            assert abs(acc - res.rho * x[v] ** (r - 1)) <= 10 * tol


def test_subgraph_monotonicity_random():
    rng = random.Random(11)
    done = 0
    while done < 25:
        g = random_connected(rng, 3, rng.randint(2, 8))
        sub = random_connected_proper_subgraph(rng, g)
        if sub is None:
            continue
        rho_g = spectral_radius(g, tol=1e-10).rho
        rho_h = spectral_radius(sub, tol=1e-10).rho
        assert rho_h < rho_g - 1e-9
        done += 1


def test_rayleigh_never_exceeds_rho():
    rng = random.Random(23)
    for _ in range(20):
        g = random_connected(rng, 3, rng.randint(1, 6))
        rho = spectral_radius(g, tol=1e-10).rho
        for _ in range(5):
            x = np.array([rng.uniform(0.0, 1.0) for _ in range(g.vertex_count)])
            if not x.any():
                continue
            assert rayleigh(g, x) <= rho + 1e-8


def test_alpha_invariance_under_extension():
    for h in (gen_path(3, 5), gen_E(3, 1, 2, 3), gen_cycle(3, 4)):
        r = h.rank
        big = h.extend()
        rho_small = spectral_radius(h, tol=1e-11).rho
        rho_big = spectral_radius(big, tol=1e-11).rho
        a_small = (math.factorial(r - 1) / rho_small) ** r
        a_big = (math.factorial(r) / rho_big) ** (r + 1)
        assert a_big == pytest.approx(a_small, abs=1e-7)


def test_path_lower_bound():
    for r in (2, 3):
        limit = rho_r(r)
        for n in (1, 2, 5, 10):
            rho = spectral_radius(gen_path(r, n), tol=1e-11).rho
            bound = (1 + 2 / n + 1 / n**2) ** (-1 / r) * limit
            assert bound - 1e-9 <= rho < limit
