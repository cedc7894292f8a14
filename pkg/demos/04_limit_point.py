"""The loose path approaches the threshold from below.

rho(A_n) increases strictly with n, stays below rho_r, and respects the
lower bound (1 + 2/n + 1/n^2)^(-1/r) * rho_r, so rho_r is the smallest
limit point of spectral radii.  Deleting edges always moves strictly
down (subgraph monotonicity).
"""

from hyperrho import gen_path, rho_from_alpha, rho_r, spectral_radius, tree_alpha_solve

r = 3
limit = rho_r(r)
print(f"rho_{r} = {limit:.10f}")
print(f"{'n':>4} {'rho(A_n)':>15} {'lower bound':>15} {'gap to limit':>14}")
prev = 0.0
for n in (1, 2, 3, 5, 8, 13, 21, 34, 40):
    rho = rho_from_alpha(r, tree_alpha_solve(gen_path(r, n)).alpha)
    bound = (1 + 2 / n + 1 / n**2) ** (-1 / r) * limit
    assert prev < rho < limit and rho >= bound - 1e-12
    print(f"{n:>4} {rho:>15.10f} {bound:>15.10f} {limit - rho:>14.2e}")
    prev = rho

print("\n== strict monotonicity under edge deletion ==")
h = gen_path(r, 12)
rho_full = spectral_radius(h).rho
for keep in (11, 9, 6):
    sub = h.restrict_to_edges(range(keep))
    rho_sub = spectral_radius(sub).rho
    print(f"first {keep:>2} edges: rho = {rho_sub:.10f}  "
          f"(drop from {rho_full:.10f}: {rho_full - rho_sub:.2e})")
    assert rho_sub < rho_full
