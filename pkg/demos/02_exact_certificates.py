"""Exact rational certificates: normal, subnormal and supernormal labelings.

A weighted incidence matrix with row sums 1 and edge products alpha pins
the spectral radius exactly (given cycle consistency); relaxing the
equalities to inequalities yields one-sided bounds.  All comparisons here
run in exact rational arithmetic, so the verdicts carry no tolerance.
"""

from fractions import Fraction

from hyperrho import check_consistent, check_normal, rho_from_alpha
from hyperrho.fixtures import load_all, load_fixture

print("== the bundled certificate gallery ==")
for fix in load_all():
    ok, observed = fix.verify()
    flag = "ok " if ok else "FAIL"
    print(f"{flag} {fix.name:<22} rank {fix.graph.rank}: {observed}")

print("\n== a labeling in full: three arms of length 2 at one vertex ==")
fix = load_fixture("tilde_e6_r3")
for (v, e), val in sorted(fix.incidence.entries.items(), key=lambda kv: kv[0][1]):
    print(f"  B(v={v}, e={e}) = {val}")
report = check_normal(fix.graph, fix.incidence, fix.alpha)
print(f"normal: {report.is_normal}, consistent: {check_consistent(fix.graph, fix.incidence)}")
print(f"hence rho = {rho_from_alpha(3, fix.alpha):.12f} exactly (= 2 * 4^(1/3))")

print("\n== one-sided bounds ==")
sub = load_fixture("h4_1_1_1_4")
print(f"{sub.name}: strictly subnormal at alpha=1/4 "
      f"=> rho < {rho_from_alpha(4, Fraction(1, 4)):.9f}")
sup = load_fixture("h4_1_1_1_5")
print(f"{sup.name}: strictly supernormal (consistent) at alpha=1/4 "
      f"=> rho > {rho_from_alpha(4, Fraction(1, 4)):.9f}")

print("\n== consistency matters: a normal but inconsistent labeling ==")
skew = load_fixture("triangle_skew_r2")
report = check_normal(skew.graph, skew.incidence, skew.alpha)
print(f"triangle with weights 1/3, 2/3: normal at alpha = {skew.alpha} -> "
      f"{report.is_normal}, consistent -> {check_consistent(skew.graph, skew.incidence)}")
print(f"the naive bound {rho_from_alpha(2, skew.alpha):.6f} only upper-bounds "
      "the true value 2")
