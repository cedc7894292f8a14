"""The complete classification at the threshold rho_r = (r-1)! * 4^(1/r).

Every connected r-uniform hypergraph is Below, Equal or Above the
threshold, and the Below/Equal side is a short list of parametric
families with exact parameter boundaries.  The classifier is purely
structural; numerics only cross-check it.
"""

from hyperrho import (
    Verdict,
    classify,
    family_members_with_edges,
    gen_F,
    gen_H,
    recognize_family,
    rho_r,
    spectral_radius,
    verify_classification,
)

print("== a parameter family crossing the boundary ==")
for k in (12, 13, 14, 15, 16):
    h = gen_F(3, 1, 3, k)
    c = classify(h)
    res = spectral_radius(h, tol=1e-10)
    print(f"arms (1,3,{k:>2}): {c.verdict.value:<6} "
          f"rho = {res.rho:.10f}  vs rho_3 = {rho_r(3):.10f}")

print("\n== everything at or below the threshold with up to 9 edges (rank 3) ==")
for m in range(1, 10):
    entries = []
    for fam, h in family_members_with_edges(3, m):
        verdict = classify(h).verdict.value
        entries.append(f"{fam.label()}:{verdict}")
    print(f"m={m}: " + ", ".join(sorted(entries)))

print("\n== rank 5 reduces to rank 4 reduces to rank 3 ==")
h5 = gen_H(5, 1, 1, 2, 2)
h4 = h5.reduce()
print(f"rank 5 instance: {classify(h5).verdict.value} "
      f"({recognize_family(h5).label()})")
print(f"its reduction:   {classify(h4).verdict.value} "
      f"({recognize_family(h4).label()})")
print(f"alpha invariance: {(24 / spectral_radius(h5).rho) ** 5:.10f} "
      f"== {(6 / spectral_radius(h4).rho) ** 4:.10f}")

print("\n== structural verdicts agree with the numeric oracle ==")
for fam, h in family_members_with_edges(3, 12):
    rep = verify_classification(h)
    assert rep.agree
    tag = "decisive" if rep.decisive else "at the threshold"
    print(f"{fam.label():<14} {rep.classification.verdict.value:<6} ({tag})")
