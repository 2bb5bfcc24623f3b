"""
Exhaustive verification
=======================

Abelian groups of order p^n correspond to partitions of n, so each
structural claim can be checked on every group up to a bound.  A report
counts partitions checked, partitions outside the claim's hypotheses, and
any counterexamples.
"""

from schurmult import CLAIMS, census, verify_claim

N = 24

for scope in CLAIMS:
    report = verify_claim(scope, N)
    print(report.summary())
    print()

# Distribution of t for small orders.  The rows with t <= 3 are tiny:
# only the elementary groups, Z_p^2, Z_p^2 + Z_p, Z_p^3 and Z_p^2 + Z_p + Z_p.
for n, row in census(8).items():
    low = {t: c for t, c in row.items() if t <= 3}
    print(f"n={n}: {len(row)} distinct t values, t<=3: {low}")
