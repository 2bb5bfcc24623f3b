"""
Schur multipliers of finite abelian groups
==========================================

The multiplier of Z_n1 + ... + Z_nk (invariant-factor form) repeats the
i-th factor i - 1 times.  Here we compute a few, compare the closed form
with the pairwise-gcd exterior square, and iterate.
"""

from schurmult import (
    PPartition,
    exterior_square_oracle,
    invariants_of,
    iterated_multiplier,
    normalize_to_invariant_factors,
    schur_multiplier,
    schur_multiplier_general,
)

# An arbitrary direct sum of cyclic groups is first put in
# invariant-factor form.
G = normalize_to_invariant_factors([4, 6, 10])
print("G    =", G.notation())

M = schur_multiplier_general(G)
print("M(G) =", M.structure.notation(), " order", M.nu_or_order)

# The exterior square works from any cyclic decomposition.
print("gcd oracle on the raw list:", exterior_square_oracle([4, 6, 10]).notation())

# For p-groups everything lives in exponent space.
g = PPartition((3, 2, 2, 1))
print()
print("G    =", g.notation())
print("M(G) =", schur_multiplier(g).structure.notation())

# Iterating gives the metabelian multiplier M(M(G)) at depth 2.
for depth in range(4):
    h = iterated_multiplier(g, depth)
    print(f"depth {depth}: rank {h.rank:4d}  log order {h.n}")

# The deficiency t from the bound |M(G)| <= p^{n(n-1)/2}.
inv = invariants_of(g)
print()
print(f"n={inv.n}  nu={inv.nu}  t={inv.t}  a={inv.a}  m={inv.m}")
