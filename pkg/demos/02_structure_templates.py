"""
Structure templates for abelian p-groups
========================================

For an abelian p-group with Frattini log order a >= 1, the exponent lies
between p^(a-m+1) and p^(a+1).  At the lower end the group is forced;
above it, the parameters (kappa, s, r, h) pin the group to a template.
"""

from schurmult import PPartition, classify, exponent_bounds, invariants_of

examples = [
    (3, 2, 1, 1),     # minimal exponent
    (3, 2, 2),        # r = 2
    (4, 3, 2, 2, 1),  # r = 1
    (3, 3, 3, 2, 2),  # r = 0
    (4, 4, 4, 4),     # r = -1, h = (4)
    (3, 3, 3, 3, 2),  # r = -1, h = (3, 2)
    (2, 2, 2, 2, 2, 2),  # r = -1, h = (2, 2, 2)
    (3, 3, 3, 3, 3),  # r = -2, general shape only
]

for parts in examples:
    g = PPartition(parts)
    inv = invariants_of(g)
    lo, hi = exponent_bounds(g)
    c = classify(g)
    line = f"{str(list(parts)):22s} n={inv.n:2d} a={inv.a:2d} m={inv.m:2d}  exp in p^[{lo},{hi}]  {c.branch:15s}"
    if c.params is not None:
        p = c.params
        line += f" kappa={p.kappa} s={p.s} r={p.r} h={list(p.h)}"
    print(line, " match" if c.match else " MISMATCH")
