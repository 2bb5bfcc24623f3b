"""Schur multipliers of finite abelian groups.

For ``G = Z_n1 + ... + Z_nk`` in invariant-factor form the multiplier is
``Z_n2 + Z_n3^(2) + ... + Z_nk^(k-1)``: the i-th factor appears ``i - 1``
times.  Cyclic and trivial groups have trivial multiplier.  Iterating the
construction gives the solvable multipliers of an abelian group, e.g.
the metabelian multiplier is ``M(M(G))``.

:func:`exterior_square_oracle` computes the same group a different way,
as ``+_{i<j} Z_gcd(ni, nj)`` over any cyclic decomposition, and exists
only to cross-check the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Union

from .abelian import (
    InvariantFactorGroup,
    PPartition,
    _check_int,
    normalize_to_invariant_factors,
)
from .errors import InvariantFactorError

__all__ = [
    "MultiplierResult",
    "multiplier_log_order",
    "schur_multiplier",
    "schur_multiplier_general",
    "exterior_square_oracle",
    "iterated_multiplier",
    "t_invariant",
]


@dataclass(frozen=True, slots=True)
class MultiplierResult:
    """Multiplier structure plus its size.

    ``nu_or_order`` is ``log_p |M(G)|`` for partition input and the exact
    integer ``|M(G)|`` for invariant-factor input.
    """

    structure: Union[PPartition, InvariantFactorGroup]
    nu_or_order: int


def multiplier_log_order(g: PPartition) -> int:
    """``log_p |M(G)| = sum_{i>=2} (i-1) * alpha_i``."""
    return sum(i * x for i, x in enumerate(g.parts))


def _repeat_by_position(seq: tuple) -> tuple:
    # Entry at 0-based position i is emitted i times.
    out = []
    for i, x in enumerate(seq):
        out.extend([x] * i)
    return tuple(out)


def schur_multiplier(g: PPartition) -> MultiplierResult:
    structure = _repeat_by_position(g.parts)
    return MultiplierResult(PPartition._trusted(structure), sum(structure))


def schur_multiplier_general(g: InvariantFactorGroup) -> MultiplierResult:
    structure = InvariantFactorGroup._trusted(_repeat_by_position(g.factors))
    return MultiplierResult(structure, structure.order)


def exterior_square_oracle(cyclic_orders: Iterable[int]) -> InvariantFactorGroup:
    orders = list(cyclic_orders)
    for i, x in enumerate(orders):
        _check_int(x, "order", i)
        if x < 1:
            raise InvariantFactorError(f"cyclic order {x} at index {i} must be positive")
    # Sorting first keeps p-group instantiations on the cheap append path.
    pairs = sorted((gcd(u, v) for u, v in combinations(orders, 2)), reverse=True)
    return normalize_to_invariant_factors(pairs)


def iterated_multiplier(g: PPartition, depth: int) -> PPartition:
    """Apply :func:`schur_multiplier` ``depth`` times (``depth=2`` is ``M(M(G))``)."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    for _ in range(depth):
        if len(g.parts) <= 1:
            return PPartition()
        g = schur_multiplier(g).structure
    return g


def t_invariant(g: PPartition) -> int:
    """Deficiency of ``|M(G)|`` from the bound ``p^{n(n-1)/2}``."""
    n = g.n
    return n * (n - 1) // 2 - multiplier_log_order(g)
