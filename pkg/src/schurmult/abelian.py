"""Canonical forms for finite abelian groups.

Two representations are used throughout the package:

* :class:`PPartition` -- an abelian p-group ``Z_{p^a1} + ... + Z_{p^ak}``
  stored as its exponent partition ``(a1 >= ... >= ak >= 1)``.  The prime
  is never stored; every quantity derived here depends only on the
  exponents, so all arithmetic happens in log-space.
* :class:`InvariantFactorGroup` -- an arbitrary finite abelian group
  ``Z_n1 + ... + Z_nk`` with ``n_{i+1} | n_i``, stored with exact integers.

>>> g = validate_partition([1, 2, 2])
>>> g
PPartition(parts=(2, 2, 1))
>>> invariants_of(g).t
6
>>> normalize_to_invariant_factors([4, 6]).factors
(12, 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Optional

from sympy import isprime, multiplicity, perfect_power

from .errors import InconsistencyError, InvariantFactorError, PartitionError

__all__ = [
    "PPartition",
    "InvariantFactorGroup",
    "GroupInvariants",
    "validate_partition",
    "normalize_to_invariant_factors",
    "invariants_of",
    "frattini_partition",
    "instantiate",
    "p_group_partition",
]


def _check_int(value, what: str, index: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{what} at index {index} is not an integer: {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class PPartition:
    """Exponent partition of an abelian p-group, largest part first.

    The empty partition is the trivial group.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, x in enumerate(parts):
            _check_int(x, "part", i)
            if x < 1:
                raise PartitionError(f"nonpositive part {x} at index {i}")
            if i and x > parts[i - 1]:
                raise PartitionError(
                    f"parts not non-increasing at index {i}: {parts}"
                )

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> "PPartition":
        # Skips validation; callers guarantee canonical input.
        obj = object.__new__(cls)
        object.__setattr__(obj, "parts", parts)
        return obj

    @property
    def n(self) -> int:
        """Log order, ``log_p |G|``."""
        return sum(self.parts)

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def a(self) -> int:
        """Log order of the Frattini subgroup."""
        return sum(self.parts) - len(self.parts)

    @property
    def exp_log(self) -> int:
        return self.parts[0] if self.parts else 0

    def is_elementary(self) -> bool:
        return all(x == 1 for x in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def notation(self, prime: Optional[int] = None) -> str:
        """``Z_p^3 ⊕ Z_p^1`` style rendering (``p`` replaced when a prime is given)."""
        if not self.parts:
            return "0"
        base = "p" if prime is None else str(prime)
        return " ⊕ ".join(f"Z_{base}^{x}" for x in self.parts)


@dataclass(frozen=True, slots=True)
class InvariantFactorGroup:
    """``Z_n1 + ... + Z_nk`` with ``n_{i+1} | n_i`` and no factor equal to 1."""

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        for i, x in enumerate(factors):
            _check_int(x, "factor", i)
            if x < 2:
                raise InvariantFactorError(f"factor {x} at index {i} must be >= 2")
            if i and factors[i - 1] % x:
                raise InvariantFactorError(
                    f"divisibility chain broken at index {i}: "
                    f"{x} does not divide {factors[i - 1]}"
                )

    @classmethod
    def _trusted(cls, factors: tuple[int, ...]) -> "InvariantFactorGroup":
        obj = object.__new__(cls)
        object.__setattr__(obj, "factors", factors)
        return obj

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    def notation(self) -> str:
        if not self.factors:
            return "0"
        return " ⊕ ".join(f"Z_{x}" for x in self.factors)


@dataclass(frozen=True, slots=True)
class GroupInvariants:
    n: int
    rank: int
    a: int
    exp_log: int
    nu: int
    t: int
    m: Optional[int]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "a": self.a,
            "exp_log": self.exp_log,
            "nu": self.nu,
            "t": self.t,
            "m": self.m,
        }


def validate_partition(parts: Iterable[int]) -> PPartition:
    """Canonicalize ``parts`` (any order) into a :class:`PPartition`."""
    parts = list(parts)
    for i, x in enumerate(parts):
        _check_int(x, "part", i)
        if x < 1:
            raise PartitionError(f"nonpositive part {x} at index {i}")
    return PPartition._trusted(tuple(sorted(parts, reverse=True)))


def _insert_factor(chain: list[int], x: int) -> None:
    # Per prime, lcm/gcd act as max/min, so this is an insertion into a
    # sorted list carried out simultaneously for every prime.
    carry = x
    for i in range(len(chain)):
        if chain[-1] % carry == 0:
            break
        c = chain[i]
        g = gcd(c, carry)
        chain[i] = c // g * carry
        carry = g
        if carry == 1:
            return
    chain.append(carry)


def normalize_to_invariant_factors(cyclic_orders: Iterable[int]) -> InvariantFactorGroup:
    """Invariant-factor form of ``Z_o1 + Z_o2 + ...`` without factoring anything."""
    chain: list[int] = []
    for i, x in enumerate(cyclic_orders):
        _check_int(x, "order", i)
        if x < 1:
            raise InvariantFactorError(f"cyclic order {x} at index {i} must be positive")
        if x > 1:
            _insert_factor(chain, x)
    return InvariantFactorGroup._trusted(tuple(chain))


def invariants_of(g: PPartition) -> GroupInvariants:
    from .multiplier import multiplier_log_order

    parts = g.parts
    n = sum(parts)
    rank = len(parts)
    a = n - rank
    nu = multiplier_log_order(g)
    t = n * (n - 1) // 2 - nu
    m = None
    if a >= 1:
        m = a * n - a * (a + 1) // 2 - t
        if m < 0 or 2 * a * n != a * (a + 1) + 2 * t + 2 * m:
            raise InconsistencyError(f"derived m={m} invalid for {g!r}")
    if t < 0:
        raise InconsistencyError(f"negative t={t} for {g!r}")
    return GroupInvariants(n, rank, a, parts[0] if parts else 0, nu, t, m)


def frattini_partition(g: PPartition) -> PPartition:
    """Exponent partition of ``Phi(G) = pG``."""
    return PPartition._trusted(tuple(x - 1 for x in g.parts if x > 1))


def instantiate(g: PPartition, p: int = 2) -> InvariantFactorGroup:
    """Realize the partition at a concrete prime."""
    return InvariantFactorGroup._trusted(tuple(p**x for x in g.parts))


def p_group_partition(g: InvariantFactorGroup) -> tuple[Optional[int], PPartition]:
    """Recover ``(p, partition)`` from invariant factors that are all powers of one prime.

    The trivial group yields ``(None, PPartition())``.
    """
    if not g.factors:
        return None, PPartition()
    smallest = g.factors[-1]
    pp = perfect_power(smallest)
    p = pp[0] if pp else smallest
    if not isprime(p):
        raise InvariantFactorError("t requires a p-group: factors are not prime powers")
    parts = []
    for x in g.factors:
        e = multiplicity(p, x)
        if p**e != x:
            raise InvariantFactorError(
                f"t requires a p-group: {x} is not a power of {p}"
            )
        parts.append(int(e))
    return p, PPartition._trusted(tuple(parts))

