"""Exhaustive verification over all abelian p-groups of order ``p^n``.

Abelian groups of order ``p^n`` are in bijection with partitions of ``n``,
so every claim about them is a finite check per partition.  Each claim id
has a checker that filters partitions by the claim's hypotheses (counting
the rest under ``skipped``) and records a :class:`Counterexample` whenever
the conclusion fails.

Scans split by ``n`` and can run in worker processes; partial reports are
merged by summing counts and sorting counterexamples, so the result does
not depend on the number of workers.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .abelian import PPartition, instantiate, normalize_to_invariant_factors
from .classifier import (
    COROLLARY_TABLE,
    THM24_GENERAL,
    _params,
    corollary25_templates,
    theorem23_predict,
    theorem24_predict,
)
from .multiplier import (
    exterior_square_oracle,
    multiplier_log_order,
    schur_multiplier,
    schur_multiplier_general,
)

__all__ = [
    "CLAIMS",
    "Counterexample",
    "VerificationReport",
    "enumerate_partitions",
    "verify_claim",
    "census",
    "random_cyclic_lists",
]

CLAIMS = ("thm1.1", "lem2.1", "lem2.2", "thm2.3", "thm2.4", "cor2.5", "oracle", "green")

DEFAULT_MAX_N = 40
DEFAULT_PRIMES = (2, 3)
# Largest instantiated cyclic order the oracle will build, in bits.
DEFAULT_ORACLE_CAP_BITS = 4096
RANDOM_LISTS = 1000
RANDOM_SEED = 20070611
RANDOM_MAX_ENTRY = 2**20
RANDOM_MAX_LEN = 8

# Abelian partitions with t in {1, 2, 3}; t = 0 is exactly the elementary ones.
SMALL_T_CENSUS = {(2,): 1, (2, 1): 2, (3,): 3, (2, 1, 1): 3}


def enumerate_partitions(n: int) -> Iterator[PPartition]:
    """All partitions of ``n`` in reverse lexicographic order, e.g.
    ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield PPartition()
        return
    trusted = PPartition._trusted
    # Zoghbi-Stojmenovic ZS1: x[0:m] is the current partition, x[h] the
    # last part > 1 (h = -1 when all parts are 1).
    x = [1] * n
    x[0] = n
    m, h = 1, 0
    yield trusted((n,))
    while x[0] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h + 1
            else:
                m = h + 2
                if t > 1:
                    h += 1
                    x[h] = t
        yield trusted(tuple(x[:m]))


@dataclass
class Counterexample:
    partition: Optional[tuple[int, ...]]
    clause: str
    expected: object
    actual: object
    derivation: dict = field(default_factory=dict)

    def sort_key(self):
        parts = self.partition or ()
        return (sum(parts), tuple(-x for x in parts), self.clause, json.dumps(self.derivation, sort_keys=True))

    def as_dict(self) -> dict:
        return {
            "partition": None if self.partition is None else list(self.partition),
            "clause": self.clause,
            "expected": self.expected,
            "actual": self.actual,
            "derivation": self.derivation,
        }


@dataclass
class VerificationReport:
    scope: str
    n_range: tuple[int, int]
    checked: int = 0
    skipped: Counter = field(default_factory=Counter)
    counterexamples: list[Counterexample] = field(default_factory=list)
    tallies: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return self.checked + sum(self.skipped.values())

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "VerificationReport") -> None:
        self.checked += other.checked
        self.skipped.update(other.skipped)
        self.tallies.update(other.tallies)
        self.counterexamples.extend(other.counterexamples)

    def finalize(self) -> "VerificationReport":
        self.counterexamples.sort(key=Counterexample.sort_key)
        return self

    def as_dict(self) -> dict:
        return {
            "scope": self.scope,
            "n_range": list(self.n_range),
            "passed": self.passed,
            "total": self.total,
            "checked": self.checked,
            "skipped": {k: self.skipped[k] for k in sorted(self.skipped)},
            "tallies": {k: self.tallies[k] for k in sorted(self.tallies)},
            "counterexamples": [c.as_dict() for c in self.counterexamples],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def summary(self) -> str:
        lo, hi = self.n_range
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"{status} {self.scope}  n in [{lo}, {hi}]",
            f"  scanned {self.total}, checked {self.checked}",
        ]
        for reason in sorted(self.skipped):
            lines.append(f"  skipped {self.skipped[reason]}: {reason}")
        for key in sorted(self.tallies):
            lines.append(f"  {key}: {self.tallies[key]}")
        if self.counterexamples:
            lines.append(f"  {len(self.counterexamples)} counterexample(s):")
            for c in self.counterexamples[:20]:
                lines.append(
                    f"    {c.partition} [{c.clause}] expected {c.expected!r}, got {c.actual!r}"
                )
            if len(self.counterexamples) > 20:
                lines.append("    ...")
        return "\n".join(lines)


def _raw_invariants(g: PPartition) -> dict:
    # Unlike invariants_of this never raises, so violations become records.
    parts = g.parts
    n = sum(parts)
    a = n - len(parts)
    nu = multiplier_log_order(g)
    t = n * (n - 1) // 2 - nu
    m = a * n - a * (a + 1) // 2 - t if a >= 1 else None
    return {"n": n, "rank": len(parts), "a": a, "nu": nu, "t": t, "m": m}


class _Scan:
    def __init__(self, report: VerificationReport, g: PPartition, inv: dict):
        self.report = report
        self.g = g
        self.inv = inv
        self.extra: dict = {}

    def fail(self, clause: str, expected, actual) -> None:
        self.report.counterexamples.append(
            Counterexample(self.g.parts, clause, expected, actual, {**self.inv, **self.extra})
        )


def _check_green(sc: _Scan, opts) -> Optional[str]:
    t = sc.inv["t"]
    if t < 0:
        sc.fail("t >= 0", ">= 0", t)
    if (t == 0) != sc.g.is_elementary():
        sc.fail("t = 0 iff elementary", sc.g.is_elementary(), t == 0)
    return None


def _check_thm11(sc: _Scan, opts) -> Optional[str]:
    t = sc.inv["t"]
    expected = 0 if sc.g.is_elementary() else SMALL_T_CENSUS.get(sc.g.parts)
    if t <= 3:
        sc.report.tallies[f"t={t}"] += 1
    if (t <= 3 or expected is not None) and expected != t:
        sc.fail("t <= 3 census", expected, t)
    return None


def _check_lem21(sc: _Scan, opts) -> Optional[str]:
    inv = sc.inv
    a, n, t, m = inv["a"], inv["n"], inv["t"], inv["m"]
    if a < 1:
        return "a = 0"
    if m < 0:
        sc.fail("m >= 0", ">= 0", m)
    if 2 * a * n != a * (a + 1) + 2 * t + 2 * m:
        sc.fail("2an = a(a+1) + 2t + 2m", 2 * a * n, a * (a + 1) + 2 * t + 2 * m)
    return None


def _check_lem22(sc: _Scan, opts) -> Optional[str]:
    inv = sc.inv
    a, m = inv["a"], inv["m"]
    if a < 1:
        return "a = 0"
    parts = sc.g.parts
    if not (a - m + 1 <= parts[0] <= a + 1):
        sc.fail("a-m+1 <= alpha_1 <= a+1", [a - m + 1, a + 1], parts[0])
    if len(parts) >= 2 and parts[1] > m + 1:
        sc.fail("alpha_2 <= m+1", m + 1, parts[1])
    return None


def _check_thm23(sc: _Scan, opts) -> Optional[str]:
    inv = sc.inv
    a, m, n = inv["a"], inv["m"], inv["n"]
    if a < 1:
        return "a = 0"
    if inv["rank"] < 2:
        return "rank < 2"
    if sc.g.parts[0] != a - m + 1:
        return "exponent above p^(a-m+1)"
    tpl = theorem23_predict(n, a, m)
    if not tpl.matches(sc.g):
        sc.fail("partition equals template", tpl.as_dict()["predicted"], list(sc.g.parts))
    return None


def _thm24_hypotheses(sc: _Scan):
    inv = sc.inv
    parts = sc.g.parts
    if inv["a"] < 1:
        return "a = 0", None
    if len(parts) < 3 or parts[2] == 1:
        return "alpha_3 = 1 or rank < 3", None
    if inv["m"] - (inv["a"] - parts[0] + 1) < 0:
        return "s < 0", None
    params = _params(parts, inv["a"], inv["m"])
    sc.extra = params.as_dict()
    return None, params


def _check_corollary(sc: _Scan, params) -> None:
    g = sc.g
    templates = corollary25_templates(g.n, g.a, params)
    hits = [tpl.template_id for tpl in templates if tpl.matches(g)]
    for tid in hits:
        sc.report.tallies[tid] += 1
    if len(hits) != 1:
        sc.fail(f"exactly one disjunct for r={params.r}", 1, hits)


def _check_thm24(sc: _Scan, opts) -> Optional[str]:
    skip, params = _thm24_hypotheses(sc)
    if skip:
        return skip
    for clause, good in params.checks.items():
        if not good:
            sc.fail(clause, True, False)
    sc.report.tallies[f"r={params.r}"] += 1
    if params.r in COROLLARY_TABLE:
        _check_corollary(sc, params)
    else:
        tpl = theorem24_predict(sc.g.n, sc.g.a, params)
        sc.report.tallies[THM24_GENERAL] += 1
        if not tpl.matches(sc.g):
            sc.fail("general template", tpl.as_dict()["predicted"], list(sc.g.parts))
    return None


def _check_cor25(sc: _Scan, opts) -> Optional[str]:
    skip, params = _thm24_hypotheses(sc)
    if skip:
        return skip
    if params.r not in COROLLARY_TABLE:
        return "r outside tabulated range"
    _check_corollary(sc, params)
    return None


def _check_oracle(sc: _Scan, opts) -> Optional[str]:
    g = sc.g
    primes, cap_bits = opts["primes"], opts["oracle_cap_bits"]
    if g.parts and any(g.parts[0] * p.bit_length() > cap_bits for p in primes):
        return "oracle cap"
    closed = schur_multiplier(g).structure
    for p in primes:
        inst = instantiate(g, p)
        general = schur_multiplier_general(inst).structure.factors
        oracle = exterior_square_oracle(inst.factors).factors
        if general != oracle:
            sc.fail(f"closed form = exterior square at p={p}", list(oracle), list(general))
        if instantiate(closed, p).factors != general:
            sc.fail(f"partition route = integer route at p={p}", list(general), list(closed.parts))
    return None


_CHECKERS: dict[str, Callable] = {
    "green": _check_green,
    "thm1.1": _check_thm11,
    "lem2.1": _check_lem21,
    "lem2.2": _check_lem22,
    "thm2.3": _check_thm23,
    "thm2.4": _check_thm24,
    "cor2.5": _check_cor25,
    "oracle": _check_oracle,
}


def _thm23_converse(report: VerificationReport, n: int) -> None:
    # Every valid template instantiation must itself have minimal exponent.
    for a in range(1, n - 1):
        for m in range(0, a + 1):
            tpl = theorem23_predict(n, a, m)
            if not tpl.applicable:
                continue
            report.tallies["template instantiations"] += 1
            got = _raw_invariants(tpl.predicted)
            if (got["n"], got["a"], got["m"]) != (n, a, m) or tpl.predicted[0] != a - m + 1:
                report.counterexamples.append(
                    Counterexample(
                        tpl.predicted.parts,
                        "template has alpha_1 = a-m+1",
                        {"n": n, "a": a, "m": m},
                        {"n": got["n"], "a": got["a"], "m": got["m"]},
                        got,
                    )
                )


def _scan_n(task: tuple) -> VerificationReport:
    scope, n, opts = task
    check = _CHECKERS[scope]
    report = VerificationReport(scope, (n, n))
    for g in enumerate_partitions(n):
        sc = _Scan(report, g, _raw_invariants(g))
        reason = check(sc, opts)
        if reason is None:
            report.checked += 1
        else:
            report.skipped[reason] += 1
    if scope == "thm2.3":
        _thm23_converse(report, n)
    return report


def random_cyclic_lists(
    count: int = RANDOM_LISTS,
    seed: int = RANDOM_SEED,
    max_entry: int = RANDOM_MAX_ENTRY,
    max_len: int = RANDOM_MAX_LEN,
) -> list[list[int]]:
    rng = random.Random(seed)
    return [
        [rng.randint(1, max_entry) for _ in range(rng.randint(1, max_len))]
        for _ in range(count)
    ]


def _random_oracle(report: VerificationReport, lists: list[list[int]]) -> None:
    for orders in lists:
        closed = schur_multiplier_general(normalize_to_invariant_factors(orders)).structure
        oracle = exterior_square_oracle(orders)
        report.tallies["random lists"] += 1
        if closed.factors != oracle.factors:
            report.counterexamples.append(
                Counterexample(
                    None,
                    "closed form = exterior square (random list)",
                    list(oracle.factors),
                    list(closed.factors),
                    {"cyclic_orders": orders},
                )
            )


def verify_claim(
    scope: str,
    n_max: int = DEFAULT_MAX_N,
    jobs: int = 1,
    *,
    n_min: int = 1,
    primes: tuple[int, ...] = DEFAULT_PRIMES,
    oracle_cap_bits: int = DEFAULT_ORACLE_CAP_BITS,
    random_lists: int = RANDOM_LISTS,
    seed: int = RANDOM_SEED,
) -> VerificationReport:
    """Scan every partition of every ``n`` in ``[n_min, n_max]`` against ``scope``.

    For ``scope="oracle"`` the scan also compares ``random_lists``
    pseudo-random cyclic-order lists drawn from ``seed``.
    """
    if scope not in _CHECKERS:
        raise ValueError(f"unknown scope {scope!r}; expected one of {', '.join(CLAIMS)}")
    if n_max < n_min:
        raise ValueError("n_max must be >= n_min")
    if jobs < 1:
        raise ValueError("jobs must be positive")
    opts = {"primes": tuple(primes), "oracle_cap_bits": oracle_cap_bits}
    # Largest n first so the slow tail starts early.
    tasks = [(scope, n, opts) for n in range(n_max, n_min - 1, -1)]
    report = VerificationReport(scope, (n_min, n_max))
    if jobs == 1:
        parts = map(_scan_n, tasks)
        for part in parts:
            report.merge(part)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_n, tasks):
                report.merge(part)
    if scope == "oracle" and random_lists:
        _random_oracle(report, random_cyclic_lists(random_lists, seed))
    return report.finalize()


def census(n_max: int, n_min: int = 1) -> dict[int, dict[int, int]]:
    """``{n: {t: number of partitions of n with that t}}``."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    table = {}
    for n in range(n_min, n_max + 1):
        row = Counter()
        half = n * (n - 1) // 2
        for g in enumerate_partitions(n):
            row[half - multiplier_log_order(g)] += 1
        table[n] = {t: row[t] for t in sorted(row)}
    return table
