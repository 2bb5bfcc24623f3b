"""Command-line front end.

Exit codes: 0 success (or verified), 1 counterexample found, 2 bad usage
or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from sympy import isprime

from .abelian import (
    InvariantFactorGroup,
    PPartition,
    invariants_of,
    normalize_to_invariant_factors,
    p_group_partition,
    validate_partition,
)
from .classifier import classify
from .errors import LemmaPreconditionError, SchurMultError
from .multiplier import iterated_multiplier, schur_multiplier_general
from .verifier import CLAIMS, DEFAULT_MAX_N, census, enumerate_partitions, verify_claim

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(SchurMultError):
    pass


@dataclass(frozen=True)
class GroupDescriptor:
    partition: Optional[PPartition] = None
    invariant_factors: Optional[InvariantFactorGroup] = None
    prime: Optional[int] = None

    def p_partition(self) -> tuple[Optional[int], PPartition]:
        """``(prime, partition)``; raises unless the group is a p-group."""
        if self.partition is not None:
            return self.prime, self.partition
        p, g = p_group_partition(self.invariant_factors)
        if self.prime is not None and p is not None and p != self.prime:
            raise UsageError(f"--prime {self.prime} disagrees with factors (powers of {p})")
        return p if p is not None else self.prime, g


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def descriptor_from_args(args) -> GroupDescriptor:
    prime = args.prime
    if prime is not None and not isprime(prime):
        raise UsageError(f"--prime {prime} is not prime")
    if args.partition is not None:
        return GroupDescriptor(partition=validate_partition(_int_list(args.partition)), prime=prime)
    if args.invariant_factors is not None:
        return GroupDescriptor(
            invariant_factors=InvariantFactorGroup(tuple(_int_list(args.invariant_factors))),
            prime=prime,
        )
    if args.cyclic_orders is not None:
        return GroupDescriptor(
            invariant_factors=normalize_to_invariant_factors(_int_list(args.cyclic_orders)),
            prime=prime,
        )
    raise UsageError("one of --partition, --invariant-factors, --cyclic-orders is required")


def _emit(args, record: dict, text_lines: Sequence[str]) -> None:
    if args.format == "json":
        print(json.dumps(record, ensure_ascii=False))
    else:
        print("\n".join(text_lines))


def cmd_multiplier(args) -> int:
    desc = descriptor_from_args(args)
    depth = args.iterate
    if depth < 0:
        raise UsageError("--iterate must be nonnegative")
    if desc.partition is not None:
        g = desc.partition
        result = g if depth == 0 else iterated_multiplier(g, depth)
        nu = result.n
        record = {
            "input": {"partition": list(g.parts)},
            "iterate": depth,
            "structure": list(result.parts),
            "nu": nu,
            "notation": result.notation(desc.prime),
        }
        lines = [
            f"group:     {g.notation(desc.prime)}  {list(g.parts)}",
            f"M^{depth}(G):    {result.notation(desc.prime)}",
            f"structure: {list(result.parts)}",
            f"log order: {nu}",
        ]
    else:
        g = desc.invariant_factors
        result = g
        for _ in range(depth):
            result = schur_multiplier_general(result).structure
        record = {
            "input": {"invariant_factors": list(g.factors)},
            "iterate": depth,
            "structure": list(result.factors),
            "order": result.order,
            "notation": result.notation(),
        }
        lines = [
            f"group:     {g.notation()}  {list(g.factors)}",
            f"M^{depth}(G):    {result.notation()}",
            f"structure: {list(result.factors)}",
            f"order:     {result.order}",
        ]
    _emit(args, record, lines)
    return EXIT_OK


def cmd_invariants(args) -> int:
    desc = descriptor_from_args(args)
    prime, g = desc.p_partition()
    inv = invariants_of(g)
    record = {"partition": list(g.parts), "prime": prime, **inv.as_dict()}
    lines = [f"partition: {list(g.parts)}"]
    lines += [f"{k}: {'undefined (a = 0)' if v is None else v}" for k, v in inv.as_dict().items()]
    _emit(args, record, lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    desc = descriptor_from_args(args)
    _, g = desc.p_partition()
    try:
        c = classify(g)
    except LemmaPreconditionError as exc:
        raise UsageError(f"lemma precondition: {exc}") from None
    inv = invariants_of(g)
    tpl = c.template
    record = {
        "partition": list(g.parts),
        "invariants": inv.as_dict(),
        "branch": c.branch,
        "template": tpl.as_dict(),
        "match": c.match,
        "params": None if c.params is None else c.params.as_dict(),
    }
    lines = [
        f"partition: {list(g.parts)}  (n={inv.n}, a={inv.a}, t={inv.t}, m={inv.m})",
        f"branch:    {c.branch}",
    ]
    if c.params is not None:
        p = c.params
        lines.append(
            f"params:    k (kappa)={p.kappa} s={p.s} r={p.r} f={p.f} h={list(p.h)} "
            f"x={p.x} x_formula={p.x_formula}"
        )
    predicted = "inapplicable: " + tpl.reason if tpl.predicted is None else list(tpl.predicted.parts)
    lines += [f"predicted: {predicted}", f"match={'true' if c.match else 'false'}"]
    _emit(args, record, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_claim(args.scope, args.max_n, jobs=args.jobs)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.summary())
    if args.counterexamples_out:
        with open(args.counterexamples_out, "w", encoding="utf-8") as fh:
            for c in report.counterexamples:
                fh.write(json.dumps(c.as_dict()) + "\n")
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def cmd_enumerate(args) -> int:
    records = []
    for n in range(1, args.max_n + 1):
        for g in enumerate_partitions(n):
            records.append({"n": n, "partition": list(g.parts), "t": invariants_of(g).t})
    if args.format == "json":
        print(json.dumps(records))
    else:
        for r in records:
            print(f"n={r['n']:<3} t={r['t']:<5} {r['partition']}")
    return EXIT_OK


def cmd_census(args) -> int:
    table = census(args.max_n)
    if args.format == "json":
        print(json.dumps({str(n): {str(t): c for t, c in row.items()} for n, row in table.items()}))
    else:
        for n, row in table.items():
            cells = "  ".join(f"t={t}:{c}" for t, c in row.items())
            print(f"n={n:<3} {cells}")
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurmult",
        description="Schur multipliers of finite abelian groups and exhaustive checks on abelian p-groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    group = argparse.ArgumentParser(add_help=False)
    rep = group.add_mutually_exclusive_group(required=True)
    rep.add_argument("--partition", help="exponents of a p-group, comma-separated, any order")
    rep.add_argument("--invariant-factors", help="n1,n2,... with n_{i+1} | n_i")
    rep.add_argument("--cyclic-orders", help="orders of arbitrary cyclic summands")
    group.add_argument("--prime", type=int, help="prime used for display")

    p = sub.add_parser("multiplier", parents=[common, group], help="Schur multiplier")
    p.add_argument("--iterate", type=int, default=1, help="apply the multiplier this many times")
    p.set_defaults(func=cmd_multiplier)

    p = sub.add_parser("invariants", parents=[common, group], help="n, rank, a, nu, t, m")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", parents=[common, group], help="structure template matching")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="exhaustive claim verification")
    p.add_argument("--scope", required=True, choices=CLAIMS)
    p.add_argument("--max-n", type=_positive, default=DEFAULT_MAX_N)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--counterexamples-out", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list partitions with their t")
    p.add_argument("--max-n", type=_positive, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("census", parents=[common], help="t-distribution per n")
    p.add_argument("--max-n", type=_positive, default=10)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (SchurMultError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # exit codes are restricted to 0/1/2
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_USAGE
