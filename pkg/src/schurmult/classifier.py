"""Structure templates for abelian p-groups with a given multiplier deficiency.

Notation (for a partition ``alpha`` of ``n`` with Frattini log-order ``a``
and multiplier deficiency ``t``; ``m`` is the slack in
``2an = a(a+1) + 2t + 2m``):

``kappa``
    ``a - alpha_1 + 1``, so that ``exp(G) = p^{a - kappa + 1}``.
``s``
    ``m - kappa``.
``r``
    ``alpha_2 + alpha_3 - kappa``, i.e. ``exp M(G) * exp M(M(G)) = p^{kappa + r}``.
``h``
    the parts ``alpha_4, alpha_5, ...`` that are at least 2; ``f = len(h)``.
``x``
    ``alpha_2``, which the identity
    ``x = kappa - s + 2r - 3 + sum_j (j+2)(h_j - 1)`` recovers from the others.

When the exponent is as small as allowed, ``alpha_1 = a - m + 1``, the
group is forced to be ``(a-m+1, m+1, 1, ..., 1)``.  Otherwise the shape
``(a-kappa+1, x, kappa+r-x, h_1, ..., h_f, 1, ..., 1)`` holds, with the
cases ``r = 2, 1, 0, -1`` tabulated explicitly in :data:`COROLLARY_TABLE`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .abelian import PPartition, invariants_of
from .errors import (
    DegenerateCaseError,
    HypothesisViolation,
    LemmaPreconditionError,
    OutOfTabulatedRange,
)

__all__ = [
    "ClassificationParams",
    "StructureTemplate",
    "COROLLARY_TABLE",
    "TEMPLATE_IDS",
    "exponent_bounds",
    "theorem23_predict",
    "theorem24_params",
    "theorem24_predict",
    "corollary25_templates",
    "corollary25_match",
    "classify",
    "Classification",
]

THM23 = "Thm2.3"
THM24_GENERAL = "Thm2.4-general"

# r -> [(template id, offset of alpha_2 from kappa - s, offset of alpha_3 from s, h)]
COROLLARY_TABLE: dict[int, list[tuple[str, int, int, tuple[int, ...]]]] = {
    2: [("Cor2.5-i", 1, 1, ())],
    1: [("Cor2.5-ii", 2, -1, (2,))],
    0: [
        ("Cor2.5-iii-a", 4, -4, (2, 2)),
        ("Cor2.5-iii-b", 3, -3, (3,)),
    ],
    -1: [
        ("Cor2.5-iv-a", 4, -5, (4,)),
        ("Cor2.5-iv-b", 5, -6, (3, 2)),
        ("Cor2.5-iv-c", 7, -8, (2, 2, 2)),
    ],
}

TEMPLATE_IDS = (
    THM23,
    *(tid for r in (2, 1, 0, -1) for tid, *_ in COROLLARY_TABLE[r]),
    THM24_GENERAL,
)


@dataclass(frozen=True)
class ClassificationParams:
    kappa: int
    s: int
    r: int
    f: int
    h: tuple[int, ...]
    x: int
    x_formula: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "s": self.s,
            "r": self.r,
            "f": self.f,
            "h": list(self.h),
            "x": self.x,
            "x_formula": self.x_formula,
            "checks": dict(self.checks),
        }


@dataclass(frozen=True)
class StructureTemplate:
    """A predicted partition, or ``predicted=None`` when the template's
    parameters do not describe a valid partition."""

    template_id: str
    predicted: Optional[PPartition]
    reason: str = ""

    @property
    def applicable(self) -> bool:
        return self.predicted is not None

    def matches(self, g: PPartition) -> bool:
        return self.predicted is not None and self.predicted.parts == g.parts

    def as_dict(self) -> dict:
        return {
            "template_id": self.template_id,
            "applicable": self.applicable,
            "predicted": None if self.predicted is None else list(self.predicted.parts),
            "reason": self.reason,
        }


def _build(template_id: str, head: tuple[int, ...], ones: int) -> StructureTemplate:
    if ones < 0:
        return StructureTemplate(template_id, None, f"negative count of Z_p summands ({ones})")
    for i, x in enumerate(head):
        if x < 1:
            return StructureTemplate(template_id, None, f"part {i + 1} is {x} < 1")
        if i and x > head[i - 1]:
            return StructureTemplate(template_id, None, f"part {i + 1} exceeds part {i}")
    return StructureTemplate(template_id, PPartition._trusted(head + (1,) * ones))


def _require_m(g: PPartition):
    inv = invariants_of(g)
    if inv.m is None:
        raise LemmaPreconditionError(
            f"Frattini subgroup of {list(g.parts)} is trivial (a = 0); m is undefined"
        )
    return inv


def exponent_bounds(g: PPartition) -> tuple[int, int]:
    """``(a - m + 1, a + 1)``: bounds on ``log_p exp(G)``."""
    inv = _require_m(g)
    return inv.a - inv.m + 1, inv.a + 1


def theorem23_predict(n: int, a: int, m: int) -> StructureTemplate:
    """The unique partition with ``alpha_1 = a - m + 1`` for given ``(n, a, m)``."""
    if a < 1 or m < 0:
        return StructureTemplate(THM23, None, "requires a >= 1 and m >= 0")
    if n - a < 2:
        return StructureTemplate(THM23, None, "requires rank n - a >= 2")
    return _build(THM23, (a - m + 1, m + 1), n - a - 2)


def theorem24_params(g: PPartition) -> ClassificationParams:
    inv = _require_m(g)
    parts = g.parts
    if len(parts) < 3 or parts[2] == 1:
        raise DegenerateCaseError(
            "degenerate: alpha_3 = 1 (or rank < 3), the minimal-exponent template applies"
        )
    return _params(parts, inv.a, inv.m)


def _params(parts: tuple[int, ...], a: int, m: int) -> ClassificationParams:
    kappa = a - parts[0] + 1
    s = m - kappa
    if s < 0:
        raise HypothesisViolation(f"hypothesis violated: s = m - kappa = {s} < 0")
    r = parts[1] + parts[2] - kappa
    h = tuple(x for x in parts[3:] if x >= 2)
    f = len(h)
    x = parts[1]
    x_formula = kappa - s + 2 * r - 3 + sum((j + 2) * (hj - 1) for j, hj in enumerate(h, 1))
    checks = {
        "x_formula": x == x_formula,
        "h_sum": sum(h) == -r + f + 2,
        "f_bound": 0 <= f <= -r + 2,
        "h_ge_2": all(hj >= 2 for hj in h),
    }
    return ClassificationParams(kappa, s, r, f, h, x, x_formula, checks)


def theorem24_predict(n: int, a: int, params: ClassificationParams) -> StructureTemplate:
    """General shape built from ``params`` with ``alpha_2`` taken from the x-formula."""
    p = params
    head = (a - p.kappa + 1, p.x_formula, p.kappa + p.r - p.x_formula, *p.h)
    return _build(THM24_GENERAL, head, n - a - (p.f + 3))


def corollary25_templates(n: int, a: int, params: ClassificationParams) -> list[StructureTemplate]:
    """Every tabulated disjunct for ``params.r``, applicable or not."""
    rows = COROLLARY_TABLE.get(params.r)
    if rows is None:
        raise OutOfTabulatedRange(
            f"out of tabulated range: r = {params.r} (tabulated for r in 2, 1, 0, -1)"
        )
    k, s = params.kappa, params.s
    out = []
    for tid, x_off, third_off, h in rows:
        head = (a - k + 1, k - s + x_off, s + third_off, *h)
        out.append(_build(tid, head, n - a - 3 - len(h)))
    return out


def corollary25_match(g: PPartition, params: ClassificationParams) -> StructureTemplate:
    """The tabulated disjunct reproducing ``g``.

    If none does, the first disjunct is returned; check ``.matches(g)``.
    """
    templates = corollary25_templates(g.n, g.a, params)
    for tpl in templates:
        if tpl.matches(g):
            return tpl
    return templates[0]


@dataclass(frozen=True)
class Classification:
    partition: PPartition
    branch: str
    template: StructureTemplate
    params: Optional[ClassificationParams] = None

    @property
    def match(self) -> bool:
        return self.template.matches(self.partition)


def classify(g: PPartition) -> Classification:
    """Route ``g`` to the applicable branch and compare prediction with ``g``."""
    inv = _require_m(g)
    parts = g.parts
    if len(parts) < 3 or parts[2] == 1:
        return Classification(g, THM23, theorem23_predict(inv.n, inv.a, inv.m))
    params = theorem24_params(g)
    if params.r in COROLLARY_TABLE:
        tpl = corollary25_match(g, params)
        return Classification(g, tpl.template_id, tpl, params)
    return Classification(g, THM24_GENERAL, theorem24_predict(inv.n, inv.a, params), params)
