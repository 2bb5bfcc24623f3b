import pytest

from schurmult import (
    DegenerateCaseError,
    LemmaPreconditionError,
    OutOfTabulatedRange,
    PPartition,
    classify,
    corollary25_match,
    corollary25_templates,
    enumerate_partitions,
    exponent_bounds,
    invariants_of,
    theorem23_predict,
    theorem24_params,
    theorem24_predict,
)
from schurmult.classifier import COROLLARY_TABLE, ClassificationParams

from oracles import partitions_recursive


@pytest.mark.parametrize(
    "parts, bounds", [((2, 1), (2, 2)), ((3, 2, 1, 1), (3, 4))]
)
def test_exponent_bounds(parts, bounds):
    lo, hi = exponent_bounds(PPartition(parts))
    assert (lo, hi) == bounds
    assert lo <= parts[0] <= hi


def test_exponent_bounds_requires_a():
    with pytest.raises(LemmaPreconditionError):
        exponent_bounds(PPartition((1, 1)))


@pytest.mark.parametrize(
    "n, a, m, expected",
    [(3, 1, 0, (2, 1)), (7, 3, 1, (3, 2, 1, 1)), (4, 2, 1, (2, 2))],
)
def test_theorem23_predict(n, a, m, expected):
    tpl = theorem23_predict(n, a, m)
    assert tpl.template_id == "Thm2.3"
    assert tpl.predicted.parts == expected
    inv = invariants_of(tpl.predicted)
    assert (inv.n, inv.a, inv.m) == (n, a, m)
    assert inv.exp_log == a - m + 1


@pytest.mark.parametrize("n, a, m", [(4, 2, 2), (3, 2, 0), (5, 0, 0)])
def test_theorem23_inapplicable(n, a, m):
    tpl = theorem23_predict(n, a, m)
    assert not tpl.applicable and tpl.reason


def test_theorem24_params_322():
    p = theorem24_params(PPartition((3, 2, 2)))
    assert (p.kappa, p.s, p.r, p.f, p.h, p.x, p.x_formula) == (2, 1, 2, 0, (), 2, 2)
    assert p.ok


def test_theorem24_params_43221():
    p = theorem24_params(PPartition((4, 3, 2, 2, 1)))
    assert (p.kappa, p.s, p.r, p.f, p.h, p.x) == (4, 3, 1, 1, (2,), 3)
    assert p.x_formula == 4 - 3 + 2 - 3 + 3 * 1
    assert sum(p.h) == -p.r + p.f + 2
    assert p.ok


@pytest.mark.parametrize("parts", [(2, 2, 1), (3, 1), (4,)])
def test_theorem24_degenerate(parts):
    with pytest.raises(DegenerateCaseError):
        theorem24_params(PPartition(parts))


def test_corollary_i():
    g = PPartition((3, 2, 2))
    tpl = corollary25_match(g, theorem24_params(g))
    assert tpl.template_id == "Cor2.5-i" and tpl.matches(g)


def test_corollary_ii():
    g = PPartition((4, 3, 2, 2, 1))
    tpl = corollary25_match(g, theorem24_params(g))
    assert tpl.template_id == "Cor2.5-ii" and tpl.predicted.parts == g.parts


@pytest.mark.parametrize(
    "parts, tid",
    [
        ((4, 4, 4, 4), "Cor2.5-iv-a"),
        ((3, 3, 3, 3, 2), "Cor2.5-iv-b"),
        ((2, 2, 2, 2, 2, 2), "Cor2.5-iv-c"),
    ],
)
def test_corollary_iv(parts, tid):
    g = PPartition(parts)
    params = theorem24_params(g)
    assert params.r == -1
    assert corollary25_match(g, params).template_id == tid


def test_corollary_iv_a_offsets():
    # (4,4,4,4): kappa = 9, s = 9, alpha_2 = 4 = kappa - s + 4
    p = theorem24_params(PPartition((4, 4, 4, 4)))
    assert (p.kappa, p.s, p.x) == (9, 9, 4)


def test_corollary_out_of_range():
    params = ClassificationParams(kappa=5, s=7, r=-2, f=0, h=(), x=2, x_formula=2)
    with pytest.raises(OutOfTabulatedRange):
        corollary25_templates(20, 10, params)


def _generated_table():
    # Rebuild the corollary rows from the x-formula: h_j - 1 runs over the
    # partitions of 2 - r, x - (kappa - s) = 2r - 3 + sum (j+2)(h_j - 1),
    # alpha_3 - s = r - (x - (kappa - s)).
    table = {}
    for r in (2, 1, 0, -1):
        rows = set()
        for q in partitions_recursive(2 - r):
            h = tuple(x + 1 for x in q)
            x_off = 2 * r - 3 + sum((j + 2) * (hj - 1) for j, hj in enumerate(h, 1))
            rows.add((x_off, r - x_off, h))
        table[r] = rows
    return table


def test_corollary_table_matches_x_formula():
    generated = _generated_table()
    for r, rows in COROLLARY_TABLE.items():
        assert {row[1:] for row in rows} == generated[r]


def test_general_template_reproduces_low_r():
    g = PPartition((3, 3, 3, 3, 3))
    params = theorem24_params(g)
    assert params.r <= -2
    assert theorem24_predict(g.n, g.a, params).matches(g)


@pytest.mark.parametrize(
    "parts, branch",
    [
        ((2, 1), "Thm2.3"),
        ((3, 2, 2), "Cor2.5-i"),
        ((4, 3, 2, 2, 1), "Cor2.5-ii"),
        ((3, 3, 3, 3, 3), "Thm2.4-general"),
    ],
)
def test_classify(parts, branch):
    c = classify(PPartition(parts))
    assert c.branch == branch and c.match


def test_classify_cyclic_is_inapplicable():
    c = classify(PPartition((4,)))
    assert c.branch == "Thm2.3" and not c.template.applicable and not c.match


def test_classify_requires_a():
    with pytest.raises(LemmaPreconditionError):
        classify(PPartition((1, 1, 1)))


def test_routing_is_a_partition_of_cases():
    # degenerate error arises exactly when the minimal-exponent hypothesis holds
    for n in range(2, 16):
        for g in enumerate_partitions(n):
            inv = invariants_of(g)
            if inv.a == 0 or g.rank < 2:
                continue
            minimal = g[0] == inv.a - inv.m + 1
            try:
                theorem24_params(g)
                succeeded = True
            except DegenerateCaseError:
                succeeded = False
            assert succeeded != minimal, g
