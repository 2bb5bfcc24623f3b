import json

import pytest

from schurmult import PPartition, census, enumerate_partitions, verify_claim
from schurmult.verifier import Counterexample, VerificationReport, random_cyclic_lists

from oracles import partition_count, partitions_recursive


def test_enumerate_zero():
    assert [g.parts for g in enumerate_partitions(0)] == [()]


def test_enumerate_four():
    assert [g.parts for g in enumerate_partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)
    ]


def test_enumerate_ten_count():
    assert partition_count(10) == 42
    assert sum(1 for _ in enumerate_partitions(10)) == 42


def test_enumerate_rejects_negative():
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


@pytest.mark.parametrize("n", range(0, 19))
def test_enumerate_matches_recursive_listing(n):
    assert [g.parts for g in enumerate_partitions(n)] == list(partitions_recursive(n))


def test_enumerate_counts_to_60():
    for n in range(61):
        assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n), n


def test_enumerate_no_duplicates_and_canonical():
    for n in range(31):
        seen = set()
        for g in enumerate_partitions(n):
            PPartition(g.parts)  # re-validates canonical form
            seen.add(g.parts)
        assert len(seen) == partition_count(n), n


def test_census_small_rows():
    table = census(3)
    assert table[2] == {0: 1, 1: 1}
    assert table[3] == {0: 1, 2: 1, 3: 1}


def test_census_row_sums():
    table = census(12)
    for n, row in table.items():
        assert sum(row.values()) == partition_count(n)


def test_unknown_scope():
    with pytest.raises(ValueError, match="unknown scope"):
        verify_claim("bogus", 5)


@pytest.mark.parametrize("scope", ["thm1.1", "lem2.1", "lem2.2", "thm2.3", "thm2.4", "cor2.5", "green", "oracle"])
def test_small_scans_pass(scope):
    report = verify_claim(scope, 14, random_lists=50)
    assert report.passed, report.summary()
    total = sum(partition_count(n) for n in range(1, 15))
    assert report.total == total


def test_lem21_skips_elementary():
    report = verify_claim("lem2.1", 10)
    assert report.skipped == {"a = 0": 10}


def test_oracle_cap_skips():
    report = verify_claim("oracle", 6, oracle_cap_bits=8, random_lists=0)
    assert report.skipped["oracle cap"] > 0
    assert report.passed


def test_report_json_shape():
    report = verify_claim("thm2.3", 6)
    data = json.loads(report.to_json())
    assert list(data) == [
        "scope", "n_range", "passed", "total", "checked", "skipped", "tallies", "counterexamples"
    ]
    assert data["n_range"] == [1, 6]


def test_counterexample_sorting_is_canonical():
    rep = VerificationReport("green", (1, 3))
    rep.counterexamples = [
        Counterexample((2, 1), "b", 0, 1),
        Counterexample((3,), "a", 0, 1),
        Counterexample((1, 1), "a", 0, 1),
    ]
    rep.finalize()
    assert [c.partition for c in rep.counterexamples] == [(1, 1), (3,), (2, 1)]
    assert not rep.passed


def test_failing_claim_is_reported(monkeypatch):
    import schurmult.verifier as v

    monkeypatch.setitem(v.SMALL_T_CENSUS, (2, 1), 99)
    report = verify_claim("thm1.1", 5)
    assert not report.passed
    cx = report.counterexamples[0]
    assert cx.partition == (2, 1) and cx.expected == 99 and cx.actual == 2
    assert cx.derivation["t"] == 2


def test_parallel_matches_serial():
    a = verify_claim("cor2.5", 18, jobs=1)
    b = verify_claim("cor2.5", 18, jobs=3)
    assert a.to_json() == b.to_json()


def test_random_lists_deterministic():
    assert random_cyclic_lists(5, seed=1) == random_cyclic_lists(5, seed=1)
    lists = random_cyclic_lists(200)
    assert all(1 <= len(x) <= 8 and all(1 <= e <= 2**20 for e in x) for x in lists)
