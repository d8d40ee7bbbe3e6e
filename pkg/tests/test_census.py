import pytest

from goursat import census
from goursat.census import (
    catalog_record,
    cross_validate,
    enumerate_codes,
    enumerate_words,
    fibonacci,
    fibonacci_extremes,
    transfer_matrix_counts,
)
from goursat.invariants import PuiseuxCharacteristic

from oracles import brute_force_codes, fib


@pytest.mark.parametrize("level", range(2, 10))
def test_enumeration_matches_brute_force(level):
    listed = [c.letters for c in enumerate_codes(level) if len(c) == level]
    assert listed == brute_force_codes(level)
    valid, critical = transfer_matrix_counts(level)
    assert valid == len(listed)
    assert critical == sum(1 for w in listed if w[-1] != "R")


def test_enumeration_examples():
    crit = lambda L: [c.letters for c in enumerate_codes(L, only_critical=True) if len(c) == L]
    assert crit(3) == ["RRV"]
    assert crit(4) == ["RRRV", "RRVV", "RRVT"]
    assert len(crit(5)) == 8


def test_enumeration_is_shortlex_and_unique():
    words = list(enumerate_words(8))
    assert len(words) == len(set(words))
    key = lambda w: (len(w), w.translate(str.maketrans("RVT", "abc")))
    assert words == sorted(words, key=key)
    with pytest.raises(ValueError):
        list(enumerate_codes(1))


def test_fibonacci_helper():
    assert [fibonacci(k) for k in range(1, 12)] == [fib(k) for k in range(1, 12)]


def test_fibonacci_extremes():
    recs = {r.level: r for r in fibonacci_extremes(8)}
    assert (recs[2].max_sgv_length, recs[2].code) == (3, "RR")
    assert (recs[4].max_sgv_length, recs[4].code) == (8, "RRVV")
    assert (recs[6].max_sgv_length, recs[6].code) == (21, "RRVVVV")
    for r in recs.values():
        assert r.fibonacci == fib(r.level + 2)
        assert r.within_bound and r.attains_bound


def test_cross_validate_small():
    rep = cross_validate(6)
    assert rep.ok, rep.summary()
    assert rep.levels[6].critical == 21
    assert rep.checks["theorem_vs_mz"] == sum(transfer_matrix_counts(k)[1] for k in range(3, 7))
    rec = catalog_record("RRVVVV")
    assert rec["der"] == [1, 1, 2, 3, 5, 8] and rec["puiseux"] == [8, 21]


def test_cross_validate_precondition():
    with pytest.raises(ValueError):
        cross_validate(2)


def test_partitioned_run_agrees():
    serial = cross_validate(9)
    parts = [census._run_partition(p) for p in census._partitions(9)]
    folded = parts[0]
    for p in parts[1:]:
        folded = folded.merge(p)
    assert folded.levels == serial.levels
    assert folded.checks == serial.checks
    assert folded.failures == serial.failures == []
    # fold order does not matter
    rev = parts[-1]
    for p in reversed(parts[:-1]):
        rev = p.merge(rev)
    assert rev.levels == folded.levels and rev.checks == folded.checks


def test_parallel_matches_serial():
    assert cross_validate(8, jobs=2).levels == cross_validate(8).levels


def test_disagreement_is_reported_not_raised(monkeypatch):
    real = census.puiseux_from_rvt

    def broken(code):
        pc = real(code)
        if str(code) == "RRVT":
            return PuiseuxCharacteristic(pc.lambda0, (pc.exponents[0] + 1,))
        return pc

    monkeypatch.setattr(census, "puiseux_from_rvt", broken)
    rep = cross_validate(5)
    assert not rep.ok
    assert [(f.code, f.check) for f in rep.failures] == [("RRVT", "theorem = mz")]


def test_example_catalog_record():
    rec = catalog_record("RRRVVTRVVRRRRRV")
    assert rec["der"] == [1, 1, 2, 2, 2, 2, 2, 2, 4, 6, 6, 6, 18, 24, 24]
    assert rec["puiseux"] == [24, 90, 94, 103]
    assert (rec["level"], rec["dim"], rec["g"], rec["sgv_length"]) == (15, 17, 3, 103)
    assert len(rec["sgv"]) == rec["sgv_length"]
