from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from goursat.curves import (
    BranchSupport,
    is_well_parametrized,
    puiseux_from_exponents,
    validate_puiseux,
    witness_exponents,
)
from goursat.errors import BadlyParametrized, InvalidPuiseux, MalformedBranch
from goursat.invariants import PuiseuxCharacteristic

from oracles import puiseux_by_definition


@pytest.mark.parametrize(
    "m, exps, pc",
    [
        (4, {6, 7}, (4, 6, 7)),
        (4, {8, 12, 14, 15}, (4, 14, 15)),
        (2, {3}, (2, 3)),
        (24, {90, 94, 103}, (24, 90, 94, 103)),
        (6, {6, 12, 8, 9, 11}, (6, 8, 9)),
    ],
)
def test_puiseux_from_exponents(m, exps, pc):
    assert puiseux_from_exponents(BranchSupport(m, exps)).as_tuple() == pc
    assert puiseux_by_definition(m, exps) == pc


def test_badly_parametrized():
    with pytest.raises(BadlyParametrized):
        puiseux_from_exponents(BranchSupport(2, (4,)))
    with pytest.raises(BadlyParametrized):
        puiseux_from_exponents(BranchSupport(6, (9, 15)))


def test_branch_validation():
    with pytest.raises(MalformedBranch):
        BranchSupport(1, (2,))
    with pytest.raises(MalformedBranch):
        BranchSupport(4, (3, 5))


@pytest.mark.parametrize(
    "m, exps, ok", [(4, (6, 7), True), (2, (4,), False), (6, (9, 15), False), (2, (), False)]
)
def test_well_parametrized(m, exps, ok):
    assert is_well_parametrized(BranchSupport(m, exps)) is ok


@pytest.mark.parametrize(
    "pc, ok, chain",
    [
        ((24, 90, 94, 103), True, (24, 6, 2, 1)),
        ((2, 4), False, (2, 2)),
        ((4, 6, 7), True, (4, 2, 1)),
        ((4, 7, 6), False, (4, 1, 1)),
        ((1,), False, (1,)),
        ((6, 9), False, (6, 3)),
    ],
)
def test_validate_puiseux(pc, ok, chain):
    res = validate_puiseux(PuiseuxCharacteristic(pc[0], pc[1:]))
    assert bool(res) is ok
    assert res.chain == chain
    assert bool(res.problems) is not ok


def test_witness():
    for pc in ((4, 6, 7), (24, 90, 94, 103)):
        p = PuiseuxCharacteristic(pc[0], pc[1:])
        w = witness_exponents(p)
        assert (w.m, w.exps) == (pc[0], pc[1:])
        assert puiseux_from_exponents(w) == p
    with pytest.raises(InvalidPuiseux):
        witness_exponents(PuiseuxCharacteristic(2, (4,)))


branches = st.integers(2, 30).flatmap(
    lambda m: st.lists(st.integers(m, m + 80), max_size=8).map(lambda e: BranchSupport(m, e))
)


@given(branches)
def test_matches_definition(branch):
    expected = puiseux_by_definition(branch.m, set(branch.exps))
    assert is_well_parametrized(branch) is (expected is not None)
    if expected is None:
        with pytest.raises(BadlyParametrized):
            puiseux_from_exponents(branch)
        return
    pc = puiseux_from_exponents(branch)
    assert pc.as_tuple() == expected
    assert validate_puiseux(pc)


@given(branches, st.lists(st.tuples(st.integers(0, 10), st.integers(1, 20)), max_size=6))
def test_inserting_divisible_exponents_is_invisible(branch, inserts):
    """Exponents between lambda_i and lambda_{i+1} that e_i divides never change the result."""
    assume(is_well_parametrized(branch))
    pc = puiseux_from_exponents(branch)
    lams = pc.as_tuple()
    chain = pc.e_chain()
    extra = set()
    for slot, mult in inserts:
        i = slot % len(lams)
        k = chain[i] * mult
        hi = lams[i + 1] if i + 1 < len(lams) else None
        if k >= branch.m and k > (lams[i] if i else branch.m - 1) and (hi is None or k < hi):
            extra.add(k)
    assert puiseux_from_exponents(BranchSupport(branch.m, set(branch.exps) | extra)) == pc


@given(st.integers(2, 40), st.integers(2, 200))
def test_gcd_chain_two_terms(m, k):
    assume(k > m)
    pc = PuiseuxCharacteristic(m, (k,))
    assert bool(validate_puiseux(pc)) is (gcd(m, k) == 1)
