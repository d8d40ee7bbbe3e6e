from math import gcd

import pytest
from hypothesis import given, strategies as st

from goursat.codes import rvt_to_derived
from goursat.errors import MalformedCriticalString, NoCriticalLetters, NotCritical
from goursat.mz import e_operator, puiseux_from_rvt, split_code

from oracles import e_by_matrices

critical_strings = st.text(alphabet="VT", max_size=14).map(lambda s: "V" + s)


def test_split_examples():
    dec = split_code("RRRVVTRVVRRRRRV")
    assert dec.c == (3, 1, 5)
    assert dec.omegas == ("VVT", "VV", "V")
    assert dec.reassemble() == "RRRVVTRVVRRRRRV"

    dec = split_code("RRV")
    assert (dec.c, dec.omegas) == ((2,), ("V",))


def test_split_errors():
    with pytest.raises(NotCritical):
        split_code("RRVR")
    with pytest.raises(NoCriticalLetters):
        split_code("RRR")


@pytest.mark.parametrize(
    "omega, pair",
    [("V", (2, 3)), ("VT", (3, 4)), ("VTTT", (5, 6)), ("VVT", (4, 7)), ("VVVV", (8, 13))],
)
def test_e_operator(omega, pair):
    assert e_operator(omega) == pair
    assert e_by_matrices(omega) == pair


@pytest.mark.parametrize("k", range(0, 10))
def test_e_operator_vt_power(k):
    assert e_operator("V" + "T" * k) == (k + 2, k + 3)


@pytest.mark.parametrize("bad", ["", "T", "VR", "RV", "VX"])
def test_e_operator_rejects(bad):
    with pytest.raises(MalformedCriticalString):
        e_operator(bad)


@given(critical_strings)
def test_e_pairs_coprime(omega):
    a, b = e_operator(omega)
    assert 0 < a < b
    assert gcd(a, b) == 1
    assert (a, b) == e_by_matrices(omega)


@pytest.mark.parametrize(
    "code, pc",
    [
        ("RRRVVTRVVRRRRRV", (24, 90, 94, 103)),
        ("RRV", (2, 5)),
        ("RRVVVV", (8, 21)),
        ("RRVT", (3, 7)),
        ("RRVRV", (4, 10, 11)),
    ],
)
def test_puiseux_from_rvt(code, pc):
    assert puiseux_from_rvt(code).as_tuple() == pc


def test_example_intermediate_stages():
    # prefixes of the worked example ending at each critical string
    assert puiseux_from_rvt("RRRVVT").as_tuple() == (4, 15)
    assert puiseux_from_rvt("RRRVVTRVV").as_tuple() == (12, 45, 47)


def test_lambda0_is_last_block_value():
    for code in ("RRRVVTRVVRRRRRV", "RRVTVV", "RRRVTRRVTT"):
        assert puiseux_from_rvt(code).lambda0 == rvt_to_derived(code).values[-1]
