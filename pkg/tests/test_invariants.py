import pytest
from hypothesis import given, strategies as st

from goursat.errors import MalformedDerived, MalformedSgv
from goursat.invariants import (
    DerivedVector,
    PuiseuxCharacteristic,
    SmallGrowthVector,
    derived_to_sgv,
    geometry_summary,
    sgv_to_derived,
)

EXAMPLE = (1, 1, 2, 2, 2, 2, 2, 2, 4, 6, 6, 6, 18, 24, 24)


@pytest.mark.parametrize(
    "sgv, der",
    [
        ((2, 3, 4, 4, 5), (1, 1, 2)),
        ((2, 3, 4), (1, 1)),
        ((2, 3, 4, 5, 5, 5, 6, 6, 6, 7), (1, 1, 1, 3, 3)),
        ((2, 3), (1,)),
    ],
)
def test_sgv_der_examples(sgv, der):
    assert sgv_to_derived(sgv).flat == der
    assert derived_to_sgv(der).dims == sgv


@pytest.mark.parametrize(
    "dims",
    [(3, 4), (2, 4), (2, 3, 3), (2,), (2, 3, 5, 6), (2, 2, 3, 4), (2, 3, 2, 3)],
)
def test_malformed_sgv(dims):
    with pytest.raises(MalformedSgv):
        SmallGrowthVector(dims)


@pytest.mark.parametrize("flat", [(), (0, 1), (2, 1), (1, -1)])
def test_malformed_derived(flat):
    with pytest.raises(MalformedDerived):
        DerivedVector.from_flat(flat)


def test_blocks_text_format():
    der = DerivedVector.parse_blocks("1^2 2^6 4 6^3 18 24^2")
    assert der.flat == EXAMPLE
    assert der.format_blocks() == "1^2 2^6 4 6^3 18 24^2"
    assert DerivedVector.parse_flat(der.format_flat()) == der
    assert der.M(1) == 1 and der.m(1) == 2 and der.M(6) == 24 and der.v == 5
    with pytest.raises(IndexError):
        der.M(0)
    with pytest.raises(MalformedDerived):
        DerivedVector.parse_blocks("1^2 x")


def test_geometry_summary():
    s = geometry_summary(DerivedVector.from_flat((1, 1, 2)))
    assert (s.level, s.dim, s.sgv_length, s.v, s.g) == (3, 5, 5, 1, 1)
    assert s.sgv_length == len(derived_to_sgv((1, 1, 2)))

    s = geometry_summary(DerivedVector.from_flat((1, 1)))
    assert (s.level, s.dim, s.sgv_length, s.v, s.g) == (2, 4, 3, 0, 0)

    s = geometry_summary(DerivedVector.from_flat(EXAMPLE))
    assert sum(EXAMPLE) == 102
    assert (s.level, s.dim, s.sgv_length, s.v, s.g) == (15, 17, 103, 5, 3)
    assert s.sgv_length == len(derived_to_sgv(EXAMPLE))


def test_puiseux_text_round_trip():
    pc = PuiseuxCharacteristic(24, (90, 94, 103))
    assert str(pc) == "[24; 90, 94, 103]"
    assert PuiseuxCharacteristic.parse(str(pc)) == pc
    assert pc.e_chain() == (24, 6, 2, 1)


nondecreasing = st.lists(st.integers(1, 12), min_size=1, max_size=12).map(sorted)


@given(nondecreasing)
def test_der_sgv_round_trip(flat):
    der = DerivedVector.from_flat(flat)
    sgv = derived_to_sgv(der)
    assert sgv_to_derived(sgv) == der
    assert sgv.dims[-1] == len(der.flat) + 2
    assert DerivedVector(der.blocks).flat == tuple(flat)
    assert DerivedVector.parse_blocks(der.format_blocks()) == der
