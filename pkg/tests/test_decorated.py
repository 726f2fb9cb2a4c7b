import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bipath.decorated import (
    NEG_INF_MINUS,
    NEG_INF_PLUS,
    POS_INF_MINUS,
    POS_INF_PLUS,
    DecValue,
    dec_add,
    dec_cmp,
    dec_shift,
    format_real,
    parse_real,
)

reals = st.sampled_from([-2.0, -0.5, 0.0, 0.5, 1.0, 3.0])
ext = st.sampled_from([-math.inf, -2.0, 0.0, 0.5, 1.0, 3.0, math.inf])
decs = st.sampled_from(["-", "+"])
finite_dec = st.builds(DecValue, reals, decs)
any_dec = st.builds(DecValue, ext, decs)


def test_order_examples():
    assert dec_cmp(DecValue(3, "-"), DecValue(3, "+")) == -1
    assert dec_cmp(DecValue(3, "-"), DecValue(3, "-")) == 0
    assert dec_cmp(NEG_INF_PLUS, DecValue(5, "-")) == -1


@given(any_dec, any_dec, any_dec)
def test_total_order(a, b, c):
    assert dec_cmp(a, b) == -dec_cmp(b, a)
    assert (dec_cmp(a, b) == 0) == (a == b)
    if a <= b and b <= c:
        assert a <= c
    assert NEG_INF_MINUS <= a <= POS_INF_PLUS


def test_add_examples():
    assert dec_add(DecValue(1, "+"), DecValue(2, "+")) == DecValue(3, "+")
    assert dec_add(DecValue(1, "-"), DecValue(2, "+")) == DecValue(3, "-")
    assert dec_add(DecValue(0, "-"), DecValue(0, "-")) == DecValue(0, "-")
    assert dec_add(DecValue(-math.inf, "+"), DecValue(4, "-")).value == -math.inf
    with pytest.raises(ValueError):
        dec_add(NEG_INF_PLUS, POS_INF_MINUS)


@given(finite_dec, finite_dec, finite_dec)
def test_add_monotone(a, b, c):
    if a <= b:
        assert dec_add(a, c) <= dec_add(b, c)
    assert dec_add(a, b) == dec_add(b, a)


@given(finite_dec, finite_dec, finite_dec, finite_dec)
def test_add_monotone_both_sides(a, b, c, d):
    if a <= b and c <= d:
        assert dec_add(a, c) <= dec_add(b, d)


@given(finite_dec, finite_dec, finite_dec)
def test_add_associative(a, b, c):
    assert dec_add(dec_add(a, b), c) == dec_add(a, dec_add(b, c))


def test_shift_examples():
    assert dec_shift(DecValue(2, "-"), 0.5) == DecValue(2.5, "-")
    assert dec_shift(NEG_INF_PLUS, 7) == NEG_INF_PLUS
    assert dec_shift(DecValue(2, "+"), 0) == DecValue(2, "+")
    assert dec_shift(POS_INF_MINUS, -3) == POS_INF_MINUS


@given(any_dec, any_dec, reals)
def test_shift_is_order_preserving(a, b, e):
    if a <= b:
        assert dec_shift(a, e) <= dec_shift(b, e)


def test_reject_nan_and_bad_sign():
    with pytest.raises(ValueError):
        DecValue(math.nan)
    with pytest.raises(ValueError):
        DecValue(1.0, "*")


def test_text_round_trip():
    assert parse_real(format_real(math.inf)) == math.inf
    assert parse_real(format_real(-math.inf)) == -math.inf
    for x in (-1.25, 0.0, 0.1, 1e-17):
        assert float(format_real(x)) == x
        assert parse_real(x) == x
    assert parse_real("inf") == math.inf
    for bad in ("abc", True, float("nan")):
        with pytest.raises(ValueError):
            parse_real(bad)
