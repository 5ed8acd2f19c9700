from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from tibcal.exact import (MixedRadixValue, amod, floor_frac, frac,
                          from_mixed_radix, mixed, mod, to_mixed_radix)


def test_mixed_radix_published_constants():
    # the fundamental mean-motion and epoch constants in column notation
    assert mixed(0, [50, 44, 2, 38], [60, 60, 6, 707]) == F(4783, 5656)
    assert mixed(0, [24, 57, 5, 2, 16], [27, 60, 60, 6, 67]) == F(743, 804)
    assert mixed(29, [31, 50, 0, 480], [60, 60, 6, 707]) == F(167025, 5656)
    assert mixed(0, [2, 10, 58, 1, 17], [27, 60, 60, 6, 67]) == F(65, 804)
    assert mixed(0, [0], [60]) == 0
    # same values written with other radix sequences
    assert mixed(29, [31, 50, 0, 8, 584], [60, 60, 6, 13, 707]) == F(167025, 5656)
    assert mixed(0, [2, 10, 58, 1, 3, 20], [27, 60, 60, 6, 13, 67]) == F(65, 804)
    assert mixed(29, [31, 50], [60, 60]) == F(10631, 360)
    assert mixed(0, [2, 10, 58, 2, 10], [27, 60, 60, 6, 13]) == F(1277, 15795)


def test_to_mixed_radix():
    v = to_mixed_radix(F(167025, 5656), [60, 60, 6, 707])
    assert (v.integer_part, v.digits) == (29, (31, 50, 0, 480))
    assert to_mixed_radix(F(1, 2), [60, 60]).digits == (30, 0)
    v = to_mixed_radix(F(65, 804), [27, 60, 60, 6, 67])
    assert (v.integer_part, v.digits) == (0, (2, 10, 58, 1, 17))


def test_to_mixed_radix_truncates():
    # 1/7 in <60,60> is not exact; digits come from multiply-and-floor
    v = to_mixed_radix(F(1, 7), [60, 60])
    assert v.digits == (8, 34)  # 1/7 = 0.14285..., 8;34.28... truncated
    assert from_mixed_radix(v) <= F(1, 7)


def test_mixed_radix_normalization_carries():
    v = MixedRadixValue(0, [75, 30], [60, 60])
    assert v.integer_part == 1 and v.digits == (15, 30)
    with pytest.raises(ValueError):
        MixedRadixValue(0, [-1, 0], [60, 60])
    with pytest.raises(ValueError):
        MixedRadixValue(0, [1, 2], [60, 0])


def test_amod():
    assert amod(12, 12) == 12
    assert amod(-1, 7) == 6
    assert amod(2007 - 3, 60) == 24
    with pytest.raises(ValueError):
        amod(5, 0)


def test_mod_negative_convention():
    assert mod(-1, 7) == 6
    assert mod(F(-1, 3), 1) == F(2, 3)


def test_floor_frac():
    assert floor_frac(F(7, 2)) == (3, F(1, 2))
    assert floor_frac(F(-1, 3)) == (-1, F(2, 3))
    assert floor_frac(2015501 + F(4783, 5656)) == (2015501, F(4783, 5656))
    assert frac(F(-1, 3)) == F(2, 3)


@given(st.integers(min_value=-10**9, max_value=10**9),
       st.integers(min_value=1, max_value=10**6))
def test_amod_vs_mod(m, n):
    a, r = amod(m, n), mod(m, n)
    assert a - r in (0, n)
    assert (a == n) == (m % n == 0)
    assert 0 < a <= n


@given(st.lists(st.integers(min_value=2, max_value=100),
                min_size=1, max_size=6),
       st.integers(min_value=-5, max_value=5), st.data())
def test_round_trip(radices, intpart, data):
    digits = [data.draw(st.integers(min_value=0, max_value=b - 1))
              for b in radices]
    v = MixedRadixValue(intpart, digits, radices)
    assert to_mixed_radix(from_mixed_radix(v), radices) == v


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_field_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1
