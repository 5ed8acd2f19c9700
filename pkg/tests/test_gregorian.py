from hypothesis import given, strategies as st

from tibcal.gregorian import (gregorian_to_jd, jd_to_civil, jd_to_gregorian,
                              jd_to_julian, julian_to_jd)


def test_known_julian_day_numbers():
    assert gregorian_to_jd(2007, 1, 1) == 2454102
    assert gregorian_to_jd(2001, 2, 10) == 2451951
    assert gregorian_to_jd(2006, 5, 10) == 2453866
    assert gregorian_to_jd(2025, 11, 19) == 2460999
    # the epoch days of the shipped traditions
    assert julian_to_jd(806, 3, 23) == 2015531
    assert gregorian_to_jd(1927, 4, 1) == 2424972
    assert gregorian_to_jd(1732, 3, 26) == 2353745
    assert gregorian_to_jd(1852, 4, 19) == 2397598
    assert gregorian_to_jd(1747, 4, 9) == 2359237
    assert gregorian_to_jd(1754, 4, 22) == 2361807


def test_civil_switch():
    assert jd_to_civil(2299161).calendar == "gregorian"
    assert jd_to_civil(2299160).calendar == "julian"
    assert jd_to_civil(2015531).isoformat() == "0806-03-23 (Julian)"


@given(st.integers(min_value=1_500_000, max_value=3_000_000))
def test_round_trips(jd):
    assert gregorian_to_jd(*jd_to_gregorian(jd)) == jd
    assert julian_to_jd(*jd_to_julian(jd)) == jd
