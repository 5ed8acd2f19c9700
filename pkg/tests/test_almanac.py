from fractions import Fraction as F

import pytest

from tibcal import astro
from tibcal.almanac import (DBUGS, DBUGS_OFFSET_LUNAR_DAYS, EXTRA, SGANG,
                            SGANG_OFFSET_LUNAR_DAYS, SIGN_ENTRY,
                            TRUE_SUN_ZERO, anchor_count,
                            bhutan_winter_solstice, day_record,
                            day_record_for_jd, karana_aligned_count,
                            karana_of_halfday, month_header, special_days,
                            traditional_lattice_ok)
from tibcal.days import TibetanDate, losar, month_bounds, tibetan_from_jd
from tibcal.exact import frac
from tibcal.gregorian import jd_to_civil
from tibcal.months import MonthLabel, months_of_year, true_month
from tibcal.traditions import KARANA_E806, get_tradition

PH = get_tradition("phugpa")


def test_karana_of_halfday():
    k = karana_of_halfday(1, 1)
    assert (k.kind, k.name) == ("fixed", "kimstughna")
    assert karana_of_halfday(30, 2).kind == "fixed"
    assert karana_of_halfday(30, 2).name == "naga"
    assert karana_of_halfday(30, 1).name == "catuspada"
    assert karana_of_halfday(29, 2).name == "sakuni"
    k = karana_of_halfday(2, 1)  # half-day H=3, changing (H-1) amod 7 = 2
    assert (k.kind, k.number, k.name) == ("changing", 2, "balava")
    k = karana_of_halfday(1, 2)  # H=2 -> changing 1
    assert (k.kind, k.number) == ("changing", 1)
    with pytest.raises(ValueError):
        karana_of_halfday(31, 1)


def test_halfday_partition_covers_month():
    names = []
    for d in range(1, 31):
        for h in (1, 2):
            names.append(karana_of_halfday(d, h))
    fixed = [k for k in names if k.kind == "fixed"]
    assert len(names) == 60 and len(fixed) == 4
    changing = [k.number for k in names if k.kind == "changing"]
    assert len(changing) == 56
    for a, b in zip(changing, changing[1:]):
        assert b == a % 7 + 1


def test_day_record_elongation_identity():
    for jd in range(2456334, 2456364):
        rec = day_record_for_jd(PH, jd)
        d = rec.date.day
        assert frac(rec.moon_long_lunar_day_end - rec.true_sun) == \
            frac(F(d, 30))
        assert 0 <= rec.mansion_index <= 26
        assert 0 <= rec.yoga_index <= 26
        assert frac(rec.yoga_longitude) == \
            frac(rec.moon_long_day_start + rec.true_sun)


def test_day_record_repeated_pair():
    # Phugpa 2012-01-05 is repeated
    first = day_record(PH, TibetanDate(MonthLabel(2012, 1), 5, True))
    second = day_record(PH, TibetanDate(MonthLabel(2012, 1), 5, False))
    assert first.jd == second.jd - 1
    assert first.repeated_first and not second.repeated_first
    assert first.mean_sun is None and second.mean_sun is not None
    # true sun is the only quantity identical across the pair
    assert first.true_sun == second.true_sun
    assert first.moon_long_day_start == \
        frac(first.moon_long_lunar_day_end - F(1, 27))
    assert first.true_weekday == (first.jd + 2) % 7 + 1
    assert first.yoga_longitude != second.yoga_longitude


def test_month_header_epoch():
    hdr = month_header(PH, MonthLabel(1987, 3))
    assert hdr.month_count == 0
    assert hdr.intercalation_index == 0
    assert hdr.mean_sun == 0
    assert hdr.mean_date == PH.m0
    assert hdr.karana_mean_date == \
        astro.mean_date(KARANA_E806, 0, hdr.karana_count)


def test_karana_alignment_2013_almanac():
    # the month printed in the 2013 almanac with karana index 65 is a
    # karana leap month whose reconstructed label is a second month 1 of
    # 2014; it lines up with the host month 1 of 2014
    hdr = month_header(PH, MonthLabel(2014, 1))
    assert hdr.karana_intercalation_index == 65
    assert hdr.karana_label == MonthLabel(2014, 1, True)
    assert anchor_count(KARANA_E806) == 0
    n = true_month(PH, 2014, 1).count
    assert karana_aligned_count(PH, n) == hdr.karana_count
    # the preceding host month pairs with the regular karana twin
    prev = month_header(PH, MonthLabel(2013, 12))
    assert prev.karana_label == MonthLabel(2014, 1, False)
    assert prev.karana_intercalation_index == 63


def test_special_day_offsets():
    assert SGANG_OFFSET_LUNAR_DAYS == 8 + F(16, 65) == 8 * (1 + F(2, 65))
    assert DBUGS_OFFSET_LUNAR_DAYS == 7 + F(14, 65) == 7 * (1 + F(2, 65))
    # 1 + 2/65 lunar days moves the mean sun exactly one degree
    assert (1 + F(2, 65)) * PH.s2 == F(1, 360)


def test_special_days_2013():
    sd = special_days(PH, 2013)
    kinds = {s.kind for s in sd}
    assert kinds == {SIGN_ENTRY, SGANG, DBUGS, EXTRA, TRUE_SUN_ZERO}
    # 2013 is a 13-month year
    assert sum(1 for s in sd if s.kind == SIGN_ENTRY) == 13
    assert sum(1 for s in sd if s.kind == EXTRA) == 4
    jd1, jd2 = losar(PH, 2013), losar(PH, 2014)
    assert all(jd1 <= s.jd < jd2 for s in sd)
    # consecutive sgang points are exactly one mean solar month apart
    sgangs = [s for s in sd if s.kind == SGANG]
    for a, b in zip(sgangs, sgangs[1:]):
        assert b.lunar_date - a.lunar_date == 30 * (1 + F(2, 65))
    # each sgang follows a sign entry by 8 16/65 lunar days and each dbugs
    # precedes one by 7 14/65 (entries at the year edges may be filtered)
    entry_dates = {s.lunar_date for s in sd if s.kind == SIGN_ENTRY}
    hits = 0
    for s in sgangs:
        if s.lunar_date - SGANG_OFFSET_LUNAR_DAYS in entry_dates:
            hits += 1
    assert hits >= len(sgangs) - 1
    dbugs = [s for s in sd if s.kind == DBUGS]
    hits = sum(s.lunar_date + DBUGS_OFFSET_LUNAR_DAYS in entry_dates
               for s in dbugs)
    assert hits >= len(dbugs) - 1


def test_true_sun_zero_2013():
    # the engine's true sun passes zero on the 16th day of month 3, 26 April
    sd = [s for s in special_days(PH, 2013) if s.kind == TRUE_SUN_ZERO]
    assert len(sd) == 1
    assert jd_to_civil(sd[0].jd).isoformat() == "2013-04-26"
    date = tibetan_from_jd(PH, sd[0].jd)
    assert (date.month.month, date.day) == (3, 16)
    # and lies roughly two days before the mean-sun zero
    mean0 = [s for s in special_days(PH, 2013)
             if s.kind == SIGN_ENTRY and s.longitude == 0][0]
    assert 0 < mean0.jd - sd[0].jd <= 3


def test_traditional_pipeline_agreement_sweep():
    # closed form vs 6*ix/13 reckoning over a 65-year cycle (the sweep is
    # implicit: special_days raises on any disagreement)
    for cfg in (PH, get_tradition("mongolia"), get_tradition("phugpa", "E806")):
        assert traditional_lattice_ok(cfg)
        for year in range(2000, 2065, 13):
            assert special_days(cfg, year)
    assert not traditional_lattice_ok(get_tradition("tsurphu"))
    assert not traditional_lattice_ok(get_tradition("bhutan"))


def test_winter_solstice():
    b = get_tradition("bhutan")
    assert jd_to_civil(bhutan_winter_solstice(b, 2013)).isoformat() == \
        "2013-01-02"
    assert jd_to_civil(bhutan_winter_solstice(b, 2020)).isoformat() == \
        "2020-01-03"
    # consecutive crossings are one mean solar year apart, which outruns
    # the mean Gregorian year by almost 3 days per century
    assert b.m1 / b.s1 == F(6714405, 18382)
    century_drift = 100 * (b.m1 / b.s1 - F(1460970, 4000))
    assert F(25, 10) < century_drift < 3


def test_mean_sun_signs_display():
    rec = day_record(PH, TibetanDate(MonthLabel(2012, 3), 10))
    v = rec.mean_sun_signs
    assert v is not None and v.radices == (12, 30, 60)
    assert 0 <= v.digits[0] < 12 and 0 <= v.digits[1] < 30
