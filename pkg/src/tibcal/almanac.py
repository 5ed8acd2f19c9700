"""Per-day almanac quantities, monthly headers, the parallel karana-system
computation, and the special days defined by mean solar longitude.

Printed almanacs bundle, for each calendar day: the true weekday with its
fraction, lunar longitudes at lunar-day end and at calendar-day start, the
mansion, true solar longitude, yoga, karana, mean sun in signs, the same
lunar longitude under the karana system, and the Western date.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import astro, tables
from .days import (NORMAL, REPEATED, TibetanDate, day_of_week, day_status,
                   losar, tibetan_from_jd, _end_jd)
from .exact import MixedRadixValue, Rational, floor_frac, frac, to_mixed_radix
from .gregorian import CivilDate, jd_to_civil, gregorian_to_jd
from .months import MonthLabel, display_ix, month_from_count, true_month
from .traditions import KARANA_E806, TraditionConfig

# Common reference day: the mean new moon of the month all shipped
# traditions anchor at JD 2015531 (their constants were historically tuned
# to coincide there), used to align month counts across systems.
_ANCHOR_JD = 2015531

LONGITUDE_RADICES = (27, 60, 60, 6, 67)
WEEKDAY_RADICES = (60, 60, 6, 707)
SIGN_RADICES = (12, 30, 60)

# Extra special-day longitudes (degrees) listed in recent almanacs; the
# set is almanac-specific and can be overridden per call.
EXTRA_SPECIAL_LONGITUDES = (66, 132, 147, 235)


def anchor_count(cfg: TraditionConfig) -> int:
    """Month count whose mean new moon falls on the common reference day."""
    lo = (_ANCHOR_JD - cfg.m0) / cfg.m1
    k = -((-lo.numerator) // lo.denominator)  # ceil
    md = cfg.m0 + k * cfg.m1
    if md.numerator // md.denominator != _ANCHOR_JD:
        raise ValueError(f"{cfg.id}/{cfg.epoch} has no mean new moon on "
                         f"JD {_ANCHOR_JD}")
    return k


def karana_aligned_count(cfg: TraditionConfig, n: int) -> int:
    """Karana-system month count of the same physical month as count n."""
    return n - anchor_count(cfg) + anchor_count(KARANA_E806)


@dataclass(frozen=True)
class KaranaHalfDay:
    number: int      # changing: cycle position 1..7; fixed: slot 1..4
    kind: str        # "changing" or "fixed"
    name: str


def karana_of_halfday(day: int, half: int) -> KaranaHalfDay:
    """Karana of half-day `half` (1 or 2) of lunar day `day` (1..30)."""
    if not 1 <= day <= 30 or half not in (1, 2):
        raise ValueError(f"bad half-day ({day}, {half})")
    h = 2 * day - 1 if half == 1 else 2 * day
    if h in tables.KARANAS_FIXED:
        slot = sorted(tables.KARANAS_FIXED).index(h) + 1
        return KaranaHalfDay(slot, "fixed", tables.KARANAS_FIXED[h])
    num = (h - 1) % 7 or 7
    return KaranaHalfDay(num, "changing", tables.KARANAS_CHANGING[num - 1])


@dataclass(frozen=True)
class AlmanacDayRecord:
    date: TibetanDate
    jd: int
    status: str
    gregorian: CivilDate
    weekday: int
    true_weekday: Rational            # (true_date + 2) mod 7, with fraction
    repeated_first: bool              # first of a pair: weekday shown x;60,0
    moon_long_lunar_day_end: Rational
    moon_long_day_start: Rational
    mansion_index: int
    mansion_name: str
    true_sun: Rational
    yoga_longitude: Rational
    yoga_index: int
    yoga_name: str
    karana: KaranaHalfDay
    mean_sun: Optional[Rational]      # omitted on the first of a pair
    karana_moon_long_day_start: Rational

    @property
    def mean_sun_signs(self) -> Optional[MixedRadixValue]:
        if self.mean_sun is None:
            return None
        return to_mixed_radix(frac(self.mean_sun), SIGN_RADICES)


def _day_context(cfg: TraditionConfig, date: TibetanDate):
    m = date.month
    n = true_month(cfg, m.year, m.month, m.is_leap).count
    status = day_status(cfg, date.day, n)
    if date.leap_day and status != REPEATED:
        raise ValueError(f"{date} marked leap day but status is {status}")
    jd = _end_jd(cfg, date.day, n)
    if date.leap_day:
        jd -= 1
    return n, jd, status


def _moon_longs(cfg, d, n, jd, first_of_pair):
    ts = astro.true_sun(cfg, d, n)
    lunar_end = frac(ts + Fraction(d, 30))
    if first_of_pair:
        day_start = frac(lunar_end - Fraction(1, 27))
    else:
        day_start = frac(lunar_end - frac(astro.true_date(cfg, d, n)) / 27)
    return ts, lunar_end, day_start


def day_record(cfg: TraditionConfig, date: TibetanDate) -> AlmanacDayRecord:
    """The full almanac bundle for one calendar day."""
    n, jd, status = _day_context(cfg, date)
    d = date.day
    first = date.leap_day
    td = astro.true_date(cfg, d, n)
    ts, lunar_end, day_start = _moon_longs(cfg, d, n, jd, first)

    if first:
        # end of the calendar day, printed as weekday;60,0
        tw = Fraction((jd + 2) % 7) + 1
    else:
        tw = (td + 2) % 7
    yoga = frac(day_start + ts)

    # which half of the lunar day is current when the calendar day begins;
    # halves are of equal length, so compare the day start (jd) with the
    # midpoint of [end of previous lunar day, end of this one]
    prev_end = astro.true_date(cfg, d - 1, n) if d > 1 \
        else astro.true_date(cfg, 30, n - 1)
    half = 1 if 2 * jd < td + prev_end else 2

    kn = karana_aligned_count(cfg, n)
    _, _, k_day_start = _moon_longs(KARANA_E806, d, kn, jd, first)

    mansion = int(27 * day_start)  # day_start in [0,1), so this floors
    yoga_idx = int(27 * yoga)
    return AlmanacDayRecord(
        date=date, jd=jd, status=status, gregorian=jd_to_civil(jd),
        weekday=day_of_week(jd),
        true_weekday=tw, repeated_first=first,
        moon_long_lunar_day_end=lunar_end,
        moon_long_day_start=day_start,
        mansion_index=mansion,
        mansion_name=tables.MANSIONS_SANSKRIT[mansion],
        true_sun=ts,
        yoga_longitude=yoga,
        yoga_index=yoga_idx,
        yoga_name=tables.YOGAS[yoga_idx],
        karana=karana_of_halfday(d, half),
        mean_sun=None if first else frac(astro.mean_sun(cfg, d, n)),
        karana_moon_long_day_start=k_day_start,
    )


def day_record_for_jd(cfg: TraditionConfig, jd: int) -> AlmanacDayRecord:
    return day_record(cfg, tibetan_from_jd(cfg, jd))


@dataclass(frozen=True)
class MonthHeader:
    label: MonthLabel
    month_count: int
    intercalation_index: int
    mean_date: Rational
    mean_sun: Rational
    anomaly_moon: Rational
    karana_label: MonthLabel
    karana_count: int
    karana_intercalation_index: int
    karana_mean_date: Rational
    karana_mean_sun: Rational
    karana_anomaly_moon: Rational


def month_header(cfg: TraditionConfig, label: MonthLabel) -> MonthHeader:
    """Monthly almanac header: day-0 mean values and the true month with
    its intercalation index, plus the same block under the karana system."""
    tm = true_month(cfg, label.year, label.month, label.is_leap)
    n = tm.count
    kn = karana_aligned_count(cfg, n)
    kcfg = KARANA_E806
    return MonthHeader(
        label=label, month_count=n, intercalation_index=tm.ix,
        mean_date=astro.mean_date(cfg, 0, n),
        mean_sun=frac(astro.mean_sun(cfg, 0, n)),
        anomaly_moon=astro.anomaly_moon(cfg, 0, n),
        karana_label=month_from_count(kcfg, kn),
        karana_count=kn,
        karana_intercalation_index=display_ix(kcfg, kn),
        karana_mean_date=astro.mean_date(kcfg, 0, kn),
        karana_mean_sun=frac(astro.mean_sun(kcfg, 0, kn)),
        karana_anomaly_moon=astro.anomaly_moon(kcfg, 0, kn),
    )


# --- Special days --------------------------------------------------------

SIGN_ENTRY = "sign_entry"
SGANG = "sgang_point"
DBUGS = "dbugs_midpoint"
EXTRA = "extra_longitude"
TRUE_SUN_ZERO = "true_sun_zero"

# Offsets of the definition points and midpoints from sign entries, in
# lunar days: 8;3,1<13,5> and 7;2,4<13,5>; the mean sun moves exactly one
# degree in 1+2/65 lunar days.
SGANG_OFFSET_LUNAR_DAYS = Fraction(8 * 65 + 16, 65)   # 8 16/65
DBUGS_OFFSET_LUNAR_DAYS = Fraction(7 * 65 + 14, 65)   # 7 14/65


@dataclass(frozen=True)
class SpecialDay:
    kind: str
    longitude: Rational        # target longitude mod 1 (revolutions)
    lunar_date: Rational       # lunar days from the epoch (30n + d)
    mean_date: Rational
    jd: int

    @property
    def degrees(self) -> Rational:
        return 360 * self.longitude


def _s0_near_zero(cfg: TraditionConfig) -> Rational:
    s = frac(cfg.s0)
    return s - 1 if s > Fraction(1, 2) else s


def traditional_lattice_ok(cfg: TraditionConfig) -> bool:
    """Whether 6*ix/13 sign-entry arithmetic is exact for this config.

    Requires the intercalation-index lattice to be aligned with the mean
    sun, i.e. 804*s0 + beta_x divisible by 67; true for Phugpa (all
    epochs) and Mongolia, not for Tsurphu, Bhutan or Karana.
    """
    v = 804 * frac(cfg.s0) + cfg.beta_x
    return v.denominator == 1 and v.numerator % 67 == 0


def _mean_date_of_longitude(cfg: TraditionConfig, lam: Rational) -> Rational:
    """Mean date when the linear mean solar longitude reaches lam
    (measured from the normalized epoch longitude)."""
    return (cfg.m1 / cfg.s1) * lam + cfg.m0


def _lunar_date_of_longitude(cfg: TraditionConfig, lam: Rational) -> Rational:
    return 30 * lam / cfg.s1


def special_days(cfg: TraditionConfig, year: int,
                 extra_degrees=EXTRA_SPECIAL_LONGITUDES) -> list[SpecialDay]:
    """All mean-sun special days of civil year `year`, in date order:
    sign entries, definition points (sgang), midpoints (dbugs), the extra
    almanac longitudes, and the true-sun-zero day.

    For configurations whose index lattice supports it, each sign entry is
    cross-checked against the traditional reckoning (lunar date 6*ix/13
    within the month); a mismatch raises.
    """
    jd_lo = losar(cfg, year)
    jd_hi = losar(cfg, year + 1)
    s0n = _s0_near_zero(cfg)
    check = traditional_lattice_ok(cfg)
    out = []

    def emit(kind, deg_num, lam_linear):
        md = _mean_date_of_longitude(cfg, lam_linear)
        jd = md.numerator // md.denominator
        if not jd_lo <= jd < jd_hi:
            return
        x = _lunar_date_of_longitude(cfg, lam_linear)
        if kind == SIGN_ENTRY and check:
            _check_traditional_sign_entry(cfg, x)
        out.append(SpecialDay(kind=kind, longitude=frac(Fraction(deg_num, 360)),
                              lunar_date=x, mean_date=md, jd=jd))

    for yp in (year - cfg.year0 - 1, year - cfg.year0, year - cfg.year0 + 1):
        for k in range(12):
            base = 30 * k
            for kind, deg in ((SIGN_ENTRY, base), (SGANG, base + 8),
                              (DBUGS, base + 23)):
                emit(kind, deg, Fraction(deg, 360) + yp - s0n)
        for deg in extra_degrees:
            emit(EXTRA, deg, Fraction(deg, 360) + yp - s0n)

    tsz = true_sun_zero_day(cfg, year)
    if tsz is not None:
        out.append(tsz)
    out.sort(key=lambda s: (s.mean_date, s.kind))
    return out


def _check_traditional_sign_entry(cfg: TraditionConfig, x: Rational) -> None:
    """Verify a sign entry at global lunar date x against 6*ix/13."""
    n, off = divmod(x, 30)
    n = int(n)
    ix = display_ix(cfg, n)
    if off != Fraction(6 * ix, 13):
        raise ArithmeticError(
            f"traditional sign-entry reckoning disagrees at month {n}: "
            f"offset {off} vs 6*{ix}/13")


def _linear_true_sun(cfg: TraditionConfig, ld: Rational) -> Rational:
    """True solar longitude on the linear scale at global lunar date ld."""
    ms = cfg.s0 + ld * cfg.s2
    return ms - Fraction(astro.sun_equ(ms), 27 * 60)


def true_sun_zero_day(cfg: TraditionConfig, year: int) -> Optional[SpecialDay]:
    """The day the true solar longitude passes 0, found by exact root
    bracketing of the piecewise-linear true sun over lunar days."""
    s0n = _s0_near_zero(cfg)
    jd_lo = losar(cfg, year)
    jd_hi = losar(cfg, year + 1)
    for yp in (year - cfg.year0, year - cfg.year0 - 1, year - cfg.year0 + 1):
        target = cfg.s0 - s0n + yp   # integer crossing on the linear scale
        x0 = _lunar_date_of_longitude(cfg, yp - s0n)
        lo = x0.numerator // x0.denominator - 8
        d_cross = _bracket_crossing(cfg, lo, lo + 16, target)
        if d_cross is None:
            continue
        td = _true_date_at(cfg, d_cross)
        jd = td.numerator // td.denominator
        if jd_lo <= jd < jd_hi:
            return SpecialDay(kind=TRUE_SUN_ZERO, longitude=Fraction(0),
                              lunar_date=d_cross, mean_date=td, jd=jd)
    return None


def _bracket_crossing(cfg, lo: int, hi: int, target: Rational):
    vals = {ld: _linear_true_sun(cfg, ld) for ld in range(lo, hi + 1)}
    for ld in range(lo, hi):
        if vals[ld] < target <= vals[ld + 1]:
            return _solve_segment(cfg, ld, target)
    return None


def _solve_segment(cfg, ld: int, target: Rational) -> Rational:
    """Exact crossing inside [ld, ld+1]: true sun is linear between the
    points where the sun-table argument passes integers."""
    pts = [Fraction(ld), Fraction(ld + 1)]
    ms_lo = cfg.s0 + ld * cfg.s2
    a_lo = 12 * (ms_lo - Fraction(1, 4))
    a_hi = a_lo + 12 * cfg.s2
    k = a_lo.numerator // a_lo.denominator + 1
    while k < a_hi:
        pts.append(ld + (Fraction(k) - a_lo) / (12 * cfg.s2))
        k += 1
    pts.sort()
    for p, q in zip(pts, pts[1:]):
        vp, vq = _linear_true_sun(cfg, p), _linear_true_sun(cfg, q)
        if vp < target <= vq:
            return p + (target - vp) / (vq - vp) * (q - p)
    raise ArithmeticError("crossing vanished inside bracketing interval")


def _true_date_at(cfg: TraditionConfig, ld: Rational) -> Rational:
    n, d = divmod(ld, 30)
    return astro.true_date(cfg, d, int(n))


def bhutan_winter_solstice(cfg: TraditionConfig, year: int) -> int:
    """JD of the winter-solstice holiday: the day the mean solar longitude
    reaches 250 degrees in the winter ending in Gregorian year `year`."""
    s0n = _s0_near_zero(cfg)
    target = Fraction(250, 360)
    for yp in (year - cfg.year0 - 1, year - cfg.year0, year - cfg.year0 - 2):
        md = _mean_date_of_longitude(cfg, target + yp - s0n)
        jd = md.numerator // md.denominator
        if jd_to_civil(jd).year == year:
            return jd
    raise ArithmeticError(f"no 250-degree crossing found in year {year}")
