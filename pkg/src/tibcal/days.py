"""The lunar-day to calendar-day mapping: forward conversion to Julian day
numbers, inverse lookup, repeated/skipped day classification, month bounds,
New Year, weekdays, and bulk calendar generation.

A calendar day is labelled by the lunar day current at its beginning,
i.e. the lunar day that ends during it.  When two lunar days end on the
same calendar day the earlier one wins and the later date is skipped;
when none ends, the day takes the following label and that date is
repeated (the first of the pair being the leap day).

Bulk sweeps use an exact integer engine: all quantities in the true-date
pipeline live on a fixed rational lattice per configuration, so scaling by
one common denominator turns the whole computation into integer
arithmetic.  The Fraction-based functions in astro.py remain the reference
definition; tests cross-check the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterator, Optional

from . import astro, tables
from .exact import floor_frac
from .months import (MonthLabel, is_leap_month, month_from_count, true_month,
                     year_bounds_counts)
from .traditions import TraditionConfig

NORMAL = "normal"
REPEATED = "repeated"
SKIPPED = "skipped"


@dataclass(frozen=True)
class TibetanDate:
    month: MonthLabel
    day: int                # 1..30
    leap_day: bool = False  # first of a repeated pair

    @property
    def year(self) -> int:
        return self.month.year

    def __str__(self) -> str:
        leap_m = "L" if self.month.is_leap else ""
        suffix = "a" if self.leap_day else ""
        return (f"{self.month.year}-{self.month.month:02d}{leap_m}"
                f"-{self.day:02d}{suffix}")


def day_of_week(jd: int) -> int:
    """0 = Saturday ... 6 = Friday."""
    return (jd + 2) % 7


def weekday_name(jd: int, cfg: Optional[TraditionConfig] = None,
                 tibetan: bool = False) -> str:
    w = day_of_week(jd)
    if not tibetan:
        return tables.WEEKDAYS[w]
    offset = cfg.weekday_name_offset if cfg is not None else 0
    return tables.WEEKDAY_TIBETAN[(w + offset) % 7]


def _end_jd(cfg: TraditionConfig, d: int, n: int) -> int:
    td = astro.true_date(cfg, d, n)
    return td.numerator // td.denominator


def _prev_end_jd(cfg: TraditionConfig, d: int, n: int) -> int:
    # end of the preceding lunar day; day 0 of month n is day 30 of n-1,
    # which differs from true_date(0, n) when a2 is the rounded 1/28
    if d > 1:
        return _end_jd(cfg, d - 1, n)
    return _end_jd(cfg, 30, n - 1)


def day_status(cfg: TraditionConfig, d: int, n: int) -> str:
    jd = _end_jd(cfg, d, n)
    diff = jd - _prev_end_jd(cfg, d, n)
    if diff == 1:
        return NORMAL
    if diff == 2:
        return REPEATED
    if diff == 0:
        return SKIPPED
    raise ArithmeticError(f"lunar day spans {diff} calendar days at "
                          f"d={d}, n={n} ({cfg.id})")


def jd_from_tibetan(cfg: TraditionConfig, date: TibetanDate) -> tuple[int, str]:
    """JD of a Tibetan date, with its repeated/skipped/normal status.

    For a skipped date the returned JD is the calendar day that lunar day
    ends on, which carries the preceding day's label.  For a repeated date
    leap_day=True selects the first of the pair.
    """
    if not 1 <= date.day <= 30:
        raise ValueError(f"day must be 1..30, got {date.day}")
    m = date.month
    n = true_month(cfg, m.year, m.month, m.is_leap).count
    status = day_status(cfg, date.day, n)
    if date.leap_day and status != REPEATED:
        raise ValueError(f"{date} has leap_day set but is not repeated")
    jd = _end_jd(cfg, date.day, n)
    if date.leap_day:
        jd -= 1
    return jd, status


def tibetan_from_jd(cfg: TraditionConfig, jd: int) -> TibetanDate:
    """The unique Tibetan date labelling calendar day jd."""
    # mean-motion estimate of the lunar-day count, then a local search;
    # |true - mean| < 0.104 day so a few neighbours suffice
    est = (jd + 1 - cfg.m0) / cfg.m2
    ld0 = est.numerator // est.denominator

    def end(ld: int) -> int:
        n, d = divmod(ld - 1, 30)
        return _end_jd(cfg, d + 1, n)

    matches = [ld for ld in range(ld0 - 3, ld0 + 5) if end(ld) == jd]
    if matches:
        ld = min(matches)
        leap_day = False
    else:
        after = [ld for ld in range(ld0 - 3, ld0 + 5)
                 if end(ld) == jd + 1 and end(ld - 1) == jd - 1]
        if not after:
            raise ArithmeticError(f"no lunar day found for JD {jd}")
        ld = after[0]
        leap_day = True
    n, d = divmod(ld - 1, 30)
    return TibetanDate(month_from_count(cfg, n), d + 1, leap_day)


def month_bounds(cfg: TraditionConfig, month: MonthLabel) -> tuple[int, int]:
    """First and last JD of a calendar month (inclusive)."""
    n = true_month(cfg, month.year, month.month, month.is_leap).count
    last = _end_jd(cfg, 30, n)
    first = _end_jd(cfg, 30, n - 1) + 1
    return first, last


def losar(cfg: TraditionConfig, year: int) -> int:
    """JD of New Year: 1 + the last day of the preceding year."""
    n_first, _ = year_bounds_counts(cfg, year)
    return _end_jd(cfg, 30, n_first - 1) + 1


def year_length(cfg: TraditionConfig, year: int) -> int:
    _, n_last = year_bounds_counts(cfg, year)
    return _end_jd(cfg, 30, n_last) + 1 - losar(cfg, year)


def holiday_day(cfg: TraditionConfig, year: int, month: int, day: int) -> int:
    """JD on which a holiday fixed to (month, day) falls in `year`.

    Holidays are kept in the regular month (not celebrated in leap
    months); a skipped date moves to the preceding day and a repeated
    one to the first (leap) day of the pair.
    """
    n = true_month(cfg, year, month, leap=False).count
    status = day_status(cfg, day, n)
    jd = _end_jd(cfg, day, n)
    if status == REPEATED:
        return jd - 1
    return jd  # for SKIPPED this is already the preceding day's label


# --- Integer fast path ---------------------------------------------------

def _scaled(x: Fraction, den: int) -> int:
    v = x * den
    if v.denominator != 1:
        raise AssertionError("constant off the expected lattice")
    return v.numerator


class _IntEngine:
    """Exact integer evaluation of floor(true_date) over month ranges."""

    def __init__(self, cfg: TraditionConfig):
        if cfg.karana_sun_in_true_date:
            raise ValueError("integer engine does not cover the "
                             "karana-sun variant; use the Fraction path")
        self.cfg = cfg
        dm = lcm(cfg.m0.denominator, cfg.m1.denominator, cfg.m2.denominator)
        da = lcm(cfg.a0.denominator, cfg.a1.denominator, cfg.a2.denominator)
        ds = lcm(cfg.s0.denominator, cfg.s1.denominator,
                 cfg.s2.denominator, 4)
        self.dm, self.da, self.ds = dm, da, ds
        self.D = lcm(dm, 60 * da, 60 * ds)
        self.fm = self.D // dm
        self.fa = self.D // (60 * da)
        self.fs = self.D // (60 * ds)
        self.m0 = _scaled(cfg.m0, dm)
        self.m1 = _scaled(cfg.m1, dm)
        self.m2 = _scaled(cfg.m2, dm)
        self.a0 = _scaled(cfg.a0, da) % da
        self.a1 = _scaled(cfg.a1, da)
        self.a2 = _scaled(cfg.a2, da)
        self.s0 = _scaled(cfg.s0, ds) % ds
        self.s1 = _scaled(cfg.s1, ds)
        self.s2 = _scaled(cfg.s2, ds)
        self.moon_knots = [astro.MOON_TAB.knot(i) for i in range(29)]
        self.sun_knots = [astro.SUN_TAB.knot(i) for i in range(13)]

    def month_day_jds(self, n0: int, n1: int) -> Iterator[tuple[int, list[int]]]:
        """Yield (n, [jd of lunar days 1..30]) for n in [n0, n1)."""
        da, ds = self.da, self.ds
        fm, fa, fs = self.fm, self.fa, self.fs
        D = self.D
        moon, sun = self.moon_knots, self.sun_knots
        md_b = self.m0 + n0 * self.m1
        an_b = (self.a0 + n0 * self.a1) % da
        ms_b = (self.s0 + n0 * self.s1) % ds
        for n in range(n0, n1):
            md, an, ms = md_b, an_b, ms_b
            jds = []
            for _d in range(30):
                md += self.m2
                an = (an + self.a2) % da
                ms = (ms + self.s2) % ds
                q, f = divmod(28 * an, da)
                a = moon[q % 28]
                me = a * da + (moon[q % 28 + 1] - a) * f
                q, f = divmod(12 * ms - 3 * ds, ds)
                a = sun[q % 12]
                se = a * ds + (sun[q % 12 + 1] - a) * f
                jds.append((md * fm + me * fa - se * fs) // D)
            md_b += self.m1
            an_b = (an_b + self.a1) % da
            ms_b = (ms_b + self.s1) % ds
            yield n, jds

    def true_date_scaled(self, d: int, n: int) -> tuple[int, int]:
        """(numerator, denominator) of true_date(d, n); for cross-checks."""
        md = self.m0 + n * self.m1 + d * self.m2
        an = (self.a0 + n * self.a1 + d * self.a2) % self.da
        ms = (self.s0 + n * self.s1 + d * self.s2) % self.ds
        q, f = divmod(28 * an, self.da)
        a = self.moon_knots[q % 28]
        me = a * self.da + (self.moon_knots[q % 28 + 1] - a) * f
        q, f = divmod(12 * ms - 3 * self.ds, self.ds)
        a = self.sun_knots[q % 12]
        se = a * self.ds + (self.sun_knots[q % 12 + 1] - a) * f
        return md * self.fm + me * self.fa - se * self.fs, self.D


def walk_days(cfg: TraditionConfig, n0: int, n1: int
              ) -> Iterator[tuple[int, int, int, bool]]:
    """Yield (jd, month_count, day, leap_day) for every calendar day of
    months n0 .. n1-1, in JD order."""
    if cfg.karana_sun_in_true_date:
        def month_jds():
            for n in range(n0 - 1, n1):
                yield n, [_end_jd(cfg, d, n) for d in range(1, 31)]
        source = month_jds()
    else:
        source = _IntEngine(cfg).month_day_jds(n0 - 1, n1)
    prev = None
    for n, jds in source:
        if prev is None:
            prev = jds[-1]
            continue
        for d, jd in enumerate(jds, start=1):
            diff = jd - prev
            if diff == 1:
                yield jd, n, d, False
            elif diff == 2:
                yield jd - 1, n, d, True
                yield jd, n, d, False
            elif diff != 0:
                raise ArithmeticError(
                    f"lunar day spans {diff} days at d={d}, n={n}")
            prev = jd


def calendar_map(cfg: TraditionConfig, jd1: int, jd2: int
                 ) -> dict[int, TibetanDate]:
    """JD -> TibetanDate for every calendar day in [jd1, jd2]."""
    n_lo = _month_count_near(cfg, jd1) - 2
    n_hi = _month_count_near(cfg, jd2) + 3
    out: dict[int, TibetanDate] = {}
    labels: dict[int, MonthLabel] = {}
    for jd, n, d, leap_day in walk_days(cfg, n_lo, n_hi):
        if jd1 <= jd <= jd2:
            label = labels.get(n)
            if label is None:
                label = labels[n] = month_from_count(cfg, n)
            out[jd] = TibetanDate(label, d, leap_day)
    return out


def _month_count_near(cfg: TraditionConfig, jd: int) -> int:
    est = (jd - cfg.m0) / cfg.m1
    return est.numerator // est.denominator
