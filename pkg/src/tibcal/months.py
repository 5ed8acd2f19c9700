"""Month numbering: true-month counts, intercalation indices, leap months,
the inverse problem, leap-year closed forms, and the independent
definition-point oracle for month assignment.

Throughout, M' = 12*(Y - Y0) + M and the solar-month count is MM = M' - 3
(the epoch is nominally at month 3).  A single constant beta drives both
directions of the label/count correspondence:

    count -> label:   x = ceil((65*n + beta) / 67)
    label -> count:   n = floor((67*M' - beta)/65) - [leap]      (leap first)
                      n = floor((67*M' - beta - 2)/65) + [leap]  (leap second)

For traditions where the leap month precedes its regular twin
(Phugpa/Tsurphu/Mongolia) a count n is leap iff (65*n + beta) mod 67 is 1
or 2; where it follows (Bhutan/Karana), iff the residue is 0 or 66.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import amod
from .traditions import FOLLOWS_NEXT, FOLLOWS_PREVIOUS, TraditionConfig


@dataclass(frozen=True)
class MonthLabel:
    year: int
    month: int       # 1..12
    is_leap: bool = False

    def __str__(self) -> str:
        leap = " (leap)" if self.is_leap else ""
        return f"{self.year}-{self.month:02d}{leap}"


@dataclass(frozen=True)
class TrueMonth:
    count: int   # continuous month count from the tradition's epoch
    ix: int      # intercalation index, traditional corrected form, 0..66


def solar_month_count(cfg: TraditionConfig, year: int, month: int) -> int:
    """Number of solar months elapsed since the epoch month."""
    if not 1 <= month <= 12:
        raise ValueError(f"month must be 1..12, got {month}")
    return 12 * (year - cfg.year0) + month - cfg.month0


def is_leap_month(cfg: TraditionConfig, year: int, month: int) -> bool:
    """Whether a leap month numbered `month` exists in `year`."""
    if not 1 <= month <= 12:
        raise ValueError(f"month must be 1..12, got {month}")
    v = (24 * (year - cfg.year0) + 2 * month) % 65
    return v in (cfg.beta % 65, (cfg.beta + 1) % 65)


def _count_from_label(cfg: TraditionConfig, year: int, month: int,
                      leap: bool) -> int:
    mp = 12 * (year - cfg.year0) + month
    if cfg.leap_month_numbering == FOLLOWS_NEXT:
        return (67 * mp - cfg.beta) // 65 - (1 if leap else 0)
    return (67 * mp - cfg.beta - 2) // 65 + (1 if leap else 0)


def display_ix(cfg: TraditionConfig, n: int) -> int:
    """Intercalation index of month count n, traditional corrected form.

    Equals the raw index (2*MM + beta_x) mod 65 of the month's own label,
    increased by 2 whenever the traditional calculation rounded the true
    month up; the exceptional repeated values are rendered as 65/66.
    """
    label = month_from_count(cfg, n)
    mm = solar_month_count(cfg, label.year, label.month)
    raw = (2 * mm + cfg.beta_x) % 65
    floor_t = (67 * mm + cfg.beta_x) // 65
    return raw + 2 if n > floor_t else raw


def true_month(cfg: TraditionConfig, year: int, month: int,
               leap: bool = False) -> TrueMonth:
    """True-month count and intercalation index of a (year, month, leap)."""
    if leap and not is_leap_month(cfg, year, month):
        raise ValueError(f"no leap month {month} in {year} for {cfg.id}")
    n = _count_from_label(cfg, year, month, leap)
    return TrueMonth(count=n, ix=display_ix(cfg, n))


def month_from_count(cfg: TraditionConfig, n: int) -> MonthLabel:
    """Inverse of the true-month count: the (year, month, leap) label."""
    v = 65 * n + cfg.beta
    x = -((-v) // 67)  # ceil(v/67)
    month = amod(x, 12)
    year = (x - month) // 12 + cfg.year0
    r = v % 67
    if cfg.leap_month_numbering == FOLLOWS_NEXT:
        leap = r in (1, 2)
    else:
        leap = r in (0, 66)
    return MonthLabel(year, month, leap)


def is_leap_year(cfg: TraditionConfig, year: int) -> bool:
    return (24 * (year + cfg.gamma)) % 65 >= 41


def leap_month_of_year(cfg: TraditionConfig, year: int):
    """Month number of the year's leap month, or None."""
    v = (24 * year + cfg.gamma_x) % 65
    m = 33 - (v + 1) // 2
    return m if m <= 12 else None


def leap_years_in_range(cfg: TraditionConfig, year1: int, year2: int) -> int:
    """Number of leap years in [year1, year2] inclusive."""
    if year1 > year2:
        raise ValueError("year1 must not exceed year2")
    gx = cfg.gamma_x
    return (24 * (year2 + 1) + gx) // 65 - (24 * year1 + gx) // 65


def year_bounds_counts(cfg: TraditionConfig, year: int) -> tuple[int, int]:
    """Counts of the first and last month of the civil year.

    A leap month 1 begins the year when it precedes its twin; a leap
    month 12 ends it when it follows.
    """
    if cfg.leap_month_numbering == FOLLOWS_NEXT:
        first = true_month(cfg, year, 1, leap=is_leap_month(cfg, year, 1))
        last = true_month(cfg, year, 12, leap=False)
    else:
        first = true_month(cfg, year, 1, leap=False)
        last = true_month(cfg, year, 12, leap=is_leap_month(cfg, year, 12))
    return first.count, last.count


def months_of_year(cfg: TraditionConfig, year: int) -> list[MonthLabel]:
    n0, n1 = year_bounds_counts(cfg, year)
    return [month_from_count(cfg, n) for n in range(n0, n1 + 1)]


# --- Definition-point oracle -------------------------------------------
#
# Month numbers can also be read off the mean solar longitude: month M is
# the one during which the mean sun passes the definition point p_M, and a
# month that passes none is leap.  The mean sun covers 65/67 of a sign per
# month regardless of tradition (the 67:65 relation defines the cycle), so
# the oracle always uses 12*s1 = 65/67 with the tradition's own s0 and p1.

def _alpha(cfg: TraditionConfig) -> Fraction:
    """12*(s0 - p0), normalized so the epoch lands inside the epoch year."""
    a = (12 * (cfg.s0 - cfg.p0)) % 12
    if cfg.leap_month_numbering == FOLLOWS_PREVIOUS:
        ax = (a - Fraction(2, 67)) % 12
        if ax == 0:
            ax += 12
        return ax + Fraction(2, 67)
    if a == 0:
        a += 12
    return a


def dp_beta(cfg: TraditionConfig) -> int:
    """Integer leap-rule constant derived from the definition points."""
    a = _alpha(cfg)
    c67 = 67 * a
    up = -((-c67.numerator) // c67.denominator)  # ceil
    if cfg.leap_month_numbering == FOLLOWS_PREVIOUS:
        return up - 2
    return up


def _dp_x(cfg: TraditionConfig, n: int, alpha: Fraction) -> int:
    if cfg.leap_month_numbering == FOLLOWS_PREVIOUS:
        alpha = alpha - Fraction(2, 67)
    arg = Fraction(65, 67) * n + alpha
    if arg.denominator == 1:
        raise ArithmeticError(
            f"mean solar longitude exactly hits a definition point at "
            f"month {n} of {cfg.id}; constants are expected to preclude this")
    return -((-arg.numerator) // arg.denominator)


def dp_month_assign(cfg: TraditionConfig, n: int) -> MonthLabel:
    """Month label of count n from mean-sun definition-point crossings.

    Independent of month_from_count: works from the exact rational
    longitude constants rather than the integer beta.
    """
    alpha = _alpha(cfg)
    x = _dp_x(cfg, n, alpha)
    month = amod(x, 12)
    year = (x - month) // 12 + cfg.year0
    if cfg.leap_month_numbering == FOLLOWS_NEXT:
        leap = _dp_x(cfg, n + 1, alpha) == x
    else:
        leap = _dp_x(cfg, n - 1, alpha) == x
    return MonthLabel(year, month, leap)
