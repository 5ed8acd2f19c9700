"""Astronomical functions: mean motions, the two equation tables with
their symmetric extensions and linear interpolation, true date and true
solar longitude.

All functions give values at the end of lunar day d in true month n,
exactly as rationals.  d may itself be rational (needed for the special
days that fall mid-lunar-day).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Rational, floor_frac, frac
from .traditions import TraditionConfig


@dataclass(frozen=True)
class EquationTable:
    """Periodic table with linear interpolation between integer knots.

    symmetry "quarter": knots 0..half/2 given; tab(half-i) = tab(i) and
    tab(half+i) = -tab(i) (used for the moon, sun and planet equations).
    symmetry "half": knots 0..floor(period/2) given; tab(period-i) = -tab(i)
    (used for the planets' final correction, period 27).
    """

    quarter_values: tuple[int, ...]
    period: int
    symmetry: str = "quarter"

    @property
    def half(self) -> int:
        return self.period // 2

    def knot(self, i: int) -> int:
        i %= self.period
        q = self.quarter_values
        if self.symmetry == "quarter":
            h = self.half
            if i <= h:
                return q[i] if i < len(q) else q[h - i]
            return -self.knot(i - h)
        # antisymmetric about period/2
        if i < len(q):
            return q[i]
        return -q[self.period - i]

    def at(self, x) -> Rational:
        """Value at rational argument x, linearly interpolated."""
        i, f = floor_frac(Fraction(x) % self.period)
        a = self.knot(i)
        if f == 0:
            return Fraction(a)
        b = self.knot(i + 1)
        return a + (b - a) * f


MOON_TAB = EquationTable((0, 5, 10, 15, 19, 22, 24, 25), period=28)
SUN_TAB = EquationTable((0, 6, 10, 11), period=12)


def mean_date(cfg: TraditionConfig, d, n: int) -> Rational:
    """Mean date (JD-anchored days) at the end of lunar day d of month n."""
    return n * cfg.m1 + d * cfg.m2 + cfg.m0


def mean_sun(cfg: TraditionConfig, d, n: int) -> Rational:
    """Mean solar longitude in revolutions, kept linear (not reduced)."""
    return n * cfg.s1 + d * cfg.s2 + cfg.s0


def anomaly_moon(cfg: TraditionConfig, d, n: int) -> Rational:
    """Lunar anomaly in revolutions, reduced mod 1."""
    return frac(n * cfg.a1 + d * cfg.a2 + cfg.a0)


def moon_equ(anomaly) -> Rational:
    """Equation of the moon, in units of 1/60 day."""
    return MOON_TAB.at(28 * Fraction(anomaly))


def sun_equ(mean_sun_value) -> Rational:
    """Equation of the sun, in units of 1/60 day."""
    return SUN_TAB.at(12 * (Fraction(mean_sun_value) - Fraction(1, 4)))


def _sun_equ_for(cfg: TraditionConfig, d, n: int) -> Rational:
    if cfg.karana_sun_in_true_date:
        from .almanac import karana_aligned_count
        from .traditions import KARANA_E806
        kn = karana_aligned_count(cfg, n)
        return sun_equ(mean_sun(KARANA_E806, d, kn))
    return sun_equ(mean_sun(cfg, d, n))


def semi_true_date(cfg: TraditionConfig, d, n: int) -> Rational:
    """Mean date corrected by the moon equation only."""
    return mean_date(cfg, d, n) + Fraction(moon_equ(anomaly_moon(cfg, d, n)), 60)


def true_date(cfg: TraditionConfig, d, n: int) -> Rational:
    """Date (JD-anchored) at the end of lunar day d of month n."""
    return semi_true_date(cfg, d, n) - Fraction(_sun_equ_for(cfg, d, n), 60)


def true_sun(cfg: TraditionConfig, d, n: int) -> Rational:
    """True solar longitude in revolutions, reduced mod 1."""
    ms = mean_sun(cfg, d, n)
    return frac(ms - Fraction(sun_equ(ms), 27 * 60))
