"""Registry of tradition constants: epochs, mean motions, leap rules and
definition points for the Phugpa, Tsurphu, Mongolian (New Genden),
Bhutanese and Karana versions of the calendar.

All date constants are JD-anchored: the integer part of m0 is the Julian
day number of the epoch mean new moon.  The traditional mod-7 form is a
display transform (add 2, reduce mod 7).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .exact import Rational, frac, mixed

FOLLOWS_NEXT = "follows_next"          # leap month precedes its regular twin
FOLLOWS_PREVIOUS = "follows_previous"  # leap month follows its regular twin

# Exact daily anomaly increment (1+a1)/30 used by some published calendars
# in place of the rounded 1/28.
A2_EXACT = Fraction(3781, 105840)


@dataclass(frozen=True)
class TraditionConfig:
    id: str
    epoch: str
    epoch_jd: int
    year0: int                 # epoch year; epoch month is month 3 by tradition
    m0: Rational               # mean date at (d=0, n=0), JD-anchored
    m1: Rational               # days per month
    m2: Rational               # days per lunar day
    s0: Rational               # mean solar longitude at epoch, revolutions
    s1: Rational               # revolutions per month
    s2: Rational               # revolutions per lunar day
    a0: Rational               # lunar anomaly at epoch, revolutions
    a1: Rational               # revolutions per month
    a2: Rational               # revolutions per lunar day
    beta_x: int                # epoch intercalation index
    beta: int                  # general leap-rule constant
    leap_window: tuple[int, int]
    leap_month_numbering: str  # FOLLOWS_NEXT or FOLLOWS_PREVIOUS
    p1: Rational               # first definition point, revolutions
    rahu_rd0: Optional[int] = None
    weekday_name_offset: int = 0
    karana_sun_in_true_date: bool = False  # Tsurphu almanac variant

    @property
    def month0(self) -> int:
        return 3

    @property
    def gamma(self) -> int:
        """Leap-year constant: Y leap iff 24*(Y+gamma) mod 65 >= 41."""
        return (-self.year0 - 19 * self.beta) % 65

    @property
    def gamma_x(self) -> int:
        return (24 * self.gamma) % 65

    @property
    def p0(self) -> Rational:
        return self.p1 - Fraction(1, 12)

    def with_exact_a2(self) -> "TraditionConfig":
        return replace(self, a2=(1 + self.a1) / 30)

    def describe(self) -> str:
        return f"{self.id} (epoch {self.epoch})"


_M1 = Fraction(167025, 5656)
_S1 = Fraction(65, 804)
_A1 = Fraction(253, 3528)
_A2 = Fraction(1, 28)

_REGISTRY: dict[tuple[str, str], TraditionConfig] = {}


def _register(cfg: TraditionConfig) -> TraditionConfig:
    _REGISTRY[(cfg.id, cfg.epoch)] = cfg
    return cfg


PHUGPA_E806 = _register(TraditionConfig(
    id="phugpa", epoch="E806", epoch_jd=2015501, year0=806,
    m0=2015501 + Fraction(4783, 5656), m1=_M1, m2=_M1 / 30,
    s0=Fraction(743, 804), s1=_S1, s2=_S1 / 30,
    a0=Fraction(475, 3528), a1=_A1, a2=_A2,
    beta_x=61, beta=123, leap_window=(48, 49),
    leap_month_numbering=FOLLOWS_NEXT,
    p1=Fraction(77, 90), rahu_rd0=None,
))

PHUGPA_E1927 = _register(TraditionConfig(
    id="phugpa", epoch="E1927", epoch_jd=2424972, year0=1927,
    m0=2424972 + Fraction(5457, 5656), m1=_M1, m2=_M1 / 30,
    s0=Fraction(749, 804), s1=_S1, s2=_S1 / 30,
    a0=Fraction(1741, 3528), a1=_A1, a2=_A2,
    beta_x=55, beta=129, leap_window=(48, 49),
    leap_month_numbering=FOLLOWS_NEXT,
    p1=Fraction(77, 90), rahu_rd0=187,
))

PHUGPA_E1987 = _register(TraditionConfig(
    id="phugpa", epoch="E1987", epoch_jd=2446914, year0=1987,
    m0=2446914 + Fraction(135, 707), m1=_M1, m2=_M1 / 30,
    s0=Fraction(0), s1=_S1, s2=_S1 / 30,
    a0=Fraction(38, 49), a1=_A1, a2=_A2,
    beta_x=0, beta=184, leap_window=(48, 49),
    leap_month_numbering=FOLLOWS_NEXT,
    p1=Fraction(77, 90), rahu_rd0=10,
))

TSURPHU_E1732 = _register(TraditionConfig(
    id="tsurphu", epoch="E1732", epoch_jd=2353745, year0=1732,
    m0=2353745 + Fraction(1795153, 7635600), m1=_M1, m2=_M1 / 30,
    s0=Fraction(-5983, 108540), s1=_S1, s2=_S1 / 30,
    a0=Fraction(207, 392), a1=_A1, a2=_A2,
    beta_x=59, beta=142, leap_window=(0, 1),
    leap_month_numbering=FOLLOWS_NEXT,
    p1=Fraction(307, 360), rahu_rd0=None,
))

TSURPHU_E1852 = _register(TraditionConfig(
    id="tsurphu", epoch="E1852", epoch_jd=2397598, year0=1852,
    m0=2397598 + Fraction(1197103, 7635600), m1=_M1, m2=_M1 / 30,
    s0=Fraction(23, 27135), s1=_S1, s2=_S1 / 30,
    a0=Fraction(1, 49), a1=_A1, a2=_A2,
    beta_x=14, beta=187, leap_window=(0, 1),
    leap_month_numbering=FOLLOWS_NEXT,
    p1=Fraction(307, 360), rahu_rd0=None,
))

MONGOLIA_E1747 = _register(TraditionConfig(
    id="mongolia", epoch="E1747", epoch_jd=2359237, year0=1747,
    m0=2359237 + Fraction(2603, 2828), m1=_M1, m2=_M1 / 30,
    s0=Fraction(397, 402), s1=_S1, s2=_S1 / 30,
    a0=Fraction(1523, 1764), a1=_A1, a2=_A2,
    beta_x=10, beta=172, leap_window=(46, 47),
    leap_month_numbering=FOLLOWS_NEXT,
    p1=Fraction(463, 540), rahu_rd0=None,
))

BHUTAN_E1754 = _register(TraditionConfig(
    id="bhutan", epoch="E1754", epoch_jd=2361807, year0=1754,
    m0=2361807 + Fraction(52, 707), m1=_M1, m2=_M1 / 30,
    s0=Fraction(1, 67), s1=_S1, s2=_S1 / 30,
    a0=Fraction(17, 147), a1=_A1, a2=_A2,
    beta_x=2, beta=191, leap_window=(59, 60),
    leap_month_numbering=FOLLOWS_PREVIOUS,
    p1=Fraction(103, 120), rahu_rd0=None, weekday_name_offset=1,
))

_M1K = Fraction(10631, 360)
_S1K = Fraction(1277, 15795)

KARANA_E806 = _register(TraditionConfig(
    id="karana", epoch="E806", epoch_jd=2015531, year0=806,
    m0=2015531 + Fraction(1, 2), m1=_M1K, m2=_M1K / 30,
    s0=Fraction(809, 810), s1=_S1K, s2=_S1K / 30,
    a0=Fraction(53, 252), a1=_A1, a2=_A2,
    beta_x=0, beta=199, leap_window=(63, 64),
    leap_month_numbering=FOLLOWS_PREVIOUS,
    p1=Fraction(5, 6), rahu_rd0=None,
))

DEFAULT_EPOCH = {
    "phugpa": "E1987",
    "tsurphu": "E1852",
    "mongolia": "E1747",
    "bhutan": "E1754",
    "karana": "E806",
}

TRADITION_IDS = ("phugpa", "tsurphu", "mongolia", "bhutan", "karana")


def get_tradition(name: str, epoch: Optional[str] = None,
                  exact_a2: bool = False) -> TraditionConfig:
    """Look up a tradition by id and optional epoch (default: latest)."""
    name = name.lower()
    if name == "mongol":
        name = "mongolia"
    if name not in DEFAULT_EPOCH:
        raise KeyError(f"unknown tradition {name!r}; "
                       f"known: {', '.join(TRADITION_IDS)}")
    key = (name, epoch or DEFAULT_EPOCH[name])
    if key not in _REGISTRY:
        known = sorted(e for t, e in _REGISTRY if t == name)
        raise KeyError(f"unknown epoch {epoch!r} for {name}; known: {known}")
    cfg = _REGISTRY[key]
    return cfg.with_exact_a2() if exact_a2 else cfg


def epochs_of(name: str) -> list[str]:
    return sorted(e for t, e in _REGISTRY if t == name)


def shift_epoch(cfg: TraditionConfig, k: int) -> TraditionConfig:
    """Equivalent config whose month count is rebased by k true months.

    The month with count k in `cfg` becomes count 0; its label year becomes
    the new epoch year.  Solar longitude and anomaly keep only their
    fractional parts (the stored s0 is an angle; definition-point code
    renormalizes as needed).  The result produces the identical calendar.
    """
    from .months import month_from_count  # cycle: months needs configs

    if k == 0:
        return cfg
    label = month_from_count(cfg, k)
    year0 = label.year
    beta = cfg.beta + 65 * k - 804 * (year0 - cfg.year0)
    beta_x = (cfg.beta_x + 24 * (year0 - cfg.year0)) % 65
    m0 = cfg.m0 + k * cfg.m1
    return replace(
        cfg,
        epoch=f"{cfg.epoch}{k:+d}m",
        epoch_jd=m0.numerator // m0.denominator,
        year0=year0,
        m0=m0,
        s0=frac(cfg.s0 + k * cfg.s1),
        a0=frac(cfg.a0 + k * cfg.a1),
        beta=beta,
        beta_x=beta_x,
    )


def definition_points(cfg: TraditionConfig) -> list[Rational]:
    """The 12 definition-point longitudes p_1..p_12, reduced mod 1."""
    return [frac(cfg.p0 + Fraction(m, 12)) for m in range(1, 13)]


def _parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def load_tradition_file(path: str) -> TraditionConfig:
    """Register a custom tradition from a JSON file.

    Fraction-valued fields are strings like "167025/5656"; see README for
    the schema.  The config is returned and added to the registry under
    its id and epoch.
    """
    with open(path) as fh:
        raw = json.load(fh)
    numbering = raw.get("leap_month_numbering", FOLLOWS_NEXT)
    if numbering not in (FOLLOWS_NEXT, FOLLOWS_PREVIOUS):
        raise ValueError(f"bad leap_month_numbering {numbering!r}")
    m0 = _parse_rational(raw["m0"])
    m1 = _parse_rational(raw["m1"])
    s1 = _parse_rational(raw["s1"])
    a1 = _parse_rational(raw["a1"])
    cfg = TraditionConfig(
        id=raw["id"], epoch=raw.get("epoch", "custom"),
        epoch_jd=m0.numerator // m0.denominator,
        year0=int(raw["year0"]),
        m0=m0, m1=m1, m2=_parse_rational(raw.get("m2", m1 / 30)),
        s0=_parse_rational(raw["s0"]), s1=s1,
        s2=_parse_rational(raw.get("s2", s1 / 30)),
        a0=_parse_rational(raw["a0"]), a1=a1,
        a2=_parse_rational(raw.get("a2", "1/28")),
        beta_x=int(raw["beta_x"]), beta=int(raw["beta"]),
        leap_window=tuple(raw["leap_window"]),
        leap_month_numbering=numbering,
        p1=_parse_rational(raw["p1"]),
        rahu_rd0=raw.get("rahu_rd0"),
        weekday_name_offset=int(raw.get("weekday_name_offset", 0)),
    )
    _REGISTRY[(cfg.id, cfg.epoch)] = cfg
    DEFAULT_EPOCH.setdefault(cfg.id, cfg.epoch)
    return cfg
