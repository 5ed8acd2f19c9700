"""Julian day number conversions to and from Western calendar dates.

JD here is the integer Julian day number (a continuous count of days),
not the fractional astronomical Julian date.  Civil output follows the
historiographical convention: Gregorian for JD >= 2299161 (15 October
1582), Julian calendar before that.
"""

from __future__ import annotations

from dataclasses import dataclass

GREGORIAN_START_JD = 2299161


@dataclass(frozen=True)
class CivilDate:
    year: int
    month: int
    day: int
    calendar: str  # "gregorian" or "julian"

    def isoformat(self) -> str:
        suffix = " (Julian)" if self.calendar == "julian" else ""
        return f"{self.year:04d}-{self.month:02d}-{self.day:02d}{suffix}"


def gregorian_to_jd(year: int, month: int, day: int) -> int:
    a = (14 - month) // 12
    y = year + 4800 - a
    m = month + 12 * a - 3
    return (day + (153 * m + 2) // 5 + 365 * y + y // 4 - y // 100
            + y // 400 - 32045)


def julian_to_jd(year: int, month: int, day: int) -> int:
    a = (14 - month) // 12
    y = year + 4800 - a
    m = month + 12 * a - 3
    return day + (153 * m + 2) // 5 + 365 * y + y // 4 - 32083


def jd_to_gregorian(jd: int) -> tuple[int, int, int]:
    a = jd + 32044
    b = (4 * a + 3) // 146097
    c = a - 146097 * b // 4
    d = (4 * c + 3) // 1461
    e = c - 1461 * d // 4
    m = (5 * e + 2) // 153
    day = e - (153 * m + 2) // 5 + 1
    month = m + 3 - 12 * (m // 10)
    year = 100 * b + d - 4800 + m // 10
    return year, month, day


def jd_to_julian(jd: int) -> tuple[int, int, int]:
    b = 0
    c = jd + 32082
    d = (4 * c + 3) // 1461
    e = c - 1461 * d // 4
    m = (5 * e + 2) // 153
    day = e - (153 * m + 2) // 5 + 1
    month = m + 3 - 12 * (m // 10)
    year = 100 * b + d - 4800 + m // 10
    return year, month, day


def jd_to_civil(jd: int) -> CivilDate:
    """Gregorian from 15 Oct 1582 onward, Julian calendar before."""
    if jd >= GREGORIAN_START_JD:
        y, m, d = jd_to_gregorian(jd)
        return CivilDate(y, m, d, "gregorian")
    y, m, d = jd_to_julian(jd)
    return CivilDate(y, m, d, "julian")
