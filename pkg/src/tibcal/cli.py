"""Command-line interface: date conversion, New Year and leap-month
queries, almanac generation, planetary tables, attribute lookup, and
cross-tradition comparison.

Exit codes: 0 success, 2 usage error, 3 domain error (unknown tradition,
malformed or skipped date).  Tibetan dates are written
YYYY-MM-DD with an L suffix on the month for a leap month and an a/b
suffix on the day for the first/second of a repeated pair, e.g.
2000-01L-05 or 2012-01-05a.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction

from . import almanac, astrology, cycles, days, planets, tables
from .exact import frac, to_mixed_radix
from .gregorian import (CivilDate, gregorian_to_jd, jd_to_civil, julian_to_jd)
from .months import (MonthLabel, is_leap_month, leap_month_of_year,
                     months_of_year, true_month)
from .traditions import (TRADITION_IDS, TraditionConfig, get_tradition,
                         load_tradition_file)

USAGE_ERROR = 2
DOMAIN_ERROR = 3


class DomainError(Exception):
    pass


_TIB_RE = re.compile(r"^(-?\d{1,5})-(\d{1,2})(L?)-(\d{1,2})([ab]?)$")


def parse_tibetan(text: str) -> days.TibetanDate:
    m = _TIB_RE.match(text)
    if not m:
        raise DomainError(f"malformed Tibetan date {text!r} "
                          "(expected YYYY-MM[L]-DD[a|b])")
    year, month, leap_m, day, rep = m.groups()
    return days.TibetanDate(
        MonthLabel(int(year), int(month), leap_m == "L"),
        int(day), rep == "a")


def parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    y = int(text)
    return y, y


def parse_day_arg(text: str) -> int:
    """A Gregorian date YYYY-MM-DD, jd:N, or julian:YYYY-MM-DD -> JD."""
    if text.startswith("jd:"):
        return int(text[3:])
    julian = text.startswith("julian:")
    if julian:
        text = text[len("julian:"):]
    m = re.match(r"^(-?\d{1,5})-(\d{1,2})-(\d{1,2})$", text)
    if not m:
        raise DomainError(f"malformed date {text!r}")
    y, mo, d = (int(g) for g in m.groups())
    return julian_to_jd(y, mo, d) if julian else gregorian_to_jd(y, mo, d)


def _fr(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 \
        else str(f.numerator)


def _long3(x) -> str:
    """Longitude in mansions, truncated to 3 terms."""
    v = to_mixed_radix(frac(Fraction(x)), (27, 60, 60))
    return f"{v.digits[0]};{v.digits[1]},{v.digits[2]}"


def _weekday3(x) -> str:
    v = to_mixed_radix(Fraction(x) % 7, (1, 60, 60))
    return f"{v.integer_part};{v.digits[1]},{v.digits[2]}"


class Emitter:
    """Collects records with fixed field order and renders them in the
    requested format."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.rows: list[dict] = []

    def add(self, **fields):
        self.rows.append(fields)

    def render(self) -> str:
        if not self.rows:
            return ""
        if self.fmt == "jsonl":
            return "\n".join(json.dumps(r, default=str) for r in self.rows)
        headers = list(self.rows[0].keys())
        table = [[("" if r.get(h) is None else str(r.get(h)))
                  for h in headers] for r in self.rows]
        if self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(headers)
            w.writerows(table)
            return buf.getvalue().rstrip("\n")
        widths = [max(len(h), *(len(row[i]) for row in table))
                  for i, h in enumerate(headers)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
        for row in table:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
        return "\n".join(lines)


def _cfg_from_args(args) -> TraditionConfig:
    if getattr(args, "tradition_file", None):
        return load_tradition_file(args.tradition_file)
    try:
        return get_tradition(args.tradition, args.epoch,
                             exact_a2=args.exact_a2)
    except KeyError as e:
        raise DomainError(str(e))


def cmd_convert(args, out) -> int:
    cfg = _cfg_from_args(args)
    em = Emitter(args.format)
    if args.tibetan:
        date = parse_tibetan(args.tibetan)
        jd, status = days.jd_from_tibetan(cfg, date)
        civil = jd_to_civil(jd)
        em.add(tibetan=str(date), status=status, jd=jd,
               date=civil.isoformat(),
               weekday=days.weekday_name(jd),
               weekday_tibetan=days.weekday_name(jd, cfg, tibetan=True),
               year_name=str(cycles.year_name(date.year)))
        print(em.render(), file=out)
        return DOMAIN_ERROR if status == days.SKIPPED else 0
    jd = parse_day_arg(args.date)
    date = days.tibetan_from_jd(cfg, jd)
    em.add(date=jd_to_civil(jd).isoformat(), jd=jd, tibetan=str(date),
           status="repeated" if date.leap_day else "normal",
           weekday=days.weekday_name(jd),
           weekday_tibetan=days.weekday_name(jd, cfg, tibetan=True),
           year_name=str(cycles.year_name(date.year)))
    print(em.render(), file=out)
    return 0


def cmd_losar(args, out) -> int:
    cfg = _cfg_from_args(args)
    y1, y2 = parse_range(args.years)
    em = Emitter(args.format)
    for y in range(y1, y2 + 1):
        jd = days.losar(cfg, y)
        em.add(year=y, date=jd_to_civil(jd).isoformat(), jd=jd,
               weekday=days.weekday_name(jd),
               year_name=str(cycles.year_name(y)))
    print(em.render(), file=out)
    return 0


def cmd_leap_months(args, out) -> int:
    cfg = _cfg_from_args(args)
    y1, y2 = parse_range(args.years)
    em = Emitter(args.format)
    for y in range(y1, y2 + 1):
        em.add(year=y, leap_month=leap_month_of_year(cfg, y))
    print(em.render(), file=out)
    return 0


def cmd_almanac(args, out) -> int:
    cfg = _cfg_from_args(args)
    em = Emitter(args.format)
    labels = months_of_year(cfg, args.year)
    if args.month:
        labels = [lb for lb in labels if lb.month == args.month]
        if not labels:
            raise DomainError(f"no month {args.month} in {args.year}")
    for label in labels:
        hdr = almanac.month_header(cfg, label)
        first, last = days.month_bounds(cfg, label)
        if args.format == "table":
            print(f"# month {label}  true month {hdr.month_count} "
                  f"ix {hdr.intercalation_index}  "
                  f"karana ix {hdr.karana_intercalation_index}", file=out)
        for jd in range(first, last + 1):
            rec = almanac.day_record_for_jd(cfg, jd)
            em.add(date=str(rec.date), gregorian=rec.gregorian.isoformat(),
                   jd=rec.jd, status=rec.status,
                   weekday=tables.WEEKDAYS[rec.weekday],
                   true_weekday=_weekday3(rec.true_weekday),
                   zla_skar=_long3(rec.moon_long_day_start),
                   nyi_dag=_long3(rec.true_sun),
                   yoga=_long3(rec.yoga_longitude),
                   mansion=rec.mansion_name, yoga_name=rec.yoga_name,
                   karana=rec.karana.name,
                   mean_sun="" if rec.mean_sun is None else
                   str(rec.mean_sun_signs),
                   karana_zla_skar=_long3(rec.karana_moon_long_day_start))
    print(em.render(), file=out)
    return 0


def cmd_special_days(args, out) -> int:
    cfg = _cfg_from_args(args)
    em = Emitter(args.format)
    for s in almanac.special_days(cfg, args.year):
        em.add(kind=s.kind, degrees=str(s.degrees),
               date=jd_to_civil(s.jd).isoformat(), jd=s.jd,
               lunar_date=_fr(s.lunar_date), mean_date=_fr(s.mean_date))
    print(em.render(), file=out)
    return 0


def cmd_planets(args, out) -> int:
    cfg = _cfg_from_args(args)
    if ".." in args.dates:
        a, b = args.dates.split("..", 1)
        jd1, jd2 = parse_day_arg(a), parse_day_arg(b)
    else:
        jd1 = jd2 = parse_day_arg(args.dates)
    em = Emitter(args.format)
    for jd in range(jd1, jd2 + 1):
        row = {"date": jd_to_civil(jd).isoformat(), "jd": jd}
        for name in planets.PLANET_NAMES:
            pos = planets.fast_longitude(name, jd)
            r = planets.PLANETS[name].display_radix
            row[name] = str(to_mixed_radix(pos.fast_long, (27, 60, 60, 6, r)))
        date = days.tibetan_from_jd(cfg, jd)
        if cfg.rahu_rd0 is not None:
            head, _ = planets.rahu_longitudes(
                cfg, date.month.year, date.month.month, date.month.is_leap,
                date.day)
            row["rahu_head"] = str(to_mixed_radix(head, (27, 60, 60, 6, 23)))
        em.add(**row)
    print(em.render(), file=out)
    return 0


def cmd_attributes(args, out) -> int:
    cfg = _cfg_from_args(args)
    jd = parse_day_arg(args.date)
    date = days.tibetan_from_jd(cfg, jd)
    y = date.month.year
    style = "tsurphu" if cfg.id in ("tsurphu", "mongolia") else "phugpa"
    yn = cycles.year_name(y)
    ye = astrology.year_elements(y)
    cn, ln, pn = astrology.year_numbers(y)
    m_animal, m_gender, m_element, m_number = astrology.month_attributes(
        style, y, date.month.month)
    d_animal, d_element, d_trigram, d_number = astrology.lunar_day_attributes(
        style, y, date.month.month, date.day)
    element, gender, animal, tri, num, sixty = \
        astrology.calendar_day_attributes(jd)
    rec = almanac.day_record_for_jd(cfg, jd)
    em = Emitter(args.format)
    em.add(
        date=jd_to_civil(jd).isoformat(), jd=jd, tibetan=str(date),
        year_name=str(yn),
        year_elements=(f"power {ye.power}, life {ye.life}, body {ye.body}, "
                       f"fortune {ye.fortune}, spirit {ye.spirit}"),
        year_numbers=f"central {cn}, life {ln}, power {pn}",
        month=(f"{m_animal}, {m_gender}, {m_element}"
               + (f", number {m_number}" if m_number else "")),
        lunar_day=(f"{d_animal}, {d_element}, trigram {d_trigram.name}, "
                   f"number {d_number.value} ({d_number.colour})"),
        calendar_day=(f"{element}, {gender}, {animal}, trigram {tri.name}, "
                      f"number {num.value} ({num.colour})"),
        elemental_yoga=astrology.elemental_yoga(rec.weekday,
                                                rec.mansion_index),
    )
    print(em.render(), file=out)
    return 0


def cmd_compare(args, out) -> int:
    names = args.traditions.split(",")
    cfgs = []
    for t in names:
        try:
            cfgs.append(get_tradition(t.strip(), exact_a2=args.exact_a2))
        except KeyError as e:
            raise DomainError(str(e))
    y1, y2 = parse_range(args.years)
    em = Emitter(args.format)
    print("# New Year", file=out)
    for y in range(y1, y2 + 1):
        row = {"year": y}
        for cfg in cfgs:
            c = jd_to_civil(days.losar(cfg, y))
            row[cfg.id] = f"{c.day}/{c.month}"
        em.add(**row)
    print(em.render(), file=out)
    em = Emitter(args.format)
    print("# Leap months", file=out)
    for y in range(y1, y2 + 1):
        row = {"year": y}
        for cfg in cfgs:
            row[cfg.id] = leap_month_of_year(cfg, y)
        em.add(**row)
    print(em.render(), file=out)
    em = Emitter(args.format)
    print("# Repeated (+) and skipped (-) days", file=out)
    for y in range(y1, y2 + 1):
        for m in range(1, 13):
            row = {"year": y, "month": m}
            for cfg in cfgs:
                marks = []
                n = true_month(cfg, y, m, leap=False).count
                for d in range(1, 31):
                    st = days.day_status(cfg, d, n)
                    if st == days.REPEATED:
                        marks.append(str(d))
                    elif st == days.SKIPPED:
                        marks.append(f"-{d}")
                row[cfg.id] = " ".join(marks)
            em.add(**row)
    print(em.render(), file=out)
    return 0


def cmd_tables(args, out) -> int:
    dump = {
        "elements": tables.ELEMENTS,
        "element_colours": tables.ELEMENT_COLOURS,
        "animals": tables.ANIMALS,
        "animals_tibetan": tables.ANIMAL_TIBETAN,
        "ten_cycle": tables.TEN_CYCLE,
        "celestial_stems": tables.CELESTIAL_STEMS,
        "weekdays": tables.WEEKDAYS,
        "weekday_tibetan": tables.WEEKDAY_TIBETAN,
        "weekday_planet": tables.WEEKDAY_PLANET,
        "weekday_element": tables.WEEKDAY_ELEMENT,
        "month_names_tibetan": tables.MONTH_NAMES_TIBETAN,
        "month_names_sanskrit": tables.MONTH_NAMES_SANSKRIT,
        "mansions_tibetan": tables.MANSIONS_TIBETAN,
        "mansions_sanskrit": tables.MANSIONS_SANSKRIT,
        "mansion_elements": tables.MANSION_ELEMENTS,
        "yogas": tables.YOGAS,
        "karanas_changing": tables.KARANAS_CHANGING,
        "karanas_fixed": tables.KARANAS_FIXED,
        "trigrams": tables.TRIGRAMS,
        "trigram_direction": tables.TRIGRAM_DIRECTION,
        "trigram_element": tables.TRIGRAM_ELEMENT,
        "nine_colour": tables.NINE_COLOUR,
        "nine_element": tables.NINE_ELEMENT,
        "nine_direction": tables.NINE_DIRECTION,
        "magic_square": tables.MAGIC_SQUARE,
        "life_element": tables.LIFE_ELEMENT,
        "spirit_element": tables.SPIRIT_ELEMENT,
        "fortune_element": tables.FORTUNE_ELEMENT,
        "prabhava_names": tables.PRABHAVA_NAMES,
        "elemental_yoga_names": {
            "+".join(sorted(k)): v
            for k, v in tables.ELEMENTAL_YOGA_NAMES.items()},
        "planet_constants": {
            name: {"R": s.R, "pd0": s.pd0, "r": s.display_radix,
                   "birth_sign": _fr(s.birth_sign),
                   "multiplier": s.multiplier}
            for name, s in planets.PLANETS.items()},
    }
    for key in dump:
        print(f"{key}: {json.dumps(dump[key], default=str)}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tibcal",
        description="Tibetan calendar computations in exact arithmetic")
    p.add_argument("--tradition", "-t",
                   default=os.environ.get("TIBCAL_TRADITION", "phugpa"),
                   help="phugpa, tsurphu, mongolia, bhutan or karana "
                        "(env TIBCAL_TRADITION)")
    p.add_argument("--epoch", default=None, help="epoch id, e.g. E1987")
    p.add_argument("--exact-a2", action="store_true",
                   help="use the exact daily anomaly increment 3781/105840")
    p.add_argument("--tradition-file", default=None,
                   help="JSON file registering a custom tradition")
    p.add_argument("--format", choices=("table", "csv", "jsonl"),
                   default="table")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("convert", help="convert a single date")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--tibetan", help="Tibetan date YYYY-MM[L]-DD[a|b]")
    g.add_argument("--date", help="Gregorian YYYY-MM-DD, julian:..., jd:N")
    c.set_defaults(func=cmd_convert)

    c = sub.add_parser("losar", help="New Year dates")
    c.add_argument("years", help="year or range Y1..Y2")
    c.set_defaults(func=cmd_losar)

    c = sub.add_parser("leap-months", help="leap months per year")
    c.add_argument("years", help="year or range Y1..Y2")
    c.set_defaults(func=cmd_leap_months)

    c = sub.add_parser("almanac", help="daily almanac for a year")
    c.add_argument("year", type=int)
    c.add_argument("--month", type=int, default=None)
    c.set_defaults(func=cmd_almanac)

    c = sub.add_parser("special-days", help="mean-sun special days")
    c.add_argument("year", type=int)
    c.set_defaults(func=cmd_special_days)

    c = sub.add_parser("planets", help="planet longitudes per day")
    c.add_argument("dates", help="date or range DATE..DATE")
    c.set_defaults(func=cmd_planets)

    c = sub.add_parser("attributes", help="astrological attributes of a day")
    c.add_argument("date", help="Gregorian YYYY-MM-DD, julian:..., jd:N")
    c.set_defaults(func=cmd_attributes)

    c = sub.add_parser("compare", help="cross-tradition comparison tables")
    c.add_argument("--traditions", default="phugpa,tsurphu,mongolia,bhutan")
    c.add_argument("years", help="year or range Y1..Y2")
    c.set_defaults(func=cmd_compare)

    c = sub.add_parser("tables", help="dump all built-in constant tables")
    c.set_defaults(func=cmd_tables)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return DOMAIN_ERROR
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
