"""Elemental and cyclical attributes for years, months, lunar days and
calendar days: elements, animals, genders, trigrams, nine numbers, and the
elemental yoga of weekday and mansion.

Everything here is cyclic arithmetic over the tables in tables.py; the
formulas are the primary encoding and the published cycle tables are used
as cross-checks in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import amod
from . import tables


@dataclass(frozen=True)
class ElementSet:
    power: str
    life: str
    body: str
    fortune: str
    spirit: str


@dataclass(frozen=True)
class Trigram:
    index: int        # 1..8, King Wen order
    name: str
    chinese: str
    direction: str
    element: str


@dataclass(frozen=True)
class NineNumber:
    value: int        # 1..9
    colour: str
    element: str
    direction: str


def trigram(index: int) -> Trigram:
    i = amod(index, 8)
    return Trigram(i, tables.TRIGRAMS[i - 1], tables.TRIGRAM_CHINESE[i - 1],
                   tables.TRIGRAM_DIRECTION[i - 1],
                   tables.TRIGRAM_ELEMENT[i - 1])


def nine_number(value: int) -> NineNumber:
    v = amod(value, 9)
    return NineNumber(v, tables.NINE_COLOUR[v - 1], tables.NINE_ELEMENT[v - 1],
                      tables.NINE_DIRECTION[v - 1])


def _element_number(name: str) -> int:
    return tables.ELEMENTS.index(name) + 1


def year_power_element(year: int) -> str:
    z = amod(year - 3, 10)
    return tables.ELEMENTS[(z + 1) // 2 - 1]


def year_animal_index(year: int) -> int:
    """Position 1..12 in the animal cycle (1 = Mouse)."""
    return amod(year - 3, 12)


def year_elements(year: int) -> ElementSet:
    """The power, life, body, fortune and spirit elements of a year."""
    a = year_animal_index(year)
    power = year_power_element(year)
    x = tables.BODY_X_NUMBER[amod(year - 3, 6) - 1]
    body = tables.BODY_FROM_DIFF[(_element_number(power) - x) % 5]
    return ElementSet(
        power=power,
        life=tables.LIFE_ELEMENT[a - 1],
        body=body,
        fortune=tables.FORTUNE_ELEMENT[amod(year - 3, 4) - 1],
        spirit=tables.SPIRIT_ELEMENT[a - 1],
    )


def year_numbers(year: int) -> tuple[int, int, int]:
    """(central, life, power) nine-numbers of a year."""
    central = amod(2 - year, 9)
    return central, amod(central - 3, 9), amod(central + 3, 9)


def month_attributes(style: str, year: int, month: int):
    """(animal, gender, element, nine_number or None) of a month.

    style is "phugpa" or "tsurphu"; leap months take the regular month's
    attributes.  Only the Tsurphu style assigns nine numbers to months.
    """
    if not 1 <= month <= 12:
        raise ValueError(f"month must be 1..12, got {month}")
    if style == "phugpa":
        a = tables.month_animal_phugpa(month)
        if month <= 10:
            e = amod(-(-(year - 1) // 2) + (month + 1) // 2, 5)
        else:
            e = amod(-(-year // 2) + (month - 11) // 2, 5)
        number = None
    elif style == "tsurphu":
        a = tables.month_animal_tsurphu(month)
        e = amod(year - 2 + (month - 1) // 2, 5)
        number = amod(3 - (12 * year + month), 9)
    else:
        raise ValueError(f"unknown month-attribute style {style!r}")
    gender = "male" if month % 2 == 1 else "female"
    return tables.ANIMALS[a - 1], gender, tables.ELEMENTS[e - 1], number


def lunar_day_attributes(style: str, year: int, month: int, day: int):
    """(animal, element, trigram, nine_number) of lunar day `day`."""
    if not 1 <= day <= 30:
        raise ValueError(f"day must be 1..30, got {day}")
    animal_idx = amod(day + 6 * month + 8, 12)
    month_animal, _, month_element, _ = month_attributes(style, year, month)
    a = tables.ANIMALS.index(month_animal) + 1
    x = _element_number(month_element)
    return (
        tables.ANIMALS[animal_idx - 1],
        tables.ELEMENTS[amod(x + day, 5) - 1],
        trigram(day + 6 * a + 6),
        nine_number(day + 3 * a),
    )


def calendar_day_attributes(jd: int):
    """(element, gender, animal, trigram, nine_number, ElementSet) of a
    calendar day, all determined by its Julian day number."""
    element = tables.ELEMENTS[amod(-(-jd // 2), 5) - 1]
    gender = "male" if jd % 2 == 1 else "female"
    animal = tables.ANIMALS[amod(jd + 2, 12) - 1]
    tri = trigram(jd + 2)
    number = nine_number(-jd)
    # full element set: same 60-cycle as years, anchored by (jd - 10)
    sixty = year_elements(amod(jd - 10, 60) + 3)
    return element, gender, animal, tri, number, sixty


def elemental_yoga(weekday: int, mansion: int) -> str:
    """Name of the unordered pairing of weekday and mansion elements."""
    if not 0 <= weekday <= 6 or not 0 <= mansion <= 26:
        raise ValueError(f"bad weekday/mansion ({weekday}, {mansion})")
    pair = frozenset([tables.WEEKDAY_ELEMENT[weekday],
                      tables.MANSION_ELEMENTS[mansion]])
    return tables.ELEMENTAL_YOGA_NAMES[pair]
