"""Year numbering and naming: the Chinese and Indian (Prabhava) 60-year
cycles and their 10- and 12-year subcycles.

Years are labelled by the Gregorian (or Julian) year in which the Tibetan
year starts.  The regnal numbering from the epoch 127 BC is exposed as a
derived display field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import amod
from . import tables


@dataclass(frozen=True)
class YearName:
    year: int
    element: str
    gender: str
    animal: str
    animal_tibetan: str
    prabhava_tibetan: str
    prabhava_sanskrit: str
    chinese_cycle_index: int      # 1..60, cycles start 3 years before Indian
    prabhava_cycle_number: int    # >= 1; cycle 1 starts AD 1027
    prabhava_year_index: int      # 1..60

    @property
    def regnal_year(self) -> int:
        """Years counted from the traditional royal epoch 127 BC."""
        return self.year + 127

    @property
    def colour(self) -> str:
        return tables.ELEMENT_COLOURS[self.element]

    def __str__(self) -> str:
        return f"{self.element.capitalize()}-{self.gender}-{self.animal}"


def year_name(year: int) -> YearName:
    """Element, gender, animal and cycle names of a Gregorian-numbered year."""
    z60 = amod(year - 3, 60)
    z10 = amod(year - 3, 10)
    z12 = amod(year - 3, 12)
    element, gender = tables.TEN_CYCLE[z10 - 1]
    n = amod(year - 1026, 60)
    m = -((-(year - 1026)) // 60)  # ceil((Y-1026)/60)
    tib, skt = tables.PRABHAVA_NAMES[n - 1]
    return YearName(
        year=year,
        element=element,
        gender=gender,
        animal=tables.ANIMALS[z12 - 1],
        animal_tibetan=tables.ANIMAL_TIBETAN[z12 - 1],
        prabhava_tibetan=tib,
        prabhava_sanskrit=skt,
        chinese_cycle_index=z60,
        prabhava_cycle_number=m,
        prabhava_year_index=n,
    )


def year_from_prabhava(cycle: int, index: int) -> int:
    """Gregorian year of year `index` (1..60) in Prabhava cycle `cycle`."""
    if not 1 <= index <= 60:
        raise ValueError(f"prabhava year index must be 1..60, got {index}")
    return 1027 + (cycle - 1) * 60 + (index - 1)


def prabhava_name_table() -> tuple[tuple[str, str], ...]:
    """The 60 (Tibetan, Sanskrit) name pairs of the Indian cycle."""
    return tables.PRABHAVA_NAMES
