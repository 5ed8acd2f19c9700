"""Exact-arithmetic computation engine for the Tibetan calendar.

Supports the Phugpa, Tsurphu, Mongolian (New Genden), Bhutanese and
Karana versions: month numbering and leap months, the lunar-day to
calendar-day mapping with repeated and skipped days, almanac quantities,
planetary longitudes and astrological attributes.  Every computation is
carried out in exact rational arithmetic.
"""

from .exact import (MixedRadixValue, Rational, amod, floor_frac, frac,
                    from_mixed_radix, mixed, mod, to_mixed_radix)
from .cycles import YearName, year_name, year_from_prabhava, prabhava_name_table
from .traditions import (TraditionConfig, definition_points, get_tradition,
                         load_tradition_file, shift_epoch)
from .months import (MonthLabel, TrueMonth, dp_month_assign, is_leap_month,
                     is_leap_year, leap_month_of_year, leap_years_in_range,
                     month_from_count, months_of_year, solar_month_count,
                     true_month)
from .astro import (anomaly_moon, mean_date, mean_sun, moon_equ, semi_true_date,
                    sun_equ, true_date, true_sun)
from .days import (NORMAL, REPEATED, SKIPPED, TibetanDate, calendar_map,
                   day_of_week, day_status, holiday_day, jd_from_tibetan,
                   losar, month_bounds, tibetan_from_jd, weekday_name,
                   year_length)
from .almanac import (AlmanacDayRecord, MonthHeader, SpecialDay,
                      bhutan_winter_solstice, day_record, day_record_for_jd,
                      karana_of_halfday, month_header, special_days)
from .planets import (PlanetPosition, fast_longitude, general_day,
                      particular_day, rahu_longitudes)
from .astrology import (ElementSet, calendar_day_attributes, elemental_yoga,
                        lunar_day_attributes, month_attributes, year_elements,
                        year_numbers)
from .gregorian import gregorian_to_jd, jd_to_civil, julian_to_jd

__version__ = "0.1.0"
