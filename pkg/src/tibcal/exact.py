"""Exact rational arithmetic and mixed-radix notation.

Every quantity in the computation core (dates, longitudes, anomalies) is a
rational number; nothing ever touches floating point.  ``Rational`` is an
alias for :class:`fractions.Fraction`, which already keeps fractions in
lowest terms with a positive denominator and uses arbitrary-precision
integers throughout.

Traditional almanac quantities are written as digit columns in a positional
system with mixed radices, e.g. ``29;31,50,0,480 <60,60,6,707>`` meaning
``29 + (31 + (50 + (0 + 480/707)/6)/60)/60``.  :class:`MixedRadixValue`
models that notation and converts to and from ``Rational`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Rational = Fraction


def mod(m, n):
    """m mod n with the result in [0, n); works for ints and Rationals.

    Negative operands follow the mathematical convention (Python's own),
    not C-style truncation.
    """
    if n <= 0:
        raise ValueError(f"modulus must be positive, got {n}")
    return m % n


def amod(m: int, n: int) -> int:
    """m amod n: the representative of m mod n lying in (0, n]."""
    if n <= 0:
        raise ValueError(f"modulus must be positive, got {n}")
    r = m % n
    return n if r == 0 else r


def floor_frac(x) -> tuple[int, Fraction]:
    """Split x into (floor(x), fractional part), exact for negatives too."""
    x = Fraction(x)
    i = x.numerator // x.denominator
    return i, x - i


def frac(x) -> Fraction:
    """Fractional part of x, always in [0, 1)."""
    return floor_frac(x)[1]


@dataclass(frozen=True)
class MixedRadixValue:
    """A number a0;a1,...,an <b1,...,bn> in mixed-radix notation.

    Digits are normalized on construction by carrying overflow upward
    (75 with radix 60 becomes 15 carry 1), so the invariant
    ``digits[i] < radices[i]`` always holds afterwards.
    """

    integer_part: int
    digits: tuple[int, ...]
    radices: tuple[int, ...]

    def __init__(self, integer_part: int, digits: Sequence[int],
                 radices: Sequence[int]):
        digits = list(digits)
        radices = tuple(radices)
        if len(digits) != len(radices):
            raise ValueError("digits and radices must have equal length")
        if any(b < 1 for b in radices):
            raise ValueError(f"radices must be >= 1, got {radices}")
        if any(d < 0 for d in digits):
            raise ValueError(f"negative digit in {digits}")
        carry = 0
        for i in range(len(digits) - 1, -1, -1):
            d = digits[i] + carry
            carry, digits[i] = divmod(d, radices[i])
        object.__setattr__(self, "integer_part", integer_part + carry)
        object.__setattr__(self, "digits", tuple(digits))
        object.__setattr__(self, "radices", radices)

    def __str__(self) -> str:
        ds = ",".join(str(d) for d in self.digits)
        bs = ",".join(str(b) for b in self.radices)
        return f"{self.integer_part};{ds} <{bs}>"


def from_mixed_radix(v: MixedRadixValue) -> Fraction:
    """Exact value a0 + (a1 + (a2 + ...)/b2)/b1."""
    acc = Fraction(0)
    for d, b in zip(reversed(v.digits), reversed(v.radices)):
        acc = (d + acc) / b
    return v.integer_part + acc


def mixed(integer_part: int, digits: Sequence[int],
          radices: Sequence[int]) -> Fraction:
    """Shorthand: build a MixedRadixValue and return its Rational value."""
    return from_mixed_radix(MixedRadixValue(integer_part, digits, radices))


def to_mixed_radix(x, radices: Sequence[int]) -> MixedRadixValue:
    """Encode x by successive multiply-and-floor over the given radices.

    If x is not exactly representable the remainder past the last digit is
    dropped (almanacs truncate rather than round).
    """
    radices = tuple(radices)
    if not radices:
        raise ValueError("radices must be non-empty")
    i, r = floor_frac(Fraction(x))
    digits = []
    for b in radices:
        r *= b
        d, r = floor_frac(r)
        digits.append(d)
    return MixedRadixValue(i, digits, radices)
