"""Exact rationals, integer roots and digit rendering.

``fractions.Fraction`` is the rational type: it keeps a positive denominator
and reduces after every operation, which is all the core needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

BigRational = Fraction
RationalLike = Union[int, str, Fraction]

__all__ = [
    "BigRational",
    "DecimalString",
    "RootEnclosure",
    "as_rational",
    "decimal_round",
    "decimal_truncate",
    "fraction_str",
    "integer_nth_root_floor",
    "root_enclosure",
]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or string ("3/7", "1.25") to a Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def fraction_str(q: Fraction) -> str:
    """Lossless "numerator/denominator" form used in machine output."""
    return f"{q.numerator}/{q.denominator}"


def integer_nth_root_floor(x: int, k: int) -> int:
    """Largest r >= 0 with r**k <= x."""
    if x < 0:
        raise ValueError("integer_nth_root_floor needs x >= 0")
    if k < 1:
        raise ValueError("integer_nth_root_floor needs k >= 1")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return math.isqrt(x)
    if x.bit_length() <= k:
        return 1
    # Float estimate good to ~50 bits, nudged upward: Newton on integers
    # started above the root decreases monotonically to it.
    log_root = math.log2(x) / k
    shift = max(0, int(log_root) - 50)
    r = (int(2.0 ** (log_root - shift) * (1 + 2.0**-40)) + 1) << shift
    while r ** k <= x:
        r *= 2
    while True:
        nxt = ((k - 1) * r + x // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


class RootEnclosure(NamedTuple):
    lo: Fraction
    hi: Fraction
    exact: bool


def root_enclosure(x: int, k: int, d: int) -> RootEnclosure:
    """Bounds lo < x**(1/k) < hi with denominator 10**d and hi - lo <= 10**-d.

    A perfect k-th power r**k yields (r - 10**-d, r + 10**-d), clipped at 0,
    with ``exact`` set.
    """
    if x < 1:
        raise ValueError("root_enclosure needs x >= 1")
    if k < 1 or d < 0:
        raise ValueError("root_enclosure needs k >= 1 and d >= 0")
    scale = 10 ** d
    scaled = x * scale ** k
    r = integer_nth_root_floor(scaled, k)
    if r ** k == scaled:
        return RootEnclosure(
            max(Fraction(r - 1, scale), Fraction(0)), Fraction(r + 1, scale), True
        )
    return RootEnclosure(Fraction(r, scale), Fraction(r + 1, scale), False)


@dataclass(frozen=True)
class DecimalString:
    """Rendered decimal "I.F"; ``digits`` is the fractional digit count."""

    text: str
    digits: int

    def __str__(self) -> str:
        return self.text


def _render(scaled: int, d: int) -> DecimalString:
    if d == 0:
        return DecimalString(str(scaled), 0)
    whole, frac = divmod(scaled, 10 ** d)
    return DecimalString(f"{whole}.{frac:0{d}d}", d)


def decimal_truncate(q: RationalLike, d: int) -> DecimalString:
    """floor(q * 10**d) / 10**d written with exactly d fractional digits."""
    q = as_rational(q)
    if q < 0:
        raise ValueError("decimal_truncate needs q >= 0")
    if d < 0:
        raise ValueError("digit count must be >= 0")
    return _render(math.floor(q * 10 ** d), d)


def decimal_round(q: RationalLike, d: int) -> DecimalString:
    """Round-half-up to d fractional digits."""
    q = as_rational(q)
    if q < 0:
        raise ValueError("decimal_round needs q >= 0")
    if d < 0:
        raise ValueError("digit count must be >= 0")
    return _render(math.floor(q * 10 ** d + Fraction(1, 2)), d)
