"""Open rational intervals around irrational targets.

An :class:`Enclosure` (lo, hi) asserts lo < v < hi for an unknown v. Floor
and ceiling are extracted only when every point of the interval agrees, so
an answer is either certified or refused with :class:`AmbiguousEnclosure`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import RationalLike, as_rational, decimal_round, decimal_truncate

__all__ = [
    "AmbiguousEnclosure",
    "Enclosure",
    "certified_ceiling",
    "certified_decimal",
    "certified_floor",
    "map_affine",
    "subtract",
    "width",
]


def _short(q: Fraction) -> str:
    if q.numerator.bit_length() + q.denominator.bit_length() < 200:
        return str(q)
    try:
        return f"~{float(q):.17g}"
    except OverflowError:
        return f"~2**{q.numerator.bit_length() - q.denominator.bit_length()}"


class AmbiguousEnclosure(ArithmeticError):
    """The enclosure is too wide to determine the requested quantity."""


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    def __init__(self, lo: RationalLike, hi: RationalLike):
        lo, hi = as_rational(lo), as_rational(hi)
        if not lo < hi:
            raise ValueError(f"enclosure needs lo < hi, got ({_short(lo)}, {_short(hi)})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: RationalLike) -> bool:
        return self.lo < as_rational(x) < self.hi

    def within(self, lo: RationalLike, hi: RationalLike) -> bool:
        """True when (self.lo, self.hi) is a subset of the open interval (lo, hi)."""
        return as_rational(lo) <= self.lo and self.hi <= as_rational(hi)

    def ceiling(self) -> int:
        c = math.ceil(self.lo)
        if c == self.lo:
            c += 1
        if self.hi > c:
            raise AmbiguousEnclosure(f"ceiling undetermined on {self!r}")
        return c

    def floor(self) -> int:
        c = math.floor(self.lo)
        if self.hi > c + 1:
            raise AmbiguousEnclosure(f"floor undetermined on {self!r}")
        return c

    def map_affine(self, scale: int, offset: RationalLike = 0) -> Enclosure:
        if scale < 1:
            raise ValueError("map_affine needs scale >= 1")
        offset = as_rational(offset)
        return Enclosure(scale * self.lo + offset, scale * self.hi + offset)

    def __sub__(self, other: Enclosure) -> Enclosure:
        return Enclosure(self.lo - other.hi, self.hi - other.lo)

    def __repr__(self) -> str:
        return f"Enclosure({_short(self.lo)}, {_short(self.hi)})"


def certified_ceiling(e: Enclosure) -> int:
    return e.ceiling()


def certified_floor(e: Enclosure) -> int:
    return e.floor()


def map_affine(e: Enclosure, scale: int, offset: RationalLike = 0) -> Enclosure:
    return e.map_affine(scale, offset)


def subtract(e1: Enclosure, e2: Enclosure) -> Enclosure:
    return e1 - e2


def width(e: Enclosure) -> Fraction:
    return e.width


def certified_decimal(e: Enclosure, d: int, rounding: str = "truncate") -> str:
    """Render the enclosed value with d fractional digits.

    Both endpoints must render identically, otherwise AmbiguousEnclosure.
    ``rounding`` is "truncate" or "nearest" (round half up).
    """
    render = {"truncate": decimal_truncate, "nearest": decimal_round}[rounding]
    lo, hi = render(e.lo, d).text, render(e.hi, d).text
    if lo != hi:
        raise AmbiguousEnclosure(f"{d} digits not certified: {lo} vs {hi}")
    return lo
