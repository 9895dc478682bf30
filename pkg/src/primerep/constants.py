"""Prime-representing constants of the floor and ceiling families.

For a family offset t (1 for the floor family f, 2 for the ceiling family h)
the constant at index n is

    v_n = sum_{k>=n} (p_k - t) / (p_n p_{n+1} ... p_{k-1})

with p_n - 1 < h_n < p_n and p_n < f_n < p_n + 1. Consecutive constants are
tied by v_{n+1} = p_n (v_n - p_n + t), which is how the whole prime sequence
is regenerated from a single enclosure of v_1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .enclosure import AmbiguousEnclosure, Enclosure, certified_decimal
from .primes import default_table, nth_prime, primorial

__all__ = [
    "ConstantSpec",
    "Family",
    "PartialSum",
    "RecursionTrace",
    "TraceStatus",
    "TraceStep",
    "backward_refine",
    "constant_digits",
    "decimal_window",
    "digits_of_precision",
    "difference_dn",
    "forward_generate",
    "partial_sum",
    "required_terms",
    "seed_enclosure",
    "series_enclosure",
]


class Family(enum.Enum):
    FLOOR = 1
    CEILING = 2

    @property
    def offset(self) -> int:
        return self.value

    @property
    def symbol(self) -> str:
        return "f" if self is Family.FLOOR else "h"

    @classmethod
    def parse(cls, name: str) -> Family:
        key = name.strip().lower()
        if key in ("floor", "f"):
            return cls.FLOOR
        if key in ("ceiling", "ceil", "h"):
            return cls.CEILING
        raise ValueError(f"unknown family {name!r}")

    def extract(self, e: Enclosure) -> int:
        """Certified integer extraction: floor for f, ceiling for h."""
        return e.floor() if self is Family.FLOOR else e.ceiling()


@dataclass(frozen=True)
class ConstantSpec:
    family: Family
    index: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"constant index must be >= 1, got {self.index}")

    @property
    def offset(self) -> int:
        return self.family.offset


@dataclass(frozen=True)
class PartialSum:
    spec: ConstantSpec
    terms: int
    value: Fraction


def seed_enclosure(spec: ConstantSpec) -> Enclosure:
    """(p_n - 1, p_n) for h_n, (p_n, p_n + 1) for f_n."""
    p = nth_prime(spec.index)
    base = p + 1 - spec.offset
    return Enclosure(base, base + 1)


def _forward_sum(spec: ConstantSpec, m: int) -> tuple[int, int]:
    # S = A / D over k = n .. n+m with D = p_n ... p_{n+m-1}
    n, t = spec.index, spec.offset
    primes = default_table().ensure_count(n + m + 1)
    num, den = primes[n - 1] - t, 1
    for k in range(n + 1, n + m + 1):
        p_prev = primes[k - 2]
        num = num * p_prev + primes[k - 1] - t
        den *= p_prev
    return num, den


def partial_sum(spec: ConstantSpec, m: int) -> PartialSum:
    """Exact sum of the first m + 1 series terms (k = n .. n+m)."""
    if m < 0:
        raise ValueError("term count must be >= 0")
    num, den = _forward_sum(spec, m)
    return PartialSum(spec, m, Fraction(num, den))


def series_enclosure(spec: ConstantSpec, m: int) -> Enclosure:
    """Partial sum through k = n+m plus an exact bracket on the remainder.

    The remainder equals v_{n+m+1} / (p_n ... p_{n+m}); bracketing v_{n+m+1}
    by its seed interval gives width exactly 1 / primorial(n, n+m).
    """
    if m < 0:
        raise ValueError("term count must be >= 0")
    n, t = spec.index, spec.offset
    num, den = _forward_sum(spec, m)
    p_last = nth_prime(n + m)
    p_next = nth_prime(n + m + 1)
    base = num * p_last + p_next + 1 - t
    den *= p_last
    return Enclosure(Fraction(base, den), Fraction(base + 1, den))


def backward_refine(spec: ConstantSpec, seed_index: int) -> Enclosure:
    """Pull the seed interval at ``seed_index`` back down to ``spec.index``.

    Each step inverts v_{k+1} = p_k (v_k - p_k + t), i.e.
    v_k = v_{k+1} / p_k + p_k - t.
    """
    n, t = spec.index, spec.offset
    if seed_index <= n:
        raise ValueError(f"seed index {seed_index} must exceed {n}")
    primes = default_table().ensure_count(seed_index)
    lo = primes[seed_index - 1] + 1 - t
    den = 1
    # enclosure is (lo / den, (lo + 1) / den) at every step
    for k in range(seed_index - 1, n - 1, -1):
        p = primes[k - 1]
        den *= p
        lo += (p - t) * den
    return Enclosure(Fraction(lo, den), Fraction(lo + 1, den))


def required_terms(spec: ConstantSpec, d: int) -> int:
    """Smallest m >= 0 with primorial(n, n+m) > 10**d."""
    if d < 0:
        raise ValueError("digit count must be >= 0")
    target = 10 ** d
    n = spec.index
    prod, m = nth_prime(n), 0
    while prod <= target:
        m += 1
        prod *= nth_prime(n + m)
    return m


def difference_dn(n: int, m: int) -> Enclosure:
    """Enclosure of d_n = f_n - h_n = sum_{k>=n} 1 / (p_n ... p_{k-1})."""
    return series_enclosure(ConstantSpec(Family.FLOOR, n), m) - series_enclosure(
        ConstantSpec(Family.CEILING, n), m
    )


def constant_digits(spec: ConstantSpec, d: int, rounding: str = "truncate") -> str:
    """The constant to d certified fractional digits.

    Starts with 2 guard digits and adds 5 more whenever the enclosure
    endpoints disagree at the requested precision.
    """
    if d < 1:
        raise ValueError("digit count must be >= 1")
    guard = 2
    for _ in range(64):
        m = required_terms(spec, d + guard)
        e = backward_refine(spec, spec.index + m + 1)
        try:
            return certified_decimal(e, d, rounding)
        except AmbiguousEnclosure:
            guard += 5
    raise AmbiguousEnclosure(f"could not certify {d} digits of {spec}")


def decimal_window(spec: ConstantSpec, d: int) -> Enclosure:
    """Enclosure of width exactly 10**-d centred on a much tighter enclosure.

    The tight enclosure has width below 10**-(d+2), so windows for increasing
    d are nested.
    """
    tight = series_enclosure(spec, required_terms(spec, d + 2))
    mid = (tight.lo + tight.hi) / 2
    half = Fraction(1, 2 * 10 ** d)
    return Enclosure(mid - half, mid + half)


class TraceStatus(enum.Enum):
    COMPLETED = "completed"
    PRECISION_EXHAUSTED = "precision-exhausted"


@dataclass(frozen=True)
class TraceStep:
    """Prime certified at ``index`` and the enclosure carried to index + 1."""

    index: int
    prime: int
    enclosure: Enclosure

    @property
    def width(self) -> Fraction:
        return self.enclosure.width


@dataclass
class RecursionTrace:
    spec: ConstantSpec
    start: Enclosure
    steps: list[TraceStep] = field(default_factory=list)
    status: TraceStatus = TraceStatus.COMPLETED
    exhausted_at: int | None = None

    @property
    def primes(self) -> list[int]:
        return [s.prime for s in self.steps]


def forward_generate(spec: ConstantSpec, start: Enclosure, count: int) -> RecursionTrace:
    """Regenerate primes p_n, p_{n+1}, ... from an enclosure of v_n.

    Each step certifies c = floor/ceil of the current enclosure and maps the
    endpoints through e -> c (e - c + t). Stops early, without emitting a
    prime, once the enclosure no longer determines the next one.
    """
    if count < 1:
        raise ValueError("prime count must be >= 1")
    t = spec.offset
    trace = RecursionTrace(spec, start)
    current, index = start, spec.index
    for _ in range(count):
        try:
            c = spec.family.extract(current)
        except AmbiguousEnclosure:
            trace.status = TraceStatus.PRECISION_EXHAUSTED
            trace.exhausted_at = index
            break
        current = current.map_affine(c, c * (t - c))
        trace.steps.append(TraceStep(index, c, current))
        index += 1
    return trace


def digits_of_precision(count: int) -> int:
    """Decimal digits an index-1 enclosure needs to drive ``count`` primes."""
    if count < 1:
        raise ValueError("count must be >= 1")
    p = primorial(1, count - 1)
    return max(1, math.ceil(math.log10(p))) if p > 1 else 1
