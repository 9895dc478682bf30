"""Batch consistency checks behind ``primerep verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .constants import (
    ConstantSpec,
    Family,
    backward_refine,
    constant_digits,
    difference_dn,
    series_enclosure,
)
from .enclosure import AmbiguousEnclosure
from .primes import bertrand_check, nth_prime
from .table import TableRow, fractional_digits

# m = 8 gives width 1/primorial(n, n+8), far below every gap the checks need
TERMS = 8


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_bracketing(max_n: int, terms: int = TERMS) -> CheckResult:
    """ceil(h_n) == floor(f_n) == p_n for n <= max_n."""
    res = CheckResult("bracketing")
    for n in range(1, max_n + 1):
        p = nth_prime(n)
        try:
            c = series_enclosure(ConstantSpec(Family.CEILING, n), terms).ceiling()
            f = series_enclosure(ConstantSpec(Family.FLOOR, n), terms).floor()
        except AmbiguousEnclosure:
            res.failures.append(n)
        else:
            if not c == f == p:
                res.failures.append(n)
        res.checked += 1
    return res


def check_equivalence(max_n: int, terms: int = TERMS) -> CheckResult:
    """backward_refine(spec, n+m+1) == series_enclosure(spec, m) exactly."""
    res = CheckResult("backward-series-equivalence")
    for n in range(1, max_n + 1):
        for family in Family:
            spec = ConstantSpec(family, n)
            if backward_refine(spec, n + terms + 1) != series_enclosure(spec, terms):
                res.failures.append((family.symbol, n))
            res.checked += 1
    return res


def check_dn_bounds(max_n: int, terms: int = TERMS) -> CheckResult:
    """d_n enclosure inside (1, 1 / (1 - 1/p_n))."""
    res = CheckResult("dn-bounds")
    for n in range(1, max_n + 1):
        p = nth_prime(n)
        if not difference_dn(n, terms).within(1, Fraction(p, p - 1)):
            res.failures.append(n)
        res.checked += 1
    return res


def check_bertrand(max_n: int) -> CheckResult:
    k = max(2, max_n)
    return CheckResult("bertrand", checked=k - 1, failures=bertrand_check(k))


def check_fixture(rows: list[TableRow], max_n: int) -> CheckResult:
    """Re-derive each fixture entry at the precision it is printed with."""
    res = CheckResult("table-fixture")
    for row in rows:
        if row.n > max_n:
            break
        for family, text in ((Family.FLOOR, row.f), (Family.CEILING, row.h)):
            got = constant_digits(
                ConstantSpec(family, row.n), fractional_digits(text), "nearest"
            )
            if got != text:
                res.failures.append((family.symbol, row.n, text, got))
        if nth_prime(row.n) != row.p:
            res.failures.append(("p", row.n, row.p, nth_prime(row.n)))
        res.checked += 1
    return res


def run_all(max_n: int, fixture: list[TableRow] | None = None) -> list[CheckResult]:
    results = [
        check_bracketing(max_n),
        check_equivalence(max_n),
        check_dn_bounds(max_n),
        check_bertrand(max_n),
    ]
    if fixture is not None:
        results.append(check_fixture(fixture, max_n))
    return results
