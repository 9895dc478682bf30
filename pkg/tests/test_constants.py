from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_primes
from primerep.constants import (
    ConstantSpec,
    Family,
    TraceStatus,
    backward_refine,
    constant_digits,
    decimal_window,
    difference_dn,
    digits_of_precision,
    forward_generate,
    partial_sum,
    required_terms,
    seed_enclosure,
    series_enclosure,
)
from primerep.enclosure import Enclosure
from primerep.primes import nth_prime, primorial

H = Family.CEILING
F = Family.FLOOR
PRIMES = brute_primes(1200)


def mp_constant(family: Family, n: int, dps: int = 80):
    """Float oracle: sum the series in mpmath until terms drop below 10**-dps."""
    with mpmath.workdps(dps + 10):
        t = family.offset
        total, denom = mpmath.mpf(0), mpmath.mpf(1)
        k = n
        while True:
            total += (PRIMES[k - 1] - t) / denom
            denom *= PRIMES[k - 1]
            k += 1
            if denom > mpmath.mpf(10) ** (dps + 5):
                return total


def test_family_offsets():
    assert (F.offset, H.offset) == (1, 2)
    assert Family.parse("ceiling") is H and Family.parse("f") is F
    with pytest.raises(ValueError):
        Family.parse("round")
    with pytest.raises(ValueError):
        ConstantSpec(H, 0)


def test_seed_enclosures():
    assert seed_enclosure(ConstantSpec(H, 30)) == Enclosure(112, 113)
    assert seed_enclosure(ConstantSpec(F, 30)) == Enclosure(113, 114)


def test_series_first_term():
    assert series_enclosure(ConstantSpec(H, 1), 0) == Enclosure(1, Fraction(3, 2))


def test_partial_sum_matches_definition():
    for family in Family:
        for n in (1, 2, 7):
            spec = ConstantSpec(family, n)
            for m in range(8):
                direct = sum(
                    Fraction(PRIMES[k - 1] - family.offset, primorial(n, k - 1))
                    for k in range(n, n + m + 1)
                )
                assert partial_sum(spec, m).value == direct


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("n", [1, 2, 5, 30, 200])
def test_series_contains_float_oracle(family, n):
    spec = ConstantSpec(family, n)
    e = series_enclosure(spec, 25)
    value = mp_constant(family, n)
    with mpmath.workdps(90):
        lo = mpmath.mpf(e.lo.numerator) / e.lo.denominator
        hi = mpmath.mpf(e.hi.numerator) / e.hi.denominator
        assert lo < value < hi


def test_series_h1_digits():
    spec = ConstantSpec(H, 1)
    m = required_terms(spec, 19)
    assert primorial(1, m + 1) > 10**19 >= primorial(1, m)
    assert constant_digits(spec, 19) == "1.2148208055243337469"


def test_backward_refine_examples():
    assert backward_refine(ConstantSpec(H, 1), 2) == Enclosure(1, Fraction(3, 2))
    e = backward_refine(ConstantSpec(F, 2), 20)
    assert e == series_enclosure(ConstantSpec(F, 2), 17)
    with pytest.raises(ValueError):
        backward_refine(ConstantSpec(H, 5), 5)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(list(Family)), st.integers(1, 120), st.integers(0, 60))
def test_backward_equals_series(family, n, m):
    spec = ConstantSpec(family, n)
    assert backward_refine(spec, n + m + 1) == series_enclosure(spec, m)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(list(Family)), st.integers(1, 300), st.integers(0, 40))
def test_width_law(family, n, m):
    assert series_enclosure(ConstantSpec(family, n), m).width == Fraction(1, primorial(n, n + m))


def test_series_nested_in_m():
    spec = ConstantSpec(H, 3)
    prev = series_enclosure(spec, 0)
    for m in range(1, 30):
        cur = series_enclosure(spec, m)
        assert cur.within(prev.lo, prev.hi)
        prev = cur


def test_bracketing_first_thousand():
    for n in range(1, 1001):
        p = nth_prime(n)
        assert series_enclosure(ConstantSpec(H, n), 2).ceiling() == p
        assert series_enclosure(ConstantSpec(F, n), 2).floor() == p


def test_forward_generate_thirty_primes():
    spec = ConstantSpec(H, 1)
    trace = forward_generate(spec, backward_refine(spec, 40), 30)
    assert trace.status is TraceStatus.COMPLETED
    assert trace.primes == PRIMES[:30]
    assert [s.index for s in trace.steps] == list(range(1, 31))


def test_forward_generate_single_step():
    trace = forward_generate(ConstantSpec(H, 1), Enclosure(1, Fraction(3, 2)), 1)
    assert trace.primes == [2]
    assert trace.steps[0].enclosure == Enclosure(2, 3)
    assert trace.status is TraceStatus.COMPLETED


def test_forward_generate_exhausts_on_hand_example():
    trace = forward_generate(ConstantSpec(H, 1), Enclosure(1, Fraction(3, 2)), 3)
    assert trace.primes == [2, 3]
    assert trace.steps[1].enclosure == Enclosure(3, 6)
    assert trace.status is TraceStatus.PRECISION_EXHAUSTED
    assert trace.exhausted_at == 3


@pytest.mark.parametrize("family", list(Family))
def test_forward_floor_family_from_later_index(family):
    spec = ConstantSpec(family, 10)
    trace = forward_generate(spec, backward_refine(spec, 60), 40)
    assert trace.status is TraceStatus.COMPLETED
    assert trace.primes == PRIMES[9:49]


def test_forward_width_grows_by_certified_prime():
    spec = ConstantSpec(F, 1)
    start = backward_refine(spec, 30)
    trace = forward_generate(spec, start, 25)
    prev = start.width
    for step in trace.steps:
        assert step.width == prev * step.prime
        prev = step.width


@pytest.mark.parametrize("family", list(Family))
def test_forward_never_emits_wrong_prime(family):
    spec = ConstantSpec(family, 1)
    counts = []
    for d in range(1, 61):
        trace = forward_generate(spec, decimal_window(spec, d), 40)
        assert trace.primes == PRIMES[: len(trace.primes)]
        counts.append(len(trace.primes))
    assert counts == sorted(counts)  # nested windows certify at least as much


def test_decimal_window_width_and_nesting():
    spec = ConstantSpec(H, 1)
    prev = None
    for d in range(1, 40):
        w = decimal_window(spec, d)
        assert w.width == Fraction(1, 10**d)
        tight = series_enclosure(spec, 40)
        assert w.lo < tight.lo and tight.hi < w.hi
        if prev is not None:
            assert w.within(prev.lo, prev.hi)
        prev = w


@pytest.mark.parametrize("n", [1, 2, 5, 100, 1000])
def test_difference_bounds(n):
    p = nth_prime(n)
    e = difference_dn(n, 10)
    assert e.within(1, Fraction(p, p - 1))


def test_difference_dn_100():
    e = difference_dn(100, 10)
    assert e.hi - 1 < Fraction(2, 541)


def test_difference_matches_its_own_series():
    # d_n = head + d_{n+30} / primorial(n, n+29) with 1 < d_{n+30} < p / (p - 1)
    for n in (1, 3, 17):
        head = sum(Fraction(1, primorial(n, k - 1)) for k in range(n, n + 30))
        q = primorial(n, n + 29)
        p = nth_prime(n + 30)
        assert difference_dn(n, 40).within(head + Fraction(1, q), head + Fraction(p, (p - 1) * q))


def test_required_terms():
    spec = ConstantSpec(H, 1)
    assert required_terms(spec, 0) == 0
    m = required_terms(spec, 20)
    assert primorial(1, 1 + m) > 10**20 >= primorial(1, m)
    values = [required_terms(ConstantSpec(F, 7), d) for d in range(60)]
    assert values == sorted(values)


@pytest.mark.parametrize(
    "family, n, d, rounding, text",
    [
        (H, 1, 1, "truncate", "1.2"),
        (H, 11, 18, "nearest", "30.163928642871448728"),
        (F, 29, 17, "nearest", "109.03783647459722466"),
        (F, 1, 19, "nearest", "2.9200509773161347121"),
        (F, 1, 19, "truncate", "2.9200509773161347120"),
    ],
)
def test_constant_digits(family, n, d, rounding, text):
    assert constant_digits(ConstantSpec(family, n), d, rounding) == text


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("n", [1, 4, 77])
def test_constant_digits_against_float_oracle(family, n):
    got = constant_digits(ConstantSpec(family, n), 50)
    with mpmath.workdps(80):
        expected = mpmath.nstr(mp_constant(family, n), 75, strip_zeros=False)
    whole, _, frac = expected.partition(".")
    assert got == f"{whole}.{frac[:50]}"


def test_digits_of_precision():
    assert digits_of_precision(1) == 1
    assert digits_of_precision(2) == 1  # log10(2)
    assert digits_of_precision(30) == 45  # log10(primorial of 2..109) = 44.45


def test_reference_table_is_rounded_not_truncated():
    from primerep.table import fractional_digits, load_fixture

    truncated_differs = 0
    for row in load_fixture():
        for family, text in ((F, row.f), (H, row.h)):
            spec = ConstantSpec(family, row.n)
            d = fractional_digits(text)
            assert constant_digits(spec, d, "nearest") == text
            truncated_differs += constant_digits(spec, d, "truncate") != text
    assert truncated_differs == 34  # of 60 entries
