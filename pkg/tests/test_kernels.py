import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_is_prime, brute_primes
from primerep import kernels

BASE = brute_primes(200)  # covers sqrt of anything below 1223**2


@pytest.mark.skipif(bool(os.environ.get("PRIMEREP_PURE_PYTHON")), reason="fallback forced")
def test_compiled_backend_is_built():
    # the package ships the extension; a missing build is a packaging bug
    assert "compiled" in kernels.backends()


@pytest.mark.parametrize("lo, hi", [(0, 2), (0, 3), (2, 30), (90, 98), (97, 98), (1000, 1100)])
def test_sieve_segment_matches_trial_division(backend, lo, hi):
    assert backend.sieve_segment(lo, hi, BASE) == [x for x in range(lo, hi) if brute_is_prime(x)]


@settings(max_examples=60, deadline=None)
@given(lo=st.integers(0, 1_400_000), span=st.integers(0, 3000))
def test_sieve_segment_backends_agree(lo, span):
    results = [b.sieve_segment(lo, lo + span, BASE) for b in kernels.backends().values()]
    assert all(r == results[0] for r in results)
    assert all(brute_is_prime(p) for p in results[0][:20])


def test_bertrand_violations_clean_prefix(backend):
    primes = brute_primes(500)
    assert backend.bertrand_violations(primes, 499) == []


def test_bertrand_violations_reports_planted_fault(backend):
    primes = brute_primes(20)
    primes[9] = primes[8] + 1  # p_10 := p_9 + 1 breaks the left inequality at n = 9
    assert 9 in backend.bertrand_violations(primes, 19)


def test_bertrand_violations_needs_enough_primes(backend):
    with pytest.raises(ValueError):
        backend.bertrand_violations([2, 3, 5], 5)
