"""Pure-Python fallback for the compiled kernels in ``_kernels.pyx``."""

from __future__ import annotations

from typing import Sequence


def sieve_segment(lo: int, hi: int, base_primes: Sequence[int]) -> list[int]:
    """Return the primes p with lo <= p < hi.

    ``base_primes`` must contain every prime up to isqrt(hi - 1), ascending.
    """
    lo = max(lo, 2)
    if hi <= lo:
        return []
    n = hi - lo
    mark = bytearray(b"\x01") * n
    for p in base_primes:
        if p * p >= hi:
            break
        start = max(p * p, -(-lo // p) * p) - lo
        if start < n:
            mark[start::p] = bytes(len(range(start, n, p)))
    return [lo + i for i, flag in enumerate(mark) if flag]


def bertrand_violations(primes: Sequence[int], k: int) -> list[int]:
    """Indices n in [2, k] where p_n + 1 < p_{n+1} < 2 p_n fails.

    ``primes`` is 0-based (primes[0] == 2) and holds at least k + 1 entries.
    """
    if len(primes) < k + 1:
        raise ValueError(f"need {k + 1} primes, have {len(primes)}")
    return [
        n
        for n in range(2, k + 1)
        if not (primes[n - 1] + 1 < primes[n] < 2 * primes[n - 1])
    ]
