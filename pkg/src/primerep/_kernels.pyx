# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sieve and gap-scan kernels.

Same call signatures as :mod:`primerep._kernels_py`; values must fit in a
signed 64-bit integer.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


def sieve_segment(long long lo, long long hi, base_primes):
    """Return the primes p with lo <= p < hi.

    ``base_primes`` must contain every prime up to isqrt(hi - 1), ascending.
    """
    cdef long long n, i, p, start
    cdef unsigned char *mark
    cdef list out = []
    if lo < 2:
        lo = 2
    if hi <= lo:
        return out
    n = hi - lo
    mark = <unsigned char *>malloc(n)
    if mark == NULL:
        raise MemoryError()
    try:
        memset(mark, 1, n)
        for q in base_primes:
            p = q
            if p * p >= hi:
                break
            start = ((lo + p - 1) // p) * p
            if start < p * p:
                start = p * p
            i = start - lo
            while i < n:
                mark[i] = 0
                i += p
        for i in range(n):
            if mark[i]:
                out.append(lo + i)
    finally:
        free(mark)
    return out


def bertrand_violations(primes, long long k):
    """Indices n in [2, k] where p_n + 1 < p_{n+1} < 2 p_n fails.

    ``primes`` is 0-based (primes[0] == 2) and holds at least k + 1 entries.
    """
    cdef long long n, a, b
    cdef list out = []
    if len(primes) < k + 1:
        raise ValueError("need %d primes, have %d" % (k + 1, len(primes)))
    for n in range(2, k + 1):
        a = primes[n - 1]
        b = primes[n]
        if not (a + 1 < b and b < 2 * a):
            out.append(n)
    return out
