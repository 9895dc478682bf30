"""Indexed primes, primality verdicts, neighbour primes and primorials.

Primes are 1-based throughout: ``nth_prime(1) == 2``.
"""

from __future__ import annotations

import math
import os
import threading
from enum import Enum
from pathlib import Path

from . import kernels

__all__ = [
    "DETERMINISTIC_LIMIT",
    "PrimeTable",
    "Verdict",
    "bertrand_check",
    "default_table",
    "is_prime",
    "next_prime_after",
    "nth_prime",
    "prev_prime_before",
    "primorial",
]

CACHE_ENV = "PRIMEREP_CACHE_DIR"
CACHE_FILE = "primes-cache.txt"

# Strong-pseudoprime test with the first 13 prime bases is deterministic
# below this bound (Sorenson & Webster 2015).
DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = [
    p for p in range(2, 1000) if all(p % q for q in range(2, math.isqrt(p) + 1))
]

_SEGMENT = 1 << 22


class Verdict(Enum):
    PRIME = "prime"
    PROBABLE_PRIME = "probable-prime"
    COMPOSITE = "composite"

    @property
    def passes(self) -> bool:
        return self is not Verdict.COMPOSITE


class PrimeTable:
    """Growable table of consecutive primes backed by a segmented sieve.

    The table holds every prime up to ``limit``. Looking up an index past the
    end doubles ``limit`` until the index is covered, sieving only the new
    segment. Extension is serialized with a lock; reads are lock-free.
    """

    def __init__(self, initial_limit: int = 1 << 12, cache_path: Path | None = None):
        self._lock = threading.Lock()
        self._primes: list[int] = []
        self._limit = 1
        self._cache_path = cache_path
        if cache_path is not None and cache_path.exists():
            self._load(cache_path)
        if self._limit < initial_limit:
            self.extend_to(initial_limit)

    @property
    def limit(self) -> int:
        return self._limit

    @property
    def limit_index(self) -> int:
        """Number of primes materialized."""
        return len(self._primes)

    @property
    def primes(self) -> list[int]:
        return self._primes

    def nth(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"prime index must be >= 1, got {n}")
        if n > len(self._primes):
            with self._lock:
                limit = self._limit
                while n > len(self._primes):
                    limit *= 2
                    self._extend_locked(limit)
                self._save()
        return self._primes[n - 1]

    def ensure_count(self, n: int) -> list[int]:
        """Make sure at least ``n`` primes exist and return the backing list."""
        if n >= 1:
            self.nth(n)
        return self._primes

    def extend_to(self, limit: int) -> None:
        with self._lock:
            if limit > self._limit:
                self._extend_locked(limit)
                self._save()

    def _extend_locked(self, limit: int) -> None:
        root = math.isqrt(limit)
        if root > self._limit:
            self._extend_locked(root)
        lo = self._limit + 1
        while lo <= limit:
            hi = min(lo + _SEGMENT, limit + 1)
            self._primes.extend(kernels.sieve_segment(lo, hi, self._primes))
            self._limit = hi - 1
            lo = hi

    def _load(self, path: Path) -> None:
        with path.open() as fh:
            header = fh.readline().split()
            if header[:2] != ["#", "sieve-limit"]:
                return
            primes = [int(line) for line in fh if line.strip()]
        self._primes = primes
        self._limit = int(header[2])

    def _save(self) -> None:
        if self._cache_path is None:
            return
        self._cache_path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self._cache_path.with_suffix(".tmp")
        with tmp.open("w") as fh:
            fh.write(f"# sieve-limit {self._limit}\n")
            fh.write("\n".join(map(str, self._primes)))
            fh.write("\n")
        os.replace(tmp, self._cache_path)


_default: PrimeTable | None = None
_default_lock = threading.Lock()


def default_table() -> PrimeTable:
    """Process-wide table; cached on disk when ``PRIMEREP_CACHE_DIR`` is set."""
    global _default
    if _default is None:
        with _default_lock:
            if _default is None:
                cache_dir = os.environ.get(CACHE_ENV)
                path = Path(cache_dir) / CACHE_FILE if cache_dir else None
                _default = PrimeTable(cache_path=path)
    return _default


def nth_prime(n: int) -> int:
    return default_table().nth(n)


def primorial(n: int, m: int) -> int:
    """Product of p_n .. p_m; 1 when the range is empty."""
    if n < 1:
        raise ValueError(f"prime index must be >= 1, got {n}")
    if m < n:
        if m < n - 1:
            raise ValueError(f"empty primorial needs m = n - 1, got n={n}, m={m}")
        return 1
    primes = default_table().ensure_count(m)
    return math.prod(primes[n - 1 : m])


def bertrand_check(k: int) -> list[int]:
    """Indices 2 <= n <= k violating p_n + 1 < p_{n+1} < 2 p_n.

    Index 1 is excluded: 2 + 1 == 3 fails the strict left inequality.
    """
    if k < 2:
        raise ValueError(f"bertrand_check needs k >= 2, got {k}")
    primes = default_table().ensure_count(k + 1)
    return kernels.bertrand_violations(primes[: k + 1], k)


def _miller_rabin(n: int, bases) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = P * U + V, D * U + P * V
            if U & 1:
                U += n
            if V & 1:
                V += n
            U, V = (U >> 1) % n, (V >> 1) % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(x: int) -> Verdict:
    """Primality verdict.

    Deterministic (PRIME/COMPOSITE) below ``DETERMINISTIC_LIMIT``; above it a
    Baillie-PSW test (base-2 strong test plus strong Lucas test) answers
    PROBABLE_PRIME or COMPOSITE.
    """
    if x < 2:
        return Verdict.COMPOSITE
    for p in _SMALL_PRIMES:
        if x % p == 0:
            return Verdict.PRIME if x == p else Verdict.COMPOSITE
    if x < 1_000_000:  # no factor below 1000 = sqrt(10**6)
        return Verdict.PRIME
    if x < DETERMINISTIC_LIMIT:
        return Verdict.PRIME if _miller_rabin(x, _MR_BASES) else Verdict.COMPOSITE
    if _miller_rabin(x, (2,)) and _strong_lucas(x):
        return Verdict.PROBABLE_PRIME
    return Verdict.COMPOSITE


def _candidates_up(x: int):
    # 6k +/- 1 strictly above x (x >= 4)
    k = (x + 1) // 6
    while True:
        for c in (6 * k - 1, 6 * k + 1):
            if c > x:
                yield c
        k += 1


def _candidates_down(x: int):
    # 6k +/- 1 strictly below x (x >= 6)
    k = (x + 1) // 6
    while True:
        for c in (6 * k + 1, 6 * k - 1):
            if c < x:
                yield c
        k -= 1


def next_prime_after(x: int) -> int:
    """Smallest prime strictly greater than ``x``."""
    for p in (2, 3, 5):
        if x < p:
            return p
    for c in _candidates_up(x):
        if is_prime(c).passes:
            return c
    raise AssertionError("unreachable")


def prev_prime_before(x: int) -> int:
    """Largest prime strictly less than ``x``; ``x`` must be at least 3."""
    if x <= 2:
        raise ValueError(f"no prime below {x}")
    if x <= 6:
        return max(p for p in (2, 3, 5) if p < x)
    for c in _candidates_down(x):
        if is_prime(c).passes:
            return c
    raise AssertionError("unreachable")
