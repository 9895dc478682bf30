"""Finite-depth enclosures of Mills' constant A and Toth's constant B.

Mills tower: q_1 = 2, q_{i+1} = next prime after q_i**3, and
floor(A**(3**i)) = q_i, so A lies in (q_d**(3**-d), (q_d + 1)**(3**-d)).

Toth tower: q_1 = 2, q_{i+1} = largest prime <= q_i**3, and
ceil(B**(3**i)) = q_i, so B lies in ((q_d - 1)**(3**-d), q_d**(3**-d)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enclosure import AmbiguousEnclosure, Enclosure
from .exact import root_enclosure
from .primes import Verdict, is_prime, next_prime_after, prev_prime_before

__all__ = [
    "InsufficientDepth",
    "PrimeTower",
    "mills_constant",
    "mills_primes",
    "tower",
    "tower_consistency",
    "toth_constant",
    "toth_primes",
]

MILLS = "mills"
TOTH = "toth"


class InsufficientDepth(ArithmeticError):
    """The tower bracket at this depth is wider than the requested precision."""


@dataclass(frozen=True)
class PrimeTower:
    kind: str
    primes: tuple[int, ...]
    verdicts: tuple[Verdict, ...]

    @property
    def depth(self) -> int:
        return len(self.primes)


def tower(kind: str, depth: int) -> PrimeTower:
    if kind not in (MILLS, TOTH):
        raise ValueError(f"unknown tower kind {kind!r}")
    if depth < 1:
        raise ValueError("tower depth must be >= 1")
    q = [2]
    while len(q) < depth:
        cube = q[-1] ** 3
        q.append(next_prime_after(cube) if kind == MILLS else prev_prime_before(cube + 1))
    return PrimeTower(kind, tuple(q), tuple(is_prime(x) for x in q))


def mills_primes(depth: int) -> list[int]:
    return list(tower(MILLS, depth).primes)


def toth_primes(depth: int) -> list[int]:
    return list(tower(TOTH, depth).primes)


def _constant(kind: str, depth: int, d: int, precision: int | None) -> Enclosure:
    if d < 0:
        raise ValueError("digit count must be >= 0")
    q = tower(kind, depth).primes[-1]
    k = 3 ** depth
    precision = d + 5 if precision is None else precision
    lo_arg, hi_arg = (q, q + 1) if kind == MILLS else (q - 1, q)
    lo = root_enclosure(lo_arg, k, precision).lo
    hi = root_enclosure(hi_arg, k, precision).hi
    e = Enclosure(lo, hi)
    if e.width > Fraction(1, 10 ** d):
        raise InsufficientDepth(
            f"{kind} depth {depth} bracket width {float(e.width):.3g} exceeds 1e-{d}"
        )
    return e


def mills_constant(depth: int, d: int, precision: int | None = None) -> Enclosure:
    """Enclosure of A from the depth-``depth`` Mills prime.

    ``precision`` is the number of decimal places used for the k-th roots
    (default d + 5).
    """
    return _constant(MILLS, depth, d, precision)


def toth_constant(depth: int, d: int, precision: int | None = None) -> Enclosure:
    """Enclosure of B from the depth-``depth`` Toth prime."""
    return _constant(TOTH, depth, d, precision)


def tower_consistency(kind: str, e: Enclosure, primes) -> list[int]:
    """1-based positions i where raising ``e`` to 3**i fails to certify q_i.

    Mills uses floor, Toth ceiling. Endpoints are powered exactly.
    """
    bad = []
    for i, q in enumerate(primes, start=1):
        k = 3 ** i
        powered = Enclosure(e.lo ** k, e.hi ** k)
        try:
            got = powered.floor() if kind == MILLS else powered.ceiling()
        except AmbiguousEnclosure:
            bad.append(i)
            continue
        if got != q:
            bad.append(i)
    return bad
