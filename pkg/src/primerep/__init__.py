"""Certified computation of the floor (f_n) and ceiling (h_n) families of
prime-representing constants, plus Mills' and Toth's constants."""

from .constants import (
    ConstantSpec,
    Family,
    backward_refine,
    constant_digits,
    difference_dn,
    forward_generate,
    required_terms,
    series_enclosure,
)
from .enclosure import AmbiguousEnclosure, Enclosure
from .kernels import BACKEND
from .primes import is_prime, nth_prime, primorial

__version__ = "0.1.0"
