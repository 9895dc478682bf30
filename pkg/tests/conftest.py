import math

import pytest

from primerep import kernels

ACCEPTANCE_LINES: list[str] = []


def brute_is_prime(x: int) -> bool:
    if x < 2:
        return False
    return all(x % d for d in range(2, math.isqrt(x) + 1))


def brute_primes(count: int) -> list[int]:
    out, x = [], 1
    while len(out) < count:
        x += 1
        if brute_is_prime(x):
            out.append(x)
    return out


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request):
    return kernels.backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
