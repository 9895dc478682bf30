"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py --limit 10000000 --repeat 3
"""

import argparse
import json
import math
import time

from primerep import _kernels_py

try:
    from primerep import _kernels
except ImportError:
    _kernels = None


def best_of(repeat, fn, *args):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def sieve(mod, limit, segment=1 << 22):
    base = _kernels_py.sieve_segment(2, math.isqrt(limit) + 1, _kernels_py.sieve_segment(2, 1000, []))
    primes = []
    lo = 2
    while lo <= limit:
        hi = min(lo + segment, limit + 1)
        primes.extend(mod.sieve_segment(lo, hi, base))
        lo = hi
    return primes


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=10_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    backends = {"python": _kernels_py}
    if _kernels is not None:
        backends["compiled"] = _kernels

    rows = []
    reference = None
    for name, mod in backends.items():
        t_sieve, primes = best_of(args.repeat, sieve, mod, args.limit)
        if reference is None:
            reference = primes
        assert primes == reference, f"{name} sieve disagrees"
        k = len(primes) - 1
        t_gap, bad = best_of(args.repeat, mod.bertrand_violations, primes, k)
        assert bad == []
        rows.append({"backend": name, "limit": args.limit, "primes": len(primes),
                     "sieve_s": t_sieve, "bertrand_s": t_gap})

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'backend':<10} {'primes':>10} {'sieve [s]':>10} {'bertrand [s]':>13}")
    for r in rows:
        print(f"{r['backend']:<10} {r['primes']:>10} {r['sieve_s']:>10.3f} {r['bertrand_s']:>13.4f}")
    if len(rows) == 2:
        py, cy = rows
        print(f"speedup    {'':>10} {py['sieve_s'] / cy['sieve_s']:>9.1f}x "
              f"{py['bertrand_s'] / cy['bertrand_s']:>12.1f}x")


if __name__ == "__main__":
    main()
