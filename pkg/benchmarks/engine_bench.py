"""Compare the compiled kernel against the pure-Python fallback.

Runs identical workloads through both implementations and reports wall
times plus the speedup.  Also re-checks that the two agree exactly on
every value computed.

Usage: python benchmarks/engine_bench.py [n]
"""

import sys
import time

from snchar import _kernel_py
from snchar.partitions import compositions_of, partitions_of

try:
    from snchar import _kernel
except ImportError:
    _kernel = None


def full_sweep(mod, n):
    total = 0
    for p in partitions_of(n):
        for t in compositions_of(n):
            total += mod.chi(p, t)
    return total


def identity_column(mod, n):
    # all-ones evaluations are the deepest recursions the identifier issues
    return [mod.chi(p, (1,) * n) for p in partitions_of(n)]


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def main() -> int:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    if _kernel is None:
        print("compiled kernel not built; nothing to compare")
        return 1
    print(f"workload: all (shape, type) pairs of n={n}, plus all dimensions at n={n + 4}")
    rows = []
    for name, work, arg in [
        (f"chi sweep n={n}", full_sweep, n),
        (f"dimensions n={n + 4}", identity_column, n + 4),
    ]:
        out_c, t_c = timed(work, _kernel, arg)
        out_p, t_p = timed(work, _kernel_py, arg)
        assert out_c == out_p, "kernels disagree"
        rows.append((name, t_c, t_p))
    print(f"{'workload':<22} {'cython':>9} {'pure':>9} {'speedup':>8}")
    for name, t_c, t_p in rows:
        print(f"{name:<22} {t_c:>8.3f}s {t_p:>8.3f}s {t_p / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
