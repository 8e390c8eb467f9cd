"""Benchmark the compiled counting kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [max_order]

Builds direct-product groups of growing order and times the two hot
kernels on each backend. The quadratic pair counts dominate the exact
engine's runtime, which is why they live in the compiled core.
"""
import sys
import time

from commdeg.groups import direct_product, power_map
from commdeg.kernels import pure
from commdeg.presets import cyclic, dihedral

try:
    from commdeg.kernels import _ctables
except ImportError:
    _ctables = None


def build_sizes(max_order):
    G = dihedral(4)
    out = [G]
    while True:
        bigger = direct_product(out[-1], cyclic(4))
        if bigger.order > max_order:
            return out
        out.append(bigger)


def timed(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main():
    max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 2048
    groups = build_sizes(max_order)
    backends = [("pure", pure)] + ([("cython", _ctables)] if _ctables else [])
    print(f"{'order':>6} {'kernel':<26} " + " ".join(f"{n:>12}" for n, _ in backends)
          + f" {'speedup':>9}")
    for G in groups:
        pm, pn = power_map(G, 2), power_map(G, 3)
        for label, call_args in (
            ("count_commuting_pairs", (G.mult,)),
            ("count_commuting_pairs_mn", (G.mult, pm, pn)),
        ):
            times = []
            counts = []
            for _, mod in backends:
                value, secs = timed(getattr(mod, label), *call_args)
                counts.append(value)
                times.append(secs)
            assert len(set(counts)) == 1, "backends disagree!"
            speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else "      n/a"
            print(f"{G.order:>6} {label:<26} "
                  + " ".join(f"{t * 1e3:10.2f}ms" for t in times) + f" {speed}")


if __name__ == "__main__":
    main()
