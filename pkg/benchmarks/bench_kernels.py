"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from fullorient.families import complete_graph, k32, kprime
from fullorient.kernels import _pure
from fullorient.oracle import dense_form
from fullorient.synthesis import random_chordal

try:
    from fullorient.kernels import _fast
except ImportError:
    _fast = None

CASES = [
    ("K_3(2)", k32()),
    ("K'", kprime()),
    ("K6", complete_graph(6)),
    ("chordal n=10 q<=4", random_chordal(10, 4, 1)),
    ("K7", complete_graph(7)),
]


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _fast is None:
        print("compiled kernel not built; only the pure kernel is timed")
    print(f"{'graph':<20}{'m':>4}{'acyclic':>10}{'pure s':>10}{'cython s':>10}{'speedup':>9}")
    for name, g in CASES:
        n, adj = dense_form(g)
        total = sum(_pure.histogram(n, adj))
        t_pure = best(lambda: _pure.histogram(n, adj), args.repeat)
        if _fast is None:
            print(f"{name:<20}{g.size:>4}{total:>10}{t_pure:>10.4f}{'-':>10}{'-':>9}")
            continue
        assert _fast.histogram(n, adj) == _pure.histogram(n, adj)
        t_fast = best(lambda: _fast.histogram(n, adj), args.repeat)
        print(f"{name:<20}{g.size:>4}{total:>10}{t_pure:>10.4f}{t_fast:>10.4f}{t_pure / t_fast:>8.0f}x")


if __name__ == "__main__":
    main()
