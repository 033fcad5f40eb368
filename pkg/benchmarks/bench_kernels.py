"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each row times one kernel call on a fixed input and reports the best of N runs.
"""
import argparse
import timeit

from edgepoly.decompose import _kernel_args
from edgepoly.generators import attach_four_cycle, complete, tri_pan
from edgepoly.kernels import available_backends


def cases():
    t3 = _kernel_args(tri_pan(3))
    k5 = _kernel_args(attach_four_cycle(complete(5), (1, 2)))
    t6 = _kernel_args(tri_pan(6))
    t9 = _kernel_args(tri_pan(9))
    yield "brute_force T(3), d=8", lambda b: b.brute_force(*t3)
    yield "brute_force K5+C4, d=7", lambda b: b.brute_force(*k5)
    yield "search II T(6), d=14", lambda b: b.search(*t6, 2)
    yield "search I T(9), d=20", lambda b: b.search(*t9, 1)
    yield "connected_masks n=6", lambda b: b.connected_masks(6, 0, 1 << 15)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available_backends()
    names = list(backends)
    print(f"{'case':<26}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases():
        best = {}
        for name, mod in backends.items():
            best[name] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        row = f"{label:<26}" + "".join(f"{best[n] * 1e3:>10.2f}ms" for n in names)
        if "cython" in best:
            row += f"{best['python'] / best['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
