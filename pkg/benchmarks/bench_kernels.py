"""Compare the compiled and pure-Python reduction kernels.

Runs a few dual computations from the corpus under every available
backend and prints best-of-N wall times.

    python benchmarks/bench_kernels.py [--repeat N] [--skip-slow]
"""

import argparse
import time
from pathlib import Path

from dualis import dual, kernels, parse_ideal

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
CASES = [
    ("steiner", False),
    ("intersection", False),
    ("hypocycloid", False),
    ("quadric_param", False),
    ("cylinder_homog", False),
    ("klein_like", True),
]


def load(name):
    # a fresh parse each time so no cached Gröbner basis is reused
    return parse_ideal((CORPUS / f"{name}.ideal").read_text()).ideal()


def best_time(name, repeat):
    best = float("inf")
    for _ in range(repeat):
        I = load(name)
        t0 = time.perf_counter()
        dual(I)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-slow", action="store_true", help="leave out the degree-12 dual")
    args = ap.parse_args()

    backends = kernels.available()
    previous = kernels.backend_name()
    print(f"{'case':<16}" + "".join(f"{b:>12}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    try:
        for name, slow in CASES:
            if slow and args.skip_slow:
                continue
            times = {}
            for b in backends:
                kernels.use_backend(b)
                times[b] = best_time(name, args.repeat)
            row = f"{name:<16}" + "".join(f"{times[b]:>11.3f}s" for b in backends)
            if "cython" in times:
                row += f"{times['python'] / times['cython']:>9.2f}x"
            print(row)
    finally:
        kernels.use_backend(previous)


if __name__ == "__main__":
    main()
