"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--sizes 2 3 4 8 16]

Each row times one kernel call (best of ``--repeat`` runs of an auto-sized
loop) and reports the speedup of the compiled extension.
"""

import argparse
import timeit

import numpy as np

from reflectory import _kernels_py
from reflectory._core import available_backends
from reflectory.config import make_rng, sample_z
from reflectory.matrix_core import random_projector


def cases(n, rng):
    P1 = random_projector(n, max(1, n // 2), rng)
    P2 = random_projector(n, 1, rng)
    a1, a2 = 1.2 + 0.7j, -0.4 + 1.9j
    phi = _kernels_py.refactor_phi(a1, P1, a2, P2)
    alphas = np.array([a1, a2, 0.3 - 1.1j, -2.0 + 0.4j])
    projs = np.stack([P1, P2, P2, P1])
    zs = sample_z(set(alphas) | set(np.conj(alphas)))
    return {
        "conjugate": lambda k: k.conjugate(phi, P1),
        "refactor_pair": lambda k: k.refactor_pair(a1, P1, a2, P2),
        "eval_product[4]": lambda k: k.eval_product(alphas, projs, 0.5 + 0.5j),
        "product_discrepancy[4x8]": lambda k: k.product_discrepancy(alphas, projs, alphas[::-1],
                                                                    projs[::-1], zs),
    }


def best_time(fn, repeat):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sizes", type=int, nargs="+", default=[2, 3, 4, 8, 16])
    args = ap.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the numpy fallback is available")
    rng = make_rng(0)
    print(f"{'kernel':<26}{'n':>4}{'python (us)':>14}{'compiled (us)':>16}{'speedup':>10}")
    for n in args.sizes:
        for name, call in cases(n, rng).items():
            tp = best_time(lambda: call(backends["python"]), args.repeat) * 1e6
            if "compiled" in backends:
                tc = best_time(lambda: call(backends["compiled"]), args.repeat) * 1e6
                print(f"{name:<26}{n:>4}{tp:>14.2f}{tc:>16.2f}{tp / tc:>9.1f}x")
            else:
                print(f"{name:<26}{n:>4}{tp:>14.2f}{'-':>16}{'-':>10}")


if __name__ == "__main__":
    main()
