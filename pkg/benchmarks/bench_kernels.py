"""Time the numba and numpy backends of the hot kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]

The first numba call per kernel includes JIT compilation (cached on disk
afterwards), so it is reported separately.
"""
import argparse
import time

import numpy as np

from qpartition import _kernels
from qpartition.glnq import basis, rep_permutation, generating_set, words_to_array


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    # imaj histogram over all of [n]^r
    yield "imaj_histogram(6,6)", lambda b: _kernels.imaj_histogram(6, 6, backend=b)

    # Burnside inputs for the (4,2,2) commutant
    mats = _kernels.invertible_matrices(4, 2)
    words = words_to_array(basis(4, 2, 2), 4, 2)
    yield "invertible_matrices(4,2)", lambda b: _kernels.invertible_matrices(4, 2, backend=b)
    yield "act_on_words(GL_4(2), dim 231)", lambda b: _kernels.act_on_words(mats, words, 2, backend=b)

    gens = np.array([rep_permutation(g, 4, 2, 2) for g in generating_set(4, 2)], dtype=np.int64)
    yield "pair_orbit_count(4,2,2)", lambda b: _kernels.pair_orbit_count(gens, backend=b)

    rng = np.random.default_rng(0)
    perms = np.array([rng.permutation(2000) for _ in range(2000)], dtype=np.int64)
    yield "fixed_square_sum(2000x2000)", lambda b: _kernels.fixed_square_sum(perms, backend=b)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':34} {'numba 1st':>10} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for name, fn in cases():
        first, _ = timed(lambda: fn("numba"), 1)
        t_nb, out_nb = timed(lambda: fn("numba"), args.repeat)
        t_np, out_np = timed(lambda: fn("numpy"), args.repeat)
        same = np.array_equal(np.asarray(out_nb), np.asarray(out_np))
        flag = "" if same else "  MISMATCH"
        print(f"{name:34} {first:10.4f} {t_nb:10.4f} {t_np:10.4f} {t_np / t_nb:7.1f}x{flag}")


if __name__ == "__main__":
    main()
