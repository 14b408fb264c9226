"""Compare the JIT-compiled kernels against the plain-Python reference.

Usage:
    python benchmarks/bench_kernels.py [--n 4] [--repeat 3]

The dispatched kernels (numba, unless TRISLITHER_NUMBA=0 or numba is
missing) enumerate every simple cycle of the side-n grid and pack its
per-face signature; the reference path runs the identical loop bodies as
ordinary Python over numpy arrays.
"""

import argparse
import time

from trislither import build_grid
from trislither import _kernels


def run_enumeration(fn, g):
    total = 0
    masks_per_root = []
    for root in range(g.num_vertices):
        masks = fn(root, g.nbr, g.nbr_edge, g.deg, g.num_edges, -1)
        total += masks.shape[0]
        masks_per_root.append(masks)
    return total, masks_per_root


def run_signatures(fn, g, masks_per_root):
    n_sig_words = (2 * g.num_faces + 63) // 64
    for masks in masks_per_root:
        if masks.shape[0]:
            fn(masks, g.face_edges_idx, n_sig_words)


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4, help="grid side (default 4)")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    g = build_grid(args.n)
    print(f"grid side {args.n}: {g.num_vertices} vertices, {g.num_edges} edges")
    print(f"dispatched path: {'numba @njit' if _kernels.USING_NUMBA else 'python (fallback)'}")

    # Warm up (triggers JIT compilation when numba is active).
    total, masks = run_enumeration(_kernels.cycles_from_root, g)
    print(f"simple cycles: {total}")

    t_fast = best_of(args.repeat, lambda: run_enumeration(_kernels.cycles_from_root, g))
    t_ref = best_of(args.repeat, lambda: run_enumeration(_kernels._cycles_from_root_impl, g))
    print(f"enumeration   dispatched {t_fast*1e3:9.2f} ms   reference {t_ref*1e3:9.2f} ms"
          f"   speedup {t_ref / t_fast:6.1f}x")

    t_fast = best_of(args.repeat, lambda: run_signatures(_kernels.signature_words, g, masks))
    t_ref = best_of(
        args.repeat, lambda: run_signatures(_kernels._signature_words_impl, g, masks)
    )
    print(f"signatures    dispatched {t_fast*1e3:9.2f} ms   reference {t_ref*1e3:9.2f} ms"
          f"   speedup {t_ref / t_fast:6.1f}x")


if __name__ == "__main__":
    main()
