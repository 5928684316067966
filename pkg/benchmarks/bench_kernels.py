#!/usr/bin/env python3
"""Compare the compiled search kernels against the pure-Python twins.

Each case runs one feasibility search on both backends, checks that they
return identical witnesses and identical node counts, and reports the best
wall time over the repeats.
"""

import argparse
import sys
import time

from stardi import circulant, complete, kneser2, symmetric
from stardi.kernels import available_backends, get_backend
from stardi.solvers import _search_order


def _cases():
    C73 = circulant(7, 3)
    C94 = circulant(9, 4)
    pet = symmetric(kneser2(5))
    K8 = complete(8)
    order = _search_order
    return [
        # label, kernel, args; ratios just below the optimum force a full
        # exhaustion of the search tree, the worst case for both backends
        (
            "circulant(7,3)  acyclic 9/4  (infeasible)",
            "search_acyclic",
            (C73.n, 9, 4, C73.out_masks, order(C73.adj_masks)),
        ),
        (
            "circulant(9,4)  acyclic 11/5 (infeasible)",
            "search_acyclic",
            (C94.n, 11, 5, C94.out_masks, order(C94.adj_masks)),
        ),
        (
            "S(Petersen)     acyclic 14/5 (infeasible)",
            "search_acyclic",
            (pet.n, 14, 5, pet.out_masks, order(pet.adj_masks)),
        ),
        (
            "S(Petersen)     circular 14/5 (infeasible)",
            "search_circular",
            (pet.n, 14, 5, pet.out_masks, pet.in_masks, order(pet.adj_masks)),
        ),
        (
            "S(Petersen)     acyclic 3/1  (feasible)",
            "search_acyclic",
            (pet.n, 3, 1, pet.out_masks, order(pet.adj_masks)),
        ),
        (
            "K_8             tree 7/2     (infeasible)",
            "search_tree",
            (K8.n, 7, 2, K8.adj_masks, order(K8.adj_masks)),
        ),
    ]


def _best_time(module, kernel, args, repeats):
    best, result = None, None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = getattr(module, kernel)(*args)
        elapsed = time.perf_counter() - t0
        if best is None or elapsed < best:
            best = elapsed
    return best, result


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args(argv)

    if "compiled" not in available_backends():
        print("compiled backend not built; nothing to compare", file=sys.stderr)
        return 1
    py = get_backend("python")
    cy = get_backend("compiled")

    print(f"{'case':44s} {'python':>10s} {'compiled':>10s} {'speedup':>8s} {'nodes':>8s}")
    for label, kernel, kargs in _cases():
        t_py, r_py = _best_time(py, kernel, kargs, args.repeats)
        t_cy, r_cy = _best_time(cy, kernel, kargs, args.repeats)
        if r_py != r_cy:
            print(f"{label}: BACKEND MISMATCH {r_py} != {r_cy}", file=sys.stderr)
            return 1
        print(
            f"{label:44s} {t_py * 1000:8.2f}ms {t_cy * 1000:8.2f}ms "
            f"{t_py / t_cy:7.1f}x {r_py[1]:8d}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
