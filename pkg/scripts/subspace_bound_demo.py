"""Random nested pairs U inside V: compare coset fractions of V with alpha(U)/(1-alpha(U))."""

from __future__ import annotations

import argparse

import numpy as np

from specktral.codes import alpha, check_subspace_alpha_bound, random_code, random_supercode


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--pairs", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    rng = np.random.default_rng(args.seed)
    done = 0
    print("k(U) k(V) alpha(U)  bound     max ratio  ok")
    while done < args.pairs:
        u = random_code(2, args.n, int(rng.integers(1, args.n - 1)), rng)
        if alpha(u) == 1:
            continue
        v = random_supercode(u, int(rng.integers(0, args.n - u.k + 1)), rng)
        r = check_subspace_alpha_bound(u, v)
        print(f"{u.k:<4} {v.k:<4} {str(r.alpha_sub):<9} {str(r.bound):<9} {str(r.max_ratio):<10} {r.passed}")
        done += 1


if __name__ == "__main__":
    main()
