"""Exhaustive search for the best t-face score among m-point subsets of Q_2^n."""

from __future__ import annotations

import argparse
import itertools
from collections import Counter
from math import comb

from specktral.codes import iter_codewords
from specktral.constructions import build_M
from specktral.covering import count_intersecting_faces, total_faces
from specktral.fourier import vector_of


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--t", type=int, default=None, help="face dimension (default n/2)")
    p.add_argument("--size", type=int, default=None, help="set size (default 2^(n/2))")
    p.add_argument("--max-sets", type=int, default=5_000_000)
    args = p.parse_args()
    n = args.n
    t = n // 2 if args.t is None else args.t
    m = 2 ** (n // 2) if args.size is None else args.size
    if comb(2**n, m) > args.max_sets:
        raise SystemExit(f"{comb(2**n, m)} sets exceed --max-sets")
    space = [vector_of(i, 2, n) for i in range(2**n)]
    hist: Counter[int] = Counter()
    best, witness = -1, None
    for s in itertools.combinations(space, m):
        score = count_intersecting_faces(s, t)
        hist[score] += 1
        if score > best:
            best, witness = score, s
    print(f"n={n} t={t} size={m} total faces={total_faces(n, t)}")
    if n % 2 == 0:
        print(f"M_{{n,0}} score: {count_intersecting_faces(list(iter_codewords(build_M(n, 0))), t)}")
    print(f"best score: {best}  witness: {[''.join(map(str, v)) for v in witness]}")
    print("score histogram:", dict(sorted(hist.items())))


if __name__ == "__main__":
    main()
