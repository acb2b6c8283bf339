"""Eigenvalue and support sizes of the minimal-support function g on Q_2^n."""

from __future__ import annotations

import argparse

from specktral.constructions import build_g
from specktral.fourier import eigenfunction_check, fast_transform_q2, support


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=14)
    args = p.parse_args()
    print("n   eigenvalue  |supp g|  |supp ghat|  product  2^n")
    for n in range(2, args.max_n + 1, 2):
        g = build_g(n)
        r = eigenfunction_check(g)
        s1, s2 = len(support(g)), len(support(fast_transform_q2(g)))
        print(f"{n:<3} {r.eigenvalue!s:<11} {s1:<9} {s2:<12} {s1 * s2:<8} {2**n}")


if __name__ == "__main__":
    main()
