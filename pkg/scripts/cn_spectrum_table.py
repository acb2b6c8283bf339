"""Weight distribution of C_n next to the two closed forms for A_{n/2}."""

from __future__ import annotations

import argparse
from math import comb

from specktral.codes import alpha, weight_distribution
from specktral.constructions import build_C


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=12)
    args = p.parse_args()
    print("n  k  A_2  A_{n/2}  2^{n/2}  corrected  alpha  distribution")
    for n in range(2, args.max_n + 1, 2):
        c = build_C(n)
        w = weight_distribution(c)
        corrected = 2 ** (n // 2) + (comb(n // 2, n // 4) if n % 4 == 0 else 0)
        print(f"{n:<2} {c.k:<2} {w[2]:<4} {w[n // 2]:<8} {2 ** (n // 2):<8} {corrected:<10} {str(alpha(c)):<6} {list(w)}")


if __name__ == "__main__":
    main()
