"""Exact q-ary Krawtchouk polynomials.

Nothing here needs ``q`` prime: these are purely combinatorial identities.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def _check(n: int, q: int, *idx: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if q < 2:
        raise ValueError("q must be >= 2")
    for i in idx:
        if not 0 <= i <= n:
            raise ValueError(f"index {i} outside [0, {n}]")


def krawtchouk(k: int, m: int, n: int, q: int) -> int:
    """P_k(m; n, q) = sum_s (-1)^s (q-1)^(k-s) C(n-m, k-s) C(m, s).

    Terms with ``s > m`` or ``k - s > n - m`` vanish; ``math.comb``
    already returns 0 for them.
    """
    _check(n, q, k, m)
    return sum((-1) ** s * (q - 1) ** (k - s) * comb(n - m, k - s) * comb(m, s) for s in range(k + 1))


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_pow(a: list[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = poly_mul(out, a)
    return out


def krawtchouk_row_from_gf(m: int, n: int, q: int) -> list[int]:
    """Coefficients of (1 - z)^m (1 + (q-1) z)^(n-m), i.e. (P_0(m), ..., P_n(m))."""
    _check(n, q, m)
    return poly_mul(poly_pow([1, -1], m), poly_pow([1, q - 1], n - m))


def krawtchouk_matrix(n: int, q: int) -> list[list[int]]:
    """``K[k][m] = P_k(m; n, q)``, built column by column from the generating function."""
    cols = [krawtchouk_row_from_gf(m, n, q) for m in range(n + 1)]
    return [[cols[m][k] for m in range(n + 1)] for k in range(n + 1)]


def row_sum_closed_form(k: int, n: int, q: int) -> int:
    """sum_m P_k(m; n, q) in closed form: C(n+1, k+1) ((q-1)^(k+1) - (-1)^(k+1)) / q."""
    _check(n, q, k)
    value = Fraction(comb(n + 1, k + 1) * ((q - 1) ** (k + 1) - (-1) ** (k + 1)), q)
    if value.denominator != 1:
        raise ArithmeticError(f"closed form not integral for k={k}, n={n}, q={q}: {value}")
    return value.numerator


def row_sum_direct(k: int, n: int, q: int) -> int:
    return sum(krawtchouk(k, m, n, q) for m in range(n + 1))


def shell_size(i: int, n: int, q: int) -> int:
    return (q - 1) ** i * comb(n, i)


def check_symmetry(k: int, m: int, n: int, q: int) -> bool:
    """P_k(m) |A_m| == P_m(k) |A_k| with |A_i| the weight-i shell size of Q_q^n."""
    return krawtchouk(k, m, n, q) * shell_size(m, n, q) == krawtchouk(m, k, n, q) * shell_size(k, n, q)
