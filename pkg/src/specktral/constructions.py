"""Explicit extremal objects over Q_2^n and the size bounds they meet."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from math import comb

import numpy as np

from specktral.codes import AffineCode, LinearCode, affine, as_affine, from_generators, nonzero_weights
from specktral.fourier import DenseFunction, index_of


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    size: int
    bound: int
    passed: bool
    tight: bool


def build_M(n: int, i: int) -> AffineCode:
    """{(x, x + 1, 0) : x in Q_2^k} with k = (n - i)/2, padded by i zeros.

    Every word has weight exactly k.
    """
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    if (n - i) % 2 or n - i < 2:
        raise ValueError(f"n - i must be even and >= 2 (n={n}, i={i})")
    k = (n - i) // 2
    gens = [[int(j == r) for j in range(k)] * 2 + [0] * i for r in range(k)]
    offset = [0] * k + [1] * k + [0] * i
    return affine(from_generators(2, gens, n), offset)


def build_C(n: int) -> LinearCode:
    """Linear span of M_{n,0}: generated by {(e_j, e_j)} and (0, 1)."""
    if n % 2 or n < 2:
        raise ValueError("build_C needs an even n >= 2")
    m = build_M(n, 0)
    # x = 0 gives the word (0, 1) of M_{n,0}
    v = tuple([0] * (n // 2) + [1] * (n // 2))
    return from_generators(2, list(m.linear.gen) + [v], n)


def diagonal_subspace(n: int) -> LinearCode:
    """{(x, x) : x in Q_2^(n/2)}."""
    if n % 2 or n < 2:
        raise ValueError("n must be even")
    h = n // 2
    return from_generators(2, [[int(j == r) for j in range(h)] * 2 for r in range(h)], n)


def build_g(n: int) -> DenseFunction:
    """g(x, x + 1) = (-1)**wt(x); g vanishes elsewhere."""
    if n % 2 or n < 2:
        raise ValueError("build_g needs an even n >= 2")
    h = n // 2
    values = np.zeros(2**n, dtype=np.int64)
    for xi in range(2**h):
        x = [(xi >> j) & 1 for j in range(h)]
        y = x + [1 - a for a in x]
        values[index_of(y, 2)] = (-1) ** sum(x)
    return DenseFunction(2, n, values)


def delsarte_ball(n: int, q: int, k: int) -> int:
    """b(n, q, k) = sum_{j <= k} (q-1)**j C(n, j): the radius-k Hamming ball."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return sum((q - 1) ** j * comb(n, j) for j in range(k + 1))


def L_binary(n: int, k: int) -> int:
    """Minimal |supp f| over f on Q_2^n with fhat supported on the weight-k shell."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return 2 ** ((n + abs(n - 2 * k)) // 2)


def check_cor4(c: LinearCode, weights: Iterable[int] | None = None) -> BoundReport:
    """|C| <= b(n, q, t) for a linear code with t distinct nonzero weights.

    ``t`` is always computed from ``c``; a caller-supplied ``weights`` set is
    only validated as covering the code's nonzero weights.
    """
    profile = nonzero_weights(c) - {0}
    if weights is not None and not profile <= set(weights) - {0}:
        raise ValueError(f"weight-profile mismatch: code has weights {sorted(profile)}")
    bound = delsarte_ball(c.n, c.q, len(profile))
    return BoundReport("delsarte", c.size, bound, c.size <= bound, c.size == bound)


def _constant_weight(c: AffineCode | LinearCode, k: int) -> AffineCode:
    c = as_affine(c)
    if c.q != 2:
        raise ValueError("binary codes only")
    if nonzero_weights(c) != {k}:
        raise ValueError(f"not constant-weight: code is not inside the weight-{k} shell")
    return c


def check_cor7(c: AffineCode | LinearCode, k: int) -> BoundReport:
    """|C| <= 2**((n - |n - 2k|)/2) for an affine code inside the weight-k shell."""
    c = _constant_weight(c, k)
    bound = 2 ** ((c.n - abs(c.n - 2 * k)) // 2)
    return BoundReport("constant-weight", c.size, bound, c.size <= bound, c.size == bound)


def check_cor5(c: AffineCode | LinearCode, k: int) -> BoundReport:
    """|C| <= 2**n / L(n, 2, k); numerically the same bound as check_cor7."""
    c = _constant_weight(c, k)
    bound, rem = divmod(2**c.n, L_binary(c.n, k))
    assert rem == 0
    return BoundReport("minimal-support", c.size, bound, c.size <= bound, c.size == bound)
