"""Character transform on Q_q^n for dense functions.

A function is stored as a flat array of length q**n; vector ``x`` lives at
index ``sum(x[i] * q**i)`` (coordinate 0 least significant).  The transform
is the unitary one,

    fhat(z) = q**(-n/2) * sum_x f(x) * w**(x . z),   w = exp(2 pi i / q).
"""

from __future__ import annotations

import functools
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from specktral import limits
from specktral.codes import AffineCode, LinearCode, as_affine, codeword_blocks
from specktral.galois import field_ops

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class DenseFunction:
    """A function Q_q^n -> C (or Q, when ``values`` has an integer/object dtype)."""

    q: int
    n: int
    values: np.ndarray

    def __post_init__(self) -> None:
        field_ops(self.q)
        if self.n < 1:
            raise ValueError("n must be >= 1")
        limits.check(self.q**self.n, limits.current_limits().max_dense, "dense function")
        if self.values.shape != (self.q**self.n,):
            raise ValueError(f"expected {self.q**self.n} values, got shape {self.values.shape}")

    @property
    def size(self) -> int:
        return self.q**self.n

    @property
    def is_exact(self) -> bool:
        return self.values.dtype == object or np.issubdtype(self.values.dtype, np.integer)

    def __getitem__(self, x: Sequence[int]) -> complex:
        return self.values[index_of(x, self.q)]

    def as_complex(self) -> np.ndarray:
        if self.values.dtype == object:
            return np.array([complex(v) for v in self.values], dtype=complex)
        return self.values.astype(complex)


def index_of(x: Sequence[int], q: int) -> int:
    idx = 0
    for a in reversed(x):
        idx = idx * q + a
    return idx


def vector_of(idx: int, q: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        idx, a = divmod(idx, q)
        out.append(a)
    return tuple(out)


@functools.lru_cache(maxsize=8)
def all_vectors(q: int, n: int) -> np.ndarray:
    """Row ``j`` is the vector stored at index ``j``."""
    idx = np.arange(q**n, dtype=np.int64)
    out = (idx[:, None] // q ** np.arange(n, dtype=np.int64)[None, :]) % q
    out.flags.writeable = False
    return out


def weights_by_index(q: int, n: int) -> np.ndarray:
    return np.count_nonzero(all_vectors(q, n), axis=1)


def zeros(q: int, n: int, dtype=complex) -> DenseFunction:
    return DenseFunction(q, n, np.zeros(q**n, dtype=dtype))


def delta(q: int, n: int, x: Sequence[int] | None = None, dtype=np.int64) -> DenseFunction:
    v = np.zeros(q**n, dtype=dtype)
    v[0 if x is None else index_of(x, q)] = 1
    return DenseFunction(q, n, v)


def indicator(c: LinearCode | AffineCode) -> DenseFunction:
    c = as_affine(c)
    v = np.zeros(c.q**c.n, dtype=np.int64)
    powers = c.q ** np.arange(c.n, dtype=np.int64)
    for block in codeword_blocks(c):
        v[block @ powers] = 1
    return DenseFunction(c.q, c.n, v)


def from_points(q: int, n: int, points: dict[int, complex]) -> DenseFunction:
    v = np.zeros(q**n, dtype=complex)
    for idx, val in points.items():
        v[idx] = val
    return DenseFunction(q, n, v)


@functools.lru_cache(maxsize=None)
def _dft_matrix(q: int) -> np.ndarray:
    # exponents reduced mod q before taking the angle
    e = np.outer(np.arange(q), np.arange(q)) % q
    return np.exp(2j * np.pi * e / q)


def transform(f: DenseFunction) -> DenseFunction:
    """Unitary transform by n passes of a q-point DFT, one per coordinate."""
    q, n = f.q, f.n
    a = f.as_complex().reshape((q,) * n)
    w = _dft_matrix(q)
    # contracting axis 0 appends the new axis last; after n passes the order is restored
    for _ in range(n):
        a = np.tensordot(a, w, axes=([0], [0]))
    return DenseFunction(q, n, a.reshape(-1) * q ** (-n / 2))


def fast_transform_q2(f: DenseFunction) -> DenseFunction:
    """Walsh-Hadamard butterflies; one pass per bit, normalized once at the end."""
    if f.q != 2:
        raise ValueError("fast_transform_q2 requires q = 2")
    a = f.as_complex().copy()
    size = a.shape[0]
    h = 1
    while h < size:
        a = a.reshape(-1, 2, h)
        x = a[:, 0, :].copy()
        a[:, 0, :] += a[:, 1, :]
        a[:, 1, :] = x - a[:, 1, :]
        a = a.reshape(-1)
        h *= 2
    return DenseFunction(2, f.n, a * 2.0 ** (-f.n / 2))


@functools.lru_cache(maxsize=4)
def character_matrix(q: int, n: int) -> np.ndarray:
    """``M[x, z] = w**(x . z)``; q**n by q**n, so only for small spaces."""
    limits.check(q**n, limits.current_limits().max_naive, "character matrix")
    if q == 2:
        idx = np.arange(2**n, dtype=np.uint32)
        parity = np.bitwise_count(idx[:, None] & idx[None, :]) & 1
        m = 1.0 - 2.0 * parity
    else:
        vecs = all_vectors(q, n)
        m = np.exp(2j * np.pi * ((vecs @ vecs.T) % q) / q)
    m.flags.writeable = False
    return m


def naive_transform(f: DenseFunction) -> DenseFunction:
    m = character_matrix(f.q, f.n)
    return DenseFunction(f.q, f.n, (m @ f.as_complex()) * f.q ** (-f.n / 2))


def naive_transform_many(q: int, n: int, values: np.ndarray) -> np.ndarray:
    """Naive transform of every column of a ``(q**n, b)`` array."""
    return (character_matrix(q, n) @ values) * q ** (-n / 2)


def reflect(f: DenseFunction) -> DenseFunction:
    """x -> f(-x)."""
    neg = (-all_vectors(f.q, f.n)) % f.q
    idx = neg @ (f.q ** np.arange(f.n, dtype=np.int64))
    return DenseFunction(f.q, f.n, f.values[idx])


def norm2(f: DenseFunction) -> float:
    return float(np.sqrt(np.sum(np.abs(f.as_complex()) ** 2)))


# -- exact route over Z[w] ------------------------------------------------------


def _integer_scaling(values: np.ndarray) -> tuple[np.ndarray, int]:
    """Rational ``values`` as integers times ``1/scale``."""
    if values.dtype != object:
        return values.astype(np.int64), 1
    fr = [Fraction(v) for v in values]
    scale = lcm(*(v.denominator for v in fr)) if fr else 1
    return np.array([int(v * scale) for v in fr], dtype=object), scale


def scaled_transform_exact(f: DenseFunction) -> np.ndarray:
    """Exact ``q**(n/2) * fhat`` as cyclotomic coefficients.

    Returns an array of shape ``(q**n, q)``: row ``z`` holds ``c`` with
    ``q**(n/2) fhat(z) = sum_r c[r] w**r``, normalized so ``c[q-1] == 0``
    (possible since 1 + w + ... + w**(q-1) = 0 is the only relation for
    prime q).  Entries are Fractions.
    """
    if not f.is_exact:
        raise TypeError("exact transform needs integer or Fraction values")
    q, n = f.q, f.n
    ints, scale = _integer_scaling(f.values)
    bound = int(np.max(np.abs(ints))) if ints.size else 0
    dtype = np.int64 if bound * q**n < 2**62 else object
    a = np.zeros((q**n, q), dtype=dtype)
    a[:, 0] = ints
    a = a.reshape((q,) * n + (q,))
    for _ in range(n):
        # multiplying by w**e is a cyclic shift of the coefficient axis
        out = [sum(np.roll(a[x], (x * z) % q, axis=-1) for x in range(q)) for z in range(q)]
        a = np.stack(out, axis=-2)
    a = a.reshape(q**n, q)
    a = a - a[:, q - 1 : q]
    return np.vectorize(lambda v: Fraction(int(v), scale), otypes=[object])(a)


def cyclotomic_value(c: Sequence[Fraction]) -> Fraction | None:
    """The rational value of a normalized coefficient vector, or None if irrational."""
    if any(c[r] for r in range(1, len(c))):
        return None
    return Fraction(c[0])


def cyclotomic_to_complex(c: Sequence[Fraction]) -> complex:
    q = len(c)
    return complex(sum(complex(float(a)) * np.exp(2j * np.pi * r / q) for r, a in enumerate(c)))


# -- support, eigenfunctions, uncertainty ---------------------------------------------


def support(f: DenseFunction, tol: float = DEFAULT_TOL) -> frozenset[int]:
    if tol < 0:
        raise ValueError("tol must be >= 0")
    if f.is_exact:
        return frozenset(int(i) for i, v in enumerate(f.values) if v != 0)
    return frozenset(int(i) for i in np.flatnonzero(np.abs(f.values) > tol))


def _is_zero(f: DenseFunction) -> bool:
    if f.values.dtype == object:
        return all(v == 0 for v in f.values)
    return not np.any(f.values)


@dataclass(frozen=True)
class EigenReport:
    eigenvalue: int | None
    residual: float


def eigenfunction_check(f: DenseFunction, tol: float = DEFAULT_TOL) -> EigenReport:
    """Find lambda in {+1, -1} with max|fhat - lambda f| <= tol (q = 2 only)."""
    if f.q != 2:
        raise ValueError("eigenfunction_check is defined for q = 2")
    if _is_zero(f):
        raise ValueError("zero function")
    fv = f.as_complex()
    fh = fast_transform_q2(f).values
    plus = float(np.max(np.abs(fh - fv)))
    minus = float(np.max(np.abs(fh + fv)))
    if plus <= minus:
        return EigenReport(1 if plus <= tol else None, plus)
    return EigenReport(-1 if minus <= tol else None, minus)


@dataclass(frozen=True)
class UncertaintyReport:
    support_f: int
    support_hat: int
    product: int
    bound: int
    passed: bool


def uncertainty_report(f: DenseFunction, tol: float = DEFAULT_TOL) -> UncertaintyReport:
    """|supp f| * |supp fhat| >= 2**n on Q_2^n."""
    if f.q != 2:
        raise ValueError("uncertainty_report is defined for q = 2")
    if _is_zero(f):
        raise ValueError("zero function")
    s1 = len(support(f, tol))
    s2 = len(support(fast_transform_q2(f), tol))
    bound = 2**f.n
    return UncertaintyReport(s1, s2, s1 * s2, bound, s1 * s2 >= bound)
