"""Linear and affine codes over GF(q), weight distributions and coset statistics."""

from __future__ import annotations

import functools
import itertools
import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from specktral import limits
from specktral.galois import (
    Matrix,
    Vector,
    as_vector,
    field_ops,
    nullspace,
    rank,
    reduce_against,
    rref,
    vec_add,
)

_BLOCK = 1 << 16


@dataclass(frozen=True)
class LinearCode:
    """A subspace of Q_q^n stored by its canonical RREF generator matrix.

    Build instances with :func:`from_generators`; the constructor only
    validates.  Two equal subspaces compare equal.
    """

    q: int
    n: int
    gen: Matrix

    def __post_init__(self) -> None:
        field_ops(self.q)
        if self.n < 1:
            raise ValueError("code length must be >= 1")
        reduced, r, _ = rref(self.gen, self.q, self.n)
        if r != len(self.gen) or reduced != self.gen:
            raise ValueError("generator matrix is not in full-rank RREF; use from_generators()")

    @property
    def k(self) -> int:
        return len(self.gen)

    @property
    def size(self) -> int:
        return self.q**self.k

    @functools.cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(row) if a) for row in self.gen)

    @functools.cached_property
    def free_columns(self) -> tuple[int, ...]:
        p = set(self.pivots)
        return tuple(j for j in range(self.n) if j not in p)

    @functools.cached_property
    def gen_array(self) -> np.ndarray:
        return np.array(self.gen, dtype=np.int64).reshape(self.k, self.n)

    def __contains__(self, v: Sequence[int]) -> bool:
        v = as_vector(v, self.q, self.n)
        return not any(reduce_against(v, self.gen, self.pivots, self.q))

    def reduce(self, v: Sequence[int]) -> Vector:
        """Lexicographically least element of the coset ``v + self``."""
        return reduce_against(as_vector(v, self.q, self.n), self.gen, self.pivots, self.q)

    def __str__(self) -> str:
        rows = ";".join("".join(map(str, r)) for r in self.gen)
        return f"[{self.n},{self.k}]_{self.q}<{rows}>"


@dataclass(frozen=True)
class AffineCode:
    """The translate ``offset + linear`` with a canonical offset.

    The offset is the lexicographically least coset element, which is the
    unique element vanishing on every pivot column of ``linear.gen``.
    """

    linear: LinearCode
    offset: Vector

    def __post_init__(self) -> None:
        off = as_vector(self.offset, self.q, self.n)
        if self.linear.reduce(off) != off:
            raise ValueError("offset is not canonical; use affine()")

    @property
    def q(self) -> int:
        return self.linear.q

    @property
    def n(self) -> int:
        return self.linear.n

    @property
    def k(self) -> int:
        return self.linear.k

    @property
    def size(self) -> int:
        return self.linear.size

    @property
    def is_linear(self) -> bool:
        return not any(self.offset)

    def __contains__(self, v: Sequence[int]) -> bool:
        v = as_vector(v, self.q, self.n)
        return self.linear.reduce(v) == self.offset

    def __str__(self) -> str:
        if self.is_linear:
            return str(self.linear)
        return "".join(map(str, self.offset)) + "+" + str(self.linear)


@dataclass(frozen=True)
class WeightDistribution:
    q: int
    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise ValueError("a weight distribution has n+1 entries")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def weights(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.counts) if c)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.counts])


def from_generators(q: int, vectors: Iterable[Sequence[int]], n: int | None = None) -> LinearCode:
    rows = [as_vector(v, q) for v in vectors]
    if n is None:
        if not rows:
            raise ValueError("length n is required for an empty generator list")
        n = len(rows[0])
    rows = [as_vector(v, q, n) for v in rows]
    reduced, r, _ = rref(rows, q, n)
    return LinearCode(q, n, reduced[:r])


def zero_code(q: int, n: int) -> LinearCode:
    return LinearCode(q, n, ())


def full_space(q: int, n: int) -> LinearCode:
    return LinearCode(q, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def affine(linear: LinearCode, offset: Sequence[int] | None = None) -> AffineCode:
    if offset is None:
        return AffineCode(linear, (0,) * linear.n)
    return AffineCode(linear, linear.reduce(offset))


def as_affine(c: LinearCode | AffineCode) -> AffineCode:
    return c if isinstance(c, AffineCode) else affine(c)


def dual(c: LinearCode) -> LinearCode:
    return LinearCode(c.q, c.n, nullspace(c.gen, c.q, c.n))


def is_subcode(u: LinearCode, v: LinearCode) -> bool:
    if (u.q, u.n) != (v.q, v.n):
        return False
    return all(row in v for row in u.gen)


def span(u: LinearCode, vectors: Iterable[Sequence[int]]) -> LinearCode:
    return from_generators(u.q, list(u.gen) + list(vectors), u.n)


# -- enumeration ------------------------------------------------------------


def _digits(start: int, stop: int, base: int, width: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    powers = base ** np.arange(width, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % base


def codeword_blocks(c: LinearCode | AffineCode, lim: limits.Limits | None = None) -> Iterator[np.ndarray]:
    """Yield the codewords of ``c`` as int64 arrays of at most 2**16 rows."""
    c = as_affine(c)
    lim = lim or limits.current_limits()
    limits.check(c.size, lim.max_enum, "enumeration")
    g = c.linear.gen_array
    off = np.array(c.offset, dtype=np.int64)
    for start in range(0, c.size, _BLOCK):
        coeffs = _digits(start, min(c.size, start + _BLOCK), c.q, c.k)
        yield (coeffs @ g + off) % c.q


def iter_codewords(c: LinearCode | AffineCode, lim: limits.Limits | None = None) -> Iterator[Vector]:
    for block in codeword_blocks(c, lim):
        for row in block.tolist():
            yield tuple(row)


def weight_distribution(c: LinearCode | AffineCode, lim: limits.Limits | None = None) -> WeightDistribution:
    c = as_affine(c)
    counts = np.zeros(c.n + 1, dtype=np.int64)
    for block in codeword_blocks(c, lim):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=c.n + 1)
    return WeightDistribution(c.q, c.n, tuple(int(a) for a in counts))


def coset_weight_distribution(c: LinearCode, x: Sequence[int], lim: limits.Limits | None = None) -> WeightDistribution:
    return weight_distribution(affine(c, as_vector(x, c.q, c.n)), lim)


def nonzero_weights(c: LinearCode | AffineCode, lim: limits.Limits | None = None) -> frozenset[int]:
    """Weights ``i`` with ``A_i > 0``; includes 0 whenever the zero word is present."""
    return weight_distribution(c, lim).weights()


def coset_representatives(c: LinearCode, lim: limits.Limits | None = None) -> Iterator[np.ndarray]:
    """Canonical coset leaders in blocks: every vector supported on the free columns."""
    lim = lim or limits.current_limits()
    r = c.n - c.k
    total = c.q**r
    limits.check(total, lim.max_cosets, "coset space")
    free = list(c.free_columns)
    for start in range(0, total, _BLOCK):
        d = _digits(start, min(total, start + _BLOCK), c.q, r)
        reps = np.zeros((d.shape[0], c.n), dtype=np.int64)
        reps[:, free] = d
        yield reps


def coset_weight_table(c: LinearCode, lim: limits.Limits | None = None) -> np.ndarray:
    """Counts ``T[j, i] = |A_i(c + x_j)|`` for the canonical leaders ``x_j``.

    Rows follow the little-endian order of the leaders' free-column digits.
    """
    lim = lim or limits.current_limits()
    n1 = c.n + 1
    rows = []
    for reps in coset_representatives(c, lim):
        table = np.zeros((reps.shape[0], n1), dtype=np.int64)
        for words in codeword_blocks(c, lim):
            step = max(1, (1 << 22) // (words.shape[0] * c.n))
            for s in range(0, reps.shape[0], step):
                chunk = reps[s : s + step]
                w = np.count_nonzero((chunk[:, None, :] + words[None, :, :]) % c.q, axis=2)
                flat = (np.arange(chunk.shape[0])[:, None] * n1 + w).ravel()
                table[s : s + step] += np.bincount(flat, minlength=chunk.shape[0] * n1).reshape(-1, n1)
        rows.append(table)
    return np.concatenate(rows, axis=0)


def alpha(c: LinearCode, lim: limits.Limits | None = None) -> Fraction:
    """max over weights i and translates x of |A_i(c + x)| / |c|."""
    table = coset_weight_table(c, lim)
    return Fraction(int(table.max()), c.size)


# -- nested-subspace bound ----------------------------------------------------


@dataclass(frozen=True)
class SubspaceBoundReport:
    alpha_sub: Fraction
    bound: Fraction | None
    max_ratio: Fraction
    passed: bool
    degenerate: bool = False


def check_subspace_alpha_bound(u: LinearCode, v: LinearCode, lim: limits.Limits | None = None) -> SubspaceBoundReport:
    """Check max_{i,w} |A_i(v+w)|/|v| <= a/(1-a) with a = alpha(u), for u inside v.

    When ``alpha(u) == 1`` the bound is vacuous and a degenerate report
    (``passed=False``, ``bound=None``) is returned.
    """
    if not is_subcode(u, v):
        raise ValueError("not a subspace: u is not contained in v")
    a = alpha(u, lim)
    max_ratio = Fraction(int(coset_weight_table(v, lim).max()), v.size)
    if a == 1:
        return SubspaceBoundReport(a, None, max_ratio, False, degenerate=True)
    bound = a / (1 - a)
    return SubspaceBoundReport(a, bound, max_ratio, max_ratio <= bound)


# -- generators of test material ------------------------------------------------


def iter_subspaces(q: int, n: int, k: int | None = None) -> Iterator[LinearCode]:
    """Every subspace of Q_q^n (or every k-dimensional one), via RREF shapes."""
    field_ops(q)
    dims = range(n + 1) if k is None else [k]
    for d in dims:
        for pivots in itertools.combinations(range(n), d):
            pivot_set = set(pivots)
            slots = [(r, j) for r, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivot_set]
            for values in itertools.product(range(q), repeat=len(slots)):
                rows = [[0] * n for _ in range(d)]
                for r, p in enumerate(pivots):
                    rows[r][p] = 1
                for (r, j), a in zip(slots, values):
                    rows[r][j] = a
                yield LinearCode(q, n, tuple(tuple(row) for row in rows))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of Q_q^n."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def random_code(q: int, n: int, k: int, rng: np.random.Generator) -> LinearCode:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    while True:
        rows = rng.integers(0, q, size=(k, n)).tolist()
        if rank(rows, q, n) == k:
            return from_generators(q, rows, n)


def random_affine_code(q: int, n: int, k: int, rng: np.random.Generator) -> AffineCode:
    return affine(random_code(q, n, k, rng), rng.integers(0, q, size=n).tolist())


def random_supercode(u: LinearCode, extra: int, rng: np.random.Generator) -> LinearCode:
    """A code containing ``u`` with dimension ``u.k + extra``."""
    if u.k + extra > u.n:
        raise ValueError("requested dimension exceeds n")
    v = u
    while v.k < u.k + extra:
        v = span(v, [rng.integers(0, u.q, size=u.n).tolist()])
    return v


def binomial_row(q: int, n: int) -> tuple[int, ...]:
    """|A_i(Q_q^n)| = (q-1)^i C(n, i)."""
    return tuple((q - 1) ** i * comb(n, i) for i in range(n + 1))


def add_word(c: AffineCode, v: Sequence[int]) -> AffineCode:
    return affine(c.linear, vec_add(c.offset, as_vector(v, c.q, c.n), c.q))
