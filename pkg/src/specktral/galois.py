"""Prime-field arithmetic and row reduction over GF(q).

Vectors are plain tuples of ints in ``[0, q)``; matrices are tuples of such
rows.  Coordinates are 0-based throughout (coordinate ``i`` here is the
``(i+1)``-th coordinate in 1-based notation).
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field Z/qZ for prime ``q``."""

    q: int

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or not is_prime(self.q):
            raise ValueError(f"non-prime order: q={self.q!r}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def mul(self, a: int, b: int) -> int:
        return a * b % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.q)

    @functools.cached_property
    def inverses(self) -> tuple[int, ...]:
        """Lookup table; entry 0 is 0 as a placeholder."""
        return (0,) + tuple(pow(a, -1, self.q) for a in range(1, self.q))


@functools.lru_cache(maxsize=None)
def field_ops(q: int) -> PrimeField:
    return PrimeField(q)


def as_vector(v: Iterable[int], q: int, n: int | None = None) -> Vector:
    """Validate ``v`` as an element of Q_q^n and return it as a tuple."""
    out = tuple(int(a) for a in v)
    if n is not None and len(out) != n:
        raise ValueError(f"length mismatch: expected {n}, got {len(out)}")
    for a in out:
        if not 0 <= a < q:
            raise ValueError(f"coordinate {a} outside [0, {q})")
    return out


def weight(v: Sequence[int]) -> int:
    return sum(1 for a in v if a)


def support(v: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, a in enumerate(v) if a)


def vec_add(u: Sequence[int], v: Sequence[int], q: int) -> Vector:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return tuple((a + b) % q for a, b in zip(u, v))


def vec_sub(u: Sequence[int], v: Sequence[int], q: int) -> Vector:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return tuple((a - b) % q for a, b in zip(u, v))


def inner_product(u: Sequence[int], v: Sequence[int], q: int) -> int:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v)) % q


def rref(rows: Sequence[Sequence[int]], q: int, ncols: int | None = None) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form over GF(q).

    Returns ``(reduced, rank, pivots)``.  ``reduced`` keeps the zero rows at
    the bottom so its shape equals the input's.
    """
    field = field_ops(q)
    work = [[a % q for a in r] for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    if any(len(r) != ncols for r in work):
        raise ValueError("ragged matrix")
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(work):
            break
        p = next((i for i in range(r, len(work)) if work[i][col]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        s = field.inverses[work[r][col]]
        if s != 1:
            work[r] = [a * s % q for a in work[r]]
        pivot_row = work[r]
        for i in range(len(work)):
            c = work[i][col]
            if i != r and c:
                work[i] = [(a - c * b) % q for a, b in zip(work[i], pivot_row)]
        pivots.append(col)
        r += 1
    return tuple(tuple(row) for row in work), r, tuple(pivots)


def rank(rows: Sequence[Sequence[int]], q: int, ncols: int | None = None) -> int:
    return rref(rows, q, ncols)[1]


def reduce_against(v: Sequence[int], basis: Sequence[Sequence[int]], pivots: Sequence[int], q: int) -> Vector:
    """Subtract multiples of RREF rows from ``v`` until its pivot entries vanish."""
    out = [a % q for a in v]
    for row, p in zip(basis, pivots):
        c = out[p]
        if c:
            out = [(a - c * b) % q for a, b in zip(out, row)]
    return tuple(out)


def nullspace(rows: Sequence[Sequence[int]], q: int, ncols: int) -> Matrix:
    """Basis of {x : M x^T = 0} over GF(q), in RREF."""
    reduced, r, pivots = rref(rows, q, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [0] * ncols
        x[free] = 1
        for row, p in zip(reduced[:r], pivots):
            x[p] = -row[free] % q
        basis.append(x)
    return rref(basis, q, ncols)[0] if basis else ()
