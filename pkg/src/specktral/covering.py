"""Axis-aligned faces of Q_q^n and how codes and point sets meet them."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from specktral import limits
from specktral.codes import AffineCode, LinearCode, as_affine, iter_codewords
from specktral.galois import Vector, as_vector, field_ops, rref


@dataclass(frozen=True)
class Face:
    """The t-dimensional face freeing ``free`` and fixing the other coordinates.

    ``fixed`` lists the values of the non-free coordinates in increasing
    coordinate order.
    """

    q: int
    n: int
    free: frozenset[int]
    fixed: tuple[int, ...]

    def __post_init__(self) -> None:
        field_ops(self.q)
        if not all(0 <= j < self.n for j in self.free):
            raise ValueError("free position out of range")
        if len(self.fixed) != self.n - len(self.free):
            raise ValueError("fixed values must cover every non-free position")
        if not all(0 <= a < self.q for a in self.fixed):
            raise ValueError("fixed value outside the field")

    @property
    def t(self) -> int:
        return len(self.free)

    @property
    def fixed_positions(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if j not in self.free)

    def __contains__(self, v: Sequence[int]) -> bool:
        return all(v[j] == a for j, a in zip(self.fixed_positions, self.fixed))


def face_through(point: Sequence[int], free: Iterable[int], q: int) -> Face:
    """The face with free set ``free`` containing ``point``."""
    free = frozenset(free)
    point = as_vector(point, q)
    return Face(q, len(point), free, tuple(point[j] for j in range(len(point)) if j not in free))


def face_members(f: Face, lim: limits.Limits | None = None) -> Iterator[Vector]:
    """Members in little-endian order of their free coordinates."""
    lim = lim or limits.current_limits()
    limits.check(f.q**f.t, lim.max_enum, "face")
    free = sorted(f.free)
    base = [0] * f.n
    for j, a in zip(f.fixed_positions, f.fixed):
        base[j] = a
    for values in itertools.product(range(f.q), repeat=f.t):
        v = list(base)
        for j, a in zip(free, reversed(values)):
            v[j] = a
        yield tuple(v)


def face_intersection(c: LinearCode | AffineCode, f: Face) -> int:
    """|c ∩ f| by solving for the generator combinations that hit the fixed values.

    Codewords are ``offset + a G``; pinning the fixed columns gives the
    system ``a G_F = fixed - offset_F``.  The count is 0 if it is
    inconsistent and ``q**(k - rank G_F)`` otherwise.
    """
    c = as_affine(c)
    if (c.q, c.n) != (f.q, f.n):
        raise ValueError("code and face live in different spaces")
    cols = f.fixed_positions
    if not cols:
        return c.size
    # rows of the transposed system: one equation per fixed column
    system = [[row[j] for row in c.linear.gen] + [(a - c.offset[j]) % c.q] for j, a in zip(cols, f.fixed)]
    _, r_aug, pivots = rref(system, c.q, c.k + 1)
    if c.k in pivots:
        return 0
    return c.q ** (c.k - r_aug)


def face_intersection_enum(c: LinearCode | AffineCode, f: Face) -> int:
    return sum(1 for w in iter_codewords(c) if w in f)


@dataclass(frozen=True)
class DichotomyReport:
    free: frozenset[int]
    counts: tuple[int, ...]
    exponent: int | None
    passed: bool


def check_prop2(c: AffineCode | LinearCode, free: Iterable[int]) -> DichotomyReport:
    """Intersect ``c`` with every translate of the face freeing ``free``.

    Passes when every nonzero count is one common power of two.
    """
    c = as_affine(c)
    if c.q != 2:
        raise ValueError("the dichotomy is stated for q = 2")
    free = frozenset(free)
    nfixed = c.n - len(free)
    limits.check(2**nfixed, limits.current_limits().max_faces, "translates")
    counts = tuple(
        face_intersection(c, Face(2, c.n, free, fixed)) for fixed in itertools.product(range(2), repeat=nfixed)
    )
    nonzero = {x for x in counts if x}
    if len(nonzero) != 1:
        return DichotomyReport(free, counts, None, False)
    (value,) = nonzero
    s = value.bit_length() - 1
    return DichotomyReport(free, counts, s, value == 1 << s)


def _face_count_guard(n: int, t: int, q: int) -> None:
    if not 0 <= t <= n:
        raise ValueError("need 0 <= t <= n")
    limits.check(comb(n, t) * q ** (n - t), limits.current_limits().max_faces, "face scan")


def count_intersecting_faces(points: Iterable[Sequence[int]], t: int, q: int = 2, n: int | None = None) -> int:
    """Number of t-faces meeting ``points``.

    For a fixed free set, the faces met are exactly the distinct
    projections of the points onto the remaining coordinates.
    """
    pts = [tuple(p) for p in points]
    if n is None:
        if not pts:
            raise ValueError("n is required for an empty point set")
        n = len(pts[0])
    pts = [as_vector(p, q, n) for p in pts]
    _face_count_guard(n, t, q)
    total = 0
    for free in itertools.combinations(range(n), t):
        keep = [j for j in range(n) if j not in free]
        total += len({tuple(p[j] for j in keep) for p in pts})
    return total


def total_faces(n: int, t: int, q: int = 2) -> int:
    return comb(n, t) * q ** (n - t)


def covering_score(points: Iterable[Sequence[int]], t: int, q: int = 2, n: int | None = None) -> Fraction:
    pts = [tuple(p) for p in points]
    if n is None:
        n = len(pts[0])
    return Fraction(count_intersecting_faces(pts, t, q, n), total_faces(n, t, q))
