"""MacWilliams-type identities, checked exactly wherever the inputs allow.

Transform-side quantities carry the factor q**(n/2), which is irrational for
odd n with q not a square.  The exact checks therefore compare
``q**(n/2) * Ahat_k`` instead of ``Ahat_k``; both sides of every identity are
multiplied by the same factor.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

import numpy as np

from specktral import fourier
from specktral.codes import LinearCode, WeightDistribution, dual, weight_distribution
from specktral.fourier import DEFAULT_TOL, DenseFunction
from specktral.krawtchouk import krawtchouk_matrix


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    code: str
    lhs: Any
    rhs: Any
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class SpectralSums:
    """Shell sums of f and of its transform.

    ``a[k]`` is the sum of f over the weight-k shell and ``a_hat[k]`` the
    same for fhat.  On the exact route ``scaled_a_hat`` holds
    ``q**(n/2) * a_hat`` as Fractions and ``a_hat`` is derived from it.
    """

    q: int
    n: int
    a: list
    a_hat: list
    scaled_a_hat: list | None = field(default=None)

    @property
    def exact(self) -> bool:
        return self.scaled_a_hat is not None


def macwilliams_transform(w: WeightDistribution | Sequence[int], k_dim: int, n: int, q: int) -> WeightDistribution:
    """Dual distribution: A_k(V^perp) = q**(-dim V) * sum_m P_k(m) A_m(V)."""
    counts = list(w)
    if len(counts) != n + 1:
        raise ValueError("distribution length must be n+1")
    kr = krawtchouk_matrix(n, q)
    out = []
    for k in range(n + 1):
        value = Fraction(sum(kr[k][m] * counts[m] for m in range(n + 1)), q**k_dim)
        if value.denominator != 1 or value < 0:
            raise ValueError("input is not a valid linear-code distribution")
        out.append(value.numerator)
    if sum(out) != q ** (n - k_dim):
        raise ValueError("input is not a valid linear-code distribution")
    return WeightDistribution(q, n, tuple(out))


def verify_eq1(c: LinearCode) -> IdentityReport:
    """Enumerated dual distribution vs the Krawtchouk transform of the code's."""
    w = weight_distribution(c)
    via_dual = weight_distribution(dual(c))
    try:
        transformed = macwilliams_transform(w, c.k, c.n, c.q)
    except ValueError as exc:
        return IdentityReport("eq1", str(c), list(w), list(via_dual), False, str(exc))
    return IdentityReport("eq1", str(c), list(transformed), list(via_dual), transformed == via_dual)


# -- shell sums ---------------------------------------------------------------------


def _shell_sum(values: np.ndarray, q: int, n: int) -> list:
    wts = fourier.weights_by_index(q, n)
    if values.dtype == object:
        out = [Fraction(0)] * (n + 1)
        for w, v in zip(wts.tolist(), values):
            out[w] += Fraction(v)
        return out
    return [values[wts == k].sum() for k in range(n + 1)]


def spectral_sums(f: DenseFunction, tol: float = DEFAULT_TOL) -> SpectralSums:
    """Shell sums of f and fhat, cross-checked against the Krawtchouk route.

    Raises ``ArithmeticError`` if the transform route and the Krawtchouk
    route disagree (exactly on the exact route, beyond ``tol`` otherwise).
    """
    q, n = f.q, f.n
    kr = krawtchouk_matrix(n, q)
    if f.is_exact:
        a = _shell_sum(f.values, q, n)
        a = [Fraction(v) for v in a]
        coeffs = fourier.scaled_transform_exact(f)
        wts = fourier.weights_by_index(q, n)
        scaled = []
        for k in range(n + 1):
            shell = coeffs[wts == k].sum(axis=0) if np.any(wts == k) else [Fraction(0)] * q
            value = fourier.cyclotomic_value(list(shell))
            if value is None:
                raise ArithmeticError(f"shell sum {k} of the transform is not rational")
            scaled.append(value)
        expected = [sum(kr[k][m] * a[m] for m in range(n + 1)) for k in range(n + 1)]
        if scaled != expected:
            raise ArithmeticError("transform shell sums disagree with the Krawtchouk route")
        root = q ** (n / 2)
        return SpectralSums(q, n, a, [float(v) / root for v in scaled], scaled)
    fv = f.as_complex()
    fh = fourier.fast_transform_q2(f).values if q == 2 else fourier.transform(f).values
    a = [complex(v) for v in _shell_sum(fv, q, n)]
    a_hat = [complex(v) for v in _shell_sum(fh, q, n)]
    expected = [sum(kr[k][m] * a[m] for m in range(n + 1)) * q ** (-n / 2) for k in range(n + 1)]
    scale = max(1.0, max(abs(v) for v in expected))
    if max(abs(x - y) for x, y in zip(a_hat, expected)) > tol * scale:
        raise ArithmeticError("transform shell sums disagree with the Krawtchouk route")
    return SpectralSums(q, n, a, a_hat)


def verify_eq3(f: DenseFunction, tol: float = DEFAULT_TOL, name: str = "f") -> IdentityReport:
    """Ahat_k = q**(-n/2) sum_m P_k(m) A_m, reported per shell (scaled by q**(n/2) when exact)."""
    q, n = f.q, f.n
    kr = krawtchouk_matrix(n, q)
    try:
        s = spectral_sums(f, tol)
    except ArithmeticError as exc:
        return IdentityReport("eq3", name, None, None, False, str(exc))
    if s.exact:
        rhs = [sum(kr[k][m] * s.a[m] for m in range(n + 1)) for k in range(n + 1)]
        return IdentityReport("eq3", name, s.scaled_a_hat, rhs, s.scaled_a_hat == rhs, "both sides times q^(n/2)")
    rhs = [sum(kr[k][m] * s.a[m] for m in range(n + 1)) * q ** (-n / 2) for k in range(n + 1)]
    ok = max(abs(x - y) for x, y in zip(s.a_hat, rhs)) <= tol * max(1.0, max(abs(v) for v in rhs))
    return IdentityReport("eq3", name, s.a_hat, rhs, ok)


def verify_eq3_indicator(c: LinearCode) -> IdentityReport:
    """For f = 1_V: q**(n/2) Ahat_k equals q**dim V |A_k(V^perp)| and the Krawtchouk sum."""
    f = fourier.indicator(c)
    s = spectral_sums(f)
    dual_w = weight_distribution(dual(c))
    rhs = [Fraction(c.q**c.k * a) for a in dual_w]
    return IdentityReport("eq3", str(c), s.scaled_a_hat, rhs, s.scaled_a_hat == rhs, "both sides times q^(n/2)")


# -- Lemma 1 / Corollary 1 / binary case ------------------------------------------


def _lemma_weight(m: int, q: int) -> Fraction:
    """(1 - (-1)**(m+1) / (q-1)**(m+1)) / (m+1)."""
    return (1 - Fraction((-1) ** (m + 1), (q - 1) ** (m + 1))) / (m + 1)


def lemma1_sides(f: DenseFunction, tol: float = DEFAULT_TOL) -> tuple[Any, Any, bool]:
    """Both sides of the shell-normalized identity for f.

    Exact route: each side multiplied by q**(n/2), returned as Fractions.
    Float route: the unscaled complex values.
    """
    q, n = f.q, f.n
    s = spectral_sums(f, tol)
    if s.exact:
        lhs = sum(s.scaled_a_hat[k] / ((q - 1) ** k * comb(n, k)) for k in range(n + 1))
        rhs = Fraction((n + 1) * (q - 1), q) * sum(s.a[m] * _lemma_weight(m, q) for m in range(n + 1))
        return lhs, rhs, lhs == rhs
    lhs = sum(s.a_hat[k] / ((q - 1) ** k * comb(n, k)) for k in range(n + 1))
    rhs = (n + 1) * (q - 1) / q ** (1 + n / 2) * sum(s.a[m] * float(_lemma_weight(m, q)) for m in range(n + 1))
    return lhs, rhs, abs(lhs - rhs) < tol * max(1.0, abs(rhs))


def verify_lemma1(f: DenseFunction, tol: float = DEFAULT_TOL, name: str = "f") -> IdentityReport:
    lhs, rhs, ok = lemma1_sides(f, tol)
    note = "both sides times q^(n/2)" if f.is_exact else f"tol={tol}"
    return IdentityReport("lemma1", name, lhs, rhs, ok, note)


def cor1_sides(c: LinearCode) -> tuple[Fraction, Fraction]:
    q, n = c.q, c.n
    w = weight_distribution(c)
    wd = weight_distribution(dual(c))
    lhs = sum(Fraction(w[k], (q - 1) ** k * comb(n, k)) for k in range(n + 1))
    rhs = Fraction((n + 1) * (q - 1), q ** (1 + n - c.k)) * sum(wd[k] * _lemma_weight(k, q) for k in range(n + 1))
    return lhs, rhs


def verify_cor1(c: LinearCode) -> IdentityReport:
    lhs, rhs = cor1_sides(c)
    return IdentityReport("cor1", str(c), lhs, rhs, lhs == rhs)


def verify_eq7(c: LinearCode) -> IdentityReport:
    """sum_k A_k(V)/C(n,k) = (n+1)/2**(n - dim V) * sum_{k even} A_k(V^perp)/(k+1)."""
    if c.q != 2:
        raise ValueError("the binary special case needs q = 2")
    n = c.n
    w = weight_distribution(c)
    wd = weight_distribution(dual(c))
    lhs = sum(Fraction(w[k], comb(n, k)) for k in range(n + 1))
    rhs = Fraction(n + 1, 2 ** (n - c.k)) * sum(Fraction(wd[k], k + 1) for k in range(0, n + 1, 2))
    return IdentityReport("eq7", str(c), lhs, rhs, lhs == rhs)


# -- generating-function form -------------------------------------------------------


def verify_eq4(
    f: DenseFunction,
    z_samples: Sequence[Fraction | complex] | None = None,
    tol: float = DEFAULT_TOL,
    name: str = "f",
) -> IdentityReport:
    """q**(n/2) sum_k Ahat_k z**k == sum_m A_m (1-z)**m (1+(q-1)z)**(n-m) at n+1 points.

    Both sides are polynomials of degree <= n, so agreement at n+1 distinct
    points is agreement as polynomials.
    """
    q, n = f.q, f.n
    if z_samples is None:
        z_samples = [Fraction(j) for j in range(n + 1)]
    if len(set(z_samples)) < n + 1:
        raise ValueError(f"need at least {n + 1} distinct sample points")
    s = spectral_sums(f, tol)
    lhs, rhs = [], []
    for z in z_samples:
        if s.exact:
            left = sum(s.scaled_a_hat[k] * Fraction(z) ** k for k in range(n + 1))
            right = sum(s.a[m] * (1 - Fraction(z)) ** m * (1 + (q - 1) * Fraction(z)) ** (n - m) for m in range(n + 1))
        else:
            left = q ** (n / 2) * sum(s.a_hat[k] * z**k for k in range(n + 1))
            right = sum(s.a[m] * (1 - z) ** m * (1 + (q - 1) * z) ** (n - m) for m in range(n + 1))
        lhs.append(left)
        rhs.append(right)
    if s.exact:
        ok = lhs == rhs
    else:
        ok = all(abs(x - y) <= tol * max(1.0, abs(y)) for x, y in zip(lhs, rhs))
    return IdentityReport("eq4", name, lhs, rhs, ok)


def verify_all(c: LinearCode) -> list[IdentityReport]:
    """Every identity that applies to the indicator of ``c``."""
    f = fourier.indicator(c)
    reports = [
        verify_eq1(c),
        verify_eq3_indicator(c),
        verify_eq4(f, name=str(c)),
        verify_lemma1(f, name=str(c)),
        verify_cor1(c),
    ]
    if c.q == 2:
        reports.append(verify_eq7(c))
    return reports
