from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings

from specktral import limits
from specktral.codes import (
    WeightDistribution,
    affine,
    alpha,
    binomial_row,
    check_subspace_alpha_bound,
    coset_weight_distribution,
    coset_weight_table,
    dual,
    from_generators,
    full_space,
    gaussian_binomial,
    is_subcode,
    iter_codewords,
    iter_subspaces,
    nonzero_weights,
    random_code,
    random_supercode,
    span,
    weight_distribution,
    zero_code,
)
from specktral.constructions import build_C, build_M, diagonal_subspace
from tests import oracles
from tests.strategies import affine_codes, linear_codes, vectors


def test_from_generators_examples():
    rep = from_generators(2, [(1, 1)])
    assert rep.k == 1 and rep.gen == ((1, 1),)
    assert from_generators(2, [(1, 1), (1, 1)]) == rep
    z = from_generators(2, [], n=3)
    assert z.k == 0 and z == zero_code(2, 3)


def test_from_generators_rejects_mismatch():
    with pytest.raises(ValueError):
        from_generators(2, [(1, 1), (1, 0, 1)])
    with pytest.raises(ValueError):
        from_generators(3, [(1, 3)])
    with pytest.raises(ValueError, match="non-prime"):
        from_generators(4, [(1, 1)])


def test_equal_codes_have_identical_generators():
    a = from_generators(3, [(1, 2, 0), (0, 1, 1)])
    b = from_generators(3, [(1, 0, 1), (2, 1, 0)])  # (1,2,0)+(0,1,1) and 2*(1,2,0)
    assert oracles.span(3, 3, a.gen) == oracles.span(3, 3, b.gen)
    assert a == b and a.gen == b.gen


def test_dual_examples():
    assert dual(full_space(2, 5)) == zero_code(2, 5)
    assert dual(zero_code(3, 4)) == full_space(3, 4)
    rep = from_generators(2, [(1, 1)])
    assert oracles.dual(2, 2, oracles.span(2, 2, rep.gen)) == {(0, 0), (1, 1)}
    assert dual(rep) == rep


@given(linear_codes())
def test_dual_matches_brute_force(c):
    words = oracles.span(c.q, c.n, c.gen)
    assert set(iter_codewords(dual(c))) == oracles.dual(c.q, c.n, words)


@given(linear_codes())
def test_dual_involution_and_sizes(c):
    d = dual(c)
    assert d.k == c.n - c.k
    assert dual(d) == c
    assert c.size * d.size == c.q**c.n


def test_dual_involution_all_subspaces_q2_n4():
    for c in iter_subspaces(2, 4):
        assert dual(dual(c)) == c


def test_subspace_count_matches_gaussian_binomials():
    for q, n in [(2, 4), (3, 3), (2, 5), (5, 2)]:
        expected = sum(gaussian_binomial(n, k, q) for k in range(n + 1))
        found = list(iter_subspaces(q, n))
        assert len(found) == len(set(found)) == expected
    assert sum(gaussian_binomial(4, k, 2) for k in range(5)) == 67


def test_enumerate_examples():
    v = (1, 0, 1)
    assert list(iter_codewords(affine(zero_code(2, 3), v))) == [v]
    assert set(iter_codewords(from_generators(2, [(1, 1)]))) == {(0, 0), (1, 1)}
    words = list(iter_codewords(build_M(6, 0)))
    assert len(words) == len(set(words)) == 8
    assert all(sum(w) == 3 for w in words)


def test_enumeration_guard():
    c = full_space(2, 10)
    with pytest.raises(limits.GuardError, match="too large"):
        list(iter_codewords(c, limits.Limits(max_enum=512)))


def test_enumeration_guard_env(monkeypatch):
    monkeypatch.setenv("SPECKTRAL_MAX_ENUM", "16")
    weight_distribution(full_space(2, 4))
    with pytest.raises(limits.GuardError):
        weight_distribution(full_space(2, 5))


@given(affine_codes())
def test_codewords_distinct_and_in_code(c):
    words = list(iter_codewords(c))
    assert len(words) == len(set(words)) == c.size
    assert set(words) == oracles.span(c.q, c.n, c.linear.gen, c.offset)
    assert all(w in c for w in words)


@given(affine_codes())
def test_canonical_offset_is_lexicographically_least(c):
    assert c.offset == min(iter_codewords(c))


def test_weight_distribution_examples():
    assert weight_distribution(full_space(2, 2)).counts == (1, 2, 1)
    assert weight_distribution(from_generators(2, [(1, 1)])).counts == (1, 0, 1)
    assert weight_distribution(build_M(6, 0)).counts == (0, 0, 0, 8, 0, 0, 0)


@given(affine_codes())
def test_weight_distribution_matches_brute_force(c):
    w = weight_distribution(c)
    words = oracles.span(c.q, c.n, c.linear.gen, c.offset)
    assert list(w) == oracles.distribution(words, c.n)
    assert w.total == c.q**c.k
    assert all(a <= b for a, b in zip(w, binomial_row(c.q, c.n)))


def test_weight_distribution_json():
    w = weight_distribution(from_generators(2, [(1, 1)]))
    assert w.to_json() == '["1", "0", "1"]'
    with pytest.raises(ValueError):
        WeightDistribution(2, 2, (1, 0))


def test_coset_weight_distribution_examples():
    rep = from_generators(2, [(1, 1)])
    assert coset_weight_distribution(rep, (1, 1)) == weight_distribution(rep)
    assert coset_weight_distribution(rep, (1, 0)).counts == (0, 2, 0)
    for x in [(0, 0, 0, 0), (1, 0, 1, 1)]:
        assert coset_weight_distribution(full_space(2, 4), x).counts == binomial_row(2, 4)
    with pytest.raises(ValueError):
        coset_weight_distribution(rep, (1, 0, 0))


@given(linear_codes(), vectors(2, 1))
def test_coset_distribution_independent_of_representative(c, _):
    rng = np.random.default_rng(c.n + 7 * c.k)
    x = rng.integers(0, c.q, size=c.n).tolist()
    y = [(a + b) % c.q for a, b in zip(x, rng.integers(0, c.q, size=c.k) @ c.gen_array if c.k else [0] * c.n)]
    assert coset_weight_distribution(c, x) == coset_weight_distribution(c, y)


@given(linear_codes())
def test_coset_partition_sums_to_binomial_row(c):
    table = coset_weight_table(c)
    assert table.shape == (c.q ** (c.n - c.k), c.n + 1)
    assert tuple(int(a) for a in table.sum(axis=0)) == binomial_row(c.q, c.n)


def test_nonzero_weights_examples():
    assert nonzero_weights(build_M(8, 0)) == {4}
    assert nonzero_weights(from_generators(2, [(1, 1)])) == {0, 2}
    assert nonzero_weights(full_space(2, 5)) == set(range(6))


def test_alpha_examples():
    assert alpha(full_space(2, 2)) == Fraction(1, 2)
    assert alpha(from_generators(2, [(1, 1, 1, 1)])) == 1


def test_alpha_of_C4_by_brute_force():
    c4 = build_C(4)
    expected = oracles.alpha(2, 4, oracles.span(2, 4, c4.gen))
    assert expected == Fraction(3, 4)
    assert alpha(c4) == expected


@settings(max_examples=60)
@given(linear_codes(max_n=5))
def test_alpha_matches_brute_force(c):
    assert alpha(c) == oracles.alpha(c.q, c.n, oracles.span(c.q, c.n, c.gen))


@pytest.mark.parametrize("n", range(1, 11))
def test_alpha_of_full_space_is_central_binomial_fraction(n):
    assert alpha(full_space(2, n)) == Fraction(comb(n, n // 2), 2**n)


def test_alpha_guard():
    with pytest.raises(limits.GuardError):
        alpha(zero_code(2, 12), limits.Limits(max_cosets=1024))


@settings(max_examples=60)
@given(linear_codes(max_n=6))
def test_alpha_monotone_under_inclusion(u):
    rng = np.random.default_rng(u.k * 31 + u.n)
    v = random_supercode(u, rng.integers(0, u.n - u.k + 1), rng)
    assert is_subcode(u, v)
    assert alpha(v) <= alpha(u)


def test_alpha_weight_one_chain():
    """Adding unit vectors one at a time never raises alpha."""
    n = 8
    c = diagonal_subspace(n)
    prev = alpha(c)
    for j in range(n):
        c = span(c, [[int(i == j) for i in range(n)]])
        cur = alpha(c)
        assert cur <= prev
        prev = cur
    assert c == full_space(2, n)
    assert prev == Fraction(comb(n, n // 2), 2**n)


def test_subspace_bound_trivial_case():
    rng = np.random.default_rng(3)
    u = random_code(2, 6, 4, rng)
    r = check_subspace_alpha_bound(u, u)
    assert r.max_ratio == r.alpha_sub
    assert r.passed


def test_subspace_bound_diagonal_in_C4_is_degenerate():
    # M_{4,0} is a coset of the diagonal subspace lying in one weight shell
    u, v = diagonal_subspace(4), build_C(4)
    assert is_subcode(u, v)
    assert oracles.alpha(2, 4, oracles.span(2, 4, u.gen)) == 1
    r = check_subspace_alpha_bound(u, v)
    assert r.degenerate and r.bound is None
    assert r.max_ratio == oracles.alpha(2, 4, oracles.span(2, 4, v.gen))


def test_subspace_bound_nested_pair_exhaustive():
    u = from_generators(2, [(1, 1, 0, 0), (0, 0, 1, 0)])
    v = span(u, [(0, 1, 0, 1)])
    a = oracles.alpha(2, 4, oracles.span(2, 4, u.gen))
    assert a < 1
    r = check_subspace_alpha_bound(u, v)
    assert r.alpha_sub == a
    assert r.max_ratio == oracles.alpha(2, 4, oracles.span(2, 4, v.gen))
    assert r.passed and r.max_ratio <= a / (1 - a) == r.bound


@settings(max_examples=40)
@given(linear_codes(q=2, max_n=6))
def test_subspace_bound_holds(u):
    rng = np.random.default_rng(u.k + 11 * u.n)
    v = random_supercode(u, rng.integers(0, u.n - u.k + 1), rng)
    r = check_subspace_alpha_bound(u, v)
    assert r.degenerate or r.passed


def test_subspace_bound_degenerate_and_rejections():
    z = zero_code(2, 4)
    r = check_subspace_alpha_bound(z, full_space(2, 4))
    assert r.degenerate and not r.passed and r.bound is None
    with pytest.raises(ValueError, match="not a subspace"):
        check_subspace_alpha_bound(full_space(2, 4), z)
