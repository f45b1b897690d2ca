import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylfuse.affine import (
    AffinePermutation,
    CylindricShape,
    LoopFunction,
    alcove,
    cylindric_contains,
    identity,
    in_alcove,
    loop,
    reduce_to_alcove,
    sigma,
    tau,
    y_generator,
    y_power,
)
from cylfuse.symcore import binomial, conjugate


def _word(k, rng, length):
    gens = [sigma(i, k) for i in range(k)] if k >= 2 else []
    gens += [tau(k), tau(k).inverse()]
    w = identity(k)
    for _ in range(length):
        w = w @ rng.choice(gens)
    return w


def test_window_validation():
    with pytest.raises(ValueError):
        AffinePermutation(2, (1, 3))
    with pytest.raises(ValueError):
        AffinePermutation(3, (1, 2))
    with pytest.raises(ValueError):
        sigma(0, 1)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_generator_relations(k):
    one = identity(k)
    t = tau(k)
    for i in range(k):
        s = sigma(i, k)
        assert s @ s == one
        assert t @ sigma((i + 1) % k, k) == sigma(i, k) @ t
    if k >= 3:
        for i in range(k):
            a, b = sigma(i, k), sigma((i + 1) % k, k)
            assert a @ b @ a == b @ a @ b
            for j in range(k):
                if min((i - j) % k, (j - i) % k) > 1:
                    assert a @ sigma(j, k) == sigma(j, k) @ a
    assert t.power(k) @ identity(k) == AffinePermutation(k, tuple(m - k for m in range(1, k + 1)))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_random_words_satisfy_group_conditions(k):
    rng = random.Random(k)
    for _ in range(200):
        w = _word(k, rng, rng.randint(0, 12))
        assert w.is_extended()
        for m in range(-3 * k, 3 * k):
            assert w(m + k) == w(m) + k
        assert w @ w.inverse() == identity(k)
        assert w.inverse() @ w == identity(k)


def test_sigma_words_stay_unextended():
    rng = random.Random(7)
    for k in (2, 3, 4):
        for _ in range(100):
            w = identity(k)
            for _ in range(rng.randint(0, 10)):
                w = w @ sigma(rng.randrange(k), k)
            assert w.is_unextended()
            assert sum(w.window) == comb(k + 1, 2)
            assert w.shift_degree() == 0
        assert tau(k).shift_degree() == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_translations_commute_and_shift_by_n(k):
    ys = [y_generator(i, k) for i in range(1, k + 1)]
    for a in ys:
        for b in ys:
            assert a @ b == b @ a
    n = 3
    rng = random.Random(k)
    for lam in alcove(k, n):
        L = loop(lam, k, n)
        for _ in range(5):
            alpha = tuple(rng.randint(-2, 2) for _ in range(k))
            moved = L.act(y_power(alpha))
            assert moved.window == tuple(x + n * a for x, a in zip(lam, alpha))


def test_loop_function_periodicity_and_shift():
    L = loop((3, 1), 2, 4)
    assert [L(m) for m in range(-1, 5)] == [7, 5, 3, 1, -1, -3]
    assert L.shift(1).window == (5, 3)
    assert L.shift(2).window == (7, 5)
    assert L.shift(-1).shift(1) == L


def test_alcove_listing():
    assert alcove(2, 3) == ((3, 3), (3, 2), (3, 1), (2, 2), (2, 1), (1, 1))
    assert alcove(1, 4) == ((4,), (3,), (2,), (1,))
    for k, n in ((2, 3), (3, 4), (2, 5), (4, 3)):
        pts = alcove(k, n)
        assert len(pts) == binomial(n + k - 1, k)
        assert list(pts) == sorted(pts, reverse=True)
        assert all(in_alcove(p, k, n) for p in pts)
    assert not in_alcove((4, 1), 2, 3)
    assert not in_alcove((2, 0), 2, 3)


@pytest.mark.parametrize("k,n", [(2, 3), (3, 4)])
def test_reduce_to_alcove_unique_point(k, n):
    rng = random.Random(1000 * k + n)
    pts = alcove(k, n)
    for _ in range(500):
        start = rng.choice(pts)
        w = _word(k, rng, rng.randint(0, 15))
        moved = loop(start, k, n).act(w)
        nu, witness = reduce_to_alcove(moved)
        assert nu == start
        assert moved.act(witness).window == nu
        assert witness.is_extended()
    for p in pts:
        assert reduce_to_alcove(loop(p, k, n))[0] == p


def test_loop_conjugate():
    for k, n in ((2, 3), (3, 4), (2, 5), (4, 2)):
        for lam in alcove(k, n):
            L = loop(lam, k, n)
            C = L.conjugate()
            assert (C.k, C.n) == (n, k)
            assert C.partition() == conjugate(lam)
            assert C.conjugate() == L
            for d in (1, 2, 3):
                assert L.shift(d).conjugate().window == tuple(x + d for x in C.window)


def test_conjugate_counts_cells_in_window():
    # brute count of boundary crossings on a long stretch of the periodic sequence
    L = loop((4, 2, 1), 3, 5)
    C = L.conjugate()
    for j in range(1, 6):
        span = range(-60, 61)
        above = sum(1 for i in span if i >= 1 and L(i) >= j)
        below = sum(1 for i in span if i <= 0 and L(i) < j)
        assert C.window[j - 1] == above - below


def test_cylindric_shape_cells():
    shape = CylindricShape((4, 3, 2), 1, (2, 2, 1), 3, 4)
    assert shape.is_valid()
    assert shape.outer.window == (6, 4, 3)
    assert len(shape.cells()) == 8 == shape.cell_count()
    assert not CylindricShape((1, 1), 0, (2, 2), 2, 3).is_valid()
    with pytest.raises(ValueError):
        CylindricShape((5, 1), 0, (1, 1), 2, 3)
    for k, n in ((2, 3), (3, 3)):
        for lam in alcove(k, n):
            for mu in alcove(k, n):
                for d in range(3):
                    sh = CylindricShape(lam, d, mu, k, n)
                    if sh.is_valid():
                        assert len(sh.cells()) == n * d + sum(lam) - sum(mu)


def test_json_roundtrip():
    w = _word(3, random.Random(3), 9)
    assert AffinePermutation.from_json(w.to_json()) == w
    L = loop((3, 1), 2, 4)
    assert LoopFunction.from_json(L.to_json()) == L


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2 ** 32 - 1))
def test_containment_one_period_suffices(k, seed):
    rng = random.Random(seed)
    n = 3
    pts = alcove(k, n)
    lam, mu = rng.choice(pts), rng.choice(pts)
    d = rng.randint(0, 2)
    outer = loop(lam, k, n).shift(d)
    inner = loop(mu, k, n)
    full = all(inner(m) <= outer(m) for m in range(-4 * k, 4 * k))
    assert cylindric_contains(inner, outer) == full
