import pytest
import sympy

from cylfuse.affine import alcove
from cylfuse.fusion import (
    FusionElement,
    FusionError,
    LaurentZ,
    basis_product,
    epsilon,
    fusion_table,
    gram_matrix,
    h_action_check,
    h_times,
    n_coefficient,
    n_reduced,
    reduce_monomial,
    reduction_multinomial,
    unit,
)
from cylfuse.modular import eval_m
from cylfuse.symcore import partitions_of

GRID = [(1, 3), (1, 5), (2, 3), (2, 4), (3, 3)]


def test_laurent_arithmetic():
    a = LaurentZ({-1: 2, 1: 1})
    b = LaurentZ({1: 3})
    assert a * b == LaurentZ({0: 6, 2: 3})
    assert a - a == 0
    assert (a + 1).evaluate(2) == 2 * sympy.Rational(1, 2) + 2 + 1
    assert a.to_json() == {"-1": 2, "1": 1}


@pytest.mark.parametrize("n", range(1, 9))
def test_level_one_is_cyclic_group(n):
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            prod = FusionElement.basis((a,), 1, n) * FusionElement.basis((b,), 1, n)
            c = (a + b - 1) % n + 1
            assert prod == FusionElement.basis((c,), 1, n, LaurentZ({(a + b - c) // n: 1}))


@pytest.mark.parametrize("k,n", GRID)
def test_products_respect_evaluation_at_roots_of_unity(k, n):
    pts = alcove(k, n)
    for lam in pts:
        for mu in pts:
            terms = basis_product(lam, mu, k, n)
            for beta in pts:
                lhs = eval_m(lam, beta, k, n) * eval_m(mu, beta, k, n)
                rhs = sum(c * eval_m(nu, beta, k, n) for nu, _, c in terms)
                assert abs(lhs - rhs) < 1e-9


@pytest.mark.parametrize("k,n", GRID)
def test_unit_and_top_element(k, n):
    one = unit(k, n)
    top = FusionElement.basis((n,) * k, k, n)
    for lam in alcove(k, n):
        m = FusionElement.basis(lam, k, n)
        assert one * m == m
        assert top * m == m.scale(LaurentZ({k: 1}))


def test_n_examples():
    assert n_coefficient((1,), (1,), (2,), 1, 3) == 1
    assert n_coefficient((3,), (2,), (2,), 1, 3) == 1
    assert n_coefficient((1, 1), (1, 1), (2, 2), 2, 3) == 1
    assert n_coefficient((2, 1), (2, 1), (3, 3), 2, 3) == 2
    assert n_coefficient((2, 1), (2, 1), (1, 1), 2, 3) == 0


def test_reduction_examples():
    assert reduction_multinomial((3, 1), 2, 3) == ((3, 1), 1)
    rep, factor = reduction_multinomial((4,), 2, 3)
    assert rep == (3, 1) and factor == 1
    # x_i^n acts as z, so m_(n) = k z^-1 m_(n^k)
    assert reduction_multinomial((2,), 2, 2) == ((2, 2), 2)
    assert reduction_multinomial((6,), 3, 3) == ((3, 3, 3), 3)
    assert reduce_monomial((6,), 3, 3) == FusionElement.basis((3, 3, 3), 3, 3, LaurentZ({-1: 3}))
    assert reduce_monomial((3, 3), 2, 3) == FusionElement.basis((3, 3), 2, 3)


def test_reduction_agrees_with_direct_count():
    for k, n in ((2, 3), (2, 4)):
        for total in range(2 * n + 1):
            for nu in partitions_of(total, max_parts=k):
                for mu in alcove(k, n):
                    for lam in alcove(k, n):
                        assert n_coefficient(mu, nu, lam, k, n) == n_reduced(mu, nu, lam, k, n)


def test_reduced_monomial_evaluates_like_original():
    k, n = 2, 3
    for total in range(8):
        for beta in partitions_of(total, max_parts=k):
            image = reduce_monomial(beta, k, n)
            for point in alcove(k, n):
                rhs = sum(c.evaluate(1) * eval_m(nu, point, k, n) for nu, c in image.items())
                assert abs(eval_m(beta, point, k, n) - complex(rhs)) < 1e-9


@pytest.mark.parametrize("k,n", [(1, 4), (2, 3)])
def test_algebra_axioms(k, n):
    pts = alcove(k, n)
    m = {p: FusionElement.basis(p, k, n) for p in pts}
    for a in pts:
        for b in pts:
            assert m[a] * m[b] == m[b] * m[a]
            for c in pts:
                assert (m[a] * m[b]) * m[c] == m[a] * (m[b] * m[c])


def test_epsilon():
    k, n = 2, 3
    num, den = epsilon(FusionElement.basis((3, 3), k, n))
    assert num == LaurentZ({2: 1}) and den == 9
    assert epsilon(unit(k, n)) == (LaurentZ({0: 1}), 9)
    assert epsilon(FusionElement.basis((2, 1), k, n))[0] == 0


def test_gram_examples():
    g = gram_matrix(1, 3)
    r = sympy.Rational(1, 3)
    assert g == sympy.Matrix([[r, 0, 0], [0, 0, r], [0, r, 0]])
    assert gram_matrix(1, 4).det() == sympy.Rational(-1, 256)
    assert gram_matrix(2, 3).det() == sympy.Rational(8, 531441)
    assert gram_matrix(2, 4, z0=2).det() != 0
    with pytest.raises(FusionError):
        gram_matrix(2, 3, z0=0)


@pytest.mark.parametrize("k,n", [(1, 3), (2, 3), (2, 4), (3, 3)])
def test_h_action_matches_cylindric_sums(k, n):
    for r in range(0, n + 2):
        for lam in partitions_of(r):
            for mu in alcove(k, n):
                assert h_action_check(lam, mu, k, n)


def test_h_times_h1_monomial_product():
    # h_1 = m_1, and m_1 m_21 = m_31 + 2 m_22 in two variables
    k, n = 2, 3
    prod = h_times((1,), (2, 1), k, n)
    assert prod == FusionElement(k, n, {(3, 1): 1, (2, 2): 2})
    # adding a cell past n wraps around the cylinder
    assert h_times((1,), (3, 3), k, n) == FusionElement(k, n, {(3, 1): LaurentZ({1: 1})})


def test_fusion_table_shape():
    rows = fusion_table(1, 4)
    assert len(rows) == 16
    assert all(r["N"] == 1 for r in rows)
    assert rows[0] == {"lambda": [4], "mu": [4], "nu": [4], "d": 1, "N": 1}
    assert rows == fusion_table(1, 4)
    assert {(tuple(r["lambda"]), tuple(r["mu"])) for r in rows} == {((a,), (b,)) for a in range(1, 5) for b in range(1, 5)}


def test_rejects_non_alcove():
    with pytest.raises(FusionError):
        FusionElement.basis((4, 1), 2, 3)
    with pytest.raises(FusionError):
        FusionElement(2, 3, {}) * FusionElement(2, 4, {})
