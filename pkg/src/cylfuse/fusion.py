"""Fusion coefficients and the structure-constant algebra over Laurent polynomials in z.

The algebra has basis m_lam for lam in the alcove A(k, n) and product

    m_lam * m_mu = sum_nu z^((|lam| + |mu| - |nu|) / n) N(lam, mu; nu) m_nu

where N counts pairs of rearrangements whose sum agrees with nu up to a
level-n translation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import numpy as np
import sympy

from . import kernels
from .affine import LoopFunction, alcove, in_alcove, reduce_to_alcove, y_power
from .rppgen import cyl_weight_sum
from .symcore import (
    Partition,
    h_expansion,
    multinomial,
    pad,
    partition,
    rearrangement_array,
    size,
)


class FusionError(ValueError):
    pass


@dataclass(frozen=True)
class LaurentZ:
    """Finitely supported map exponent -> integer coefficient."""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[int, int] = {}
        for e, c in self.coeffs.items():
            clean[int(e)] = clean.get(int(e), 0) + c
        object.__setattr__(self, "coeffs", {e: c for e, c in clean.items() if c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentZ":
        return cls({exponent: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentZ({0: other})
        if not isinstance(other, LaurentZ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentZ({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentZ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentZ({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentZ({e: c * other for e, c in self.coeffs.items()})
        out: Dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentZ(out)

    __rmul__ = __mul__

    def evaluate(self, z0) -> Fraction:
        z0 = Fraction(z0)
        return sum((Fraction(c) * z0 ** e for e, c in self.coeffs.items()), Fraction(0))

    def to_json(self):
        return {str(e): c for e, c in sorted(self.coeffs.items())}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*z^{e}" for e, c in sorted(self.coeffs.items()))


# ---------------------------------------------------------------------------
# coefficients


def alpha_bound(mu: Partition, nu: Partition, n: int) -> int:
    mu1 = mu[0] if mu else 0
    nu1 = nu[0] if nu else 0
    return 2 + ceil((mu1 + nu1 + n) / n)


@lru_cache(maxsize=None)
def _translate_matches(lam: Partition, n: int, alpha: Tuple[int, ...], target: Tuple[int, ...]) -> bool:
    """lam o y^alpha == target, by composing the translation generators."""
    return LoopFunction(len(lam), n, lam).act(y_power(alpha)).window == target


def n_coefficient(mu: Partition, nu: Partition, lam: Partition, k: int, n: int,
                  bound: Optional[int] = None, kernel=None) -> int:
    """N(mu, nu; lam): pairs (a, b) of distinct rearrangements of mu and nu with
    a + b = lam o y^alpha for some alpha with |alpha| = (|mu| + |nu| - |lam|)/n."""
    mu, lam = tuple(mu), tuple(lam)
    if not in_alcove(mu, k, n) or not in_alcove(lam, k, n):
        raise FusionError(f"mu={mu} and lam={lam} must lie in the alcove A({k},{n})")
    nu = partition(nu)
    if len(nu) > k:
        raise FusionError(f"nu={nu} has more than k={k} parts")
    excess = size(mu) + size(nu) - size(lam)
    if excess < 0 or excess % n:
        return 0
    d = excess // n
    if bound is None:
        bound = alpha_bound(mu, nu, n)
    kern = kernels.pair_alphas if kernel is None else kernel
    rows_a = rearrangement_array(mu, k)
    rows_b = rearrangement_array(nu, k)
    alphas = kern(rows_a, rows_b, np.array(lam, dtype=np.int64), n, int(bound))
    count = 0
    for alpha in map(tuple, alphas.tolist()):
        if sum(alpha) != d:
            continue
        target = tuple(x + n * a for x, a in zip(lam, alpha))
        if _translate_matches(lam, n, alpha, target):
            count += 1
    return count


def reduction_multinomial(nu: Partition, k: int, n: int) -> Tuple[Partition, int]:
    """(alcove representative of nu, multinomial factor relating their coefficients)."""
    padded = pad(nu, k)
    rep, _ = reduce_to_alcove(LoopFunction(k, n, padded))
    factor = 1
    for residue in range(1, n + 1):
        classes = [c for c in set(padded) if (c - residue) % n == 0]
        factor *= multinomial(rep.count(residue), [padded.count(c) for c in classes])
    return rep, factor


def n_reduced(mu: Partition, nu: Partition, lam: Partition, k: int, n: int) -> int:
    """N(mu, nu; lam) through the alcove representative of nu and multinomials."""
    mu, lam = tuple(mu), tuple(lam)
    if not in_alcove(mu, k, n) or not in_alcove(lam, k, n):
        raise FusionError(f"mu={mu} and lam={lam} must lie in the alcove A({k},{n})")
    rep, factor = reduction_multinomial(partition(nu), k, n)
    return factor * n_coefficient(mu, rep, lam, k, n)


# ---------------------------------------------------------------------------
# the algebra


@dataclass(frozen=True)
class FusionElement:
    k: int
    n: int
    terms: Mapping[Partition, LaurentZ] = field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[Partition, LaurentZ] = {}
        for lam, c in self.terms.items():
            lam = tuple(lam)
            if not in_alcove(lam, self.k, self.n):
                raise FusionError(f"{lam} is not in the alcove A({self.k},{self.n})")
            if isinstance(c, int):
                c = LaurentZ({0: c})
            clean[lam] = clean.get(lam, LaurentZ()) + c
        object.__setattr__(self, "terms", {l: c for l, c in clean.items() if c})

    @classmethod
    def basis(cls, lam: Partition, k: int, n: int, coeff: Optional[LaurentZ] = None):
        return cls(k, n, {tuple(lam): coeff if coeff is not None else LaurentZ({0: 1})})

    def _check(self, other):
        if (self.k, self.n) != (other.k, other.n):
            raise FusionError("mismatched (k, n)")

    def __eq__(self, other):
        if not isinstance(other, FusionElement):
            return NotImplemented
        return (self.k, self.n) == (other.k, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, self.n, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, LaurentZ()) + c
        return FusionElement(self.k, self.n, out)

    def scale(self, c) -> "FusionElement":
        if isinstance(c, int):
            c = LaurentZ({0: c})
        return FusionElement(self.k, self.n, {l: v * c for l, v in self.terms.items()})

    def __mul__(self, other):
        return fusion_product(self, other)

    def items(self):
        return sorted(self.terms.items(), reverse=True)


@lru_cache(maxsize=None)
def basis_product(lam: Partition, mu: Partition, k: int, n: int) -> Tuple[Tuple[Partition, int, int], ...]:
    """Terms (nu, z-exponent, N) of m_lam * m_mu with N > 0."""
    out = []
    for nu in alcove(k, n):
        excess = size(lam) + size(mu) - size(nu)
        if excess < 0 or excess % n:
            continue
        c = n_coefficient(lam, mu, nu, k, n)
        if c:
            out.append((nu, excess // n, c))
    return tuple(out)


def fusion_product(a: FusionElement, b: FusionElement) -> FusionElement:
    a._check(b)
    k, n = a.k, a.n
    out: Dict[Partition, LaurentZ] = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            coeff = ca * cb
            for nu, e, c in basis_product(lam, mu, k, n):
                out[nu] = out.get(nu, LaurentZ()) + coeff * LaurentZ({e: c})
    return FusionElement(k, n, out)


def unit(k: int, n: int) -> FusionElement:
    """z^-k m_(n^k)."""
    return FusionElement.basis((n,) * k, k, n, LaurentZ({-k: 1}))


def epsilon(a: FusionElement) -> Tuple[LaurentZ, int]:
    """Trace functional; returns (numerator, denominator n^k)."""
    top = (a.n,) * a.k
    c = a.terms.get(top, LaurentZ())
    return c * LaurentZ({a.k: 1}), a.n ** a.k


def gram_matrix(k: int, n: int, z0=1) -> sympy.Matrix:
    """[epsilon(m_lam m_mu)] at z = z0, rows and columns in alcove order."""
    z0 = Fraction(z0)
    if z0 == 0:
        raise FusionError("z0 must be nonzero")
    basis = alcove(k, n)
    rows = []
    for lam in basis:
        row = []
        for mu in basis:
            prod = fusion_product(FusionElement.basis(lam, k, n), FusionElement.basis(mu, k, n))
            num, den = epsilon(prod)
            val = num.evaluate(z0) / den
            row.append(sympy.Rational(val.numerator, val.denominator))
        rows.append(row)
    return sympy.Matrix(rows)


def fusion_table(k: int, n: int) -> List[dict]:
    """All (lam, mu, nu, d, N) with N > 0, in canonical order."""
    out = []
    for lam in alcove(k, n):
        for mu in alcove(k, n):
            for nu, d, c in basis_product(lam, mu, k, n):
                out.append({"lambda": list(lam), "mu": list(mu), "nu": list(nu), "d": d, "N": c})
    return out


# ---------------------------------------------------------------------------
# complete symmetric functions acting on the basis


def reduce_monomial(beta: Partition, k: int, n: int) -> FusionElement:
    """Image of m_beta (at most k parts) in the algebra: factor * z^e * m_rep."""
    beta = partition(beta)
    rep, factor = reduction_multinomial(beta, k, n)
    e = (size(beta) - size(rep)) // n
    return FusionElement.basis(rep, k, n, LaurentZ({e: factor}))


def h_times(lam: Partition, mu: Partition, k: int, n: int) -> FusionElement:
    """h_lam * m_mu computed through the monomial expansion of h_lam."""
    out = FusionElement(k, n, {})
    m_mu = FusionElement.basis(mu, k, n)
    for beta, c in h_expansion(partition(lam), k).items():
        out = out + fusion_product(reduce_monomial(beta, k, n), m_mu).scale(c)
    return out


def h_action_check(lam: Partition, mu: Partition, k: int, n: int) -> bool:
    """Compare h_lam * m_mu against z^d times the cylindric weight sums."""
    lam, mu = partition(lam), tuple(mu)
    if not in_alcove(mu, k, n):
        raise FusionError(f"mu={mu} is not in the alcove A({k},{n})")
    lhs = h_times(lam, mu, k, n)
    for nu in alcove(k, n):
        excess = size(lam) + size(mu) - size(nu)
        expected = LaurentZ()
        if excess >= 0 and excess % n == 0:
            d = excess // n
            expected = LaurentZ({d: cyl_weight_sum(nu, d, mu, lam, k, n)})
        if lhs.terms.get(nu, LaurentZ()) != expected:
            return False
    return True
