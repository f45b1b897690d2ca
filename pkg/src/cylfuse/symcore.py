"""Partitions, compositions and symmetric polynomials in the monomial basis.

Partitions are plain tuples of ints in canonical form (weakly decreasing, no
trailing zeros).  Weights and compositions are plain tuples of length ``k``.
Everything here is exact integer arithmetic.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from . import kernels

Partition = Tuple[int, ...]


class PartitionError(ValueError):
    pass


def binomial(a: int, b: int) -> int:
    """C(a, b), zero whenever an argument is negative or ``b > a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def multinomial(total: int, parts: Iterable[int]) -> int:
    parts = list(parts)
    if any(p < 0 for p in parts) or sum(parts) != total:
        return 0
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def partition(parts: Iterable[int]) -> Partition:
    """Validate and canonicalise (strip trailing zeros)."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise PartitionError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise PartitionError(f"{parts} is not weakly decreasing")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def size(lam: Iterable[int]) -> int:
    return sum(lam)


def pad(lam: Partition, k: int) -> Tuple[int, ...]:
    lam = partition(lam)
    if len(lam) > k:
        raise PartitionError(f"{lam} has more than {k} parts")
    return lam + (0,) * (k - len(lam))


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff mu is a subdiagram of lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def conjugate(lam: Partition) -> Partition:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def multiplicities(t: Iterable[int]) -> Counter:
    return Counter(t)


def stabilizer_order(t: Iterable[int]) -> int:
    """Order of the stabiliser of ``t`` in the symmetric group on its slots."""
    out = 1
    for m in Counter(t).values():
        out *= factorial(m)
    return out


@lru_cache(maxsize=None)
def _rearrangements(padded: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    perms = multiset_permutations(sorted(padded))
    return tuple(tuple(p) for p in reversed(list(perms)))


def distinct_rearrangements(mu: Partition, k: int) -> List[Tuple[int, ...]]:
    """All distinct orderings of mu padded to k slots, lexicographically decreasing."""
    return list(_rearrangements(pad(mu, k)))


@lru_cache(maxsize=None)
def rearrangement_array(mu: Partition, k: int) -> np.ndarray:
    arr = np.array(_rearrangements(pad(mu, k)), dtype=np.int64).reshape(-1, k)
    arr.setflags(write=False)
    return arr


def partitions_of(total: int, max_parts: Optional[int] = None,
                  max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if max_parts is None:
        max_parts = total

    def rec(rem, cap, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            if first * slots < rem:
                break
            for rest in rec(rem - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(total, max_part, max_parts)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All mu with mu inside lam (including the empty partition and lam)."""
    lam = partition(lam)

    def rec(i, cap):
        if i == len(lam):
            yield ()
            return
        for p in range(min(cap, lam[i]), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest

    yield from rec(0, lam[0] if lam else 0)


# ---------------------------------------------------------------------------
# expansion coefficients


def chi_skew(lam: Partition, mu: Partition) -> int:
    """Number of distinct rearrangements of mu fitting inside lam, by the
    product of binomials in the conjugate partitions."""
    lam, mu = partition(lam), partition(mu)
    if not contains(lam, mu):
        return 0
    lc, mc = conjugate(lam), conjugate(mu)

    def part(seq, i):
        return seq[i - 1] if i <= len(seq) else 0

    out = 1
    for i in range(1, len(mc) + 1):
        nxt = part(mc, i + 1)
        out *= binomial(part(lc, i) - nxt, part(mc, i) - nxt)
        if out == 0:
            break
    return out


def _check_parts(k: int, *parts: Partition) -> None:
    for p in parts:
        if len(partition(p)) > k:
            raise PartitionError(f"{p} has more than k={k} parts")


def chi_skew_by_count(lam: Partition, mu: Partition, k: int) -> int:
    _check_parts(k, lam, mu)
    top = pad(lam, k)
    return sum(
        1 for a in distinct_rearrangements(mu, k)
        if all(x <= y for x, y in zip(a, top))
    )


def f_coefficient(lam: Partition, mu: Partition, nu: Partition, k: int) -> int:
    """Coefficient of m_nu in m_lam * m_mu (k variables)."""
    _check_parts(k, lam, mu, nu)
    if size(lam) + size(mu) != size(nu):
        return 0
    hits = kernels.pair_alphas(
        rearrangement_array(partition(lam), k),
        rearrangement_array(partition(mu), k),
        np.array(pad(nu, k), dtype=np.int64), 0, 0,
    )
    return int(hits.shape[0])


@lru_cache(maxsize=None)
def _l_count(rows: Tuple[int, ...], caps: Tuple[int, ...]) -> int:
    if not rows:
        return 1 if not any(caps) else 0
    first, rest = rows[0], rows[1:]
    if sum(caps) - first != sum(rest):
        return 0
    total = 0
    for fill in _bounded_compositions(first, caps):
        total += _l_count(rest, tuple(c - f for c, f in zip(caps, fill)))
    return total


def _bounded_compositions(total: int, caps: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    head, tail = caps[0], caps[1:]
    room = sum(tail)
    for x in range(min(head, total), -1, -1):
        if total - x > room:
            break
        for rest in _bounded_compositions(total - x, tail):
            yield (x,) + rest


def l_matrix_count(lam: Partition, mu: Partition) -> int:
    """Number of N-matrices with row sums lam and column sums mu."""
    lam, mu = partition(lam), partition(mu)
    if size(lam) != size(mu):
        return 0
    return _l_count(lam, mu)


@dataclass(frozen=True)
class MExpansion:
    """Symmetric polynomial in k variables written in the monomial basis."""

    k: int
    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[Partition, int] = {}
        for lam, c in self.coeffs.items():
            lam = partition(lam)
            if len(lam) > self.k:
                raise PartitionError(f"{lam} has more than k={self.k} parts")
            if c:
                clean[lam] = clean.get(lam, 0) + int(c)
        object.__setattr__(self, "coeffs", {l: c for l, c in clean.items() if c})

    @classmethod
    def monomial(cls, lam: Partition, k: int) -> "MExpansion":
        return cls(k, {partition(lam): 1})

    def __getitem__(self, lam: Partition) -> int:
        return self.coeffs.get(partition(lam), 0)

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items(), reverse=True)

    def _check_k(self, other):
        if other.k != self.k:
            raise ValueError("mismatched number of variables")

    def __eq__(self, other):
        if not isinstance(other, MExpansion):
            return NotImplemented
        return self.k == other.k and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.k, tuple(self.items())))

    def __add__(self, other):
        if not isinstance(other, MExpansion):
            return NotImplemented
        self._check_k(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return MExpansion(self.k, out)

    def __neg__(self):
        return MExpansion(self.k, {l: -c for l, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "MExpansion":
        return MExpansion(self.k, {l: c * v for l, v in self.coeffs.items()})

    def monomials(self) -> Dict[Tuple[int, ...], int]:
        """Explicit exponent-vector form."""
        out: Dict[Tuple[int, ...], int] = {}
        for lam, c in self.coeffs.items():
            for a in distinct_rearrangements(lam, self.k):
                out[a] = out.get(a, 0) + c
        return out

    def __mul__(self, other):
        # brute force: multiply every monomial pair, keep the sorted exponents
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, MExpansion):
            return NotImplemented
        self._check_k(other)
        left, right = self.monomials(), other.monomials()
        out: Dict[Partition, int] = {}
        for a, ca in left.items():
            for b, cb in right.items():
                e = tuple(x + y for x, y in zip(a, b))
                if all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                    lam = partition(e)
                    out[lam] = out.get(lam, 0) + ca * cb
        return MExpansion(self.k, out)

    def degrees(self) -> set:
        return {size(l) for l in self.coeffs}

    def to_json(self):
        return [{"nu": list(l), "coeff": c} for l, c in self.items()]


@lru_cache(maxsize=None)
def _h_expansion(lam: Partition, k: int) -> MExpansion:
    return MExpansion(k, {
        mu: l_matrix_count(lam, mu)
        for mu in partitions_of(size(lam), max_parts=k)
    })


def h_expansion(lam: Partition, k: int) -> MExpansion:
    """h_lam in k variables, coefficients L(lam, mu) on m_mu."""
    return _h_expansion(partition(lam), k)


def chi_of_weight(nu: Partition, mu: Partition, lam: Partition) -> int:
    """Coefficient of m_nu in h_lam * m_mu, via sum_alpha L(lam, alpha) f(alpha, mu; nu)."""
    nu, mu, lam = partition(nu), partition(mu), partition(lam)
    if size(nu) != size(mu) + size(lam):
        return 0
    k = max(len(nu), 1)
    if len(mu) > k:
        return 0
    total = 0
    for alpha in partitions_of(size(lam), max_parts=k):
        weight = l_matrix_count(lam, alpha)
        if weight:
            total += weight * f_coefficient(alpha, mu, nu, k)
    return total
