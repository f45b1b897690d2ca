"""Reverse plane partitions as chains of shapes, flat and cylindric.

A flat RPP of shape lam/mu is a chain mu = lam0 <= lam1 <= ... <= lam; its
weight is the vector of step sizes.  A cylindric RPP of shape lam/d/mu is a
chain of loops mu[0] <= lam1[d1] <= ... <= lam[d] with every lam_i in the
alcove.  The weighted sums here multiply, over the steps of a chain, the
number of rearrangements that fit in each step.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from ._config import check_cells
from .affine import LoopFunction, alcove, cylindric_contains, in_alcove
from .symcore import (
    MExpansion,
    Partition,
    binomial,
    chi_skew,
    contains,
    partition,
    partitions_of,
    rearrangement_array,
    size,
    subpartitions,
)


@dataclass(frozen=True)
class RppChain:
    shapes: Tuple[Partition, ...]

    @property
    def base(self) -> Partition:
        return self.shapes[0]

    @property
    def top(self) -> Partition:
        return self.shapes[-1]

    @property
    def weight(self) -> Tuple[int, ...]:
        return tuple(size(b) - size(a) for a, b in zip(self.shapes, self.shapes[1:]))

    def is_valid(self) -> bool:
        return all(contains(b, a) for a, b in zip(self.shapes, self.shapes[1:]))


@dataclass(frozen=True)
class CylChain:
    k: int
    n: int
    loops: Tuple[Partition, ...]
    offsets: Tuple[int, ...]

    @property
    def steps(self):
        for i in range(1, len(self.loops)):
            yield self.loops[i - 1], self.offsets[i] - self.offsets[i - 1], self.loops[i]

    @property
    def weight(self) -> Tuple[int, ...]:
        return tuple(self.n * delta + size(top) - size(bottom)
                     for bottom, delta, top in self.steps)

    def is_valid(self) -> bool:
        for bottom, delta, top in self.steps:
            if delta < 0:
                return False
            outer = LoopFunction(self.k, self.n, top).shift(delta)
            if not cylindric_contains(LoopFunction(self.k, self.n, bottom), outer):
                return False
        return True

    def to_json(self):
        return [{"loop": list(l), "offset": d} for l, d in zip(self.loops, self.offsets)]


# ---------------------------------------------------------------------------
# flat


def enumerate_rpp(lam: Partition, mu: Partition, theta: Sequence[int]) -> List[RppChain]:
    lam, mu = partition(lam), partition(mu)
    theta = tuple(theta)
    if not contains(lam, mu) or any(t < 0 for t in theta) or sum(theta) != size(lam) - size(mu):
        return []
    check_cells(size(lam) - size(mu), "skew shape")
    inside = [p for p in subpartitions(lam) if contains(p, mu)]
    out = []

    def rec(cur, i, acc):
        if i == len(theta):
            if cur == lam:
                out.append(RppChain(tuple(acc)))
            return
        target = size(cur) + theta[i]
        for nxt in inside:
            if size(nxt) == target and contains(nxt, cur):
                acc.append(nxt)
                rec(nxt, i + 1, acc)
                acc.pop()

    rec(mu, 0, [mu])
    return out


def rpp_weight_factor(chain: RppChain) -> int:
    out = 1
    for a, b in zip(chain.shapes, chain.shapes[1:]):
        out *= chi_skew(b, a)
    return out


def rpp_weight_sum(lam: Partition, mu: Partition, theta: Sequence[int]) -> int:
    """Sum of chi over all RPP of shape lam/mu with weight exactly theta."""
    lam, mu = partition(lam), partition(mu)
    theta = tuple(t for t in theta if t)
    if not contains(lam, mu) or sum(theta) != size(lam) - size(mu):
        return 0
    inside = [p for p in subpartitions(lam) if contains(p, mu)]

    @lru_cache(maxsize=None)
    def from_(cur, i):
        if i == len(theta):
            return 1 if cur == lam else 0
        target = size(cur) + theta[i]
        total = 0
        for nxt in inside:
            if size(nxt) == target and contains(nxt, cur):
                c = chi_skew(nxt, cur)
                if c:
                    total += c * from_(nxt, i + 1)
        return total

    return from_(mu, 0)


def h_skew_expansion(lam: Partition, mu: Partition, k: int) -> MExpansion:
    lam, mu = partition(lam), partition(mu)
    if not contains(lam, mu):
        return MExpansion(k, {})
    check_cells(size(lam) - size(mu), "skew shape")
    return MExpansion(k, {
        nu: rpp_weight_sum(lam, mu, nu)
        for nu in partitions_of(size(lam) - size(mu), max_parts=k)
    })


# ---------------------------------------------------------------------------
# cylindric weight factor


def _require_alcove(k, n, **parts):
    for name, p in parts.items():
        if not in_alcove(p, k, n):
            raise ValueError(f"{name}={tuple(p)} is not in the alcove A({k},{n})")


@lru_cache(maxsize=None)
def _conj_window(mu: Partition, k: int, n: int) -> Tuple[int, ...]:
    """(mu'_1, ..., mu'_{n+1}) of an alcove loop."""
    c = LoopFunction(k, n, mu).conjugate()
    return c.window + (c(n + 1),)


def _binomial_product(top_conj: Sequence[int], mu_conj: Sequence[int], n: int) -> int:
    out = 1
    for j in range(n):
        nxt = mu_conj[j + 1]
        out *= binomial(top_conj[j] - nxt, mu_conj[j] - nxt)
        if out == 0:
            return 0
    return out


@lru_cache(maxsize=None)
def _chi_cyl(lam: Partition, d: int, mu: Partition, k: int, n: int) -> int:
    base = LoopFunction(k, n, lam)
    mu_conj = _conj_window(mu, k, n)
    first = base.shift(d).conjugate().window
    second = base.shift(d - 1).conjugate().window
    return _binomial_product(first, mu_conj, n) - _binomial_product(second, mu_conj, n)


def chi_cyl(lam: Partition, d: int, mu: Partition, k: int, n: int) -> int:
    """Weight factor of the cylindric shape lam/d/mu from cylindric conjugates."""
    lam, mu = tuple(lam), tuple(mu)
    _require_alcove(k, n, lam=lam, mu=mu)
    return _chi_cyl(lam, d, mu, k, n)


def band_bound(lam: Partition, d: int, n: int) -> int:
    return 2 + ceil((lam[0] + n * d) / n)


def chi_cyl_by_count(lam: Partition, d: int, mu: Partition, k: int, n: int,
                     bound: Optional[int] = None, kernel=None) -> int:
    """Count the distinct functions mu o w (w affine, window sum of the identity)
    lying pointwise below lam o tau^d.

    Each such function has window entries a_i - n*q_i with a a rearrangement of
    mu and sum(q) == 0; the search covers |q_i| <= bound.
    """
    lam, mu = tuple(lam), tuple(mu)
    _require_alcove(k, n, lam=lam, mu=mu)
    if bound is None:
        bound = band_bound(lam, d, n)
    upper = np.array(LoopFunction(k, n, lam).shift(d).window, dtype=np.int64)
    kern = kernels.count_band if kernel is None else kernel
    return int(kern(rearrangement_array(partition(mu), k), upper, n, int(bound)))


# ---------------------------------------------------------------------------
# cylindric chains


def _step_ok(bottom: Partition, delta: int, top: Partition, k: int, n: int) -> bool:
    outer = LoopFunction(k, n, top).shift(delta)
    return cylindric_contains(LoopFunction(k, n, bottom), outer)


def _steps_from(bottom: Partition, cells: int, k: int, n: int):
    """(delta, top) with top in the alcove, n*delta + |top| - |bottom| == cells
    and bottom[0] <= top[delta]."""
    for top in alcove(k, n):
        rem = cells - size(top) + size(bottom)
        if rem < 0 or rem % n:
            continue
        delta = rem // n
        if _step_ok(bottom, delta, top, k, n):
            yield delta, top


def enumerate_cyl_chains(lam: Partition, d: int, mu: Partition, theta: Sequence[int],
                         k: int, n: int) -> List[CylChain]:
    lam, mu, theta = tuple(lam), tuple(mu), tuple(theta)
    _require_alcove(k, n, lam=lam, mu=mu)
    total = n * d + size(lam) - size(mu)
    if any(t <= 0 for t in theta) or sum(theta) != total:
        return []
    check_cells(total, "cylindric shape")
    out = []

    def rec(cur, off, i, loops, offs):
        if i == len(theta):
            if cur == lam and off == d:
                out.append(CylChain(k, n, tuple(loops), tuple(offs)))
            return
        for delta, top in _steps_from(cur, theta[i], k, n):
            if off + delta > d:
                continue
            loops.append(top)
            offs.append(off + delta)
            rec(top, off + delta, i + 1, loops, offs)
            loops.pop()
            offs.pop()

    rec(mu, 0, 0, [mu], [0])
    return out


def cyl_weight_factor(chain: CylChain) -> int:
    out = 1
    for bottom, delta, top in chain.steps:
        out *= _chi_cyl(top, delta, bottom, chain.k, chain.n)
    return out


def cyl_weight_sum(lam: Partition, d: int, mu: Partition, theta: Sequence[int],
                   k: int, n: int) -> int:
    """Sum of chi over cylindric RPP of shape lam/d/mu and weight theta (any length)."""
    lam, mu = tuple(lam), tuple(mu)
    _require_alcove(k, n, lam=lam, mu=mu)
    theta = tuple(t for t in theta if t)
    if any(t < 0 for t in theta) or sum(theta) != n * d + size(lam) - size(mu):
        return 0
    return _cyl_weight_sum(lam, d, mu, theta, k, n)


@lru_cache(maxsize=None)
def _cyl_weight_sum(lam, d, mu, theta, k, n):
    @lru_cache(maxsize=None)
    def from_(cur, off, i):
        if i == len(theta):
            return 1 if (cur == lam and off == d) else 0
        total = 0
        for delta, top in _steps_from(cur, theta[i], k, n):
            if off + delta > d:
                continue
            c = _chi_cyl(top, delta, cur, k, n)
            if c:
                total += c * from_(top, off + delta, i + 1)
        return total

    return from_(mu, 0, 0)


def cyl_h_coefficient(lam: Partition, d: int, mu: Partition, nu: Partition,
                      k: int, n: int) -> int:
    """Coefficient of m_nu in h_{lam/d/mu} in k variables."""
    nu = partition(nu)
    if len(nu) > k:
        return 0
    return cyl_weight_sum(lam, d, mu, nu, k, n)


def cyl_h_expansion(lam: Partition, d: int, mu: Partition, k: int, n: int) -> MExpansion:
    lam, mu = tuple(lam), tuple(mu)
    _require_alcove(k, n, lam=lam, mu=mu)
    degree = n * d + size(lam) - size(mu)
    if degree < 0:
        return MExpansion(k, {})
    check_cells(degree, "cylindric shape")
    return MExpansion(k, {
        nu: cyl_weight_sum(lam, d, mu, nu, k, n)
        for nu in partitions_of(degree, max_parts=k)
    })
