"""Extended affine symmetric group acting on periodic integer sequences.

Affine permutations are bijections w of Z with w(m + k) = w(m) + k, stored by
their window (w(1), ..., w(k)).  A level-n loop function is a map lam of Z with
lam(i + k) = lam(i) - n, stored by (lam(1), ..., lam(k)).  Loop functions are
acted on from the right by precomposition.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import List, Sequence, Tuple

from .symcore import Partition, partition


@dataclass(frozen=True)
class AffinePermutation:
    k: int
    window: Tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", window)
        if self.k < 1 or len(window) != self.k:
            raise ValueError(f"window {window} does not have length k={self.k}")
        if sorted(x % self.k for x in window) != list(range(self.k)):
            raise ValueError(f"window {window} is not a bijection mod {self.k}")

    def __call__(self, m: int) -> int:
        q, r = divmod(m - 1, self.k)
        return self.window[r] + q * self.k

    def compose(self, other: "AffinePermutation") -> "AffinePermutation":
        """self o other, i.e. m -> self(other(m))."""
        if other.k != self.k:
            raise ValueError("mismatched k")
        return AffinePermutation(self.k, tuple(self(other(i)) for i in range(1, self.k + 1)))

    __matmul__ = compose

    def inverse(self) -> "AffinePermutation":
        inv = [0] * self.k
        for i, v in enumerate(self.window, start=1):
            q, r = divmod(v - 1, self.k)
            inv[r] = i - q * self.k
        return AffinePermutation(self.k, tuple(inv))

    def power(self, e: int) -> "AffinePermutation":
        base = self if e >= 0 else self.inverse()
        out = identity(self.k)
        for _ in range(abs(e)):
            out = out @ base
        return out

    def window_sum(self) -> int:
        return sum(self.window)

    def is_extended(self) -> bool:
        """Window sum condition for the extended group (mod k)."""
        return (self.window_sum() - comb(self.k + 1, 2)) % self.k == 0

    def is_unextended(self) -> bool:
        """Exact window sum of the identity, i.e. membership in the non-extended group."""
        return self.window_sum() == comb(self.k + 1, 2)

    def shift_degree(self) -> int:
        """d with self = w o tau^d for w in the non-extended group."""
        return (comb(self.k + 1, 2) - self.window_sum()) // self.k

    def to_json(self):
        return {"k": self.k, "window": list(self.window)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["k"]), tuple(data["window"]))


def identity(k: int) -> AffinePermutation:
    return AffinePermutation(k, tuple(range(1, k + 1)))


def sigma(i: int, k: int) -> AffinePermutation:
    """Simple reflection swapping the residue classes i and i+1 mod k."""
    if k < 2:
        raise ValueError("simple reflections need k >= 2")
    if not 0 <= i < k:
        raise ValueError(f"index {i} outside 0..{k - 1}")

    def s(m):
        if (m - i) % k == 0:
            return m + 1
        if (m - i - 1) % k == 0:
            return m - 1
        return m

    return AffinePermutation(k, tuple(s(m) for m in range(1, k + 1)))


def tau(k: int) -> AffinePermutation:
    return AffinePermutation(k, tuple(range(0, k)))


@lru_cache(maxsize=None)
def y_generator(i: int, k: int) -> AffinePermutation:
    """Translation y_i; y_k = tau o s_1 o ... o s_{k-1}, y_i = s_i o y_{i+1} o s_i."""
    if not 1 <= i <= k:
        raise ValueError(f"index {i} outside 1..{k}")
    if i == k:
        out = tau(k)
        for j in range(1, k):
            out = out @ sigma(j, k)
        return out
    s = sigma(i, k)
    return s @ y_generator(i + 1, k) @ s


@lru_cache(maxsize=None)
def y_power(alpha: Tuple[int, ...]) -> AffinePermutation:
    """y^alpha = y_1^alpha_1 o ... o y_k^alpha_k by literal composition."""
    k = len(alpha)
    out = identity(k)
    for i, a in enumerate(alpha, start=1):
        out = out @ y_generator(i, k).power(a)
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LoopFunction:
    k: int
    n: int
    window: Tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", window)
        if len(window) != self.k:
            raise ValueError(f"window {window} does not have length k={self.k}")
        if self.n < 1:
            raise ValueError("level n must be positive")

    def __call__(self, m: int) -> int:
        q, r = divmod(m - 1, self.k)
        return self.window[r] - self.n * q

    def act(self, w: AffinePermutation) -> "LoopFunction":
        if w.k != self.k:
            raise ValueError("mismatched k")
        return LoopFunction(self.k, self.n, tuple(self(w(i)) for i in range(1, self.k + 1)))

    def shift(self, d: int) -> "LoopFunction":
        """lam o tau^d."""
        return LoopFunction(self.k, self.n, tuple(self(i - d) for i in range(1, self.k + 1)))

    def in_alcove(self) -> bool:
        w = self.window
        return self.n >= w[0] and w[-1] > 0 and all(w[i] >= w[i + 1] for i in range(self.k - 1))

    def is_decreasing(self) -> bool:
        return all(self(i) >= self(i + 1) for i in range(1, self.k + 1))

    def conjugate(self) -> "LoopFunction":
        """Transpose of the boundary path, a loop function at level k on period n."""
        return LoopFunction(self.n, self.k, tuple(self.conjugate_at(j) for j in range(1, self.n + 1)))

    def conjugate_at(self, j: int) -> int:
        # the sequence drops by n every k steps, so scanning enough periods
        # on both sides of 1 covers every index that can contribute
        hi = max(self.window) - j
        periods = max(0, hi // self.n + 2)
        lo_periods = max(0, (j - min(self.window)) // self.n + 2)
        above = sum(1 for i in range(1, self.k * periods + 1) if self(i) >= j)
        below = sum(1 for i in range(-self.k * lo_periods + 1, 1) if self(i) < j)
        return above - below

    def partition(self) -> Partition:
        return partition(self.window)

    def to_json(self):
        return {"k": self.k, "n": self.n, "window": list(self.window)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["k"]), int(data["n"]), tuple(data["window"]))


def loop(lam: Sequence[int], k: int, n: int) -> LoopFunction:
    """Loop function with window lam padded by zeros to length k."""
    lam = tuple(lam)
    if len(lam) > k:
        raise ValueError(f"{lam} has more than k={k} entries")
    return LoopFunction(k, n, lam + (0,) * (k - len(lam)))


def act(lam: LoopFunction, w: AffinePermutation) -> LoopFunction:
    return lam.act(w)


def loop_shift(lam: LoopFunction, d: int) -> LoopFunction:
    return lam.shift(d)


def loop_conjugate(lam: LoopFunction) -> LoopFunction:
    return lam.conjugate()


@lru_cache(maxsize=None)
def alcove(k: int, n: int) -> Tuple[Partition, ...]:
    """Partitions with n >= lam_1 >= ... >= lam_k > 0, lexicographically decreasing."""
    out = [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(1, n + 1), k)]
    return tuple(sorted(out, reverse=True))


def in_alcove(lam: Sequence[int], k: int, n: int) -> bool:
    lam = tuple(lam)
    return (len(lam) == k and all(0 < x <= n for x in lam)
            and all(lam[i] >= lam[i + 1] for i in range(k - 1)))


def reduce_to_alcove(lam: LoopFunction) -> Tuple[Partition, AffinePermutation]:
    """Alcove point nu of the orbit of lam, with a witness w such that lam o w = nu."""
    k, n = lam.k, lam.n
    idx = []
    for i, v in enumerate(lam.window, start=1):
        q = -((v - 1) // n)  # v + q*n lands in (0, n]
        idx.append(i - q * k)  # lam(i - q*k) = v + q*n
    order = sorted(range(k), key=lambda j: (-lam(idx[j]), j))
    w = AffinePermutation(k, tuple(idx[j] for j in order))
    nu = lam.act(w)
    return tuple(nu.window), w


# ---------------------------------------------------------------------------
# cylindric shapes


def cylindric_contains(mu: LoopFunction, lam_d: LoopFunction) -> bool:
    """mu <= lam_d pointwise; one period suffices since the difference is k-periodic."""
    if (mu.k, mu.n) != (lam_d.k, lam_d.n):
        raise ValueError("mismatched (k, n)")
    return all(a <= b for a, b in zip(mu.window, lam_d.window))


@dataclass(frozen=True)
class CylindricShape:
    """lam/d/mu: the cells between the loops mu[0] and lam[d]."""

    lam: Partition
    d: int
    mu: Partition
    k: int
    n: int

    def __post_init__(self):
        for name in ("lam", "mu"):
            p = tuple(getattr(self, name))
            if not in_alcove(p, self.k, self.n):
                raise ValueError(f"{name}={p} is not in the alcove A({self.k},{self.n})")
            object.__setattr__(self, name, p)
        if self.d < 0:
            raise ValueError("degree must be nonnegative")

    @property
    def outer(self) -> LoopFunction:
        return LoopFunction(self.k, self.n, self.lam).shift(self.d)

    @property
    def inner(self) -> LoopFunction:
        return LoopFunction(self.k, self.n, self.mu)

    def is_valid(self) -> bool:
        return cylindric_contains(self.inner, self.outer)

    def cells(self) -> List[Tuple[int, int]]:
        """Cells (i, j) with 1 <= i <= k and mu_i < j <= lam[d]_i."""
        if not self.is_valid():
            return []
        out = []
        for i, (lo, hi) in enumerate(zip(self.inner.window, self.outer.window), start=1):
            out.extend((i, j) for j in range(lo + 1, hi + 1))
        return out

    def cell_count(self) -> int:
        return self.n * self.d + sum(self.lam) - sum(self.mu)


def shape_cells(shape: CylindricShape) -> List[Tuple[int, int]]:
    return shape.cells()
