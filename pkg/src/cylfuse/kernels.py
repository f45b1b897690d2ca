"""Integer search kernels behind the counting operations.

Every kernel exists twice: a loop version compiled with ``numba.njit`` and a
vectorised numpy version.  ``CYLFUSE_DISABLE_NUMBA=1`` (read at import) selects
the numpy path for the public names; both variants stay importable so tests
and the benchmark can compare them directly.

All arrays are ``int64``.  Counts stay far below 2**63 at the sizes guarded by
``CYLFUSE_MAX_CELLS``.
"""
import numpy as np

from ._config import numba_disabled

try:
    import numba
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not numba_disabled()


def _njit(fn):
    if numba is None:  # pragma: no cover
        return fn
    return numba.njit(cache=False, nogil=True)(fn)


# ---------------------------------------------------------------------------
# band search: rows[r] - n*q <= upper with q in [-B, B]^k and sum(q) == 0


def _count_band_loops(rows, upper, n, bound):
    r, k = rows.shape
    total = 0
    q = np.empty(k, dtype=np.int64)
    for row in range(r):
        # odometer over the first k-1 coordinates; the last is forced
        for i in range(k):
            q[i] = -bound
        while True:
            s = 0
            for i in range(k - 1):
                s += q[i]
            last = -s
            if -bound <= last <= bound:
                q[k - 1] = last
                ok = True
                for i in range(k):
                    if rows[row, i] - n * q[i] > upper[i]:
                        ok = False
                        break
                if ok:
                    total += 1
            pos = 0
            while pos < k - 1:
                q[pos] += 1
                if q[pos] <= bound:
                    break
                q[pos] = -bound
                pos += 1
            if pos >= k - 1:
                break
    return total


count_band_numba = _njit(_count_band_loops)


def _zero_sum_grid(k, bound):
    span = 2 * bound + 1
    if k == 1:
        return np.zeros((1, 1), dtype=np.int64)
    free = np.indices((span,) * (k - 1)).reshape(k - 1, -1).T - bound
    last = -free.sum(axis=1)
    keep = (last >= -bound) & (last <= bound)
    return np.column_stack([free[keep], last[keep]]).astype(np.int64)


def count_band_numpy(rows, upper, n, bound):
    rows = np.asarray(rows, dtype=np.int64)
    upper = np.asarray(upper, dtype=np.int64)
    grid = _zero_sum_grid(rows.shape[1], int(bound))
    values = rows[:, None, :] - n * grid[None, :, :]
    return int(np.all(values <= upper, axis=2).sum())


# ---------------------------------------------------------------------------
# pair search: rows_a[i] + rows_b[j] == target (+ n*alpha)


def _pair_alphas_loops(rows_a, rows_b, target, n, bound):
    ra, k = rows_a.shape
    rb = rows_b.shape[0]
    hits = 0
    for i in range(ra):
        for j in range(rb):
            ok = True
            for t in range(k):
                diff = rows_a[i, t] + rows_b[j, t] - target[t]
                if n == 0:
                    if diff != 0:
                        ok = False
                        break
                elif diff % n != 0 or abs(diff // n) > bound:
                    ok = False
                    break
            if ok:
                hits += 1
    out = np.empty((hits, k), dtype=np.int64)
    h = 0
    for i in range(ra):
        for j in range(rb):
            ok = True
            for t in range(k):
                diff = rows_a[i, t] + rows_b[j, t] - target[t]
                if n == 0:
                    if diff != 0:
                        ok = False
                        break
                elif diff % n != 0 or abs(diff // n) > bound:
                    ok = False
                    break
            if ok:
                for t in range(k):
                    diff = rows_a[i, t] + rows_b[j, t] - target[t]
                    out[h, t] = 0 if n == 0 else diff // n
                h += 1
    return out


pair_alphas_numba = _njit(_pair_alphas_loops)


def pair_alphas_numpy(rows_a, rows_b, target, n, bound):
    rows_a = np.asarray(rows_a, dtype=np.int64)
    rows_b = np.asarray(rows_b, dtype=np.int64)
    diff = rows_a[:, None, :] + rows_b[None, :, :] - np.asarray(target, dtype=np.int64)
    diff = diff.reshape(-1, rows_a.shape[1])
    if n == 0:
        keep = np.all(diff == 0, axis=1)
        return np.zeros((int(keep.sum()), rows_a.shape[1]), dtype=np.int64)
    keep = np.all(diff % n == 0, axis=1)
    alphas = diff[keep] // n
    alphas = alphas[np.all(np.abs(alphas) <= bound, axis=1)]
    return alphas.astype(np.int64)


if USE_NUMBA:
    count_band = count_band_numba
    pair_alphas = pair_alphas_numba
else:
    count_band = count_band_numpy
    pair_alphas = pair_alphas_numpy


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
