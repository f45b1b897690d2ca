"""Brute-force references used only by the tests.

Nothing here imports from cylfuse: polynomials are dicts exponent-tuple -> int.
"""
from itertools import permutations, product


def monomial_orbit(parts, k):
    padded = tuple(parts) + (0,) * (k - len(parts))
    return {p: 1 for p in set(permutations(padded))}


def poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def complete_h(r, k):
    """h_r in k variables: every monomial of degree r."""
    return {e: 1 for e in product(range(r + 1), repeat=k) if sum(e) == r}


def complete_h_partition(lam, k):
    out = {(0,) * k: 1}
    for r in lam:
        out = poly_mul(out, complete_h(r, k))
    return out


def coefficient(poly, nu, k):
    return poly.get(tuple(nu) + (0,) * (k - len(nu)), 0)


def young_conjugate(lam):
    cells = {(i, j) for i, row in enumerate(lam) for j in range(row)}
    cols = max((j for _, j in cells), default=-1) + 1
    return tuple(sum(1 for (i, jj) in cells if jj == j) for j in range(cols))


def count_matrices(rows, cols):
    """N-matrices with the given row and column sums, by plain enumeration."""
    if sum(rows) != sum(cols):
        return 0
    r, c = len(rows), len(cols)
    if r == 0 or c == 0:
        return 1 if sum(rows) == 0 else 0
    cap = max(max(rows), max(cols))
    total = 0
    for entries in product(range(cap + 1), repeat=r * c):
        m = [entries[i * c:(i + 1) * c] for i in range(r)]
        if all(sum(m[i]) == rows[i] for i in range(r)) and \
                all(sum(m[i][j] for i in range(r)) == cols[j] for j in range(c)):
            total += 1
    return total


def rearrangements_fitting(lam, mu, k):
    top = tuple(lam) + (0,) * (k - len(lam))
    padded = tuple(mu) + (0,) * (k - len(mu))
    return sum(1 for p in set(permutations(padded)) if all(a <= b for a, b in zip(p, top)))
