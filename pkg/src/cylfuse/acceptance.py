"""The end-to-end verification grid, shared by ``cylfuse selftest`` and the test suite.

Each check pits two independent computations against each other and returns
a small result dict: ``{"id", "name", "pass", "seconds", "limit", "detail"}``.
"""
from __future__ import annotations

import time
from typing import Callable, Dict, List

from .affine import CylindricShape, alcove
from .fusion import (
    FusionElement,
    gram_matrix,
    n_coefficient,
    n_reduced,
    unit,
)
from .modular import idempotent_check, modular_relations_report, verlinde_n
from .rppgen import (
    band_bound,
    chi_cyl,
    chi_cyl_by_count,
    cyl_h_expansion,
    enumerate_cyl_chains,
    rpp_weight_sum,
)
from .symcore import (
    MExpansion,
    chi_of_weight,
    chi_skew,
    chi_skew_by_count,
    h_expansion,
    partitions_of,
    subpartitions,
)

CYLINDRIC_GRID = ((2, 3), (2, 4), (3, 3), (3, 4))
ALGEBRA_GRID = ((1, 4), (2, 3), (2, 4), (3, 3))
VERLINDE_GRID = ((1, 5), (2, 3), (2, 4), (3, 3))
IDEMPOTENT_GRID = ((1, 6), (2, 3), (2, 4))


def _box(k: int, width: int = 4):
    return list(subpartitions((width,) * k))


def closed_form_chi() -> dict:
    failures = []
    checked = 0
    for k in range(1, 5):
        box = _box(k)
        for lam in box:
            for mu in box:
                checked += 1
                if chi_skew(lam, mu) != chi_skew_by_count(lam, mu, k):
                    failures.append((lam, mu, k))
    return {"checked": checked, "failures": failures[:5], "ok": not failures}


def flat_weight_sum() -> dict:
    failures = []
    checked = 0
    for total in range(7):
        for lam in partitions_of(total):
            for mu in subpartitions(lam):
                for nu in partitions_of(total - sum(mu)):
                    checked += 1
                    if rpp_weight_sum(lam, mu, nu) != chi_of_weight(lam, mu, nu):
                        failures.append((lam, mu, nu))
    return {"checked": checked, "failures": failures[:5], "ok": not failures}


def cylindric_chi_count() -> dict:
    failures = []
    checked = 0
    for k, n in CYLINDRIC_GRID:
        basis = alcove(k, n)
        for lam in basis:
            for mu in basis:
                for d in (0, 1, 2):
                    checked += 1
                    closed = chi_cyl(lam, d, mu, k, n)
                    counted = chi_cyl_by_count(lam, d, mu, k, n)
                    doubled = chi_cyl_by_count(lam, d, mu, k, n, bound=2 * band_bound(lam, d, n))
                    if not closed == counted == doubled:
                        failures.append((k, n, lam, d, mu, closed, counted, doubled))
    return {"checked": checked, "failures": failures[:5], "ok": not failures}


def cylindric_h_expansion() -> dict:
    failures = []
    checked = 0
    for k, n in CYLINDRIC_GRID:
        basis = alcove(k, n)
        for lam in basis:
            for mu in basis:
                for d in (0, 1, 2):
                    degree = n * d + sum(lam) - sum(mu)
                    if degree < 0:
                        continue
                    checked += 1
                    lhs = cyl_h_expansion(lam, d, mu, k, n)
                    rhs = MExpansion(k, {})
                    for nu in partitions_of(degree, max_parts=k):
                        c = n_coefficient(mu, nu, lam, k, n)
                        if c:
                            rhs = rhs + h_expansion(nu, k).scale(c)
                    if lhs != rhs:
                        failures.append((k, n, lam, d, mu))
    return {"checked": checked, "failures": failures[:5], "ok": not failures}


def multinomial_reduction() -> dict:
    failures = []
    checked = 0
    for k, n in ((2, 3), (3, 3)):
        basis = alcove(k, n)
        for total in range(n + k + 1):
            for nu in partitions_of(total, max_parts=k):
                for mu in basis:
                    for lam in basis:
                        checked += 1
                        if n_coefficient(mu, nu, lam, k, n) != n_reduced(mu, nu, lam, k, n):
                            failures.append((k, n, mu, nu, lam))
    return {"checked": checked, "failures": failures[:5], "ok": not failures}


def algebra_axioms() -> dict:
    failures = []
    checked = 0
    for k, n in ALGEBRA_GRID:
        basis = alcove(k, n)
        m = {lam: FusionElement.basis(lam, k, n) for lam in basis}
        one = unit(k, n)
        for a in basis:
            if one * m[a] != m[a]:
                failures.append(("unit", k, n, a))
            for b in basis:
                if m[a] * m[b] != m[b] * m[a]:
                    failures.append(("commutative", k, n, a, b))
                for c in basis:
                    checked += 1
                    if (m[a] * m[b]) * m[c] != m[a] * (m[b] * m[c]):
                        failures.append(("associative", k, n, a, b, c))
        det = gram_matrix(k, n, 1).det()
        if det == 0:
            failures.append(("gram", k, n))
    return {"checked": checked, "failures": failures[:5], "ok": not failures}


def level_one() -> dict:
    failures = []
    checked = 0
    for n in range(1, 9):
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                for c in range(1, n + 1):
                    checked += 1
                    expected = 1 if (a + b - c) % n == 0 else 0
                    if n_coefficient((a,), (b,), (c,), 1, n) != expected:
                        failures.append((n, a, b, c))
    return {"checked": checked, "failures": failures[:5], "ok": not failures}


def verlinde_check(tol: float = 1e-6) -> dict:
    failures = []
    checked = 0
    worst = 0.0
    for k, n in VERLINDE_GRID:
        basis = alcove(k, n)
        for lam in basis:
            for mu in basis:
                for nu in basis:
                    checked += 1
                    v = verlinde_n(lam, mu, nu, k, n, tol=tol)
                    exact = n_coefficient(lam, mu, nu, k, n)
                    worst = max(worst, abs(v.value - exact))
                    if not v.ok or v.integer != exact:
                        failures.append((k, n, lam, mu, nu, v.integer, exact))
    return {"checked": checked, "failures": failures[:5], "ok": not failures, "max_dev": worst}


def modular_relations(tol: float = 1e-9) -> dict:
    failures = []
    worst = 0.0
    for k, n in VERLINDE_GRID:
        for row in modular_relations_report(k, n, tol):
            worst = max(worst, row["max_dev"])
            if not row["pass"]:
                failures.append((k, n, row["relation"], row["max_dev"]))
    return {"checked": len(VERLINDE_GRID) * 7, "failures": failures[:5], "ok": not failures,
            "max_dev": worst}


def idempotents(tol: float = 1e-9) -> dict:
    failures = []
    worst = 0.0
    for k, n in IDEMPOTENT_GRID:
        rep = idempotent_check(k, n, tol)
        worst = max(worst, rep["max_dev"], rep["partition_of_unity_dev"])
        if not rep["pass"]:
            failures.append((k, n, rep["max_dev"]))
    return {"checked": len(IDEMPOTENT_GRID), "failures": failures, "ok": not failures,
            "max_dev": worst}


def sample_shape() -> dict:
    shape = CylindricShape((4, 3, 2), 1, (2, 2, 1), 3, 4)
    cells = len(shape.cells())
    chains = enumerate_cyl_chains((4, 3, 2), 1, (2, 2, 1), (4, 3, 1), 3, 4)
    return {"checked": 1, "cells": cells, "chains": len(chains),
            "failures": [] if cells == 8 and chains else [("shape", cells, len(chains))],
            "ok": cells == 8 and bool(chains)}


CRITERIA: List[tuple] = [
    (1, "closed-form chi equals rearrangement count", closed_form_chi, 10.0),
    (2, "RPP weighted sum equals L*f expansion", flat_weight_sum, 60.0),
    (3, "cylindric chi closed form equals affine count", cylindric_chi_count, None),
    (4, "cylindric h expands with N coefficients", cylindric_h_expansion, 600.0),
    (5, "multinomial reduction of N", multinomial_reduction, None),
    (6, "algebra commutative, associative, unital, nondegenerate", algebra_axioms, None),
    (7, "level-one fusion is addition mod n", level_one, None),
    (8, "Verlinde formula reproduces N", verlinde_check, 60.0),
    (9, "modular group relations", modular_relations, None),
    (10, "idempotents separate the alcove points", idempotents, None),
    (11, "sample shape (4,3,2)/1/(2,2,1)", sample_shape, None),
]


def run_criterion(cid: int) -> Dict:
    for num, name, fn, limit in CRITERIA:
        if num == cid:
            start = time.perf_counter()
            detail = fn()
            seconds = time.perf_counter() - start
            ok = detail.pop("ok") and (limit is None or seconds < limit)
            return {"id": num, "name": name, "pass": ok, "seconds": seconds,
                    "limit": limit, "detail": detail}
    raise KeyError(cid)


def run_all(only: Callable[[int], bool] = lambda cid: True) -> List[Dict]:
    return [run_criterion(num) for num, *_ in CRITERIA if only(num)]
