"""Command-line interface.

Exit codes: 0 success/agreement, 1 verification failure, 2 usage error.
Output is deterministic: sorted JSON keys, floats to 12 significant digits.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from typing import List, Optional

from . import acceptance, kernels
from ._config import EnumerationTooLarge
from .affine import LoopFunction, alcove, in_alcove, reduce_to_alcove
from .fusion import FusionElement, fusion_product, fusion_table, n_coefficient
from .modular import (
    READINGS,
    c_matrix,
    idempotent_check,
    modular_relations_report,
    s_matrix,
    t_matrix,
    verlinde_n,
)
from .rppgen import (
    chi_cyl,
    chi_cyl_by_count,
    cyl_h_expansion,
    h_skew_expansion,
)
from .symcore import (
    PartitionError,
    chi_of_weight,
    chi_skew,
    chi_skew_by_count,
    partition,
    partitions_of,
)

MAX_K, MAX_N = 4, 8


class UsageError(Exception):
    pass


def parse_partition(text: str):
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        return partition(int(x) for x in text.split(","))
    except (ValueError, PartitionError) as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}")


def _clean(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, complex):
        return [_clean(obj.real), _clean(obj.imag)]
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def emit(payload, fmt: str, out, rows: Optional[List[dict]] = None, columns=None):
    if fmt == "csv" and rows is not None:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([
                ",".join(map(str, row[c])) if isinstance(row[c], (list, tuple)) else _fmt(row[c])
                for c in columns
            ])
        return
    if fmt == "pretty":
        _pretty(_clean(payload), out)
        return
    out.write(json.dumps(_clean(payload), sort_keys=True) + "\n")


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _pretty(obj, out, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val and not _flat(val):
                out.write(f"{pad}{key}:\n")
                _pretty(val, out, indent + 1)
            else:
                out.write(f"{pad}{key}: {json.dumps(val, sort_keys=True)}\n")
    elif isinstance(obj, list):
        for item in obj:
            out.write(f"{pad}- {json.dumps(item, sort_keys=True)}\n")
    else:
        out.write(f"{pad}{obj}\n")


def _flat(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


# ---------------------------------------------------------------------------


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + m for m in missing))


def _check_sizes(args):
    if args.unsafe_sizes:
        return
    if args.k is not None and args.k > MAX_K:
        raise UsageError(f"k={args.k} above safety limit {MAX_K}; pass --unsafe-sizes")
    if args.n is not None and args.n > MAX_N:
        raise UsageError(f"n={args.n} above safety limit {MAX_N}; pass --unsafe-sizes")
    if args.k is not None and args.k < 1 or args.n is not None and args.n < 1:
        raise UsageError("k and n must be positive")


def _alcove_arg(p, name, k, n):
    if not in_alcove(p, k, n):
        raise UsageError(f"--{name} {','.join(map(str, p))} is not in the alcove A({k},{n})")
    return tuple(p)


def cmd_chi(args, out):
    _need(args, "lam", "mu")
    k = args.k or max(len(args.lam), len(args.mu), 1)
    value = chi_skew(args.lam, args.mu)
    by_count = chi_skew_by_count(args.lam, args.mu, k)
    emit({"lambda": args.lam, "mu": args.mu, "k": k, "value": value,
          "by_count": by_count, "agree": value == by_count}, args.format, out)
    return 0 if value == by_count else 1


def cmd_cyl_chi(args, out):
    _need(args, "k", "n", "d", "lam", "mu")
    lam = _alcove_arg(args.lam, "lambda", args.k, args.n)
    mu = _alcove_arg(args.mu, "mu", args.k, args.n)
    value = chi_cyl(lam, args.d, mu, args.k, args.n)
    by_count = chi_cyl_by_count(lam, args.d, mu, args.k, args.n)
    emit({"lambda": lam, "mu": mu, "d": args.d, "k": args.k, "n": args.n,
          "value": value, "by_count": by_count, "agree": value == by_count}, args.format, out)
    return 0 if value == by_count else 1


def cmd_skew_h(args, out):
    _need(args, "lam", "mu")
    k = args.k or max(len(args.lam), 1)
    expansion = h_skew_expansion(args.lam, args.mu, k)
    agree = all(c == chi_of_weight(args.lam, args.mu, nu) for nu, c in expansion.items())
    rows = [{"nu": list(nu), "coeff": c} for nu, c in expansion.items()]
    emit({"m_expansion": rows, "degree": sum(args.lam) - sum(args.mu), "agree": agree},
         args.format, out, rows, ["nu", "coeff"])
    return 0 if agree else 1


def cmd_cyl_h(args, out):
    _need(args, "k", "n", "d", "lam", "mu")
    k, n, d = args.k, args.n, args.d
    lam = _alcove_arg(args.lam, "lambda", k, n)
    mu = _alcove_arg(args.mu, "mu", k, n)
    degree = n * d + sum(lam) - sum(mu)
    expansion = cyl_h_expansion(lam, d, mu, k, n)
    h_rows = []
    if degree >= 0:
        for nu in partitions_of(degree, max_parts=k):
            c = n_coefficient(mu, nu, lam, k, n)
            if c:
                h_rows.append({"nu": list(nu), "N": c})
    payload = {
        "lambda": lam, "mu": mu, "d": d, "k": k, "n": n, "degree": degree,
        "m_expansion": [{"nu": list(nu), "coeff": c} for nu, c in expansion.items()],
        "h_expansion": h_rows,
    }
    emit(payload, args.format, out, payload["m_expansion"], ["nu", "coeff"])
    return 0


def cmd_fusion(args, out):
    _need(args, "k", "n", "lam", "mu")
    k, n = args.k, args.n
    lam = _alcove_arg(args.lam, "lambda", k, n)
    mu = _alcove_arg(args.mu, "mu", k, n)
    if args.nu is not None:
        nu = _alcove_arg(args.nu, "nu", k, n)
        emit({"lambda": lam, "mu": mu, "nu": nu, "N": n_coefficient(lam, mu, nu, k, n)},
             args.format, out)
        return 0
    prod = fusion_product(FusionElement.basis(lam, k, n), FusionElement.basis(mu, k, n))
    rows = []
    for nu, coeff in prod.items():
        for e, c in sorted(coeff.coeffs.items()):
            rows.append({"nu": list(nu), "d": e, "N": c})
    emit({"lambda": lam, "mu": mu, "k": k, "n": n, "terms": rows}, args.format, out,
         rows, ["nu", "d", "N"])
    return 0


def cmd_fusion_table(args, out):
    _need(args, "k", "n")
    rows = fusion_table(args.k, args.n)
    emit({"k": args.k, "n": args.n, "entries": rows}, args.format, out,
         rows, ["lambda", "mu", "nu", "d", "N"])
    return 0


def cmd_verlinde(args, out):
    _need(args, "k", "n")
    k, n = args.k, args.n
    basis = alcove(k, n)
    mismatches = []
    readings = {r: 0 for r in READINGS}
    worst = 0.0
    for lam in basis:
        for mu in basis:
            for nu in basis:
                exact = n_coefficient(lam, mu, nu, k, n)
                for r in READINGS:
                    v = verlinde_n(lam, mu, nu, k, n, reading=r, tol=args.tol)
                    bad = not v.ok or v.integer != exact
                    readings[r] += bad
                    if r == "normalised":
                        worst = max(worst, abs(v.value - exact))
                        if bad:
                            mismatches.append({"lambda": lam, "mu": mu, "nu": nu,
                                               "numeric": v.value, "N": exact})
    ok = not mismatches
    emit({"k": k, "n": n, "tol": args.tol, "triples": len(basis) ** 3, "max_dev": worst,
          "mismatches": mismatches, "mismatches_by_reading": readings, "pass": ok},
         args.format, out)
    return 0 if ok else 1


def cmd_idempotents(args, out):
    _need(args, "k", "n")
    rep = idempotent_check(args.k, args.n, args.tol)
    emit(rep, args.format, out)
    return 0 if rep["pass"] else 1


def cmd_modular(args, out):
    _need(args, "k", "n")
    if args.format == "csv" and args.matrix:
        mat = {"S": s_matrix, "T": t_matrix, "C": c_matrix}[args.matrix](args.k, args.n)
        writer = csv.writer(out, lineterminator="\n")
        for row in mat:
            writer.writerow([f"{complex(v).real:.12g},{complex(v).imag:.12g}" for v in row])
        return 0
    rows = modular_relations_report(args.k, args.n, args.tol)
    emit({"k": args.k, "n": args.n, "relations": rows, "pass": all(r["pass"] for r in rows)},
         args.format, out, rows, ["relation", "max_dev", "tol", "pass"])
    return 0 if all(r["pass"] for r in rows) else 1


def _random_reduction_check(seed: int, samples: int = 200) -> bool:
    """Fundamental-domain check on random words in the generators."""
    from .affine import sigma, tau
    rng = random.Random(seed)
    for k, n in ((2, 3), (3, 4)):
        gens = [sigma(i, k) for i in range(k)] + [tau(k), tau(k).inverse()]
        basis = alcove(k, n)
        for _ in range(samples):
            w = gens[0].power(0)
            for _ in range(rng.randint(0, 8)):
                w = w @ rng.choice(gens)
            nu = rng.choice(basis)
            moved = LoopFunction(k, n, nu).act(w)
            if reduce_to_alcove(moved)[0] != nu or not w.is_extended():
                return False
    return True


def cmd_selftest(args, out):
    wanted = None
    if args.criteria:
        wanted = {int(x) for x in args.criteria.split(",")}
    results = acceptance.run_all(lambda cid: wanted is None or cid in wanted)
    rows = [{"id": r["id"], "name": r["name"], "pass": r["pass"],
             "seconds": round(r["seconds"], 3), "checked": r["detail"].get("checked")}
            for r in results]
    random_ok = _random_reduction_check(args.seed)
    ok = all(r["pass"] for r in results) and random_ok
    emit({"backend": kernels.backend(), "criteria": rows, "seed": args.seed,
          "random_reduction": random_ok, "pass": ok},
         args.format, out, rows, ["id", "name", "pass", "seconds", "checked"])
    return 0 if ok else 1


COMMANDS = {
    "chi": cmd_chi,
    "cyl-chi": cmd_cyl_chi,
    "skew-h": cmd_skew_h,
    "cyl-h": cmd_cyl_h,
    "fusion": cmd_fusion,
    "fusion-table": cmd_fusion_table,
    "verlinde": cmd_verlinde,
    "idempotents": cmd_idempotents,
    "modular": cmd_modular,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--lambda", dest="lam", type=parse_partition)
    common.add_argument("--mu", type=parse_partition)
    common.add_argument("--nu", type=parse_partition)
    common.add_argument("--tol", type=float)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--unsafe-sizes", action="store_true")

    parser = argparse.ArgumentParser(prog="cylfuse", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "modular":
            p.add_argument("--matrix", choices=("S", "T", "C"))
        if name == "selftest":
            p.add_argument("--criteria", help="comma-separated criterion numbers")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol is None:
        args.tol = 1e-6 if args.command == "verlinde" else 1e-9
    try:
        _check_sizes(args)
        if args.d is not None and args.d < 0:
            raise UsageError("d must be nonnegative")
        return COMMANDS[args.command](args, out)
    except (UsageError, PartitionError, EnumerationTooLarge) as exc:
        sys.stderr.write(f"cylfuse {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
