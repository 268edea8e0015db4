"""Command-line front end.

Subcommands:

* ``cellred audit --type B2 --format json|md`` / ``cellred audit --all``
* ``cellred sl3 --p 7 [--orbits] --format json``
* ``cellred tables dump --what klpoly|cells|gamma|cwe|delta --type T``

Output is deterministic for fixed flags: no timestamps, stable ordering.
Reports are written atomically when an output path is given.  Exit status is
0 iff every executed check passed (skips allowed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import audit, sl3lab, weylmod
from .rootdata import ALL_TYPES, CartanType, UnsupportedType

DEFAULT_PRIMES = (2, 3, 5, 7, 11)


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cellred-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_type(name: str) -> CartanType:
    try:
        return CartanType.parse(name)
    except UnsupportedType as exc:
        raise SystemExit(f"cellred: {exc}") from None


def _cmd_audit(args) -> int:
    if args.all:
        types = ALL_TYPES
    elif args.type:
        types = tuple(_parse_type(t) for t in args.type)
    else:
        types = ALL_TYPES
    reports = audit.run_all(types)
    if args.format == "md":
        text = audit.reports_to_markdown(reports)
    else:
        text = audit.reports_to_json(reports)
    _write_output(text, args.output)
    return 1 if any(r.failed for r in reports) else 0


def _cmd_sl3(args) -> int:
    primes = tuple(args.p) if args.p else DEFAULT_PRIMES
    results = []
    ok = True
    for p in primes:
        try:
            space = sl3lab.build_incidence(p)
        except (sl3lab.NotPrime, sl3lab.TooLarge) as exc:
            raise SystemExit(f"cellred: {exc}") from None
        maps = sl3lab.tau_maps(space)
        rep = sl3lab.kernel_analysis(maps)
        want = p * (p + 1) // 2
        entry = {
            "p": p,
            "lines": space.n_points,
            "planes": space.n_points,
            "dim_f1": rep.dim_f1,
            "kernel": {
                "dim_ker_tau": rep.dim_ker_tau,
                "dim_ker_tau_prime": rep.dim_ker_tau_prime,
                "expected_dim": want,
                "ker_tau_eq_im_tau_prime": rep.ker_tau_eq_im_tau_prime,
                "ker_tau_prime_eq_im_tau": rep.ker_tau_prime_eq_im_tau,
            },
            "equivariance_sample_ok": sl3lab.equivariance_spot_check(space),
        }
        entry_ok = (
            rep.dim_ker_tau == want
            and rep.dim_ker_tau_prime == want
            and rep.ker_tau_eq_im_tau_prime
            and rep.ker_tau_prime_eq_im_tau
            and entry["equivariance_sample_ok"]
        )
        if args.orbits:
            if p < 5:
                entry["orbits"] = None
                entry["orbits_note"] = "principal-series check needs p >= 5"
            else:
                ps = sl3lab.principal_series_check(p)
                entry["orbits"] = [
                    {
                        "rep": list(o.rep),
                        "lifts": [list(z) for z in o.lifts],
                        "dims": list(o.dims),
                        "total": o.total,
                        "expected": o.expected,
                        "ok": o.ok,
                    }
                    for o in ps.orbits
                ]
                entry_ok = entry_ok and ps.all_ok
        entry["ok"] = entry_ok
        ok = ok and entry_ok
        results.append(entry)
    _write_output(json.dumps({"results": results}, indent=2), args.output)
    return 0 if ok else 1


def _dump_klpoly(ct: CartanType) -> dict:
    ctx = audit.get_context(ct)
    g = ctx.group
    entries = []
    for (y, w), coeffs in sorted(
        ctx.kl.P.items(), key=lambda kv: (g.index(kv[0][1]), g.index(kv[0][0]))
    ):
        entries.append({
            "y": str(y),
            "w": str(w),
            "coeffs": {str(i): c for i, c in enumerate(coeffs) if c},
        })
    return {"type": ct.name, "what": "klpoly", "entries": entries}


def _dump_cells(ct: CartanType) -> dict:
    ctx = audit.get_context(ct)
    g = ctx.group

    def words(cell):
        return [str(w) for w in sorted(cell, key=g.index)]

    return {
        "type": ct.name,
        "what": "cells",
        "left_cells": [words(c) for c in sorted(
            ctx.cells.left_cells, key=lambda c: min(g.index(w) for w in c))],
        "right_cells": [words(c) for c in sorted(
            ctx.cells.right_cells, key=lambda c: min(g.index(w) for w in c))],
        "two_sided_cells": [
            {"a": ctx.cells.a_value[c], "members": words(c)}
            for c in sorted(
                ctx.cells.two_sided_cells,
                key=lambda c: min(g.index(w) for w in c),
            )
        ],
    }


def _dump_gamma(ct: CartanType) -> dict:
    ctx = audit.get_context(ct)
    g = ctx.group
    gamma = ctx.jring.gamma
    entries = []
    import numpy as np

    for x, y, z in zip(*np.nonzero(gamma)):
        entries.append({
            "x": str(g.element(int(x))),
            "y": str(g.element(int(y))),
            "z": str(g.element(int(z))),
            "value": int(gamma[x, y, z]),
        })
    return {"type": ct.name, "what": "gamma", "entries": entries}


def _dump_cwe(ct: CartanType) -> dict:
    ctx = audit.get_context(ct)
    g = ctx.group
    rows: dict[str, dict[str, int]] = {}
    for w in g.elements:
        row = {
            lab: ctx.leading.c[(w, lab)]
            for lab in ctx.leading.labels
            if (w, lab) in ctx.leading.c
        }
        if row:
            rows[str(w)] = row
    return {
        "type": ct.name,
        "what": "cwe",
        "labels": list(ctx.leading.labels),
        "rows": rows,
    }


def _dump_delta(ct: CartanType) -> dict:
    try:
        deltas = weylmod.delta_table(ct)
    except weylmod.MissingMwData as exc:
        raise SystemExit(f"cellred: {exc}") from None
    duality = weylmod.find_duality(ct, deltas)
    rows = {}
    for word, dp in deltas.items():
        partner, sign = duality.pairs.get(word, (None, 0))
        rows[word] = {
            "pi": dp.pi.render(),
            "c": dp.c,
            "partner": partner,
            "sign": "+" if sign > 0 else ("-" if sign < 0 else None),
        }
    return {"type": ct.name, "what": "delta", "rows": rows}


_DUMPERS = {
    "klpoly": _dump_klpoly,
    "cells": _dump_cells,
    "gamma": _dump_gamma,
    "cwe": _dump_cwe,
    "delta": _dump_delta,
}


def _cmd_tables(args) -> int:
    ct = _parse_type(args.type)
    payload = _DUMPERS[args.what](ct)
    _write_output(json.dumps(payload, indent=2), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cellred",
        description="exact Weyl-group / Hecke-algebra cell computations and audits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_audit = sub.add_parser("audit", help="run every check and emit a report")
    p_audit.add_argument("--type", action="append", metavar="T",
                         help="Cartan type (repeatable); default: all six")
    p_audit.add_argument("--all", action="store_true", help="audit all six types")
    p_audit.add_argument("--format", choices=("json", "md"), default="json")
    p_audit.add_argument("-o", "--output", metavar="PATH", default=None)
    p_audit.set_defaults(func=_cmd_audit)

    p_sl3 = sub.add_parser("sl3", help="incidence-module laboratory")
    p_sl3.add_argument("--p", action="append", type=int, metavar="P",
                       help="prime (repeatable); default: 2 3 5 7 11")
    p_sl3.add_argument("--orbits", action="store_true",
                       help="include principal-series orbit sums (p >= 5)")
    p_sl3.add_argument("--format", choices=("json",), default="json")
    p_sl3.add_argument("-o", "--output", metavar="PATH", default=None)
    p_sl3.set_defaults(func=_cmd_sl3)

    p_tables = sub.add_parser("tables", help="dump computed tables as JSON")
    tsub = p_tables.add_subparsers(dest="tables_command", required=True)
    p_dump = tsub.add_parser("dump")
    p_dump.add_argument("--what", choices=tuple(_DUMPERS), required=True)
    p_dump.add_argument("--type", required=True, metavar="T")
    p_dump.add_argument("-o", "--output", metavar="PATH", default=None)
    p_dump.set_defaults(func=_cmd_tables)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
