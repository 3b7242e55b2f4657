"""Command-line interface.

Every command prints a JSON report (or CSV with ``--format csv``) whose
numbers are exact decimal strings.  Exit status: 0 success, 1 bad usage or
parameters, 2 a verification check failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any

from . import __version__
from .errors import BadParams
from .face_lattice import FlagVector, build_lattice, encode_subset, eulerian_check, flag_vector, is_self_dual
from .large_facet import construct, large_facet_size
from .large_facet import verify as verify_large_facet
from .multiplex import multiplex_f, multiplex_facets, multiplex_flag_vector, multiplex_g, multiplex_h
from .multiplicial import is_order_multiplicial, reduction_table, span_rank
from .ordinary import cyclic_facets, ordinary_f0_vector, ordinary_f_vector, ordinary_flag_vector, ordinary_params
from .suites import SUITES, run_suite
from .toric_h import ordinary_h_vector, toric_h_multiplicial, toric_hg


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def render(obj: Any) -> Any:
    """Exact, JSON-ready form: ints and fractions become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, FlagVector):
        return render(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): render(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [render(v) for v in obj]
    if hasattr(obj, "coeffs"):
        return render(list(obj.coeffs))
    raise TypeError(f"cannot render {type(obj).__name__}")


def report(command: str, parameters: dict, results: dict, checks: dict | None = None, rows=None) -> dict:
    checks = checks or {}
    doc = {
        "command": command,
        "parameters": parameters,
        "results": results,
        "checks": checks,
        "status": "ok" if all(checks.values()) else "fail",
    }
    if rows is not None:
        doc["rows"] = rows
    return doc


def cmd_multiplex(args) -> dict:
    d, n = args.d, args.n
    if not n >= d >= 2:
        raise UsageError(f"multiplex needs n >= d >= 2, got d={d}, n={n}")
    results: dict[str, Any] = {
        "f": [multiplex_f(d, n, i) for i in range(d)],
        "g": multiplex_g(d, n),
        "h": multiplex_h(d, n),
    }
    closed = multiplex_flag_vector(d, n)
    if args.flags:
        results["flags"] = closed
    checks = {}
    if args.lattice or args.selfdual:
        L = build_lattice(multiplex_facets(d, n))
        if args.lattice:
            fv = flag_vector(L)
            checks["lattice_flags"] = fv == closed
            checks["lattice_f"] = list(fv.f_vector()) == results["f"]
            checks["eulerian"] = eulerian_check(L)
            checks["order_multiplicial"] = is_order_multiplicial(L)
            if checks["eulerian"]:
                checks["lattice_h"] = toric_hg(L, check=False)[0].h == results["h"]
        if args.selfdual:
            checks["self_dual"] = is_self_dual(L)
    return report("multiplex", {"d": d, "n": n}, results, checks)


def cmd_ordinary(args) -> dict:
    d, k, n = args.d, args.k, args.n
    try:
        ordinary_params(d, k, n)
    except BadParams as exc:
        raise UsageError(str(exc))
    if args.oracle and k not in (d, n):
        raise UsageError("--oracle needs k == n (cyclic) or k == d (multiplex)")
    f = ordinary_f_vector(d, k, n)
    f0 = ordinary_f0_vector(d, k, n)
    results: dict[str, Any] = {"f": f, "f0": {str(i): v for i, v in enumerate(f0, start=1)}}
    checks = {}
    fv = ordinary_flag_vector(d, k, n) if (args.flags or args.oracle) else None
    if args.h:
        h = ordinary_h_vector(d, k, n)
        results["h"] = h.h
        results["g"] = h.g().g
        checks["h_multiplicial_agrees"] = toric_h_multiplicial(d, f, f0) == h
    if args.flags:
        results["flags"] = fv
    if args.oracle:
        facets = cyclic_facets(d, n + 1) if k == n else multiplex_facets(d, n)
        L = build_lattice(facets)
        checks["oracle_flags"] = flag_vector(L) == fv
        checks["oracle_h"] = toric_hg(L)[0] == ordinary_h_vector(d, k, n)
    return report("ordinary", {"d": d, "k": k, "n": n}, results, checks)


def cmd_largefacet(args) -> dict:
    q = args.q
    if q < 5:
        raise UsageError(f"q must be at least 5, got {q}")
    trace = construct(q)
    results: dict[str, Any] = {
        "base": trace.base,
        "largest_facet": large_facet_size(q),
        "facets": trace.final.sorted_facets(),
    }
    if args.trace:
        results["steps"] = [
            {"vertex": s.vertex, "removed": [sorted(f) for f in s.removed], "added": [sorted(f) for f in s.added]}
            for s in trace.steps
        ]
    checks = {}
    if args.verify:
        rep = verify_large_facet(q)
        results["computed"] = rep["computed"]
        results["expected"] = rep["expected"]
        checks = dict(rep["checks"])
    return report("largefacet", {"q": q}, results, checks)


def cmd_reduce(args) -> dict:
    d = args.d
    if d < 2:
        raise UsageError("d must be at least 2")
    basis = ["1"] + [f"f_{i}" for i in range(d - 1)]
    rows = {encode_subset(S): list(row) for S, row in reduction_table(d).items()}
    return report("reduce", {"d": d}, {"basis": basis, "rows": rows})


def cmd_spanrank(args) -> dict:
    d = args.d
    try:
        ordinary_params(d, d, d)
    except BadParams as exc:
        raise UsageError(str(exc))
    flags, rows = [], []
    for k in range(d, d + args.kspan + 1):
        for n in range(k, k + args.nspan + 1):
            fv = ordinary_flag_vector(d, k, n)
            flags.append(fv)
            rows.append({"d": d, "k": k, "n": n, "f": list(fv.f_vector())})
    rank = span_rank(flags)
    results = {"rank": rank, "count": len(flags)}
    return report("spanrank", {"d": d, "kspan": args.kspan, "nspan": args.nspan}, results,
                  {"rank_equals_d": rank == d}, rows=rows)


def cmd_verify(args) -> dict:
    bounds = {"dmax": args.dmax, "nmax": args.nmax, "qmax": args.qmax}
    checks = run_suite(args.suite, **bounds)
    rows = [{"suite": c.suite, "params": c.params, "check": c.name, "ok": c.ok} for c in checks]
    failed = [r for r in rows if not r["ok"]]
    results = {"total": len(rows), "failed": len(failed), "failures": failed}
    return report("verify", {"suite": args.suite, **bounds}, results, {"all_passed": not failed}, rows=rows)


def to_csv(doc: dict) -> str:
    buf = io.StringIO()
    rows = doc.get("rows")
    if rows:
        fields = list(rows[0])
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, list) else v for k, v in row.items()})
        return buf.getvalue()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in _flatten(doc):
        writer.writerow([key, value])
    return buf.getvalue()


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and not any(isinstance(v, (dict, list)) for v in obj):
        yield prefix, " ".join(str(v) for v in obj)
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}.{i}")
    else:
        yield prefix, obj


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    parser = _Parser(prog="flagpoly", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("multiplex", parents=[common], help="closed forms for M^{d,n}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--flags", action="store_true", help="include the full flag vector")
    p.add_argument("--lattice", action="store_true", help="compare against the enumerated face lattice")
    p.add_argument("--selfdual", action="store_true")
    p.set_defaults(func=cmd_multiplex)

    p = sub.add_parser("ordinary", parents=[common], help="face and flag numbers of P^{d,k,n}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", action="store_true", help="include the toric h- and g-vectors")
    p.add_argument("--flags", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check on a lattice (k == n or k == d only)")
    p.set_defaults(func=cmd_ordinary)

    p = sub.add_parser("largefacet", parents=[common], help="4-polytope with a facet of ceil((2q+2)/3) vertices")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_largefacet)

    p = sub.add_parser("reduce", parents=[common], help="flag numbers as combinations of 1, f_0..f_{d-2}")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("spanrank", parents=[common], help="rank of the span of ordinary flag vectors")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kspan", type=int, default=6, help="k ranges over d..d+KSPAN")
    p.add_argument("--nspan", type=int, default=6, help="n ranges over k..k+NSPAN")
    p.set_defaults(func=cmd_spanrank)

    p = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--qmax", type=int, default=60)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except (UsageError, BadParams) as exc:
        print(f"flagpoly {args.command}: {exc}", file=sys.stderr)
        return 1
    doc = render(doc)
    text = to_csv(doc) if args.format == "csv" else json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if doc["status"] == "ok" else 2


if __name__ == "__main__":
    sys.exit(main())
