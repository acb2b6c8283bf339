"""Command-line front end.

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or input
error, 3 a size guard was hit.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from fractions import Fraction
from typing import Any

import numpy as np

from specktral import codes, constructions, covering, fourier, formats, identities, krawtchouk
from specktral.limits import GuardError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def jsonable(x: Any) -> Any:
    """Exact numbers become decimal strings; floats keep 12 significant digits."""
    if isinstance(x, (bool, type(None), str)):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (float, np.floating)):
        return float(f"{float(x) + 0.0:.12g}")
    if isinstance(x, (complex, np.complexfloating)):
        return [jsonable(x.real), jsonable(x.imag)]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def make_report(command: list[str], items: list[dict]) -> dict:
    passed = sum(1 for it in items if it.get("pass", True))
    return {
        "command": command,
        "items": items,
        "summary": {"total": len(items), "passed": passed, "failed": len(items) - passed},
    }


def emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        body = {"command": report["command"], "items": jsonable(report["items"]), "summary": report["summary"]}
        json.dump(body, out, indent=2)
        out.write("\n")
        return
    rows = [jsonable(it) for it in report["items"]]
    keys: list[str] = []
    for r in rows:
        keys += [k for k in r if k not in keys]
    w = csv.DictWriter(out, fieldnames=keys, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, list) else v for k, v in r.items()})


def _read(path: str | None, stdin) -> str:
    if path is None or path == "-":
        return stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_code(path: str, stdin) -> codes.LinearCode | codes.AffineCode:
    return formats.read_code(_read(path, stdin))


def _linear(c) -> codes.LinearCode:
    return c.linear if isinstance(c, codes.AffineCode) else c


# -- subcommands ------------------------------------------------------------------------


def cmd_spectrum(args, stdin) -> list[dict]:
    c = _load_code(args.code, stdin)
    w = codes.weight_distribution(c)
    return [{"name": "spectrum", "code": str(c), "q": c.q, "n": c.n, "k": c.k, "counts": list(w)}]


def cmd_dual(args, stdin) -> list[dict] | str:
    c = _linear(_load_code(args.code, stdin))
    d = codes.dual(c)
    if args.emit_code:
        return formats.write_code(d)
    return [{"name": "dual", "code": str(c), "dual": str(d), "k": d.k, "generator": [list(r) for r in d.gen],
             "counts": list(codes.weight_distribution(d))}]


def cmd_alpha(args, stdin) -> list[dict]:
    c = _linear(_load_code(args.code, stdin))
    a = codes.alpha(c)
    return [{"name": "alpha", "code": str(c), "value": a}]


def _identity_items(c: codes.LinearCode) -> list[dict]:
    return [
        {"identity": r.identity, "code": r.code, "lhs": r.lhs, "rhs": r.rhs, "pass": r.passed}
        for r in identities.verify_all(c)
    ]


def cmd_verify(args, stdin) -> list[dict]:
    if args.all_subspaces:
        if args.q is None or args.n is None:
            raise UsageError("--all-subspaces needs --q and --n")
        items = []
        for c in codes.iter_subspaces(args.q, args.n):
            items += _identity_items(c)
        return items
    if args.code is None:
        raise UsageError("give --code FILE or --all-subspaces")
    return _identity_items(_linear(_load_code(args.code, stdin)))


def cmd_construct(args, stdin) -> str:
    if args.what == "M":
        if args.i is None:
            raise UsageError("construct M needs --i")
        return formats.write_code(constructions.build_M(args.n, args.i))
    if args.what == "C":
        return formats.write_code(constructions.build_C(args.n))
    return formats.write_function(constructions.build_g(args.n))


def _load_function(args, stdin) -> fourier.DenseFunction:
    if args.code is not None:
        return fourier.indicator(_load_code(args.code, stdin))
    return formats.read_function(_read(args.input, stdin))


def cmd_fourier(args, stdin) -> list[dict] | str:
    f = _load_function(args, stdin)
    if args.action == "transform":
        fh = fourier.fast_transform_q2(f) if f.q == 2 else fourier.transform(f)
        return formats.write_function(fh, tol=args.tol)
    if args.action == "support":
        s = fourier.support(f, args.tol)
        fh = fourier.transform(f)
        return [{"name": "support", "size": len(s), "support": sorted(s),
                 "hat_size": len(fourier.support(fh, args.tol)), "pass": True}]
    if args.action == "eigen":
        r = fourier.eigenfunction_check(f, args.tol)
        return [{"name": "eigen", "eigenvalue": r.eigenvalue, "residual": r.residual,
                 "pass": r.eigenvalue is not None}]
    r = fourier.uncertainty_report(f, args.tol)
    return [{"name": "uncertainty", "s1": r.support_f, "s2": r.support_hat, "product": r.product,
             "bound": r.bound, "pass": r.passed}]


def cmd_faces(args, stdin) -> list[dict]:
    c = codes.as_affine(_load_code(args.code, stdin))
    if args.action == "count":
        if args.t is None:
            raise UsageError("faces count needs --t")
        pts = list(codes.iter_codewords(c))
        hit = covering.count_intersecting_faces(pts, args.t, c.q, c.n)
        total = covering.total_faces(c.n, args.t, c.q)
        return [{"t": args.t, "total_faces": total, "intersecting": hit, "score": Fraction(hit, total)}]
    if args.free is not None:
        free_sets = [frozenset(int(a) for a in args.free.split(",") if a != "")]
    elif args.t is not None:
        free_sets = [frozenset(s) for s in itertools.combinations(range(c.n), args.t)]
    else:
        free_sets = [frozenset(s) for t in range(c.n + 1) for s in itertools.combinations(range(c.n), t)]
    items = []
    for free in free_sets:
        r = covering.check_prop2(c, free)
        items.append({"free": sorted(free), "t": len(free), "exponent": r.exponent,
                      "nonzero": sorted({x for x in r.counts if x}), "pass": r.passed})
    return items


def cmd_krawtchouk(args, stdin) -> list[dict]:
    table = krawtchouk.krawtchouk_matrix(args.n, args.q)
    return [{"k": k, **{f"m{m}": table[k][m] for m in range(args.n + 1)}} for k in range(args.n + 1)]


# -- parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="specktral", description="Weight spectra of linear and affine codes.")
    p.add_argument("--format", choices=["json", "csv"], default=None)
    p.add_argument("--tol", type=float, default=fourier.DEFAULT_TOL, help="tolerance for floating checks")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", help="weight distribution of a code")
    s.add_argument("--code", required=True)
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("dual", help="dual code")
    s.add_argument("--code", required=True)
    s.add_argument("--emit-code", action="store_true", help="print the dual as a code file")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("alpha", help="max coset weight fraction")
    s.add_argument("--code", required=True)
    s.set_defaults(func=cmd_alpha)

    s = sub.add_parser("verify", help="MacWilliams-type identity suite")
    s.add_argument("--code")
    s.add_argument("--all-subspaces", action="store_true")
    s.add_argument("--q", type=int)
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", help="emit M_{n,i}, C_n or g")
    s.add_argument("what", choices=["M", "C", "g"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--i", type=int)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("fourier", help="transform and support analysis of a function")
    s.add_argument("action", choices=["transform", "support", "eigen", "uncertainty"])
    s.add_argument("--input", help="function file (default: stdin)")
    s.add_argument("--code", help="use the indicator of this code instead")
    s.set_defaults(func=cmd_fourier)

    s = sub.add_parser("faces", help="code/face intersections")
    s.add_argument("action", choices=["count", "prop2"])
    s.add_argument("--code", required=True)
    s.add_argument("--t", type=int)
    s.add_argument("--free", help="comma-separated free positions (prop2)")
    s.set_defaults(func=cmd_faces)

    s = sub.add_parser("krawtchouk", help="table of P_k(m; n, q)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_krawtchouk, default_format="csv")
    return p


def run(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    fmt = args.format or getattr(args, "default_format", "json")
    try:
        result = args.func(args, stdin)
    except GuardError as exc:
        print(f"specktral: {exc}", file=stderr)
        return EXIT_GUARD
    except (UsageError, ValueError, OSError) as exc:
        print(f"specktral: {exc}", file=stderr)
        return EXIT_USAGE
    if isinstance(result, str):
        stdout.write(result)
        return EXIT_OK
    report = make_report(argv, result)
    emit(report, fmt, stdout)
    return EXIT_OK if report["summary"]["failed"] == 0 else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
