"""Command-line front end.

Exit status: 0 on success or PASS, 1 on usage or domain errors, 2 when a
verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .covering import branched_cover_params, orientation_counts
from .diagram import DunwoodyParams, build_diagram, dumps_diagram, is_admissible
from .errors import AdmissibilityError, AmbiguousShiftError, DomainError, RecurrenceError
from .homology import first_homology
from .oracle import alexander_torus, fox_homology_order
from .presentation import presentation_of
from .torusknot import KnotCode, torus_knot_code, torus_knot_trace
from .verify import check_torus_cover, torus_pairs

EXIT_OK, EXIT_ERROR, EXIT_FAIL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _params(args):
    return DunwoodyParams(args.a, args.b, args.c, args.n, args.r, args.s)


def cmd_diagram(args, out):
    diagram = build_diagram(_params(args))
    if args.dump_diagram:
        print(dumps_diagram(diagram), file=out)
        return EXIT_OK
    adm = is_admissible(diagram)
    families = Counter(arc.family for arc in diagram.arcs)
    summary = {
        "params": list(diagram.params.as_tuple()),
        "d": diagram.params.d,
        "circles": len(diagram.circles),
        "arcs": {f: families.get(f, 0) for f in "ABC"},
        "extraCurves": len(diagram.extra_curves),
        "curves": adm.curves.count,
        "admissible": adm.admissible,
    }
    if args.json:
        print(_dumps(summary), file=out)
    else:
        arcs = ", ".join(f"{f}={n}" for f, n in summary["arcs"].items())
        print(f"D{diagram.params}: d={summary['d']}, {summary['circles']} circles, "
              f"arcs {arcs}, extra curves {summary['extraCurves']}", file=out)
        print(f"traced curves: {adm.curves.count} "
              f"({'admissible' if adm else 'not admissible'})", file=out)
    return EXIT_OK


def cmd_admissible(args, out):
    params = _params(args)
    adm = is_admissible(params)
    if args.json:
        print(_dumps({"params": list(params.as_tuple()), "admissible": adm.admissible,
                      "curves": adm.curves.count, "connected": adm.connected}), file=out)
    else:
        word = "admissible" if adm else "not admissible"
        extra = "" if adm.connected else ", complement disconnected"
        print(f"D{params}: {word} ({adm.curves.count} curves, n={params.n}{extra})", file=out)
    return EXIT_OK


def cmd_presentation(args, out):
    pres = presentation_of(_params(args))
    print(pres.to_json() if args.json else str(pres), file=out)
    return EXIT_OK


def cmd_homology(args, out):
    hom = first_homology(_params(args))
    print(_dumps(hom.to_dict()) if args.json else str(hom), file=out)
    return EXIT_OK


def cmd_torus_code(args, out):
    code, z = torus_knot_code(args.k, args.h)
    if args.json or args.trace:
        doc = {"k": args.k, "h": args.h, "code": list(code.as_tuple()), "z": z}
        if args.trace:
            doc["steps"] = [s.to_dict() for s in torus_knot_trace(args.k, args.h)]
        if not args.json:
            print(code, file=out)
        print(_dumps(doc), file=out)
    else:
        print(code, file=out)
    return EXIT_OK


def cmd_cover(args, out):
    code = KnotCode(args.a, args.b, args.c, args.r)
    params = branched_cover_params(code, args.n, args.s)
    p, q = orientation_counts(code) if code.d else (None, None)
    hom = first_homology(params)
    doc = {"params": list(params.as_tuple()), "p": p, "q": q, "s": params.s,
           "homology": hom.to_dict()}
    if args.json:
        print(_dumps(doc), file=out)
    else:
        print(f"{code}: p={p} q={q} s={params.s}", file=out)
        print(f"M{params}: H1 = {hom}", file=out)
    return EXIT_OK


def cmd_oracle(args, out):
    delta = alexander_torus(args.k, args.h)
    order = fox_homology_order(delta, args.n)
    if args.json:
        print(_dumps({"delta": list(delta.coeffs), "order": order}), file=out)
    else:
        print(f"Delta(t) = {delta}", file=out)
        print(f"order = {order}" + (" (infinite H1)" if order == 0 else ""), file=out)
    return EXIT_OK


def _report(checks, args, out):
    if args.json:
        print(_dumps([c.to_dict() for c in checks]), file=out)
    else:
        for c in checks:
            print(c.line(), file=out)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def cmd_verify_torus(args, out):
    torus_knot_code(args.k, args.h)  # domain check before any work
    checks = [check_torus_cover(args.k, args.h, n) for n in range(2, args.nmax + 1)]
    return _report(checks, args, out)


def _cell(key):
    return check_torus_cover(*key)


def cmd_table(args, out):
    keys = sorted((k, h, n) for k, h in torus_pairs(args.kmax, args.hmax)
                  for n in range(2, args.nmax + 1))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            checks = list(pool.map(_cell, keys, chunksize=8))
    else:
        checks = [_cell(key) for key in keys]
    return _report(checks, args, out)


def build_parser():
    parser = _Parser(prog="dunwoody", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, func, ints, help_):
        p = sub.add_parser(name, help=help_)
        for arg in ints:
            p.add_argument(arg, type=int)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    six = ["a", "b", "c", "n", "r", "s"]
    p = add("diagram", cmd_diagram, six, "build D(a,b,c,n,r,s)")
    p.add_argument("--dump-diagram", action="store_true",
                   help="print the full diagram record as JSON")
    add("admissible", cmd_admissible, six, "admissibility of D(a,b,c,n,r,s)")
    add("presentation", cmd_presentation, six, "fundamental group presentation")
    add("homology", cmd_homology, six, "first homology of M(a,b,c,n,r,s)")
    p = add("torus-code", cmd_torus_code, ["k", "h"], "K(a,b,c,r) of the torus knot t(k,h)")
    p.add_argument("--trace", action="store_true", help="include every recurrence step")
    p = add("cover", cmd_cover, ["a", "b", "c", "r", "n"],
            "n-fold strongly-cyclic covering of K(a,b,c,r)")
    p.add_argument("--s", type=int, default=None,
                   help="covering shift (required for the trivial code K(0,0,0,0))")
    add("oracle", cmd_oracle, ["k", "h", "n"], "Fox order for t(k,h)")
    add("verify-torus", cmd_verify_torus, ["k", "h", "nmax"],
        "compare diagram homology with Fox's formula for n = 2..nmax")
    p = add("table", cmd_table, ["kmax", "hmax", "nmax"],
            "verify-torus over all coprime 1 < k < h <= hmax, k <= kmax")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return args.func(args, out)
    except (DomainError, AdmissibilityError, AmbiguousShiftError, RecurrenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
