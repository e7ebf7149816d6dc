"""Command line entry point: ``koszul-resultant <command> ...``.

Exit codes: 0 success, 2 input or parse error, 3 degenerate selection on a
complex that reports exactness (or a non-integral Koszul minor ratio).
"""

import argparse
import json
import sys

from .complexes import (
    cohomology,
    det_complex,
    det_degree,
    euler_characteristic,
    select_minors,
    verify_nilpotent,
)
from .errors import (
    DegenerateComplexError,
    ExactnessError,
    InputError,
    NilpotencyError,
    ResultantAnomaly,
)
from .graded import build_complex, min_exact_R, omega_basis, tower
from .oracle import cross_check
from .parser import parse_system
from .resultant import resultant
from .serialize import complex_from_json, complex_to_json, emit_matrix

EXIT_INPUT = 2
EXIT_ANOMALY = 3


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_map(path):
    doc = parse_system(_read(path))
    return doc, doc.to_map()


def cmd_resultant(args, out):
    doc, f = _load_map(args.file)
    res = resultant(f, method=args.method, R=args.R)
    if args.json:
        out.write(json.dumps(res.to_json()) + "\n")
        return 0
    out.write(f"system: {f.n}|{f.r} in variables {' '.join(doc.variables)}\n")
    out.write(f"method: {res.method}" + (f" (R={res.R_used})" if res.R_used is not None else "") + "\n")
    out.write(f"resultant (up to sign): {res.value}\n")
    out.write(f"expected degree in coefficients: {res.degree_expected}\n")
    if res.certificate is not None:
        out.write(f"complex not exact: {res.certificate.summary()}\n")
    return 0


def cmd_tower(args, out):
    max_R = args.max_R if args.max_R is not None else min_exact_R(args.n, args.r) + 3
    specs = tower(args.n, args.r, max_R)
    if args.json:
        rows = [{"R": s.R, "spaces": [list(t) for t in s.terms], "dims": list(s.dims), "chi": s.chi}
                for s in specs]
        out.write(json.dumps({"n": args.n, "r": args.r, "rows": rows}) + "\n")
        return 0
    cells = [(str(s.R), s.format_spaces(), s.format_dims(), str(s.chi)) for s in specs]
    head = ("R", "Spaces", "Dimensions", "χ")
    keep = [0, 1, 2, 3] if args.spaces else [0, 2, 3]
    widths = [max(len(c[k]) for c in cells + [head]) for k in range(4)]
    out.write(f"{args.n}|{args.r}\n")
    for row in [head] + cells:
        out.write("  ".join(row[k].ljust(widths[k]) for k in keep).rstrip() + "\n")
    return 0


def cmd_matrices(args, out):
    _, f = _load_map(args.file)
    R = args.R if args.R is not None else min_exact_R(f.n, f.r)
    c = build_complex(f, R)
    if args.format == "json":
        out.write(json.dumps(complex_to_json(c)) + "\n")
        return 0
    for i, d in enumerate(c.diffs, 1):
        if i > 1:
            out.write("\n")
        out.write(f"# d_{i} {d.rows}x{d.cols}\n")
        out.write(emit_matrix(d, "csv"))
    return 0


def cmd_basis(args, out):
    basis = omega_basis(args.n, args.p, args.q)
    for label in basis.labels():
        out.write(label + "\n")
    return 0


def _load_complex(path):
    return complex_from_json(_read(path), verify=False)


def cmd_complex_det(args, out):
    c = _load_complex(args.file)
    rep = verify_nilpotent(c)
    if not rep.ok:
        raise NilpotencyError(f"not a complex: nonzero composition at {rep.failure}", rep.failure)
    degree = det_degree(c.dims)
    try:
        sel = select_minors(c)
    except DegenerateComplexError as exc:
        coh = cohomology(c)
        if coh.exact:
            raise ResultantAnomaly(f"selection failed at d_{exc.step} on an exact complex") from exc
        record = {"det": "0", "exact": False, "h": list(coh.h), "degree": degree}
        out.write(json.dumps(record) + "\n" if args.json else f"DET = 0 (not exact: {coh.summary()})\n")
        return 0
    value = det_complex(c, sel)
    if args.json:
        out.write(json.dumps({"det": str(value), "selection": sel.one_based(), "degree": degree}) + "\n")
    else:
        out.write(f"DET = {value} (up to sign)\n")
        out.write(f"selection (1-based sigma_2..): {sel.one_based()}\n")
        out.write(f"degree in entries: {degree}\n")
    return 0


def cmd_complex_check(args, out):
    c = _load_complex(args.file)
    rep = verify_nilpotent(c)
    if not rep.ok:
        if args.json:
            out.write(json.dumps({"nilpotent": False, "failure": list(rep.failure)}) + "\n")
        else:
            i, row, col = rep.failure
            out.write(f"nilpotent: FAILED at d_{i}*d_{i + 1} entry ({row},{col}) = {rep.value}\n")
        return EXIT_INPUT
    coh = cohomology(c)
    if args.json:
        out.write(json.dumps({"nilpotent": True, "chi": coh.chi, "ranks": list(coh.ranks),
                              "h": list(coh.h), "exact": coh.exact}) + "\n")
    else:
        out.write(f"nilpotent: ok, {coh.summary()}\n")
    return 0


def cmd_cross_check(args, out):
    _, f = _load_map(args.file)
    rep = cross_check(f, tol=args.tol, seed=args.seed)
    if args.json:
        for rec in rep.records:
            out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"cross-check {f.n}|{f.r}\n")
        for rec in rep.records:
            if rec["kind"] == "method":
                what = rec["method"]
                detail = rec.get("value", rec.get("error"))
            elif rec["kind"] == "pair":
                what = " vs ".join(rec["pair"])
                detail = rec.get("status", "|a| == |b|")
            else:
                what = rec["kind"]
                detail = f"lambda = {rec['lambda']}"
            out.write(f"  {'ok  ' if rec['agree'] else 'FAIL'}  {what:<34} {detail}\n")
        out.write("all methods agree\n" if rep.ok else "DISAGREEMENT\n")
    return 0 if rep.ok else EXIT_ANOMALY


def build_parser():
    ap = argparse.ArgumentParser(
        prog="koszul-resultant",
        description="Exact resultants of homogeneous systems via Sylvester matrices and Koszul complexes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resultant", help="resultant of a square system file")
    p.add_argument("file")
    p.add_argument("--method", choices=["sylvester", "koszul"])
    p.add_argument("--R", type=int, help="x-degree of the rightmost Koszul space")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_resultant)

    k = sub.add_parser("koszul", help="Koszul complex tools").add_subparsers(dest="koszul_cmd", required=True)
    t = k.add_parser("tower", help="dimension and Euler characteristic table")
    t.add_argument("n", type=int)
    t.add_argument("r", type=int)
    t.add_argument("--max-R", dest="max_R", type=int)
    t.add_argument("--no-spaces", dest="spaces", action="store_false")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_tower)
    m = k.add_parser("matrices", help="differential matrices of a system")
    m.add_argument("file")
    m.add_argument("--R", type=int)
    m.add_argument("--format", choices=["json", "csv"], default="json")
    m.set_defaults(func=cmd_matrices)
    b = k.add_parser("basis", help="ordered basis of Omega(p, q)")
    b.add_argument("n", type=int)
    b.add_argument("p", type=int)
    b.add_argument("q", type=int)
    b.set_defaults(func=cmd_basis)

    c = sub.add_parser("complex", help="generic complex tools").add_subparsers(dest="complex_cmd", required=True)
    d = c.add_parser("det", help="determinant of a complex given as JSON")
    d.add_argument("file")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_complex_det)
    ch = c.add_parser("check", help="nilpotency and cohomology of a complex")
    ch.add_argument("file")
    ch.add_argument("--json", action="store_true")
    ch.set_defaults(func=cmd_complex_check)

    o = sub.add_parser("oracle", help="independent verification").add_subparsers(dest="oracle_cmd", required=True)
    x = o.add_parser("cross-check", help="compare every applicable method")
    x.add_argument("file")
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--tol", type=float, default=1e-9)
    x.add_argument("--json", action="store_true")
    x.set_defaults(func=cmd_cross_check)
    return ap


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, NilpotencyError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (ResultantAnomaly, ExactnessError) as exc:
        err.write(f"anomaly: {exc}\n")
        return EXIT_ANOMALY


if __name__ == "__main__":
    sys.exit(main())
