"""``bops`` command line: build orthogonal polynomial systems and check their structure.

Exit status: 0 success, 1 a check failed (or oracle mismatch), 2 invalid
input or a guard tripped, 3 the functional is not quasi-definite.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from bops import scalar
from bops.errors import BopsError, QuasiDefinitenessError
from bops.io import matrix_to_json, polyvector_to_json, poly_to_json, scalar_to_json
from bops.matrix import Matrix
from bops.moments import MOMENT_TABLE, SpecError, model_from_spec
from bops.moments.spec import default_backend
from bops.ops.checks import CHECK_KEYS, CheckReport, theorem_check_suite
from bops.ops.mops import build_mops, mops_determinant_oracle, three_term_monic
from bops.ops.orthonormal import build_orthonormal
from bops.poly import monomials_upto
from bops.scalar import FLOAT, RATIONAL, Tolerance

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_QUASI = 0, 1, 2, 3
CELL_WIDTH = 40
DEGREE_CAP = {RATIONAL: 6, FLOAT: 8}
ORACLE_CAP = 3
TABLE_OBJECTS = ("Q", "H", "C", "D", "A", "B", "moments")

log = logging.getLogger("bops")


class InputError(Exception):
    pass


def _setup_logging() -> None:
    name = os.environ.get("BOPS_LOG", "WARNING").strip().upper()
    level = int(name) if name.isdigit() else logging.getLevelName(name)
    if not isinstance(level, int):
        level = logging.WARNING
    for h in list(log.handlers):
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(level)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    w = common.add_argument_group("weight")
    w.add_argument("--family", choices=("product", "simplex", "freud"),
                   help="built-in family (use --spec for uvarov/christoffel)")
    w.add_argument("--spec", metavar="FILE", help="weight spec JSON file")
    w.add_argument("--w1", help="product: weight in x (legendre, chebyshev1, hermite, ...)")
    w.add_argument("--w2", help="product: weight in y (defaults to --w1)")
    w.add_argument("--alpha", help="simplex exponent of x*y (p/q or decimal)")
    w.add_argument("--gamma", help="simplex exponent of 1-x-y")
    for name in "abc":
        w.add_argument(f"--{name}", help="freud coefficient")
    r = common.add_argument_group("run")
    r.add_argument("--max-degree", type=int, default=4, help="highest degree N (default 4)")
    r.add_argument("--backend", choices=(RATIONAL, FLOAT))
    r.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    r.add_argument("--format", choices=("json", "text"), default="text")
    r.add_argument("--atol", type=float, default=scalar.DEFAULT_TOL.atol)
    r.add_argument("--rtol", type=float, default=scalar.DEFAULT_TOL.rtol)

    p = argparse.ArgumentParser(prog="bops", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="run the structural check suite")
    t = sub.add_parser("table", parents=[common], help="print Q, H, C, D, A, B or moment tables")
    t.add_argument("--object", required=True, help="one of " + ", ".join(TABLE_OBJECTS))
    sub.add_parser("oracle-diff", parents=[common], help="compare the determinant oracle with the Gram construction")
    sub.add_parser("moments", parents=[common], help="moments mu_{m,n} with m + n <= N")
    return p


def _weight_spec(args) -> dict:
    if args.spec:
        if args.family:
            raise InputError("give either --spec or --family, not both")
        try:
            with open(args.spec, encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read spec {args.spec}: {exc}") from exc
    if not args.family:
        raise InputError("a weight is required: --family or --spec")
    if args.family == "product":
        w1 = args.w1 or "legendre"
        return {"family": "product", "params": {"w1": w1, "w2": args.w2 or w1}}
    if args.family == "simplex":
        if args.alpha is None or args.gamma is None:
            raise InputError("simplex needs --alpha and --gamma")
        return {"family": "simplex", "params": {"alpha": args.alpha, "gamma": args.gamma}}
    missing = [k for k in "abc" if getattr(args, k) is None]
    if missing:
        raise InputError("freud needs " + ", ".join(f"--{k}" for k in missing))
    return {"family": "freud", "params": {k: getattr(args, k) for k in "abc"}}


def _config(args):
    spec = _weight_spec(args)
    backend = args.backend or spec.get("backend") or _spec_default_backend(spec)
    model = model_from_spec(spec, backend)
    if args.max_degree < 0:
        raise InputError("--max-degree must be non-negative")
    cap = DEGREE_CAP[model.backend]
    if args.max_degree > cap:
        raise InputError(f"--max-degree {args.max_degree} exceeds the {model.backend} cap of {cap}")
    if args.atol < 0 or args.rtol < 0:
        raise InputError("tolerances must be non-negative")
    return model, Tolerance(args.atol, args.rtol)


def _spec_default_backend(spec: dict) -> str:
    while spec.get("family") in ("uvarov", "christoffel") and isinstance(spec.get("base"), dict):
        spec = spec["base"]
    return default_backend(spec.get("family", ""))


# ---- rendering


def _cell(v) -> str:
    s = v if isinstance(v, str) else scalar.format_scalar(v)
    return s if len(s) <= CELL_WIDTH else s[: CELL_WIDTH - 3] + "..."


def _grid(rows: list[list[str]], header: list[str] | None = None) -> list[str]:
    body = ([header] if header else []) + rows
    if not body or not body[0]:
        return ["(empty)"]
    widths = [max(len(r[j]) for r in body) for j in range(len(body[0]))]
    return ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in body]


def _matrix_lines(m: Matrix) -> list[str]:
    return _grid([[_cell(v) for v in r] for r in m])


def _mono(e) -> str:
    i, j = e
    parts = [("x" if i == 1 else f"x^{i}") if i else "", ("y" if j == 1 else f"y^{j}") if j else ""]
    return "*".join(p for p in parts if p) or "1"


def _polyvector_lines(v) -> list[str]:
    cols = list(reversed(monomials_upto(v.degree)))
    rows = [[str(k)] + [_cell(p.coeff(*e)) for e in cols] for k, p in enumerate(v)]
    return _grid(rows, ["k"] + [_mono(e) for e in cols])


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---- commands


def _check_text(report: CheckReport) -> str:
    lines = [f"weight: {json.dumps(report.weight, sort_keys=True)}", f"backend: {report.backend}", ""]
    header = ["n"] + list(CHECK_KEYS) + ["max_violation"]
    rows = []
    for d in report.degrees:
        marks = ["-" if d.checks[k] is None else ("pass" if d.checks[k] else "FAIL") for k in CHECK_KEYS]
        rows.append([str(d.n)] + marks + [f"{d.max_violation:.3g}"])
    lines += _grid(rows, header)
    for d in report.degrees:
        lines += [f"warning (n={d.n}): {w}" for w in d.warnings]
    lines += [f"warning: {w}" for w in report.warnings]
    lines += ["", f"model reflexive: {'yes' if report.model_reflexive else 'no'}",
              f"recurrence rebuild reflexive: {'yes' if report.recurrences_reflexive else 'no'}",
              f"converse consistent: {'yes' if report.converse_consistent else 'no'}"]
    for n, k in report.failures():
        lines.append(f"failed: {k} at n={n}")
    lines.append("result: " + ("PASS" if report.passed else "FAIL"))
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    model, tol = _config(args)
    report = theorem_check_suite(model, args.max_degree, tol)
    _emit(_dump(report.to_json()) if args.format == "json" else _check_text(report), args)
    return EXIT_OK if report.passed else EXIT_FAIL


def _moment_rows(model, n_max: int):
    if model.kind != MOMENT_TABLE:
        raise InputError(f"{model.family} model with non-diagonal masses has no moment table")
    return [(m, d - m, model.moment(m, d - m)) for d in range(n_max + 1) for m in range(d, -1, -1)]


def cmd_moments(args) -> int:
    model, _ = _config(args)
    rows = _moment_rows(model, args.max_degree)
    if args.format == "json":
        out = {"weight": model.to_spec(), "backend": model.backend, "normalization": model.normalization,
               "moments": [{"m": m, "n": n, "value": scalar_to_json(v)} for m, n, v in rows]}
        _emit(_dump(out), args)
    else:
        lines = [f"normalization: {model.normalization}"]
        lines += _grid([[str(m), str(n), _cell(v)] for m, n, v in rows], ["m", "n", "mu"])
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_table(args) -> int:
    obj = args.object
    if obj not in TABLE_OBJECTS:
        raise InputError(f"unknown object {obj!r}; choose from {', '.join(TABLE_OBJECTS)}")
    if obj == "moments":
        return cmd_moments(args)
    model, tol = _config(args)
    n_max = args.max_degree
    need = n_max + 1 if obj in ("A", "B") else n_max
    cache = build_mops(model, need)
    blocks = []  # (title, json, text lines)
    if obj in ("A", "B"):
        system = build_orthonormal(cache, n_max, tol)
        store = system.A if obj == "A" else system.B
        for n in range(n_max + 1):
            for ax in ("x", "y"):
                m = store[(n, ax)]
                blocks.append((f"{obj}[n={n}, axis={ax}]", {"n": n, "axis": ax, "matrix": matrix_to_json(m)},
                               _matrix_lines(m)))
    else:
        for n in range(n_max + 1):
            if obj == "Q":
                v = cache.Q[n]
                blocks.append((f"Q[n={n}]", {"n": n, "value": polyvector_to_json(v)}, _polyvector_lines(v)))
            elif obj == "H":
                m = cache.H[n]
                blocks.append((f"H[n={n}]", {"n": n, "matrix": matrix_to_json(m)}, _matrix_lines(m)))
            else:
                for ax in ("x", "y"):
                    c, d = three_term_monic(cache, n, ax)
                    m = c if obj == "C" else d
                    blocks.append((f"{obj}[n={n}, axis={ax}]", {"n": n, "axis": ax, "matrix": matrix_to_json(m)},
                                   _matrix_lines(m)))
    if args.format == "json":
        out = {"weight": model.to_spec(), "backend": cache.backend if obj not in ("A", "B") else FLOAT,
               "object": obj, "blocks": [b[1] for b in blocks]}
        _emit(_dump(out), args)
    else:
        lines = []
        for title, _, body in blocks:
            lines += [title] + body + [""]
        _emit("\n".join(lines), args)
    return EXIT_OK


def cmd_oracle_diff(args) -> int:
    model, _ = _config(args)
    if model.backend != RATIONAL:
        raise InputError("oracle-diff needs the rational backend")
    if args.max_degree > ORACLE_CAP:
        raise InputError(f"oracle-diff is limited to --max-degree <= {ORACLE_CAP}")
    if model.kind != MOMENT_TABLE:
        raise InputError("the determinant oracle needs a moment-table model")
    cache = build_mops(model, args.max_degree)
    entries = []
    for n in range(args.max_degree + 1):
        for k in range(n + 1):
            diff = mops_determinant_oracle(model, n, k) - cache.Q[n][k]
            entries.append({"n": n, "k": k, "identical": diff.is_zero(), "diff": poly_to_json(diff)})
    same = all(e["identical"] for e in entries)
    if args.format == "json":
        _emit(_dump({"weight": model.to_spec(), "backend": RATIONAL, "max_degree": args.max_degree,
                     "identical": same, "entries": entries}), args)
    else:
        lines = [f"n={e['n']} k={e['k']}: {'identical' if e['identical'] else 'DIFFERENT'}" for e in entries]
        lines.append("result: " + ("identical" if same else "mismatch"))
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK if same else EXIT_FAIL


COMMANDS = {"check": cmd_check, "table": cmd_table, "oracle-diff": cmd_oracle_diff, "moments": cmd_moments}


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except QuasiDefinitenessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_QUASI
    except (InputError, SpecError, BopsError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
