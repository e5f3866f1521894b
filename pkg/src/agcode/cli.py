"""Command-line front end (``agcode``).

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence


from . import codes, derived, oracle
from . import io as agio
from .curve import CurveInfo, find_mu
from .errors import AGCodeError, ConsistencyError, TooLarge
from .field import make_field
from .semigroup import build as build_semigroup
from .verify import verify_curve

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"range must look like A..B, got {text!r}") from None
    if b < a:
        raise UsageError(f"empty range {text}")
    return a, b


def parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _rs(args, curve: CurveInfo) -> list[int]:
    if args.r is not None and args.r_range is not None:
        raise UsageError("give either --r or --r-range")
    if args.r is not None:
        lo = hi = args.r
    elif args.r_range is not None:
        lo, hi = parse_range(args.r_range)
    else:
        raise UsageError("--r or --r-range is required")
    if lo < -1 or hi > 2 * curve.n:
        raise UsageError(f"r must lie in [-1, {2 * curve.n}]")
    return list(range(lo, hi + 1))


def _ls(args) -> list[int]:
    return parse_ints(args.ghw) if args.ghw else []


# -- rendering --

def render_records(records: list[dict], fmt: str) -> str:
    """Flat records as JSON, CSV or an aligned text table."""
    if fmt == "json":
        return json.dumps(records if len(records) != 1 else records[0], indent=2)
    cols = list(records[0]) if records else []
    cells = [[_cell(rec.get(c)) for c in cols] for rec in records]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        w.writerows(cells)
        return buf.getvalue().rstrip("\n")
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def emit(text: str, out: str | None) -> None:
    if out:
        agio.write_atomic(Path(out), text + "\n")
    else:
        print(text)


# -- commands --

def cmd_field_info(args) -> int:
    F = make_field(args.p, args.s)
    if args.format == "json":
        data = {"p": F.p, "s": F.s, "order": F.order, "modulus": list(F.modulus),
                "primitive": F.primitive}
        if F.order <= 256:
            data["elements"] = [{"enc": a, "coeffs": list(F.coeffs(a)),
                                 "display": F.element(a).display()} for a in F.elements()]
        emit(json.dumps(data, indent=2), args.out)
        return EXIT_OK
    rows = [{"enc": a, "coeffs": list(F.coeffs(a)), "display": F.element(a).display(),
             "inverse": F.inv(a) if a else None} for a in F.elements()]
    emit(render_records(rows, args.format), args.out)
    return EXIT_OK


def cmd_curve_validate(args) -> int:
    curve = agio.load_curve(args.curve)
    emit(json.dumps(agio.curve_info_dict(curve), indent=2), args.out)
    return EXIT_OK


def cmd_curve_scan_mu(args) -> int:
    F = make_field(args.p, args.s)
    emit(json.dumps({"p": F.p, "s": F.s, "q": args.q, "mu": find_mu(F, args.q)}), args.out)
    return EXIT_OK


def _oracle_values(curve: CurveInfo, r: int, exact_d: bool, ls: Sequence[int]) -> dict:
    code = codes.build_code(curve, r).code
    out: dict = {}
    if exact_d and code.k:
        out["d"] = oracle.min_distance_oracle(code)
    ghw = {str(l): oracle.exact_ghw(code, l) for l in ls if 1 <= l <= code.k}
    if ghw:
        out["ghw"] = ghw
    return out


def cmd_code_table(args) -> int:
    curve = agio.load_curve(args.curve)
    ls = _ls(args) or [2]
    rows = []
    for r in _rs(args, curve):
        rep = codes.param_report(curve, r, ls)
        row = {"r": r, "N": rep.n, "k": rep.k, "d": rep.d.render() if rep.d else None}
        for l in ls:
            b = rep.ghw.get(l)
            row[f"d{l}"] = b.render() if b else None
        if args.format != "table":
            row["d_source"] = rep.d.source if rep.d else None
            for l in ls:
                b = rep.ghw.get(l)
                row[f"d{l}_source"] = b.source if b else None
        if args.oracle:
            orc = _oracle_values(curve, r, True, ls)
            row["d*"] = orc.get("d")
            for l in ls:
                row[f"d{l}*"] = orc.get("ghw", {}).get(str(l))
        rows.append(row)
    emit(render_records(rows, args.format), args.out)
    return EXIT_OK


def cmd_code_params(args) -> int:
    curve = agio.load_curve(args.curve)
    ls = _ls(args)
    out = []
    for r in _rs(args, curve):
        rep = codes.param_report(curve, r, ls or (2,))
        if args.oracle or args.exact_d or ls:
            rep.oracle = _oracle_values(curve, r, args.oracle or args.exact_d,
                                        ls or ([2] if args.oracle else []))
        out.append({"r": r, **rep.to_dict()})
    emit(json.dumps(out[0] if len(out) == 1 else out, indent=2), args.out)
    return EXIT_OK


def cmd_code_export(args) -> int:
    curve = agio.load_curve(args.curve)
    if args.r is None:
        raise UsageError("--r is required")
    if not args.out:
        raise UsageError("--out is required")
    fmt = "json" if args.format == "json" else "csv"
    paths = agio.export_code(codes.build_code(curve, args.r), args.out, fmt)
    print(json.dumps({"written": [str(p) for p in paths]}))
    return EXIT_OK


def cmd_code_verify(args) -> int:
    curve = agio.load_curve(args.curve)
    rep = verify_curve(curve, seed=args.seed)
    data = rep.to_dict()
    if args.format == "json":
        text = json.dumps(data, indent=2)
    else:
        text = "\n".join([f"{'PASS' if rep.passed else 'FAIL'}: {len(rep.checks)} checks, "
                          f"{len(rep.failures)} failures"]
                         + [f"  {c.name}: {c.detail}" for c in rep.failures])
    emit(text, args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_quantum(args) -> int:
    curve = agio.load_curve(args.curve)
    qp = derived.quantum_from_nested(curve, args.a, args.b)
    data = qp.to_dict()
    if args.oracle:
        data["d_oracle"] = derived.quantum_distance_oracle(curve, args.a, args.b)
    emit(render_records([data], args.format), args.out)
    return EXIT_OK


def cmd_convolutional(args) -> int:
    curve = agio.load_curve(args.curve)
    if args.search:
        hits = derived.search_convolutional(curve, k=args.k, gamma=args.gamma, df=args.df)
        rows = [{"r": r, "a": a, **derived.convolutional_params(curve, r, a).to_dict()}
                for r, a in hits]
        emit(json.dumps(rows, indent=2) if args.format == "json"
             else render_records(rows, args.format), args.out)
        return EXIT_OK
    if args.r is None or args.a is None:
        raise UsageError("--r and --a are required (or use --search)")
    cp = derived.convolutional_params(curve, args.r, args.a)
    emit(render_records([cp.to_dict()], args.format), args.out)
    return EXIT_OK


def cmd_lrc_build(args) -> int:
    curve = agio.load_curve(args.curve)
    lrc = derived.lrc_build(curve, args.l)
    data = lrc.to_dict()
    if args.oracle:
        data["d_oracle"] = oracle.min_distance_oracle(lrc.code)
    emit(render_records([data], args.format), args.out)
    return EXIT_OK


def cmd_lrc_recover(args) -> int:
    curve = agio.load_curve(args.curve)
    lrc = derived.lrc_build(curve, args.l)
    word: list[int | None] = []
    for tok in args.word.split(","):
        tok = tok.strip()
        word.append(None if tok in ("?", "_") else int(tok))
    value = derived.lrc_recover(lrc, word, args.erased)
    emit(json.dumps({"erased": args.erased, "value": value.enc,
                     "recovery_set": lrc.recovery_set(args.erased)}), args.out)
    return EXIT_OK


def cmd_semigroup(args) -> int:
    if args.curve:
        curve = agio.load_curve(args.curve)
        q, m = curve.q, curve.m
    elif args.q is not None and args.m is not None:
        q, m = args.q, args.m
    else:
        raise UsageError("give --curve or both --q and --m")
    S = build_semigroup(q, m)
    lo, hi = parse_range(args.range) if args.range else (0, 2 * S.conductor + q + m)
    if lo < 0 or hi > S.bound:
        raise UsageError(f"range must lie in [0, {S.bound}]")
    fr = {str(x): S.feng_rao(x) for x in range(lo, hi + 1) if S.contains(x)}
    data = {"q": q, "m": m, "genus": S.genus, "conductor": S.conductor, "gaps": S.gaps,
            "feng_rao": fr}
    emit(json.dumps(data, indent=2), args.out)
    return EXIT_OK


# -- parser --

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"),
                        help="output format (default depends on the command)")
    common.add_argument("--out", help="write output to this path instead of stdout")
    curve_arg = argparse.ArgumentParser(add_help=False)
    curve_arg.add_argument("--curve", required=True,
                           help="curve JSON file or bundled name (e.g. gf4-q2-m3)")
    rsel = argparse.ArgumentParser(add_help=False)
    rsel.add_argument("--r", type=int)
    rsel.add_argument("--r-range", help="inclusive range A..B")

    parser = argparse.ArgumentParser(prog="agcode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", parents=[common], help="describe GF(p^s)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.set_defaults(func=cmd_field_info)

    curve = sub.add_parser("curve", help="curve utilities").add_subparsers(dest="action",
                                                                         required=True)
    p = curve.add_parser("validate", parents=[common, curve_arg])
    p.set_defaults(func=cmd_curve_validate)
    p = curve.add_parser("scan-mu", parents=[common], help="list mu for which T^q + mu*T splits")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_curve_scan_mu)

    code = sub.add_parser("code", help="one-point codes").add_subparsers(dest="action",
                                                                      required=True)
    p = code.add_parser("table", parents=[common, curve_arg, rsel])
    p.add_argument("--ghw", help="comma-separated l values (default 2)")
    p.add_argument("--oracle", action="store_true", help="append brute-force columns")
    p.set_defaults(func=cmd_code_table, default_format="table")
    p = code.add_parser("params", parents=[common, curve_arg, rsel])
    p.add_argument("--ghw", help="comma-separated l values; adds bounds and oracle values")
    p.add_argument("--exact-d", action="store_true", help="oracle minimum distance")
    p.add_argument("--oracle", action="store_true", help="oracle d and d_2")
    p.set_defaults(func=cmd_code_params)
    p = code.add_parser("export", parents=[common, curve_arg])
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_code_export, default_format="csv")
    p = code.add_parser("verify", parents=[common, curve_arg])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_code_verify, default_format="table")

    p = sub.add_parser("quantum", parents=[common, curve_arg], help="CSS code from C_a < C_b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_quantum)

    p = sub.add_parser("convolutional", parents=[common, curve_arg],
                       help="unit-memory convolutional code parameters")
    p.add_argument("--r", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--search", action="store_true", help="list (r, a) matching --k/--gamma/--df")
    p.add_argument("--k", type=int)
    p.add_argument("--gamma", type=int)
    p.add_argument("--df", type=int)
    p.set_defaults(func=cmd_convolutional)

    lrc = sub.add_parser("lrc", help="locally recoverable codes").add_subparsers(dest="action",
                                                                              required=True)
    p = lrc.add_parser("build", parents=[common, curve_arg])
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_lrc_build)
    p = lrc.add_parser("recover", parents=[common, curve_arg])
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--word", required=True, help="comma-separated encodings; ? marks the erasure")
    p.add_argument("--erased", type=int, required=True)
    p.set_defaults(func=cmd_lrc_recover)

    p = sub.add_parser("semigroup", parents=[common], help="gaps and Feng-Rao distances")
    p.add_argument("--curve")
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--range", help="inclusive range A..B of Feng-Rao arguments")
    p.set_defaults(func=cmd_semigroup)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "json")
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ConsistencyError as exc:
        print(f"verification failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AGCodeError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
