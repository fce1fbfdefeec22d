"""Command-line interface.

Exit codes: 0 on success (and on verifications that pass), 1 when a
verification ran and failed, 2 on unusable input.  JSON output carries
the schema tag "fusion-forge/1" and is byte-deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .rootdata import build_root_system, parse_lie_type
from .repring import char_poly, dynkin_index
from .fusion import (
    NonIntegralCoefficientError,
    enumerate_plevel,
    fusion_points,
    fusion_table,
)
from .affine import affine_fold, wall_witness
from .ideals import (
    SOURCES,
    standard_sweep,
    verify_equality_rank2,
    verify_inclusion,
)

SCHEMA = "fusion-forge/1"


def _parse_weight(text, rank):
    try:
        coords = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}; expected e.g. '3,0,1'")
    if len(coords) != rank:
        raise ValueError(f"weight {text!r} has {len(coords)} coordinates, need {rank}")
    return coords


def _complex_pair(z):
    return [z.real, z.imag]


def _fraction_str(f):
    return str(f)


def _witness_payload(wit):
    if wit is None:
        return None
    return {"root": list(wit.root), "n": wit.level_multiple}


def _report_payload(rep):
    gens = []
    for c in rep.checks:
        gens.append({
            "weight": list(c.weight),
            "fold": "zero" if c.fold_is_zero else "nonzero",
            "witness": _witness_payload(c.witness),
            "tabulated_root": list(c.expected_root) if c.expected_root else None,
            "pairing_matches": c.pairing_matches,
            "max_abs_value": c.max_abs_value,
            "passed": c.passed,
        })
    return {
        "source": rep.spec.source,
        "type": str(rep.spec.lie_type),
        "level": rep.spec.level,
        "parity_case": rep.spec.parity_case,
        "generators": gens,
        "passed": rep.passed,
        "elapsed_seconds": round(rep.elapsed, 6),
    }


def _emit(payload, args, plain_lines, csv_rows=None):
    if args.format == "json":
        payload = {"schema": SCHEMA, **payload}
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if csv_rows is None:
            writer.writerow(["key", "value"])
            for k in sorted(payload):
                writer.writerow([k, json.dumps(payload[k], sort_keys=True)])
        else:
            for row in csv_rows:
                writer.writerow(row)
        text = buf.getvalue()
    else:
        text = "\n".join(plain_lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_table(args):
    rs = build_root_system(parse_lie_type(args.type))
    ctx = enumerate_plevel(rs, args.level)
    try:
        table = fusion_table(ctx, args.method)
    except NonIntegralCoefficientError as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 1
    records = table.records()
    payload = {
        "command": "table",
        "type": args.type,
        "level": args.level,
        "method": args.method,
        "weights": [list(w) for w in ctx.weights],
        "entries": [
            {"lambda": list(l), "mu": list(m), "nu": list(n), "N": N}
            for l, m, n, N in records
        ],
    }
    csv_rows = [["lambda", "mu", "nu", "N"]]
    for l, m, n, N in records:
        csv_rows.append([
            " ".join(map(str, l)), " ".join(map(str, m)), " ".join(map(str, n)), N,
        ])
    plain = [f"fusion table {args.type} level {args.level} ({args.method}), "
             f"{len(ctx.weights)} weights"]
    for l, m, n, N in records:
        plain.append(f"  N[{l} {m} -> {n}] = {N}")
    _emit(payload, args, plain, csv_rows)
    return 0


def _cmd_beta(args):
    rs = build_root_system(parse_lie_type(args.type))
    lam = _parse_weight(args.weight, rs.rank)
    out = affine_fold(rs, lam, args.level)
    payload = {"command": "beta", "type": args.type, "level": args.level,
               "input": list(lam)}
    if out.is_zero:
        wit = wall_witness(rs, lam, args.level)
        payload.update({"result": "zero", "witness": _witness_payload(wit)})
        plain = [f"beta({lam}) = 0 at level {args.level}",
                 f"  wall witness: {wit.root} with multiple {wit.level_multiple}"]
    else:
        payload.update({"result": "nonzero", "sign": out.sign,
                        "weight": list(out.weight)})
        plain = [f"beta({lam}) = {'+' if out.sign > 0 else '-'}V{out.weight} "
                 f"at level {args.level}"]
    _emit(payload, args, plain)
    return 0


def _cmd_charpoly(args):
    rs = build_root_system(parse_lie_type(args.type))
    lam = _parse_weight(args.weight, rs.rank)
    poly = char_poly(rs, lam, dim_cap=args.dim_cap)
    monos = [{"exponents": list(e), "coeff": c} for e, c in sorted(poly.items())]
    payload = {"command": "charpoly", "type": args.type, "weight": list(lam),
               "monomials": monos}
    csv_rows = [["exponents", "coeff"]]
    for e, c in sorted(poly.items()):
        csv_rows.append([" ".join(map(str, e)), c])
    terms = " + ".join(
        f"{c}*x^{list(e)}" for e, c in sorted(poly.items())
    )
    _emit(payload, args, [f"chi_{list(lam)} = {terms}"], csv_rows)
    return 0


def _cmd_points(args):
    rs = build_root_system(parse_lie_type(args.type))
    ctx = enumerate_plevel(rs, args.level)
    pts = fusion_points(ctx)
    payload = {
        "command": "points", "type": args.type, "level": args.level,
        "points": [
            {"label": list(p.label),
             "coords": [_complex_pair(z) for z in p.coords]}
            for p in pts
        ],
    }
    csv_rows = [["label"] + [f"x{i+1}_{part}" for i in range(rs.rank)
                             for part in ("re", "im")]]
    for p in pts:
        row = [" ".join(map(str, p.label))]
        for z in p.coords:
            row.extend([repr(z.real), repr(z.imag)])
        csv_rows.append(row)
    plain = [f"{len(pts)} fusion points for {args.type} level {args.level}"]
    for p in pts:
        vals = ", ".join(f"{z:.6f}" for z in p.coords)
        plain.append(f"  sigma={p.label}: ({vals})")
    _emit(payload, args, plain, csv_rows)
    return 0


def _cmd_index(args):
    rs = build_root_system(parse_lie_type(args.type))
    payload = {"command": "index", "type": args.type,
               "dual_coxeter": rs.dual_coxeter}
    plain = [f"{args.type}: dual Coxeter number {rs.dual_coxeter}"]
    if args.weight:
        lam = _parse_weight(args.weight, rs.rank)
        idx = dynkin_index(rs, lam)
        payload.update({"weight": list(lam), "dynkin_index": _fraction_str(idx)})
        plain.append(f"  index of V{lam} = {idx}")
    else:
        rows = []
        for i in range(rs.rank):
            fw = tuple(1 if j == i else 0 for j in range(rs.rank))
            rows.append((fw, dynkin_index(rs, fw)))
        minimal = min(idx for _, idx in rows)
        payload.update({
            "fundamentals": [
                {"weight": list(fw), "dynkin_index": _fraction_str(idx)}
                for fw, idx in rows
            ],
            "minimal_index": _fraction_str(minimal),
            "minimizers": [list(fw) for fw, idx in rows if idx == minimal],
        })
        for fw, idx in rows:
            plain.append(f"  index of V{fw} = {idx}")
        plain.append(f"  minimal index {minimal}")
    _emit(payload, args, plain)
    return 0


def _cmd_verify(args):
    if not args.all and not (args.source and args.type and args.level):
        raise ValueError("verify needs --source/--type/--level, or --all")
    if args.all:
        reports = standard_sweep(
            lambda name: build_root_system(parse_lie_type(name)),
            levels=range(1, args.max_level + 1),
        )
    else:
        rs = build_root_system(parse_lie_type(args.type))
        reports = [verify_inclusion(rs, args.level, args.source,
                                    with_evaluation=args.evaluate)]
    passed = all(r.passed for r in reports)
    payload = {"command": "verify", "passed": passed,
               "reports": [_report_payload(r) for r in reports]}
    plain = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        plain.append(f"{status} {r.spec.source} {r.spec.lie_type} level {r.spec.level} "
                     f"({len(r.checks)} generators)")
    plain.append("all passed" if passed else "FAILURES PRESENT")
    _emit(payload, args, plain)
    return 0 if passed else 1


def _cmd_solve(args):
    rs = build_root_system(parse_lie_type(args.type))
    cmp = verify_equality_rank2(rs, args.level, args.source)
    payload = {
        "command": "solve", "type": args.type, "level": args.level,
        "source": args.source,
        "zeros": [[_complex_pair(z) for z in zero] for zero in cmp.zeros],
        "fusion_points": [[_complex_pair(z) for z in c] for c in cmp.point_coords],
        "matching": [list(m) for m in cmp.matching] if cmp.matching else None,
        "max_distance": cmp.max_distance if cmp.max_distance != float("inf") else None,
        "equal": cmp.equal,
        "diagnostics": cmp.diagnostics,
    }
    plain = [f"{len(cmp.zeros)} zeros vs {len(cmp.point_coords)} fusion points: "
             f"{'EQUAL' if cmp.equal else 'NOT EQUAL'}",
             f"  {cmp.diagnostics}"]
    _emit(payload, args, plain)
    return 0 if cmp.equal else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fusionforge",
        description="Fusion rings of simple Lie algebras and their ideal generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, level=True, weight=False):
        p.add_argument("--type", required=True, help="Lie type, e.g. B3")
        if level:
            p.add_argument("--level", type=int, required=True)
        if weight:
            p.add_argument("--weight", required=True,
                           help="comma-separated coordinates, e.g. 3,0,1")
        p.add_argument("--format", choices=("json", "csv", "plain"), default="json")
        p.add_argument("--output", help="write to this file instead of stdout")

    p = sub.add_parser("table", help="full fusion table")
    common(p)
    p.add_argument("--method", choices=("kacwalton", "verlinde", "both"),
                   default="kacwalton")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("beta", help="affine folding of one weight")
    common(p, weight=True)
    p.set_defaults(func=_cmd_beta)

    p = sub.add_parser("charpoly", help="character as a fundamental-character polynomial")
    common(p, level=False, weight=True)
    p.add_argument("--dim-cap", type=int, default=10**6)
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("points", help="fusion points of the level")
    common(p)
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser("index", help="Dynkin indices and the dual Coxeter number")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", help="comma-separated coordinates")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("verify", help="verify an ideal-generator family")
    p.add_argument("--source", choices=SOURCES)
    p.add_argument("--type")
    p.add_argument("--level", type=int)
    p.add_argument("--evaluate", action="store_true",
                   help="also evaluate character polynomials at the fusion points")
    p.add_argument("--all", action="store_true",
                   help="run the whole verification sweep")
    p.add_argument("--max-level", type=int, default=6)
    p.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", help="solve a rank <= 2 generator system outright")
    common(p)
    p.add_argument("--source", required=True, choices=SOURCES)
    p.set_defaults(func=_cmd_solve)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else 2
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OverflowError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
