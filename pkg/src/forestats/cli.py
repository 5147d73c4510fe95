"""Command-line front end.

Exit codes: 0 success, 1 a verified identity failed (or no counterexample
was found), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Optional, Sequence

from . import codes, genfun, harness
from .forest import ForestError, parse_forest
from .labelings import (
    DomainError,
    ExhaustionBoundError,
    ExhaustionBounds,
    LabelingError,
    is_unsigned,
    labeling_class,
    parse_labeling,
    validate,
)
from .statistics import stat_record


class UsageError(Exception):
    pass


def _dump(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, sort_keys=True, indent=2)
    rows = obj if isinstance(obj, list) else [obj]
    if fmt == "csv":
        buf = io.StringIO()
        keys = sorted({k for r in rows for k in r})
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in rows:
        for k in sorted(r):
            v = r[k]
            lines.append(f"{k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}")
        if len(rows) > 1:
            lines.append("")
    return "\n".join(lines).rstrip("\n")


def _forest_and_labeling(args):
    forest = parse_forest(args.forest)
    w = validate(forest, parse_labeling(args.labeling))
    return forest, w


def cmd_stats(args) -> tuple[object, int]:
    forest, w = _forest_and_labeling(args)
    unsigned = is_unsigned(w)
    res = codes.sort_forest(forest, w, trace=False)
    out = {
        "forest": str(forest),
        "labeling": list(w),
        "class": labeling_class(w),
        "h": list(forest.h),
        **stat_record(forest, w).to_dict(),
        "a_code": list(codes.a_code(forest, w)),
        "b_code": list(res.bcode),
        "sor_B": res.sor_b,
        "sor": res.sor_b if unsigned else None,
        "sorted_labeling": list(res.w_sorted),
        "Cyc_B": list(codes.cyc_vertices(forest, w, "B")),
        "Cyc": list(codes.cyc_vertices(forest, w, "A")) if unsigned else None,
        "m_code": list(codes.m_code(forest, w)) if unsigned else None,
        "m_code_signed": list(codes.m_code_signed(forest, w)),
    }
    return out, 0


_FORWARD = {"a": codes.phi, "b": codes.psi, "m": codes.theta}
_INVERSE = {"a": codes.phi_inv, "b": codes.psi_inv, "m": codes.theta_inv}


def cmd_code(args) -> tuple[object, int]:
    forest = parse_forest(args.forest)
    kind = args.kind
    if args.code is not None:
        if kind not in _INVERSE:
            raise UsageError(f"code kind {kind!r} has no inverse")
        if args.natural is None:
            raise UsageError("--code needs --natural")
        w_nat = validate(forest, parse_labeling(args.natural))
        code = parse_labeling(args.code)
        w = _INVERSE[kind](forest, w_nat, code)
        return {"forest": str(forest), "kind": kind, "natural": list(w_nat), "code": list(code), "labeling": list(w)}, 0
    if args.labeling is None:
        raise UsageError("code needs --labeling, or --natural with --code")
    forest, w = _forest_and_labeling(args)
    if kind == "m-signed":
        return {"forest": str(forest), "kind": kind, "labeling": list(w), "code": list(codes.m_code_signed(forest, w))}, 0
    w_nat, code = _FORWARD[kind](forest, w)
    return {"forest": str(forest), "kind": kind, "labeling": list(w), "code": list(code), "natural": list(w_nat)}, 0


def cmd_sort_trace(args) -> tuple[object, int]:
    forest, w = _forest_and_labeling(args)
    res = codes.sort_forest(forest, w)
    if args.format == "json":
        return {
            "forest": str(forest),
            "labeling": list(w),
            "sor_B": res.sor_b,
            "b_code": list(res.bcode),
            "sorted_labeling": list(res.w_sorted),
            "steps": [s.to_dict() for s in res.trace],
        }, 0
    return [s.to_dict() for s in res.trace], 0


def cmd_distribution(args) -> tuple[object, int]:
    forest = parse_forest(args.forest)
    bounds = _bounds(args)
    if args.pair:
        if args.pair not in genfun.PAIRS:
            raise UsageError(f"unknown pair {args.pair!r}; known: {sorted(genfun.PAIRS)}")
        poly = genfun.pair_distribution(forest, args.pair, bounds)
    else:
        if not args.stat:
            raise UsageError("distribution needs --pair or --stat")
        poly = genfun.distribution(forest, args.cls, args.stat, args.set_stat, args.with_p, bounds)
    return _poly_out(forest, poly, args.format), 0


def cmd_formula(args) -> tuple[object, int]:
    forest = parse_forest(args.forest)
    poly = genfun.product_formula(forest, args.family)
    return _poly_out(forest, poly, args.format), 0


def _poly_out(forest, poly, fmt):
    if fmt == "json":
        return {"forest": str(forest), "terms": poly.to_json(), "text": poly.to_text()}
    return {"forest": str(forest), "polynomial": poly.to_text()}


def _bounds(args) -> ExhaustionBounds:
    b = ExhaustionBounds(
        unsigned=args.unsigned_bound if args.unsigned_bound is not None else ExhaustionBounds.unsigned,
        signed=args.signed_bound if args.signed_bound is not None else ExhaustionBounds.signed,
    )
    if b.unsigned > 8 or b.signed > 6:
        print(
            f"warning: exhaustion bounds unsigned={b.unsigned}, signed={b.signed} "
            "enumerate n! (times 2^n) labelings per forest; this may run for a long time",
            file=sys.stderr,
        )
    return b


def cmd_verify(args) -> tuple[object, int]:
    ctx = harness.Context(bounds=_bounds(args))
    if args.max_n > ctx.bounds.unsigned:
        raise UsageError(f"--max-n {args.max_n} exceeds the unsigned exhaustion bound {ctx.bounds.unsigned}")
    reports = harness.verify(args.max_n, args.cls_list, args.identity, ctx)
    failed = sum(r.status == "failed" for r in reports)
    if args.format == "text":
        lines = [f"{r.status:9s} {r.identity:22s} forest={r.forest}" + (f"  witness={json.dumps(r.witness)}" if r.witness else "") for r in reports]
        lines.append(f"{len(reports)} reports, {failed} failed")
        return "\n".join(lines), 1 if failed else 0
    return [r.to_dict(args.timing) for r in reports], 1 if failed else 0


def cmd_counterexample(args) -> tuple[object, int]:
    report = harness.counterexample(args.target, args.max_n, args.paths_only, _bounds(args))
    return report.to_dict(args.timing), 0 if report.status == "counterexample_found" else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seedless", action="store_true", help="no randomness is used anywhere; accepted for compatibility")
    common.add_argument("--unsigned-bound", type=int, default=None, help="largest n enumerated for unsigned labelings (default 7)")
    common.add_argument("--signed-bound", type=int, default=None, help="largest n enumerated for signed labelings (default 5)")

    parser = argparse.ArgumentParser(prog="forestats", description="Statistics, codes and identities for labeled plane forests.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="all statistics and codes of one labeled forest")
    p.add_argument("--forest", required=True)
    p.add_argument("--labeling", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("code", parents=[common], help="A-, B- or M-code and the matching bijection")
    p.add_argument("--forest", required=True)
    p.add_argument("--labeling")
    p.add_argument("--kind", choices=("a", "b", "m", "m-signed"), default="a")
    p.add_argument("--natural", help="natural labeling, for the inverse direction")
    p.add_argument("--code", help="code sequence, for the inverse direction")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("sort-trace", parents=[common], help="step-by-step forest selection sort")
    p.add_argument("--forest", required=True)
    p.add_argument("--labeling", required=True)
    p.set_defaults(func=cmd_sort_trace)

    p = sub.add_parser("distribution", parents=[common], help="generating polynomial by enumeration")
    p.add_argument("--forest", required=True)
    p.add_argument("--pair", help=f"named pair: {', '.join(sorted(genfun.PAIRS))}")
    p.add_argument("--class", dest="cls", choices=("unsigned", "signed", "even-signed", "even_signed"), default="unsigned")
    p.add_argument("--stat", choices=sorted(genfun.SCALAR_STATS))
    p.add_argument("--set", dest="set_stat", choices=sorted(genfun.SET_STATS))
    p.add_argument("--with-p", action="store_true", help="track negative labels with p")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("formula", parents=[common], help="closed-form product polynomial")
    p.add_argument("--forest", required=True)
    p.add_argument("--family", required=True, choices=genfun.FAMILIES)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", parents=[common], help="check every identity on all forests up to --max-n")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--class", dest="cls_list", action="append", choices=("unsigned", "signed", "even-signed", "even_signed"))
    p.add_argument("--identity", action="append", choices=sorted(harness.IDENTITIES))
    p.add_argument("--timing", action="store_true", help="include per-report seconds (makes output nondeterministic)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", parents=[common], help="search for the negative results")
    p.add_argument("--target", required=True, choices=harness.TARGETS)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--paths-only", action="store_true")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_counterexample)
    return parser


_NEGATIVE_LIST = re.compile(r"-\d[\d,\s-]*")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--labeling -1,2`` into ``--labeling=-1,2`` so argparse does not
    mistake a leading minus sign for an option."""
    out: list[str] = []
    for tok in argv:
        if out and _NEGATIVE_LIST.fullmatch(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else argv))
    try:
        out, code = args.func(args)
    except (ForestError, LabelingError, DomainError, codes.CodeError, ExhaustionBoundError, UsageError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out if isinstance(out, str) else _dump(out, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
