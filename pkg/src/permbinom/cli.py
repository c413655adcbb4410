"""Command line front end.

Exit codes: 0 all verified / computed, 1 a mathematical cross-check
disagreed, 2 usage or configuration error. Big integers travel as decimal
strings in JSON output so downstream parsers never see overflow.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .characters import cubic_char, power_sum, quadratic_char
from .counts import build_count_report, masuda_zieve_bounds, refined_bounds_r3, report_to_dict
from .curves import compute_kappa, count_points_extension, pi_trace
from .errors import CrossCheckFailedError, DivisibilityViolationError, PermBinomError
from .fields import FieldSpec, make_field, parse_field
from .permtest import enumerate_perm_binomials

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


def _write_out(args, payload: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_bytes(payload.encode())
    else:
        sys.stdout.write(payload)


def _emit_json(args, obj) -> None:
    _write_out(args, json.dumps(obj, indent=2) + "\n")


def _field_spec(args) -> FieldSpec:
    p, k = parse_field(args.field)
    modulus = None
    if getattr(args, "modulus", None):
        modulus = [int(c) for c in args.modulus.split(",")]
    return make_field(p, k, modulus)


def _element(spec: FieldSpec, text: str):
    """Parse a CLI element: canonical encoding in [0, q), or the literal inv4."""
    if text == "inv4":
        return spec.element(4).inverse()
    enc = int(text)
    if not 0 <= enc < spec.q:
        raise ValueError(f"element encoding {enc} outside [0, {spec.q})")
    return spec.decode(enc)


def _cmd_enumerate(args) -> int:
    spec = _field_spec(args)
    a_values = [
        a.encode()
        for a in enumerate_perm_binomials(spec, args.n, args.r, method=args.method, force=args.force)
    ]
    if args.format == "json":
        _emit_json(args, {
            "q": spec.q, "p": spec.p, "k": spec.k, "n": args.n, "r": args.r,
            "method": args.method, "count": len(a_values), "a_values": a_values,
        })
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("q", "p", "k", "n", "r", "method", "a_enc"))
        for enc in a_values:
            writer.writerow((spec.q, spec.p, spec.k, args.n, args.r, args.method, enc))
        _write_out(args, buf.getvalue())
    else:
        lines = [f"q={spec.q} n={args.n} r={args.r} method={args.method} count={len(a_values)}"]
        lines.append("a: " + " ".join(str(enc) for enc in a_values))
        _write_out(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_count(args) -> int:
    p, k = parse_field(args.field)
    report = build_count_report(p, k, args.n, args.r, verify=args.verify, force=args.force)
    payload = report_to_dict(report)
    if args.format == "json":
        _emit_json(args, payload)
    else:
        _write_out(args, "".join(f"{key}: {value}\n" for key, value in payload.items()))
    if args.verify:
        if report.brute_count != report.closed_count or len(report.a_values) != report.closed_count:
            print(
                f"error: routes disagree: closed={report.closed_count} "
                f"criterion={len(report.a_values)} brute={report.brute_count}",
                file=sys.stderr,
            )
            return EXIT_MATH
    return EXIT_OK


def _cmd_bounds(args) -> int:
    p, k = parse_field(args.field)
    q = p**k
    mz_lo, mz_hi = masuda_zieve_bounds(q, args.r)
    cor_lo = cor_hi = None
    if args.r == 3:
        cor_lo, cor_hi = refined_bounds_r3(q)
    payload = {
        "q": q, "r": args.r,
        "mz_lower": str(mz_lo), "mz_upper": str(mz_hi),
        "cor_lower": cor_lo, "cor_upper": cor_hi,
    }
    if args.format == "json":
        _emit_json(args, payload)
    else:
        _write_out(args, "".join(f"{key}: {value}\n" for key, value in payload.items()))
    return EXIT_OK


def _cmd_kappa(args) -> int:
    rec = compute_kappa(args.p)
    payload = {"p": rec.p, "kappa": rec.kappa, "residue": rec.residue, "curve_count": rec.curve_count}
    if args.format == "json":
        _emit_json(args, payload)
    else:
        _write_out(args, f"kappa({rec.p}) = {rec.kappa} (residue {rec.residue}, |E| = {rec.curve_count})\n")
    return EXIT_OK


def _cmd_trace(args) -> int:
    value = pi_trace(args.p, args.j)
    if args.format == "json":
        _emit_json(args, {"p": args.p, "j": args.j, "s_j": str(value)})
    else:
        _write_out(args, f"s_{args.j}(pi_{args.p}) = {value}\n")
    return EXIT_OK


def _cmd_curve(args) -> int:
    spec = _field_spec(args)
    a4 = _element(spec, args.A)
    a6 = _element(spec, args.B)
    count = count_points_extension(spec, a4, a6, force=args.force)
    payload = {
        "q": spec.q, "p": spec.p, "k": spec.k,
        "a4": a4.encode(), "a6": a6.encode(),
        "count": count, "trace": spec.q + 1 - count,
    }
    if args.format == "json":
        _emit_json(args, payload)
    else:
        _write_out(args, f"|E(F_{spec.q})| = {count} for y^2 = x^3 + {a4!r} x + {a6!r} (trace {payload['trace']})\n")
    return EXIT_OK


def _cmd_char(args) -> int:
    spec = _field_spec(args)
    q = spec.q
    if args.x is not None:
        x = _element(spec, args.x)
        payload = {
            "q": q, "x": x.encode(),
            "quadratic": None if spec.p == 2 else quadratic_char(spec, x),
            "cubic": cubic_char(spec, x) if q % 3 == 1 else None,
        }
    elif args.power_sum is not None:
        total = power_sum(spec, args.power_sum, force=args.force)
        payload = {"q": q, "m": args.power_sum, "power_sum": total.encode()}
    else:
        quad = None
        if spec.p != 2:
            vals = [quadratic_char(spec, x) for x in spec.elements() if not x.is_zero]
            quad = {"1": vals.count(1), "-1": vals.count(-1), "zero": 1}
        cubic = None
        if q % 3 == 1:
            exps = [cubic_char(spec, x) for x in spec.elements() if not x.is_zero]
            cubic = {"0": exps.count(0), "1": exps.count(1), "2": exps.count(2), "zero": 1}
        payload = {"q": q, "quadratic_classes": quad, "cubic_classes": cubic}
    if args.format == "json":
        _emit_json(args, payload)
    else:
        _write_out(args, "".join(f"{key}: {value}\n" for key, value in payload.items()))
    return EXIT_OK


def _cmd_sharpness(args) -> int:
    from .sharpness import decimal_string, sharpness_probe  # local: pulls in mpmath

    probe = sharpness_probe(args.p, args.n, depth=args.depth, k_max=args.k_max)
    findings = [
        {
            "k": f.k,
            "deviation": f.deviation,
            "deviation_lo": decimal_string(f.deviation_lo),
            "deviation_hi": decimal_string(f.deviation_hi),
            "gcd_ok": f.gcd_ok,
        }
        for f in probe.findings
    ]
    if args.format == "json":
        _emit_json(args, {
            "p": probe.p, "n": probe.n, "kappa": probe.kappa, "theta": probe.theta,
            "depth": probe.depth,
            "convergents_two_pi": [[str(num), str(den)] for num, den in probe.convergents_two_pi],
            "convergents_pi": [[str(num), str(den)] for num, den in probe.convergents_pi],
            "findings": findings,
        })
    else:
        lines = [f"p={probe.p} n={probe.n} kappa={probe.kappa} theta={probe.theta}"]
        for f in findings:
            flag = "" if f["gcd_ok"] else "  [n shares a factor with (p^k-1)/3]"
            lines.append(f"k={f['k']}: d_k = {f['deviation']}{flag}")
        _write_out(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_selftest(args) -> int:
    from .selftest import AcceptanceSuite
    from .sweep import SweepResult, emit_report

    kwargs = {"jobs": args.jobs}
    if args.q_max is not None:
        kwargs.update(r2_q_max=args.q_max, r3_q_max=args.q_max)
    suite = AcceptanceSuite(**kwargs)
    names = args.only.split(",") if args.only else None
    results = suite.run(names)
    if args.format == "json":
        _emit_json(args, {
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail, "elapsed_ms": r.elapsed_ms}
                for r in results
            ],
            "passed": all(r.passed for r in results),
        })
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("name", "passed", "elapsed_ms", "detail"))
        for r in results:
            writer.writerow((r.name, r.passed, r.elapsed_ms, r.detail))
        _write_out(args, buf.getvalue())
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.elapsed_ms / 1000:.1f}s): {r.detail}"
            for r in results
        ]
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
        _write_out(args, "\n".join(lines) + "\n")
    if args.report:
        r2, r3 = suite.r2_sweep(), suite.r3_sweep()
        merged = SweepResult(
            cells=tuple(sorted(r2.cells + r3.cells, key=lambda c: (c["q"], c["n"], c["r"]))),
            failures=tuple(sorted(r2.failures + r3.failures)),
            elapsed_ms=r2.elapsed_ms + r3.elapsed_ms,
        )
        Path(args.report).write_bytes(emit_report(merged, args.report_format))
    return EXIT_OK if all(r.passed for r in results) else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permbinom",
        description="Enumerate, count and cross-validate permutation binomials x^n (x^((q-1)/r) + a).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "csv"), default="json")
    common.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")

    fieldy = argparse.ArgumentParser(add_help=False)
    fieldy.add_argument("--field", required=True, help="finite field, 'p' or 'p^k'")
    fieldy.add_argument("--modulus", help="irreducible modulus c0,c1,...,1 (constant first)")
    fieldy.add_argument("--force", action="store_true", help="override the enumeration size guard")

    p_enum = sub.add_parser("enumerate", parents=[common, fieldy], help="list admissible a values")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--r", type=int, choices=(2, 3), required=True)
    p_enum.add_argument("--method", choices=("criterion", "bruteforce", "wanlidl"), default="criterion")
    p_enum.set_defaults(handler=_cmd_enumerate)

    p_count = sub.add_parser("count", parents=[common], help="closed-form count with bounds")
    p_count.add_argument("--field", required=True, help="finite field, 'p' or 'p^k'")
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--r", type=int, choices=(2, 3), required=True)
    p_count.add_argument("--verify", action="store_true", help="add brute-force and criterion confirmation")
    p_count.add_argument("--force", action="store_true", help="override the enumeration size guard")
    p_count.set_defaults(handler=_cmd_count)

    p_bounds = sub.add_parser("bounds", parents=[common], help="Masuda-Zieve and refined count bounds")
    p_bounds.add_argument("--field", required=True, help="finite field, 'p' or 'p^k'")
    p_bounds.add_argument("--r", type=int, choices=(2, 3), required=True)
    p_bounds.set_defaults(handler=_cmd_bounds)

    p_kappa = sub.add_parser("kappa", parents=[common], help="Frobenius trace of y^2 = x^3 + 1/4 at p")
    p_kappa.add_argument("--p", type=int, required=True)
    p_kappa.set_defaults(handler=_cmd_kappa)

    p_trace = sub.add_parser("trace", parents=[common], help="trace s_j of the Frobenius power pi_p^j")
    p_trace.add_argument("--p", type=int, required=True)
    p_trace.add_argument("--j", type=int, required=True)
    p_trace.set_defaults(handler=_cmd_trace)

    p_curve = sub.add_parser("curve", parents=[common, fieldy], help="count points of y^2 = x^3 + A x + B")
    p_curve.add_argument("--A", required=True, help="element encoding, or inv4")
    p_curve.add_argument("--B", required=True, help="element encoding, or inv4")
    p_curve.set_defaults(handler=_cmd_curve)

    p_char = sub.add_parser("char", parents=[common, fieldy], help="character values, class counts, power sums")
    group = p_char.add_mutually_exclusive_group()
    group.add_argument("--x", help="element encoding to evaluate both characters at")
    group.add_argument("--power-sum", type=int, metavar="M", help="sum of x^M over the whole field")
    p_char.set_defaults(handler=_cmd_char)

    p_sharp = sub.add_parser("sharpness", parents=[common], help="probe extensions where d_k approaches +-2")
    p_sharp.add_argument("--p", type=int, required=True)
    p_sharp.add_argument("--n", type=int, required=True)
    p_sharp.add_argument("--depth", type=int, default=30, help="continued-fraction depth")
    p_sharp.add_argument("--k-max", type=int, default=10_000, help="largest extension degree probed")
    p_sharp.set_defaults(handler=_cmd_sharpness)

    # selftest defaults to text, so it gets its own --format rather than the
    # shared action (set_defaults on a shared parent action leaks everywhere)
    p_self = sub.add_parser("selftest", help="run the acceptance suite")
    p_self.add_argument("--format", choices=("json", "text", "csv"), default="text")
    p_self.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")
    p_self.add_argument("--jobs", type=int, default=1, help="worker processes for the sweeps")
    p_self.add_argument("--q-max", type=int, help="cap both sweeps at this q (default 343 / 400)")
    p_self.add_argument("--only", help="comma-separated subset of checks")
    p_self.add_argument("--report", metavar="PATH", help="also write the merged sweep report")
    p_self.add_argument("--report-format", choices=("json", "csv", "text"), default="json")
    p_self.set_defaults(handler=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (CrossCheckFailedError, DivisibilityViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (PermBinomError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
