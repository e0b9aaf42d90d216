"""Command-line surface: expansion, dissection, prediction, verification, census.

Every command is a reproducible batch job: identical requests produce
byte-identical reports (no timestamps, no environment echoes).  Output
formats are text (default), csv and json; ``--output`` redirects the
report to a file.  The exit status is 0 exactly when every verdict in
the report passed, 1 on a failed verdict, 2 on usage or domain errors.

``QSIGNS_PRECISION`` overrides the default expansion precision (2000)
used by ``verify`` and ``detect`` when ``--T`` is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from ._backend import backend_name
from .dissect import assemble, quintuple_components
from .products import EtaQuotientSpec, eta_quotient, quintuple_product
from .series import QSignsError
from .signs import (
    corpus,
    detect_pattern,
    pattern_catalog,
    predict_quotient_pattern,
    sign_census,
    vanishing_predicate,
    verify_pattern,
)

_SCHEMA_VERSION = 1

_VANISHING_SPEC = "1^7 2^-2 3^-1"
_VANISHING_HORIZON = 3000


def _default_precision() -> int:
    raw = os.environ.get("QSIGNS_PRECISION")
    if raw is None:
        return 2000
    try:
        value = int(raw)
    except ValueError:
        raise QSignsError(f"QSIGNS_PRECISION must be an integer, got {raw!r}")
    if value < 0:
        raise QSignsError(f"QSIGNS_PRECISION must be nonnegative, got {value}")
    return value


def _json_report(command: str, spec: str | None, parameters: dict, horizon: int | None,
                 payload: dict) -> str:
    doc = {
        "schema_version": _SCHEMA_VERSION,
        "command": command,
        "spec": spec,
        "parameters": parameters,
        "horizon": horizon,
    }
    doc.update(payload)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------------
# Command handlers: each returns (report_text, all_passed)
# ----------------------------------------------------------------------

def _cmd_expand(args) -> tuple[str, bool]:
    spec = EtaQuotientSpec.parse(args.spec)
    series = eta_quotient(spec, args.T)
    if args.format == "json":
        text = _json_report(
            "expand", str(spec), {"T": args.T}, args.T,
            {"coefficients": list(series.coefficients)},
        )
    elif args.format == "csv":
        lines = ["n,coefficient"]
        lines += [f"{n},{c}" for n, c in enumerate(series.coefficients)]
        text = "\n".join(lines) + "\n"
    else:
        lines = [f"{n}\t{c}" for n, c in enumerate(series.coefficients)]
        text = "\n".join(lines) + "\n"
    return text, True


def _cmd_dissect(args) -> tuple[str, bool]:
    expr = quintuple_components(args.M, args.j, args.m)
    target = quintuple_product(args.M, args.j, args.T)
    ok = assemble(expr, args.T) == target
    rows = [
        (c.r, c.sign_exp, c.offset, c.t1, c.t2, c.period1, c.period2)
        for c in expr.components
    ]
    params = {"M": args.M, "j": args.j, "m": args.m, "T": args.T}
    if args.format == "json":
        text = _json_report(
            "dissect", None, params, args.T,
            {
                "components": [
                    {
                        "r": r, "sign_exp": s, "offset": L,
                        "t1": t1, "t2": t2, "period1": p1, "period2": p2,
                    }
                    for r, s, L, t1, t2, p1, p2 in rows
                ],
                "reassembly": ok,
            },
        )
    elif args.format == "csv":
        lines = ["r,sign_exp,offset,t1,t2,period1,period2"]
        lines += [",".join(str(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        lines = [f"dissection of quintuple product (M={args.M}, j={args.j}) mod {args.m}"]
        lines.append("r  sign_exp  offset  t1  t2  period1  period2")
        for row in rows:
            lines.append("  ".join(str(v) for v in row))
        lines.append(f"reassembly at T={args.T}: {'PASS' if ok else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    return text, ok


def _cmd_predict(args) -> tuple[str, bool]:
    cert = predict_quotient_pattern(args.p, args.i)
    params = {"p": args.p, "i": args.i}
    if args.format == "json":
        text = _json_report(
            "predict", f"{args.i}^1 {args.p}^-1", params, None,
            {
                "pattern": cert.pattern.class_string,
                "onset": cert.onset,
                "offsets": list(cert.offsets),
                "sign_exponents": list(cert.sign_exponents),
                "residue_map": list(cert.residue_map),
            },
        )
    elif args.format == "csv":
        lines = ["residue,class"]
        lines += [f"{r},{c.value}" for r, c in enumerate(cert.pattern.classes)]
        text = "\n".join(lines) + "\n"
    else:
        lines = [
            f"quotient: (q^{args.i};q^{args.i}) / (q^{args.p};q^{args.p})",
            f"pattern:  {cert.pattern.class_string}",
            f"onset:    {cert.onset} (holds for n >= {cert.onset + 1})",
        ]
        text = "\n".join(lines) + "\n"
    return text, True


def _cmd_verify(args) -> tuple[str, bool]:
    horizon = args.T if args.T is not None else _default_precision()
    cert = predict_quotient_pattern(args.p, args.i)
    spec_text = args.spec if args.spec else f"{args.i}^1 {args.p}^-1"
    series = eta_quotient(spec_text, horizon)
    report = verify_pattern(series, cert.pattern, horizon)
    params = {"p": args.p, "i": args.i, "T": horizon}
    if args.format == "json":
        text = _json_report(
            "verify", spec_text, params, horizon,
            {
                "pattern": cert.pattern.class_string,
                "onset": cert.onset,
                "passed": report.passed,
                "violations": [
                    {"n": n, "expected": cls.value, "sign": s}
                    for n, cls, s in report.violations[:20]
                ],
            },
        )
    elif args.format == "csv":
        lines = ["n,expected,sign"]
        lines += [f"{n},{cls.value},{s}" for n, cls, s in report.violations]
        text = "\n".join(lines) + "\n"
    else:
        lines = [
            f"spec:    {spec_text}",
            f"pattern: {cert.pattern.class_string}",
            f"onset:   {cert.onset}",
            f"verify to T={horizon}: {'PASS' if report.passed else 'FAIL'}",
        ]
        for n, cls, s in report.violations[:5]:
            lines.append(f"  violation at n={n}: expected {cls.value}, sign {s}")
        text = "\n".join(lines) + "\n"
    return text, report.passed


def _cmd_detect(args) -> tuple[str, bool]:
    horizon = args.T if args.T is not None else _default_precision()
    spec = EtaQuotientSpec.parse(args.spec)
    series = eta_quotient(spec, horizon)
    pattern = detect_pattern(series, args.m, horizon)
    params = {"m": args.m, "T": horizon}
    if args.format == "json":
        text = _json_report(
            "detect", str(spec), params, horizon,
            {
                "pattern": pattern.class_string,
                "onset": pattern.onset,
                "empirical": True,
            },
        )
    elif args.format == "csv":
        lines = ["residue,class"]
        lines += [f"{r},{c.value}" for r, c in enumerate(pattern.classes)]
        text = "\n".join(lines) + "\n"
    else:
        lines = [
            f"spec:    {args.spec}",
            f"pattern: {pattern.class_string} (empirical, horizon {horizon})",
            f"onset:   {pattern.onset}",
        ]
        text = "\n".join(lines) + "\n"
    return text, True


def _cmd_census(args) -> tuple[str, bool]:
    spec = EtaQuotientSpec.parse(args.spec)
    precision = args.m * args.K - 1
    series = eta_quotient(spec, precision)
    rows = sign_census(series, args.m, args.K)
    params = {"m": args.m, "K": args.K}
    if args.format == "json":
        text = _json_report(
            "census", str(spec), params, precision,
            {
                "rows": [
                    {"residue": r, "negative": neg, "zero": zero, "positive": pos}
                    for r, (neg, zero, pos) in enumerate(rows)
                ]
            },
        )
    elif args.format == "csv":
        lines = ["residue,negative,zero,positive"]
        lines += [f"{r},{neg},{zero},{pos}" for r, (neg, zero, pos) in enumerate(rows)]
        text = "\n".join(lines) + "\n"
    else:
        lines = [f"sign census of {args.spec} mod {args.m}, {args.K} terms per class"]
        lines.append("residue  negative  zero  positive")
        for r, (neg, zero, pos) in enumerate(rows):
            lines.append(f"{r:7d}  {neg:8d}  {zero:4d}  {pos:8d}")
        text = "\n".join(lines) + "\n"
    return text, True


def _cmd_corpus(args) -> tuple[str, bool]:
    results = []
    for entry in corpus():
        series = eta_quotient(entry.spec, entry.horizon)
        report = verify_pattern(series, entry.pattern, entry.horizon)
        results.append((entry.name, entry.pattern.class_string, entry.horizon,
                        report.passed))
    series = eta_quotient(_VANISHING_SPEC, _VANISHING_HORIZON)
    vanish_ok = all(
        (series.coefficient(n) == 0) == vanishing_predicate(n)
        for n in range(1, _VANISHING_HORIZON + 1)
    )
    results.append(
        ("vanishing-set", _VANISHING_SPEC, _VANISHING_HORIZON, vanish_ok)
    )
    all_ok = all(ok for _, _, _, ok in results)
    if args.format == "json":
        text = _json_report(
            "corpus", None, {}, None,
            {
                "entries": [
                    {"name": n, "pattern": p, "horizon": h, "passed": ok}
                    for n, p, h, ok in results
                ],
                "passed": all_ok,
            },
        )
    elif args.format == "csv":
        lines = ["name,pattern,horizon,passed"]
        lines += [f"{n},{p},{h},{str(ok).lower()}" for n, p, h, ok in results]
        text = "\n".join(lines) + "\n"
    else:
        lines = [
            f"{'PASS' if ok else 'FAIL'}  {n}  ({p}, T={h})" for n, p, h, ok in results
        ]
        lines.append(f"corpus: {'PASS' if all_ok else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    return text, all_ok


def _cmd_catalog(args) -> tuple[str, bool]:
    horizon = args.T
    results = []
    for case in pattern_catalog():
        series = eta_quotient(case.spec, horizon)
        report = verify_pattern(series, case.pattern, horizon)
        results.append((case.case_id, case.pattern.class_string,
                        case.pattern.onset, report.passed))
    all_ok = all(ok for _, _, _, ok in results)
    if args.format == "json":
        text = _json_report(
            "catalog", None, {"T": horizon}, horizon,
            {
                "cases": [
                    {"case": c, "pattern": p, "onset": o, "passed": ok}
                    for c, p, o, ok in results
                ],
                "passed": all_ok,
            },
        )
    elif args.format == "csv":
        lines = ["case,pattern,onset,passed"]
        lines += [f"{c},{p},{o},{str(ok).lower()}" for c, p, o, ok in results]
        text = "\n".join(lines) + "\n"
    else:
        lines = [
            f"{'PASS' if ok else 'FAIL'}  {c}  ({p}, onset {o})"
            for c, p, o, ok in results
        ]
        lines.append(f"catalog at T={horizon}: {'PASS' if all_ok else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    return text, all_ok


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

def _add_common(sub) -> None:
    sub.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sub.add_argument("--output", help="write the report to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsigns",
        description="exact q-series expansions, dissections and sign patterns",
    )
    parser.add_argument("--version", action="version",
                        version=f"qsigns {__version__} ({backend_name()} kernels)")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("expand", help="print coefficients of a product spec")
    p.add_argument("--spec", required=True, help="product spec, e.g. '2^5 7^-1'")
    p.add_argument("--T", type=int, default=20, help="truncation order")
    _add_common(p)
    p.set_defaults(handler=_cmd_expand)

    p = subs.add_parser("dissect", help="component table of a quintuple-product dissection")
    p.add_argument("--m", type=int, required=True, help="dissection modulus (not divisible by 3)")
    p.add_argument("--M", type=int, default=4, help="quintuple period (default 4: the (q;q) case)")
    p.add_argument("--j", type=int, default=1, help="quintuple offset (default 1)")
    p.add_argument("--T", type=int, default=200, help="reassembly check precision")
    _add_common(p)
    p.set_defaults(handler=_cmd_dissect)

    p = subs.add_parser("predict", help="predicted sign pattern of (q^i;q^i)/(q^p;q^p)")
    p.add_argument("--p", type=int, required=True, help="prime > 3")
    p.add_argument("--i", type=int, required=True, help="integer > 1 not divisible by p")
    _add_common(p)
    p.set_defaults(handler=_cmd_predict)

    p = subs.add_parser("verify", help="verify a predicted pattern against the expansion")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--spec", help="series to check (default: the (p, i) quotient)")
    p.add_argument("--T", type=int, help="horizon (default QSIGNS_PRECISION or 2000)")
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    p = subs.add_parser("detect", help="empirically detect a sign pattern")
    p.add_argument("--spec", required=True)
    p.add_argument("--m", type=int, required=True, help="pattern modulus")
    p.add_argument("--T", type=int, help="horizon (default QSIGNS_PRECISION or 2000)")
    _add_common(p)
    p.set_defaults(handler=_cmd_detect)

    p = subs.add_parser("census", help="per-residue sign counts of an expansion")
    p.add_argument("--spec", required=True)
    p.add_argument("--m", type=int, required=True, help="modulus")
    p.add_argument("--K", type=int, required=True, help="terms per residue class")
    _add_common(p)
    p.set_defaults(handler=_cmd_census)

    p = subs.add_parser("corpus", help="run the empirical regression corpus")
    _add_common(p)
    p.set_defaults(handler=_cmd_corpus)

    p = subs.add_parser("catalog", help="verify the catalog of proven patterns")
    p.add_argument("--T", type=int, default=3000, help="verification horizon")
    _add_common(p)
    p.set_defaults(handler=_cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, ok = args.handler(args)
    except QSignsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.output)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
