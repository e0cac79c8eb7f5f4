"""Command-line front end: construct, verify, fuzz, audit.

Exit codes (stable contract): 0 success / all checks pass, 1 check failures,
2 usage or input errors.  All output is a deterministic function of the
flags, including the fuzz and audit streams (seeded SplitMix64).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import sceneio, verify
from .errors import GeometryError
from .numeric import EXACT, Backend, FloatBackend, parse_rational
from .simson import Params, build_scene
from .verify import AUDIT_NAMES, FuzzConfig, Report

_AUDIT_LABELS = {
    "eq2.3": "Eq2.3 vertex-image line",
    "eq2.4": "Eq2.4 vertex circle",
    "eq2.5.x": "Eq2.5 orthocentre x",
    "eq2.5.y": "Eq2.5 orthocentre y",
    "eq2.6.coeffs": "Eq2.6 altitude coefficients",
    "eq2.6.const": "Eq2.6 altitude constant",
    "eq2.7": "Eq2.7 altitude-circle point",
    "eq2.8": "Eq2.8 circle through X,Y,Z",
}


def _add_scene_flags(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--a", required=required, metavar="RAT",
                        help="vertex parameter a (rational, e.g. 1, -3/4, 0.25)")
    parser.add_argument("--b", required=required, metavar="RAT",
                        help="vertex parameter b")
    parser.add_argument("--c", required=required, metavar="RAT",
                        help="vertex parameter c")
    parser.add_argument("--t", required=required, metavar="RAT",
                        help="similarity parameter t (t=0: classical case)")


def _add_backend_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--backend", choices=("exact", "float"), default="exact",
                        help="arithmetic backend (default: exact)")
    parser.add_argument("--eps", type=float, default=1e-9, metavar="EPS",
                        help="absolute tolerance for the float backend (default 1e-9)")


def _backend_from_args(args) -> Backend:
    if args.backend == "float":
        return FloatBackend(args.eps)
    return EXACT


def _params_from_args(args) -> Params:
    backend = _backend_from_args(args)
    return Params(*(backend.parse(getattr(args, k)) for k in ("a", "b", "c", "t")))


def _print_report(report: Report) -> None:
    print(f"backend: {report.backend}")
    print("params: " + " ".join(f"{k}={v}" for k, v in report.params.items()))
    print("flags: " + (", ".join(report.flags) if report.flags else "(none)"))
    for r in report.results:
        if r.passed:
            note = f" ({r.witness['note']})" if r.witness and "note" in r.witness else ""
            print(f"{r.name:<40} PASS{note}")
        else:
            detail = " ".join(f"{k}={v}" for k, v in (r.witness or {}).items())
            print(f"{r.name:<40} FAIL  {detail}")
    total = len(report.results)
    passed = sum(1 for r in report.results if r.passed)
    print(f"{passed}/{total} checks passed")


def cmd_construct(args) -> int:
    try:
        scene = build_scene(_params_from_args(args))
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(sceneio.scene_summary(scene))
    if args.json:
        Path(args.json).write_text(sceneio.scene_to_json(scene), encoding="utf-8")
    if args.svg:
        Path(args.svg).write_text(sceneio.render_svg(scene), encoding="utf-8")
    return 0


def cmd_verify(args) -> int:
    try:
        scene = build_scene(_params_from_args(args))
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = verify.run_checks(scene)
    _print_report(report)
    return 0 if report.all_pass else 1


def cmd_fuzz(args) -> int:
    try:
        config = FuzzConfig(seed=args.seed, count=args.count,
                            max_numerator=args.max_mag,
                            max_denominator=args.max_den,
                            include_t_zero=args.include_t_zero)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result = verify.fuzz(config)
    print(f"seed={config.seed} count={config.count} "
          f"max-mag={config.max_numerator} max-den={config.max_denominator} "
          f"include-t-zero={'yes' if config.include_t_zero else 'no'}")
    for note in result.skips:
        print(note)
    for i, report in enumerate(result.reports):
        if report.all_pass:
            continue
        params = " ".join(f"{k}={v}" for k, v in report.params.items())
        for failure in report.failures:
            detail = " ".join(f"{k}={v}" for k, v in (failure.witness or {}).items())
            print(f"instance {i} ({params}): FAIL {failure.name}  {detail}")
    print(result.summary())
    return 0 if result.all_pass else 1


def _audit_single(params: Params) -> Report:
    report = verify.audit_printed_formulas(params)
    print("params: " + " ".join(f"{k}={v}" for k, v in report.params.items()))
    for r in report.results:
        label = _AUDIT_LABELS[r.name]
        if r.passed:
            print(f"{label:<30} MATCH")
        else:
            detail = " ".join(f"{k}={v}" for k, v in (r.witness or {}).items())
            print(f"{label:<30} MISMATCH  {detail}")
    return report


def cmd_audit(args) -> int:
    scene_flags = [getattr(args, k) for k in ("a", "b", "c", "t")]
    if any(v is not None for v in scene_flags):
        if not all(v is not None for v in scene_flags):
            print("error: audit needs all of --a --b --c --t (or --seed/--count)",
                  file=sys.stderr)
            return 2
        try:
            _audit_single(_params_from_args(args))
        except GeometryError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return 0
    if args.seed is None:
        print("error: audit needs either --a/--b/--c/--t or --seed [--count]",
              file=sys.stderr)
        return 2
    try:
        config = FuzzConfig(seed=args.seed, count=args.count,
                            max_numerator=args.max_mag,
                            max_denominator=args.max_den)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    instances, skips = verify.fuzz_instances(config)
    print(f"seed={config.seed} count={config.count} "
          f"max-mag={config.max_numerator} max-den={config.max_denominator}")
    for note in skips:
        print(note)
    match_counts = {name: 0 for name in AUDIT_NAMES}
    for i, params, _scene in instances:
        report = verify.audit_printed_formulas(params)
        mism = [r.name for r in report.results if not r.passed]
        for r in report.results:
            if r.passed:
                match_counts[r.name] += 1
        pstr = " ".join(f"{k}={v}" for k, v in report.params.items())
        verdict = "MISMATCH " + ",".join(mism) if mism else "all MATCH"
        print(f"instance {i} ({pstr}): {verdict}")
    total = len(instances)
    print(f"aggregate over {total} instances:")
    for name in AUDIT_NAMES:
        m = match_counts[name]
        print(f"  {_AUDIT_LABELS[name]:<30} MATCH {m}  MISMATCH {total - m}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oblique-simson",
        description="Construct and verify oblique Wallace-Simson lines "
                    "in exact rational arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser(
        "construct", help="build a scene; optionally write JSON and SVG")
    _add_scene_flags(p_construct, required=True)
    _add_backend_flags(p_construct)
    p_construct.add_argument("--json", metavar="PATH", help="write the scene document")
    p_construct.add_argument("--svg", metavar="PATH", help="write an SVG figure")
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser(
        "verify", help="run all named checks on one instance")
    _add_scene_flags(p_verify, required=True)
    _add_backend_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_fuzz = sub.add_parser(
        "fuzz", help="check many seeded random rational instances")
    p_fuzz.add_argument("--seed", type=int, default=42)
    p_fuzz.add_argument("--count", type=int, default=100)
    p_fuzz.add_argument("--max-mag", type=int, default=10,
                        help="max |numerator| of random parameters")
    p_fuzz.add_argument("--max-den", type=int, default=10,
                        help="max denominator of random parameters")
    p_fuzz.add_argument("--include-t-zero", action="store_true",
                        help="force t=0 on the first instance")
    p_fuzz.set_defaults(func=cmd_fuzz)

    p_audit = sub.add_parser(
        "audit", help="compare the handed-down closed forms against the construction")
    _add_scene_flags(p_audit, required=False)
    _add_backend_flags(p_audit)
    p_audit.add_argument("--seed", type=int, default=None)
    p_audit.add_argument("--count", type=int, default=100)
    p_audit.add_argument("--max-mag", type=int, default=10)
    p_audit.add_argument("--max-den", type=int, default=10)
    p_audit.set_defaults(func=cmd_audit)

    return parser


_VALUE_FLAGS = {"--a", "--b", "--c", "--t"}


def _merge_negative_values(argv: Sequence[str]) -> list:
    """Join "--t -2/3" into "--t=-2/3" so negative rationals parse.

    argparse only recognizes plain negative numbers as values, not forms
    like -3/7; merging keeps both spellings working.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _VALUE_FLAGS and nxt is not None and nxt.startswith("-"):
            try:
                parse_rational(nxt)
            except GeometryError:
                pass
            else:
                out.append(f"{tok}={nxt}")
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)
