"""Command line front end.

Exit codes: 0 success or VERIFIED, 1 MISMATCH, 2 NOT_APPLICABLE or an engine
failure, 3 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .lang import InputError, ParseError, parse, to_text
from .loops import RuleError, loop_series
from .ranks import PBWError, hyperbolicity_report, pbw_invert
from .semantics import attrs, reduced_homology
from .series import SeriesError
from .verify import MISMATCH, NOT_APPLICABLE, VERIFIED, load_scenario, verify_main_theorem

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_NOT_APPLICABLE = 2
EXIT_INPUT = 3

_VERDICT_EXIT = {VERIFIED: EXIT_OK, MISMATCH: EXIT_MISMATCH, NOT_APPLICABLE: EXIT_NOT_APPLICABLE}


def _max_degree(value: str) -> int:
    n = int(value)
    if not 1 <= n <= 512:
        raise argparse.ArgumentTypeError(f"max degree must be in [1, 512], got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="loopsplit",
        description="Rational loop space homology of spaces built from spheres.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--max-degree", type=_max_degree, default=None, help="truncation degree (default 32)")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    for name, help_ in (
        ("eval", "reduced rational homology of an expression"),
        ("loops", "loop space homology series with the rule trace"),
        ("ranks", "rational homotopy ranks"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("expr")
        common(sp)
    sp = sub.add_parser("verify", help="check the loop equivalence on scenario files")
    sp.add_argument("scenarios", nargs="+")
    common(sp)
    sp = sub.add_parser("hyperbolicity", help="ellipticity/hyperbolicity diagnostics")
    sp.add_argument("target", help="expression, or path to a scenario file")
    common(sp)
    return p


def _attrs_json(e) -> dict:
    a = attrs(e)
    return {
        "connectivity": a.connectivity,
        "simply_connected": a.simply_connected,
        "rationally_spherical": a.rationally_spherical,
        "pd_dim": a.pd_dim,
        "generator_count": a.generator_count,
    }


def cmd_eval(args) -> tuple[int, str]:
    e = parse(args.expr)
    N = args.max_degree or 32
    red = reduced_homology(e, N)
    if args.format == "json":
        return EXIT_OK, json.dumps(
            {"expr": to_text(e), "reduced_homology": red.to_json(), "attrs": _attrs_json(e)}
        )
    a = attrs(e)
    lines = [
        f"expr: {to_text(e)}",
        f"reduced homology: {red.to_text()}",
        f"connectivity >= {a.connectivity}, simply connected: {a.simply_connected}, "
        f"rationally spherical: {a.rationally_spherical}, pd_dim: {a.pd_dim}, "
        f"generators: {a.generator_count}",
    ]
    return EXIT_OK, "\n".join(lines)


def cmd_loops(args) -> tuple[int, str]:
    e = parse(args.expr)
    series, trace = loop_series(e, args.max_degree or 32)
    if args.format == "json":
        return EXIT_OK, json.dumps(
            {"expr": to_text(e), "series": series.to_json(), "trace": trace.to_json()}
        )
    return EXIT_OK, f"{series.to_text()}\n{trace.render()}"


def cmd_ranks(args) -> tuple[int, str]:
    e = parse(args.expr)
    series, _ = loop_series(e, args.max_degree or 32)
    ranks = pbw_invert(series)
    if args.format == "json":
        return EXIT_OK, json.dumps({"expr": to_text(e), "ranks": ranks.to_json()})
    return EXIT_OK, ranks.to_text()


def _verify_one(path: str, args) -> tuple[int, str]:
    try:
        scenario = load_scenario(path)
    except InputError as exc:
        return EXIT_INPUT, _error_text(exc, args, path)
    report = verify_main_theorem(scenario, args.max_degree)
    out = report.to_json_text() if args.format == "json" else report.to_text()
    return _VERDICT_EXIT[report.verdict], out


def cmd_verify(args) -> tuple[int, str]:
    with ThreadPoolExecutor(max_workers=min(8, len(args.scenarios))) as pool:
        results = list(pool.map(lambda p: _verify_one(p, args), args.scenarios))
    code = max(c for c, _ in results)
    sep = "\n" if args.format == "json" else "\n\n"
    return code, sep.join(out for _, out in results)


def cmd_hyperbolicity(args) -> tuple[int, str]:
    target = args.target
    if Path(target).is_file():
        subject = load_scenario(target)
    else:
        subject = parse(target)
    report = hyperbolicity_report(subject, args.max_degree or getattr(subject, "max_degree", None) or 32)
    if args.format == "json":
        return EXIT_OK, json.dumps(report.to_json())
    return EXIT_OK, report.to_text()


_COMMANDS = {
    "eval": cmd_eval,
    "loops": cmd_loops,
    "ranks": cmd_ranks,
    "verify": cmd_verify,
    "hyperbolicity": cmd_hyperbolicity,
}


def _error_text(exc: Exception, args, source: str | None = None) -> str:
    kind = "input error" if isinstance(exc, InputError) else "not applicable"
    trace = getattr(exc, "trace", None)
    if args.format == "json":
        doc = {"error": kind, "message": str(exc), "source": source}
        if trace is not None:
            doc["trace"] = trace.to_json()
        return json.dumps(doc)
    lines = [f"{kind}: {exc}"]
    if isinstance(exc, ParseError) and exc.text:
        lines.append(exc.pointer())
    if trace is not None and len(trace):
        lines.append(trace.render())
    return "\n".join(lines)


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse arguments and execute; returns the exit code and the rendered output."""
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        return EXIT_INPUT, _error_text(exc, args)
    except (RuleError, PBWError, SeriesError) as exc:
        return EXIT_NOT_APPLICABLE, _error_text(exc, args)


def main(argv: list[str] | None = None) -> int:
    try:
        code, out = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_INPUT if exc.code else EXIT_OK
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
