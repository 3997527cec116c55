"""Fibration pullbacks over connected sums: hypotheses, both loop routes, verdict.

A scenario is a fibration ``F -> L -> C`` of PD complexes together with a
second PD complex ``B`` of the same dimension as ``C``.  The pullback ``M``
over the collapse ``B # C -> C`` is never built; its loop series is computed
from ``L`` and ``X' = F ⋉ skel(B)`` (path A) and compared with the loop
series of the connected sum ``X # L``, ``X = X' ∪ e^m`` (path B).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .expr import Attach, ConnectedSum, HalfSmash, SpaceExpr
from .lang import InputError, ParseError, parse, to_text
from .loops import LoopRuleTrace, RuleError, attach_rule, pullback_loop_series
from .ranks import PBWError, RankTable, pbw_invert
from .semantics import (
    SemanticError,
    attrs,
    duality_defects,
    reduced_homology,
    skeleton,
    skeleton_is_spherical,
)
from .series import DEFAULT_MAX_DEGREE, GradedSeries, SeriesError

VERIFIED = "VERIFIED"
MISMATCH = "MISMATCH"
NOT_APPLICABLE = "NOT_APPLICABLE"

PASS = "pass"
FAIL = "fail"
NOT_CHECKABLE = "not-checkable"


class ScenarioError(InputError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        where = f"{path or '<scenario>'}:{line}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class FibrationScenario:
    name: str
    F: SpaceExpr
    L: SpaceExpr
    C: SpaceExpr
    B: SpaceExpr
    alpha_null: bool
    inert: tuple[SpaceExpr, ...] = ()
    max_degree: int | None = None


_REQUIRED = ("name", "F", "L", "C", "B", "alpha_null")
_OPTIONAL = ("max_degree", "inert")


def parse_scenario(text: str, path: str | None = None) -> FibrationScenario:
    """Read the ``key = value`` scenario format.

    Lines whose first non-blank character is ``#`` are comments; a ``#`` later
    in a line is the connected-sum operator.
    """
    values: dict[str, object] = {}
    inert: list[SpaceExpr] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise ScenarioError(f"expected 'key = value', got {line!r}", lineno, path)
        if key not in _REQUIRED and key not in _OPTIONAL:
            raise ScenarioError(f"unknown key {key!r}", lineno, path)
        if key != "inert" and key in values:
            raise ScenarioError(f"duplicate key {key!r}", lineno, path)
        try:
            if key in ("F", "L", "C", "B"):
                values[key] = parse(value)
            elif key == "inert":
                inert.append(parse(value))
            elif key == "alpha_null":
                flag = value.lower()
                if flag not in ("true", "false"):
                    raise ScenarioError(f"alpha_null must be true or false, got {value!r}", lineno, path)
                values[key] = flag == "true"
            elif key == "max_degree":
                values[key] = int(value)
                if not 1 <= values[key] <= 512:
                    raise ScenarioError(f"max_degree must be in [1, 512], got {value}", lineno, path)
            else:
                if not value:
                    raise ScenarioError("empty name", lineno, path)
                values[key] = value
        except ParseError as exc:
            raise ScenarioError(f"{key}: {exc}", lineno, path) from exc
        except ValueError as exc:
            if isinstance(exc, ScenarioError):
                raise
            raise ScenarioError(f"{key}: {exc}", lineno, path) from exc
    missing = [k for k in _REQUIRED if k not in values]
    if missing:
        raise ScenarioError(f"missing keys: {', '.join(missing)}", None, path)
    return FibrationScenario(inert=tuple(inert), **values)


def load_scenario(path: str | Path) -> FibrationScenario:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_scenario(text, str(path))


def build_x_prime(s: FibrationScenario) -> SpaceExpr:
    return HalfSmash(s.F, skeleton(s.B))


def build_x(s: FibrationScenario) -> SpaceExpr:
    m = attrs(s.L).pd_dim
    if m is None:
        raise SemanticError(f"L = {s.L} is not a Poincaré duality form")
    return Attach(build_x_prime(s), m)


@dataclass(frozen=True)
class HypothesisResult:
    name: str
    status: str
    rule: str
    detail: str = ""
    # advisory checks are reported but do not gate the verdict
    required: bool = True

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "rule": self.rule,
            "detail": self.detail,
            "required": self.required,
        }


def _gen_count_check(name: str, pd_expr: SpaceExpr, inert: tuple) -> HypothesisResult:
    try:
        skel = skeleton(pd_expr)
    except SemanticError as exc:
        return HypothesisResult(name, NOT_CHECKABLE, "skeleton", str(exc))
    count = attrs(skel).generator_count
    if count is not None and count > 1:
        return HypothesisResult(
            name, PASS, "generator count", f"H*({to_text(skel)}) has {count} generators"
        )
    if pd_expr in inert:
        return HypothesisResult(name, PASS, "inert assertion", f"top cell of {to_text(pd_expr)} asserted inert")
    if count is None:
        return HypothesisResult(name, NOT_CHECKABLE, "generator count", f"generators of H*({to_text(skel)}) unknown")
    return HypothesisResult(
        name, FAIL, "generator count", f"H*({to_text(skel)}) has {count} generator(s), need more than one"
    )


def check_hypotheses(s: FibrationScenario) -> list[HypothesisResult]:
    results = []

    dims = {}
    problems = []
    for key in ("L", "C", "B"):
        try:
            dims[key] = attrs(getattr(s, key)).pd_dim
        except SemanticError as exc:
            problems.append(f"{key}: {exc}")
            dims[key] = None
    for key, d in dims.items():
        if d is None and not any(p.startswith(key) for p in problems):
            problems.append(f"{key} is not a Poincaré duality form")
    if not problems:
        if dims["B"] != dims["C"]:
            problems.append(f"dim B = {dims['B']} differs from dim C = {dims['C']}")
        if dims["L"] < dims["C"]:
            problems.append(f"dim L = {dims['L']} is below dim C = {dims['C']}")
    if problems:
        results.append(HypothesisResult("dimensions", FAIL, "pd_dim", "; ".join(problems)))
        return results
    results.append(
        HypothesisResult("dimensions", PASS, "pd_dim", f"n = {dims['C']}, m = {dims['L']}")
    )

    not_sc = [k for k in ("L", "C", "B") if not attrs(getattr(s, k)).simply_connected]
    if attrs(s.F).connectivity < 0:
        not_sc.append("F (not connected)")
    results.append(
        HypothesisResult(
            "simple connectivity",
            FAIL if not_sc else PASS,
            "connectivity",
            f"not established for {', '.join(not_sc)}" if not_sc else "L, C, B simply connected",
        )
    )

    results.append(
        HypothesisResult(
            "(i)",
            PASS if s.alpha_null else FAIL,
            "assertion",
            "fibre inclusion F -> M asserted rationally null"
            if s.alpha_null
            else "fibre inclusion F -> M not asserted null",
        )
    )

    c_check = _gen_count_check("(ii)", s.C, s.inert)
    l_check = _gen_count_check("(ii)", s.L, s.inert)
    worst = next((r for r in (c_check, l_check) if r.status == FAIL), None) or next(
        (r for r in (c_check, l_check) if r.status == NOT_CHECKABLE), None
    )
    detail = f"C: {c_check.detail}; L: {l_check.detail}"
    if worst is None:
        results.append(HypothesisResult("(ii)", PASS, f"{c_check.rule}/{l_check.rule}", detail))
    else:
        results.append(HypothesisResult("(ii)", worst.status, worst.rule, detail))

    try:
        skel_b = skeleton(s.B)
        ok, how = skeleton_is_spherical(s.B)
    except SemanticError as exc:
        results.append(HypothesisResult("skel(B) spherical", FAIL, "skeleton", str(exc)))
        return results
    results.append(
        HypothesisResult(
            "skel(B) spherical",
            PASS if ok else FAIL,
            how if ok else "structure/ganea",
            f"skel(B) = {to_text(skel_b)}"
            + ("" if ok else "; not known to be a suspension, path A undefined"),
        )
    )

    # F -> L -> C with L, C closed forces F to be dual of dimension m - n, so X' u e^m is too
    table = homology_table(s)
    m = len(table) - 1
    defects = [k for k in range(1, m) if table[k] != table[m - k]]
    results.append(
        HypothesisResult(
            "fibre duality",
            FAIL if defects else PASS,
            "homology table",
            f"H(M) fails duality in degrees {defects}: F does not fit dim L - dim C = {m - dims['C']}"
            if defects
            else f"H(M) is dual in dimension {m}",
        )
    )

    x_count = attrs(build_x_prime(s), (skel_b,) if how == "ganea" else ()).generator_count
    if x_count is None:
        status, detail = NOT_CHECKABLE, "generators of H*(X') unknown"
    else:
        status, detail = (PASS if x_count > 1 else FAIL), f"H*(X') has {x_count} generators"
    results.append(
        HypothesisResult("X' generators", status, "generator count", detail, required=False)
    )
    return results


@dataclass
class VerificationReport:
    name: str
    max_degree: int
    hypotheses: list[HypothesisResult]
    verdict: str
    reason: str = ""
    x_prime: SpaceExpr | None = None
    x: SpaceExpr | None = None
    path_a: GradedSeries | None = None
    path_a_trace: LoopRuleTrace | None = None
    path_b: GradedSeries | None = None
    path_b_trace: LoopRuleTrace | None = None
    ranks_a: RankTable | None = None
    ranks_b: RankTable | None = None
    homology: list[int] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def verdict_label(self) -> str:
        return f"{self.verdict}({self.reason})" if self.verdict == NOT_APPLICABLE else self.verdict

    def to_json(self) -> dict:
        def path(series, trace):
            return {
                "series": series.to_json() if series is not None else None,
                "trace": trace.to_json() if trace is not None else [],
            }

        return {
            "name": self.name,
            "verdict": self.verdict,
            "reason": self.reason,
            "max_degree": self.max_degree,
            "hypotheses": [h.to_json() for h in self.hypotheses],
            "x_prime": to_text(self.x_prime) if self.x_prime is not None else None,
            "x": to_text(self.x) if self.x is not None else None,
            "path_a": path(self.path_a, self.path_a_trace),
            "path_b": path(self.path_b, self.path_b_trace),
            "ranks": self.ranks_a.to_json() if self.ranks_a is not None else [],
            "ranks_b": self.ranks_b.to_json() if self.ranks_b is not None else [],
            "homology": self.homology,
            "errors": self.errors,
            "warnings": self.warnings,
        }

    def to_text(self) -> str:
        lines = [f"scenario: {self.name}", f"verdict: {self.verdict_label}", "hypotheses:"]
        for h in self.hypotheses:
            tag = "" if h.required else " (advisory)"
            lines.append(f"  {h.name:<20} {h.status:<14} [{h.rule}] {h.detail}{tag}")
        if self.x_prime is not None:
            lines.append(f"X' = {to_text(self.x_prime)}")
        if self.x is not None:
            lines.append(f"X  = {to_text(self.x)}")
        for label, series, trace in (
            ("path A", self.path_a, self.path_a_trace),
            ("path B", self.path_b, self.path_b_trace),
        ):
            if series is not None:
                lines.append(f"{label}: {series.to_text()}")
                lines.extend(f"  {step.render()}" for step in trace.steps)
        if self.ranks_a is not None:
            nz = self.ranks_a.nonzero()
            shown = ", ".join(f"pi_{k + 1}: {r}" for k, r in list(nz.items())[:8])
            lines.append(f"ranks (pi_k⊗Q): {shown}{', ...' if len(nz) > 8 else ''}")
        if self.homology:
            hom = ", ".join(f"H_{k} = {d}" for k, d in enumerate(self.homology) if d)
            lines.append(f"reduced H_*(M; Q): {hom}")
        lines.extend(f"error: {e}" for e in self.errors)
        lines.extend(f"warning: {w}" for w in self.warnings)
        return "\n".join(lines)

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def homology_table(s: FibrationScenario) -> list[int]:
    """Reduced rational homology of ``M`` in degrees ``0..m``: ``red(X') + red(L)`` below ``m``, one top cell."""
    m = attrs(s.L).pd_dim
    below = reduced_homology(build_x_prime(s), m) + reduced_homology(s.L, m)
    table = list(below.coeffs)
    table[m] = 1
    return table


def verify_main_theorem(s: FibrationScenario, max_degree: int | None = None) -> VerificationReport:
    N = max_degree or s.max_degree or DEFAULT_MAX_DEGREE
    hyps = check_hypotheses(s)
    report = VerificationReport(s.name, N, hyps, NOT_APPLICABLE)
    failed = [h for h in hyps if h.required and not h.passed]

    if hyps[0].passed:
        try:
            report.x_prime = build_x_prime(s)
            report.x = build_x(s)
            report.homology = homology_table(s)
        except SemanticError as exc:
            report.errors.append(str(exc))
        for key in ("L", "C", "B"):
            defects = duality_defects(getattr(s, key))
            if defects:
                report.warnings.append(
                    f"homology of {key} = {to_text(getattr(s, key))} fails duality in degrees {defects}"
                )

    if report.x is not None:
        try:
            report.path_a, report.path_a_trace = pullback_loop_series(s, N)
            report.ranks_a = pbw_invert(report.path_a)
        except (RuleError, PBWError, SeriesError, SemanticError) as exc:
            report.errors.append(f"path A: {exc}")
            report.path_a_trace = getattr(exc, "trace", None) or report.path_a_trace
        try:
            xl = ConnectedSum(report.x, s.L)
            # R5 on X # L, whose skeleton is X' v skel(L); never touches the fibration
            hints = (skeleton(s.B),) if skeleton_is_spherical(s.B)[1] == "ganea" else ()
            report.path_b, report.path_b_trace = attach_rule(
                xl, N, inert=s.inert, assume_spherical=hints
            )
            report.ranks_b = pbw_invert(report.path_b)
        except (RuleError, PBWError, SeriesError, SemanticError) as exc:
            report.errors.append(f"path B: {exc}")

    if failed:
        report.reason = f"hypothesis {failed[0].name}"
        if failed[0].name == "skel(B) spherical":
            report.reason = "skel(B) not known to be a suspension"
        return report
    if report.errors:
        report.reason = "engine: " + report.errors[0]
        return report

    same = report.path_a == report.path_b and report.ranks_a == report.ranks_b
    report.verdict = VERIFIED if same else MISMATCH
    return report
