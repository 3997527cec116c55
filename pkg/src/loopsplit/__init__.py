"""Exact rational loop space homology for spaces built from spheres.

Series arithmetic lives in :mod:`loopsplit.series`, the expression language
in :mod:`loopsplit.lang`, attributes and homology in
:mod:`loopsplit.semantics`, the splitting rules in :mod:`loopsplit.loops`,
homotopy ranks in :mod:`loopsplit.ranks` and the fibration pullback checker
in :mod:`loopsplit.verify`.
"""

from importlib import resources

from .expr import (
    Attach,
    ConnectedSum,
    HalfSmash,
    Point,
    Product,
    Smash,
    SpaceExpr,
    Sphere,
    Suspension,
    Wedge,
)
from .lang import InputError, ParseError, parse, to_text
from .loops import LoopRuleTrace, RuleError, attach_rule, loop_series, pullback_loop_series
from .ranks import RankTable, growth_diagnostic, hyperbolicity_report, pbw_forward, pbw_invert
from .semantics import SemanticError, SpaceAttrs, attrs, check_ganea, reduced_homology, skeleton
from .series import DEFAULT_MAX_DEGREE, GradedSeries, SeriesError
from .verify import (
    FibrationScenario,
    VerificationReport,
    build_x,
    build_x_prime,
    check_hypotheses,
    load_scenario,
    parse_scenario,
    verify_main_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "Attach",
    "ConnectedSum",
    "HalfSmash",
    "Point",
    "Product",
    "Smash",
    "SpaceExpr",
    "Sphere",
    "Suspension",
    "Wedge",
    "InputError",
    "ParseError",
    "parse",
    "to_text",
    "LoopRuleTrace",
    "RuleError",
    "attach_rule",
    "loop_series",
    "pullback_loop_series",
    "RankTable",
    "growth_diagnostic",
    "hyperbolicity_report",
    "pbw_forward",
    "pbw_invert",
    "SemanticError",
    "SpaceAttrs",
    "attrs",
    "check_ganea",
    "reduced_homology",
    "skeleton",
    "DEFAULT_MAX_DEGREE",
    "GradedSeries",
    "SeriesError",
    "FibrationScenario",
    "VerificationReport",
    "build_x",
    "build_x_prime",
    "check_hypotheses",
    "load_scenario",
    "parse_scenario",
    "verify_main_theorem",
    "bundled_scenarios",
]


def bundled_scenarios() -> list:
    """Paths of the scenario files shipped with the package, sorted by name."""
    root = resources.files(__name__) / "scenarios"
    return sorted((p for p in root.iterdir() if p.name.endswith(".scenario")), key=lambda p: p.name)
