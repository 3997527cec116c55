"""Hilbert series of rational loop space homology, evaluated by splitting rules.

Rules, tried in this order:

R1  odd sphere ``S^(2k+1)``:  ``1/(1 - t^2k)``
R2  even sphere ``S^(2k)``:   ``(1 + t^(2k-1)) / (1 - t^(4k-2))``
R3  product:                  product of the factors' loop series
R4  rational wedge of spheres with reduced series ``g``: ``1/(1 - g/t)``
R5  PD form ``Y = Ybar ∪ e^m`` with rationally inert top cell:
    ``1/(1/P(Ω Ybar) + t^(m-2))``
R6  cofibration ``A -> B -> C`` with inert ``A -> B``:
    ``P(ΩB) = P(ΩC) * P(Ω(ΩC ⋉ A))``, the half-smash being spherical
    whenever ``A`` is.

R6 is not reached from :func:`loop_series`; it is exposed as
:func:`splitting_rule` for callers that know a cofibration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .expr import Attach, ConnectedSum, HalfSmash, Product, SpaceExpr, Sphere
from .lang import to_text
from .semantics import attrs, duality_defects, reduced_homology, skeleton, skeleton_is_spherical
from .series import DEFAULT_MAX_DEGREE, GradedSeries, render_rational


class RuleError(Exception):
    """No rule could evaluate the loop space; carries the partial trace."""

    def __init__(self, message: str, trace: LoopRuleTrace | None = None):
        super().__init__(message)
        self.trace = trace


@dataclass(frozen=True)
class TraceStep:
    rule: str
    expr: str
    series: GradedSeries

    def render(self) -> str:
        return f"[{self.rule}] {self.expr}: {render_rational(self.series)}"

    def to_json(self) -> dict:
        return {"rule": self.rule, "expr": self.expr, "series": self.series.to_json()}


@dataclass
class LoopRuleTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def record(self, rule: str, expr: SpaceExpr | str, series: GradedSeries) -> GradedSeries:
        if series[0] != 1:
            raise RuleError(f"{rule} produced a series with constant term {series[0]}", self)
        text = expr if isinstance(expr, str) else to_text(expr)
        self.steps.append(TraceStep(rule, text, series))
        return series

    def rules(self) -> list[str]:
        return [s.rule for s in self.steps]

    def render(self) -> str:
        return "\n".join(s.render() for s in self.steps)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]

    def __len__(self):
        return len(self.steps)


def sphere_loop_series(n: int, max_degree: int = DEFAULT_MAX_DEGREE) -> GradedSeries:
    """R1/R2 closed forms for ``ΩS^n``."""
    N = max_degree
    one = GradedSeries.one(N)
    if n < 2:
        raise RuleError(f"S^{n} is not simply connected")
    if n % 2:
        return (one - GradedSeries.monomial(n - 1, N)).invert()
    k = n // 2
    num = one + GradedSeries.monomial(2 * k - 1, N)
    return num * (one - GradedSeries.monomial(4 * k - 2, N)).invert()


def bott_samelson(reduced: GradedSeries) -> GradedSeries:
    """Loop series ``1/(1 - g/t)`` of a simply connected wedge of spheres with reduced series ``g``.

    Dividing by ``t`` costs a degree, so ``g`` must be given through degree
    ``N + 1``; the result is exact through degree ``N``.
    """
    if reduced[0] or (reduced.max_degree >= 1 and reduced[1]):
        raise RuleError("wedge-of-spheres rule needs a reduced series vanishing in degrees <= 1")
    N = reduced.max_degree - 1
    if N < 0:
        raise RuleError("reduced series needs at least one degree")
    g = reduced.shift_down().truncate(N)
    return (GradedSeries.one(N) - g).invert()


def attach_cell_series(skeleton_loop: GradedSeries, m: int) -> GradedSeries:
    """R5 arithmetic: loop series after an inert ``m``-cell attachment."""
    N = skeleton_loop.max_degree
    return (skeleton_loop.invert() + GradedSeries.monomial(m - 2, N)).invert()


def splitting_rule(base_loop: GradedSeries, fibre_reduced: GradedSeries) -> GradedSeries:
    """R6: ``P(ΩB) = P(ΩC) * P(Ω(ΩC ⋉ A))`` from ``P(ΩC)`` and the reduced series of ``A``.

    ``ΩC`` enters only through its series; ``A`` must be a rational wedge of
    spheres so that the half-smash is one too, with reduced series
    ``P(ΩC) * red(A)``.  Both inputs run one degree past the result.
    """
    half_smash = base_loop * fibre_reduced
    return base_loop.truncate(base_loop.max_degree - 1) * bott_samelson(half_smash)


def _normalize(exprs: Iterable[SpaceExpr]) -> frozenset:
    return frozenset(exprs)


def loop_series(
    expr: SpaceExpr,
    max_degree: int = DEFAULT_MAX_DEGREE,
    *,
    inert: Iterable[SpaceExpr] = (),
    assume_spherical: Iterable[SpaceExpr] = (),
) -> tuple[GradedSeries, LoopRuleTrace]:
    """Series of ``H_*(Ω expr; Q)`` up to ``max_degree`` with the trace of rules used.

    ``inert`` lists PD forms whose top-cell attaching map is asserted to be
    rationally inert; otherwise inertness must come from the skeleton having
    more than one cohomology generator.
    """
    trace = LoopRuleTrace()
    ctx = _Context(max_degree, _normalize(inert), _normalize(assume_spherical), trace)
    return ctx.loop(expr), trace


def attach_rule(
    expr: SpaceExpr,
    max_degree: int = DEFAULT_MAX_DEGREE,
    *,
    inert: Iterable[SpaceExpr] = (),
    assume_spherical: Iterable[SpaceExpr] = (),
) -> tuple[GradedSeries, LoopRuleTrace]:
    """Evaluate ``expr`` by R5 at the top level even where an earlier rule applies."""
    trace = LoopRuleTrace()
    ctx = _Context(max_degree, _normalize(inert), _normalize(assume_spherical), trace)
    return ctx.r5(expr), trace


@dataclass
class _Context:
    N: int
    inert: frozenset
    spherical: frozenset
    trace: LoopRuleTrace

    def fail(self, message: str):
        raise RuleError(message, self.trace)

    def attrs(self, e):
        return attrs(e, self.spherical)

    def loop(self, e: SpaceExpr) -> GradedSeries:
        a = self.attrs(e)
        if not a.simply_connected:
            self.fail(f"{e} is not known to be simply connected")
        if isinstance(e, Sphere):
            return self.trace.record("R1" if e.n % 2 else "R2", e, sphere_loop_series(e.n, self.N))
        if isinstance(e, Product):
            s = self.loop(e.left) * self.loop(e.right)
            return self.trace.record("R3", e, s)
        if a.rationally_spherical or a.contractible:
            g = reduced_homology(e, self.N + 1)
            return self.trace.record("R4", e, bott_samelson(g))
        if isinstance(e, (Attach, ConnectedSum)):
            return self.r5(e)
        self.fail(f"no rule applies to {e}")

    def r5(self, e: SpaceExpr) -> GradedSeries:
        a = self.attrs(e)
        if a.pd_dim is None:
            self.fail(f"{e} is not a Poincaré duality form")
        m = a.pd_dim
        try:
            skel = skeleton(e)
        except ValueError as exc:
            self.fail(str(exc))
        if not self.inert_top_cell(e, skel):
            self.fail(f"inertness of the top cell of {e} not established")
        s = attach_cell_series(self.loop(skel), m)
        return self.trace.record("R5", e, s)

    def inert_top_cell(self, e: SpaceExpr, skel: SpaceExpr) -> bool:
        if e in self.inert:
            return True
        # the generator-count criterion is a statement about duality complexes
        if duality_defects(e):
            return False
        count = self.attrs(skel).generator_count
        return count is not None and count > 1


def theriault_residual(whole_loop: GradedSeries, m: int) -> GradedSeries:
    """``P(ΩY) * P(Ω(ΩY ⋉ S^(m-1)))``: the skeleton's loop series predicted from the whole.

    ``whole_loop`` must run one degree past the result.
    """
    return splitting_rule(whole_loop, GradedSeries.monomial(m - 1, whole_loop.max_degree))


def pullback_loop_series(scenario, max_degree: int = DEFAULT_MAX_DEGREE) -> tuple[GradedSeries, LoopRuleTrace]:
    """Loop series of the pullback ``M`` as ``P(ΩL) * P(Ω(ΩL ⋉ X'))`` with ``X' = F ⋉ skel(B)``.

    ``scenario`` needs attributes ``F``, ``L``, ``B`` and optionally ``inert``.
    """
    inert = tuple(getattr(scenario, "inert", ()))
    skel_b = skeleton(scenario.B)
    ok, how = skeleton_is_spherical(scenario.B)
    if not ok:
        raise RuleError(f"skeleton {skel_b} of B is not known to be a rational wedge of spheres")
    hints = (skel_b,) if how == "ganea" else ()
    x_prime = HalfSmash(scenario.F, skel_b)
    xa = attrs(x_prime, hints)
    if not (xa.rationally_spherical or xa.contractible):
        raise RuleError(f"X' = {x_prime} is not known to be a rational wedge of spheres")

    _, trace = loop_series(scenario.L, max_degree, inert=inert, assume_spherical=hints)
    base, _ = loop_series(scenario.L, max_degree + 1, inert=inert, assume_spherical=hints)
    red = reduced_homology(x_prime, max_degree + 1)
    s = splitting_rule(base, red)
    trace.record("R6", f"{to_text(scenario.L)} with fibre {to_text(x_prime)}", s)
    return s, trace


__all__ = [
    "LoopRuleTrace",
    "RuleError",
    "TraceStep",
    "attach_cell_series",
    "attach_rule",
    "bott_samelson",
    "loop_series",
    "sphere_loop_series",
    "splitting_rule",
    "pullback_loop_series",
    "theriault_residual",
]
