"""Rational homotopy ranks from loop space homology series.

By Milnor–Moore, ``H_*(ΩZ; Q)`` is the universal enveloping algebra of the
rational homotopy Lie algebra, and PBW factors its series as

    prod_{k odd} (1 + t^k)^{l_k} * prod_{k even} (1 - t^k)^{-l_k}

where ``l_k`` is the rank of ``π_{k+1}(Z) ⊗ Q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .series import GradedSeries


class PBWError(ValueError):
    """The series is not that of a graded universal enveloping algebra."""

    def __init__(self, message: str, degree: int):
        self.degree = degree
        super().__init__(message)


@dataclass(frozen=True)
class RankTable:
    # ranks[k - 1] = l_k = rank of π_{k+1} ⊗ Q, for k = 1..N
    ranks: tuple[int, ...]

    @classmethod
    def from_mapping(cls, ranks: dict[int, int], max_degree: int) -> RankTable:
        return cls(tuple(ranks.get(k, 0) for k in range(1, max_degree + 1)))

    @property
    def max_degree(self) -> int:
        return len(self.ranks)

    def __getitem__(self, k: int) -> int:
        """Rank of the degree ``k`` part of the homotopy Lie algebra, ``1 <= k <= N``."""
        if not 1 <= k <= len(self.ranks):
            raise IndexError(k)
        return self.ranks[k - 1]

    def homotopy_rank(self, j: int) -> int:
        """Rank of ``π_j ⊗ Q`` for ``2 <= j <= N + 1``."""
        return self[j - 1]

    def nonzero(self) -> dict[int, int]:
        """``{k: l_k}`` for nonzero entries, keyed by Lie algebra degree."""
        return {k: r for k, r in enumerate(self.ranks, start=1) if r}

    def __add__(self, other: RankTable) -> RankTable:
        if len(other.ranks) != len(self.ranks):
            raise ValueError("rank tables of different length")
        return RankTable(tuple(a + b for a, b in zip(self.ranks, other.ranks)))

    def to_text(self) -> str:
        width = len(f"pi_{len(self.ranks) + 1}⊗Q")
        lines = [f"{'pi_k⊗Q':<{width}}  rank"]
        for k, r in enumerate(self.ranks, start=1):
            lines.append(f"{f'pi_{k + 1}⊗Q':<{width}}  {r}")
        return "\n".join(lines)

    def to_json(self) -> list[dict]:
        return [{"k": k + 1, "rank": r} for k, r in enumerate(self.ranks, start=1)]


def pbw_invert(series: GradedSeries) -> RankTable:
    """Peel off PBW factors degree by degree to recover the ranks ``l_1..l_N``."""
    if series[0] != 1:
        raise PBWError(f"constant coefficient must be 1, got {series[0]}", 0)
    series.check_dimension_count("loop series")
    N = series.max_degree
    one = GradedSeries.one(N)
    residual = series
    ranks = []
    for k in range(1, N + 1):
        l_k = residual[k]
        if l_k < 0:
            raise PBWError(
                f"negative rank {l_k} in degree {k}: not a universal enveloping algebra series",
                k,
            )
        if l_k:
            factor = one - GradedSeries.monomial(k, N) if k % 2 == 0 else (
                one + GradedSeries.monomial(k, N)
            ).invert()
            residual = residual * factor.pow(l_k)
        ranks.append(l_k)
    return RankTable(tuple(ranks))


def pbw_forward(ranks: RankTable | Sequence[int], max_degree: int | None = None) -> GradedSeries:
    """Series of the enveloping algebra with the given ranks (independent of :func:`pbw_invert`)."""
    if not isinstance(ranks, RankTable):
        ranks = RankTable(tuple(ranks))
    N = ranks.max_degree if max_degree is None else max_degree
    one = GradedSeries.one(N)
    out = one
    for k, l_k in enumerate(ranks.ranks[:N], start=1):
        if not l_k:
            continue
        t_k = GradedSeries.monomial(k, N)
        if k % 2:
            out = out * (one + t_k).pow(l_k)
        else:
            out = out * (one - t_k).invert().pow(l_k)
    return out


ELLIPTIC = "elliptic-consistent"
HYPERBOLIC = "hyperbolic-consistent"
INCONCLUSIVE = "inconclusive"


def growth_diagnostic(ranks: RankTable) -> str:
    """Classify finitely many ranks as consistent with ellipticity or hyperbolicity.

    Elliptic-consistent: every rank above half the table length vanishes.
    Hyperbolic-consistent: each doubling window ``l_{n+1} + ... + l_{2n}``
    strictly exceeds ``l_1 + ... + l_n`` for all ``n`` from the first
    nonzero degree to half the table length.
    """
    N = ranks.max_degree
    half = N // 2
    if not any(ranks.ranks[half:]):
        return ELLIPTIC
    nz = ranks.nonzero()
    n0 = min(nz)
    if n0 > half:
        return INCONCLUSIVE
    prefix = [0]
    for r in ranks.ranks:
        prefix.append(prefix[-1] + r)
    for n in range(n0, half + 1):
        window = prefix[2 * n] - prefix[n]
        if window <= prefix[n]:
            return INCONCLUSIVE
    return HYPERBOLIC


@dataclass
class HyperbolicityReport:
    subject: str
    criterion: str  # 'satisfied', 'not satisfied' or 'not checkable'
    criterion_detail: str
    growth: str
    ranks: RankTable

    @property
    def verdict(self) -> str:
        # only the sufficient criterion can certify hyperbolicity
        return "hyperbolic" if self.criterion == "satisfied" else INCONCLUSIVE

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "verdict": self.verdict,
            "criterion": self.criterion,
            "criterion_detail": self.criterion_detail,
            "growth": self.growth,
            "ranks": self.ranks.to_json(),
        }

    def to_text(self) -> str:
        nz = self.ranks.nonzero()
        shown = ", ".join(f"pi_{k + 1}: {r}" for k, r in list(nz.items())[:8])
        return "\n".join(
            [
                f"subject: {self.subject}",
                f"verdict: {self.verdict}",
                f"criterion: {self.criterion} ({self.criterion_detail})",
                f"growth diagnostic: {self.growth}",
                f"nonzero ranks: {shown}{', ...' if len(nz) > 8 else ''}",
            ]
        )


def _generator_criterion(scenario) -> tuple[str, str]:
    from .semantics import attrs, reduced_homology, skeleton, skeleton_is_spherical
    from .verify import check_hypotheses

    failed = [h.name for h in check_hypotheses(scenario) if h.required and not h.passed]
    if failed:
        return "not checkable", f"hypotheses fail: {', '.join(failed)}"
    ok, how = skeleton_is_spherical(scenario.B)
    if not ok:
        return "not checkable", "skel(B) not known to be a suspension"
    skel = skeleton(scenario.B)
    hints = (skel,) if how == "ganea" else ()
    degrees = attrs(skel, hints).generator_degrees
    if degrees is None:
        return "not checkable", "generators of H*(skel B) unknown"
    high = sum(1 for d in degrees if d >= 2)
    f_contractible = reduced_homology(scenario.F).is_zero() or attrs(scenario.F).contractible
    if high > 1:
        return "satisfied", f"H*(skel B) has {high} generators of degree >= 2"
    if high == 1 and not f_contractible:
        return "satisfied", "H*(skel B) has one generator of degree >= 2 and F is not rationally contractible"
    return "not satisfied", f"H*(skel B) has {high} generator(s) of degree >= 2" + (
        ", F rationally contractible" if f_contractible else ""
    )


def hyperbolicity_report(subject, max_degree: int = 32) -> HyperbolicityReport:
    """Generator criterion (scenarios only) plus the finite growth diagnostic on ``ΩM`` or ``ΩZ``."""
    from .expr import SpaceExpr
    from .lang import to_text
    from .loops import loop_series, pullback_loop_series

    if isinstance(subject, SpaceExpr):
        series, _ = loop_series(subject, max_degree)
        criterion, detail = "not checkable", "criterion concerns pullback scenarios"
        name = to_text(subject)
    else:
        series, _ = pullback_loop_series(subject, max_degree)
        criterion, detail = _generator_criterion(subject)
        name = subject.name
    ranks = pbw_invert(series)
    return HyperbolicityReport(name, criterion, detail, growth_diagnostic(ranks), ranks)
