"""Structural attributes and rational homology of space expressions.

Everything here is inferred by structural recursion over the expression
tree.  Connectivity is a sound lower bound, not an exact value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

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
from .lang import InputError
from .series import DEFAULT_MAX_DEGREE, GradedSeries

# connectivity of a contractible space
INFINITE_CONNECTIVITY = 1 << 30


class SemanticError(InputError):
    pass


@dataclass(frozen=True)
class SpaceAttrs:
    connectivity: int
    simply_connected: bool
    rationally_spherical: bool
    contractible: bool = False
    pd_dim: int | None = None
    generator_degrees: tuple[int, ...] | None = field(default=None, repr=False)

    @property
    def generator_count(self) -> int | None:
        if self.generator_degrees is None:
            return None
        return len(self.generator_degrees)


def dimension_bound(e: SpaceExpr) -> int:
    """An upper bound on the dimension of the CW complex ``e`` describes."""
    if isinstance(e, Sphere):
        return e.n
    if isinstance(e, Point):
        return 0
    if isinstance(e, (Wedge, ConnectedSum)):
        return max(dimension_bound(e.left), dimension_bound(e.right))
    if isinstance(e, (Product, Smash, HalfSmash)):
        return dimension_bound(e.left) + dimension_bound(e.right)
    if isinstance(e, Suspension):
        return dimension_bound(e.inner) + 1
    if isinstance(e, Attach):
        return max(dimension_bound(e.inner), e.m)
    raise TypeError(f"not a space expression: {e!r}")


def reduced_homology(e: SpaceExpr, max_degree: int = DEFAULT_MAX_DEGREE) -> GradedSeries:
    """Reduced rational homology dimensions of ``e`` by degree, truncated at ``max_degree``."""
    N = max_degree
    if isinstance(e, Sphere):
        return GradedSeries.monomial(e.n, N)
    if isinstance(e, Point):
        return GradedSeries.zero(N)
    if isinstance(e, Wedge):
        return reduced_homology(e.left, N) + reduced_homology(e.right, N)
    if isinstance(e, Product):
        one = GradedSeries.one(N)
        a = reduced_homology(e.left, N)
        b = reduced_homology(e.right, N)
        return (one + a) * (one + b) - one
    if isinstance(e, Smash):
        return reduced_homology(e.left, N) * reduced_homology(e.right, N)
    if isinstance(e, Suspension):
        return reduced_homology(e.inner, N).shift_up()
    if isinstance(e, HalfSmash):
        a = reduced_homology(e.left, N)
        return (GradedSeries.one(N) + a) * reduced_homology(e.right, N)
    if isinstance(e, Attach):
        return reduced_homology(e.inner, N) + GradedSeries.monomial(e.m, N)
    if isinstance(e, ConnectedSum):
        n = _connected_sum_dim(e)
        return (
            reduced_homology(skeleton(e.left), N)
            + reduced_homology(skeleton(e.right), N)
            + GradedSeries.monomial(n, N)
        )
    raise TypeError(f"not a space expression: {e!r}")


def exact_reduced_homology(e: SpaceExpr) -> GradedSeries:
    """Reduced homology truncated at the dimension bound, so nothing is lost."""
    return reduced_homology(e, dimension_bound(e))


def _connected_sum_dim(e: ConnectedSum) -> int:
    a = attrs(e.left).pd_dim
    b = attrs(e.right).pd_dim
    if a is None or b is None:
        bad = e.left if a is None else e.right
        raise SemanticError(f"connected sum operand {bad} is not a Poincaré duality form")
    if a != b:
        raise SemanticError(f"connected sum of dimensions {a} and {b} in {e}")
    return a


def _wedge_of_spheres_degrees(e: SpaceExpr) -> tuple[int, ...]:
    """Sphere dimensions of a rationally spherical expression, with multiplicity."""
    red = exact_reduced_homology(e)
    return tuple(k for k, c in enumerate(red.coeffs) for _ in range(c))


def _is_co_h(e: SpaceExpr, a: SpaceAttrs) -> bool:
    # suspensions and wedges of them, including S^1
    if a.rationally_spherical or isinstance(e, (Sphere, Suspension)):
        return True
    if isinstance(e, Wedge):
        return all(_is_co_h(c, attrs(c)) or attrs(c).contractible for c in e.children())
    return False


def attrs(e: SpaceExpr, assume_spherical: Iterable[SpaceExpr] = ()) -> SpaceAttrs:
    """Infer connectivity, sphericality, PD dimension and generator degrees.

    ``assume_spherical`` lists sub-expressions already known (for instance via
    the Ganea criterion) to be rationally wedges of spheres.
    """
    hints = frozenset(assume_spherical)
    if not hints:
        return _attrs(e)
    return _attrs_hinted(e, hints)


@lru_cache(maxsize=4096)
def _attrs(e: SpaceExpr) -> SpaceAttrs:
    return _attrs_hinted(e, frozenset())


def _attrs_hinted(e: SpaceExpr, hints: frozenset) -> SpaceAttrs:
    a = _attrs_raw(e, hints)
    if e in hints and not a.rationally_spherical and a.simply_connected and not a.contractible:
        a = SpaceAttrs(
            connectivity=a.connectivity,
            simply_connected=True,
            rationally_spherical=True,
            pd_dim=a.pd_dim,
            generator_degrees=_wedge_of_spheres_degrees(e),
        )
    return a


def _attrs_raw(e: SpaceExpr, hints: frozenset) -> SpaceAttrs:
    sub = (lambda c: _attrs_hinted(c, hints)) if hints else _attrs

    if isinstance(e, Sphere):
        return SpaceAttrs(
            connectivity=e.n - 1,
            simply_connected=e.n >= 2,
            rationally_spherical=e.n >= 2,
            pd_dim=e.n,
            generator_degrees=(e.n,),
        )
    if isinstance(e, Point):
        return SpaceAttrs(
            connectivity=INFINITE_CONNECTIVITY,
            simply_connected=True,
            rationally_spherical=False,
            contractible=True,
            generator_degrees=(),
        )

    if isinstance(e, (Wedge, Product)):
        a, b = sub(e.left), sub(e.right)
        conn = min(a.connectivity, b.connectivity)
        contractible = a.contractible and b.contractible
        gens = None
        if a.generator_degrees is not None and b.generator_degrees is not None:
            gens = tuple(sorted(a.generator_degrees + b.generator_degrees))
        if isinstance(e, Wedge):
            spherical = (
                not contractible
                and (a.rationally_spherical or a.contractible)
                and (b.rationally_spherical or b.contractible)
            )
            pd = None
        else:
            spherical = (a.contractible and b.rationally_spherical) or (
                b.contractible and a.rationally_spherical
            )
            pd = a.pd_dim + b.pd_dim if a.pd_dim is not None and b.pd_dim is not None else None
        return SpaceAttrs(conn, conn >= 1, spherical, contractible, pd, gens)

    if isinstance(e, Suspension):
        a = sub(e.inner)
        conn = min(a.connectivity + 1, INFINITE_CONNECTIVITY)
        spherical = not a.contractible
        return _spherical_attrs(e, conn, spherical, a.contractible)

    if isinstance(e, Smash):
        a, b = sub(e.left), sub(e.right)
        contractible = a.contractible or b.contractible
        conn = min(a.connectivity + b.connectivity + 1, INFINITE_CONNECTIVITY)
        co_h = _is_co_h(e.left, a) or _is_co_h(e.right, b)
        spherical = co_h and conn >= 1 and not contractible
        return _spherical_attrs(e, conn, spherical, contractible)

    if isinstance(e, HalfSmash):
        a, b = sub(e.left), sub(e.right)
        # X ⋉ Y ≃ (X ∧ Y) ∨ Y for co-H Y; all expressions here are connected
        conn = b.connectivity
        contractible = b.contractible
        spherical = b.rationally_spherical and not contractible
        return _spherical_attrs(e, conn, spherical, contractible)

    if isinstance(e, Attach):
        a = sub(e.inner)
        conn = min(a.connectivity, e.m - 1)
        inner_top = exact_reduced_homology(e.inner).top_degree()
        pd = e.m if inner_top is None or inner_top < e.m else None
        return SpaceAttrs(conn, conn >= 1, False, False, pd, None)

    if isinstance(e, ConnectedSum):
        n = _connected_sum_dim(e)
        a, b = sub(e.left), sub(e.right)
        conn = min(a.connectivity, b.connectivity)
        return SpaceAttrs(conn, conn >= 1, False, False, n, None)

    raise TypeError(f"not a space expression: {e!r}")


def _spherical_attrs(e: SpaceExpr, conn: int, spherical: bool, contractible: bool) -> SpaceAttrs:
    if contractible:
        return SpaceAttrs(INFINITE_CONNECTIVITY, True, False, True, None, ())
    gens = _wedge_of_spheres_degrees(e) if spherical else None
    return SpaceAttrs(conn, conn >= 1, spherical, False, None, gens)


def skeleton(e: SpaceExpr) -> SpaceExpr:
    """The complex obtained by removing the top cell of a supported PD form.

    Supported forms: ``attach(Y, m)``, connected sums, products of exactly two
    spheres and spheres.  Anything else raises :class:`SemanticError`.
    """
    if isinstance(e, Attach):
        return e.inner
    if isinstance(e, ConnectedSum):
        _connected_sum_dim(e)
        return Wedge(skeleton(e.left), skeleton(e.right))
    if isinstance(e, Product) and isinstance(e.left, Sphere) and isinstance(e.right, Sphere):
        return Wedge(e.left, e.right)
    if isinstance(e, Sphere):
        return Point()
    raise SemanticError(f"skeleton not supported for {e}")


def check_ganea(pd_expr: SpaceExpr) -> bool:
    """Whether the skeleton of a k-connected n-dimensional PD form is a suspension (n <= 3k+1)."""
    a = attrs(pd_expr)
    if a.pd_dim is None:
        raise SemanticError(f"{pd_expr} is not a Poincaré duality form")
    return a.pd_dim <= 3 * a.connectivity + 1


def duality_defects(pd_expr: SpaceExpr) -> list[int]:
    """Degrees k where the homology of a PD form breaks ``b_k = b_{n-k}`` or ``b_n = 1``."""
    n = attrs(pd_expr).pd_dim
    if n is None:
        raise SemanticError(f"{pd_expr} is not a Poincaré duality form")
    red = reduced_homology(pd_expr, n)
    full = red + GradedSeries.one(n)
    return [k for k in range(n + 1) if full[k] != full[n - k]]


def skeleton_is_spherical(pd_expr: SpaceExpr) -> tuple[bool, str]:
    """Decide whether ``skeleton(pd_expr)`` is rationally a wedge of spheres.

    Returns the answer and the rule that settled it: ``"structure"`` when the
    skeleton is visibly spherical, ``"ganea"`` when only the connectivity
    criterion applies (and the homology passes the duality check).
    """
    skel = skeleton(pd_expr)
    sa = attrs(skel)
    if sa.rationally_spherical or sa.contractible:
        return True, "structure"
    if not duality_defects(pd_expr) and check_ganea(pd_expr) and sa.simply_connected:
        return True, "ganea"
    return False, "none"
