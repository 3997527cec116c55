"""Expression trees describing spaces built from spheres."""

from __future__ import annotations

from dataclasses import dataclass


class SpaceExpr:
    """Base class of all space expressions. Nodes are immutable and hashable."""

    def children(self) -> tuple[SpaceExpr, ...]:
        return ()

    def __str__(self):
        from .lang import to_text

        return to_text(self)


@dataclass(frozen=True, repr=False)
class Sphere(SpaceExpr):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"sphere index must be >= 1, got {self.n!r}")

    def __repr__(self):
        return f"Sphere({self.n})"


@dataclass(frozen=True, repr=False)
class Point(SpaceExpr):
    def __repr__(self):
        return "Point()"


@dataclass(frozen=True)
class _Binary(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr

    def children(self):
        return (self.left, self.right)


class Wedge(_Binary):
    pass


class Product(_Binary):
    pass


class Smash(_Binary):
    pass


class HalfSmash(_Binary):
    """``left ⋉ right``: ``left x right`` with ``left x basepoint`` collapsed."""


class ConnectedSum(_Binary):
    """Connected sum of two Poincaré duality forms of equal dimension."""


@dataclass(frozen=True)
class Suspension(SpaceExpr):
    inner: SpaceExpr

    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class Attach(SpaceExpr):
    """``inner ∪ e^m``. The attaching map is deliberately not recorded."""

    inner: SpaceExpr
    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError(f"attached cell dimension must be >= 2, got {self.m!r}")

    def children(self):
        return (self.inner,)


def wedge_all(parts: list[SpaceExpr]) -> SpaceExpr:
    """Left-nested wedge of the given parts; the empty wedge is the point."""
    if not parts:
        return Point()
    out = parts[0]
    for p in parts[1:]:
        out = Wedge(out, p)
    return out
