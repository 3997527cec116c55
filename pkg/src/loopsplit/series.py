"""Truncated power series in one variable with exact integer coefficients.

Every homology and homotopy count in the package is carried by a
:class:`GradedSeries`: the coefficient of ``t^k`` is the dimension of the
degree ``k`` part of some graded rational vector space (or a signed residual
on the way to one).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_MAX_DEGREE = 32


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class GradedSeries:
    max_degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.max_degree < 0:
            raise SeriesError(f"max_degree must be >= 0, got {self.max_degree}")
        if len(self.coeffs) != self.max_degree + 1:
            raise SeriesError(
                f"expected {self.max_degree + 1} coefficients, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise SeriesError(f"coefficients must be integers, got {c!r}")

    # construction

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], max_degree: int = DEFAULT_MAX_DEGREE) -> GradedSeries:
        """Build a series from leading coefficients, padding with zeros or truncating."""
        cs = [int(c) for c in coeffs][: max_degree + 1]
        cs += [0] * (max_degree + 1 - len(cs))
        return cls(max_degree, tuple(cs))

    @classmethod
    def zero(cls, max_degree: int = DEFAULT_MAX_DEGREE) -> GradedSeries:
        return cls(max_degree, (0,) * (max_degree + 1))

    @classmethod
    def one(cls, max_degree: int = DEFAULT_MAX_DEGREE) -> GradedSeries:
        return cls.monomial(0, max_degree)

    @classmethod
    def monomial(cls, degree: int, max_degree: int = DEFAULT_MAX_DEGREE, coeff: int = 1) -> GradedSeries:
        """``coeff * t^degree``; vanishes when ``degree`` exceeds the truncation bound."""
        if degree < 0:
            raise SeriesError(f"negative degree {degree}")
        cs = [0] * (max_degree + 1)
        if degree <= max_degree:
            cs[degree] = coeff
        return cls(max_degree, tuple(cs))

    # access

    def __getitem__(self, k: int) -> int:
        if 0 <= k <= self.max_degree:
            return self.coeffs[k]
        if k < 0:
            raise IndexError(k)
        raise IndexError(f"degree {k} beyond truncation bound {self.max_degree}")

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def top_degree(self) -> int | None:
        """Largest degree with a nonzero coefficient, or None for the zero series."""
        for k in range(self.max_degree, -1, -1):
            if self.coeffs[k]:
                return k
        return None

    def low_degree(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def truncate(self, max_degree: int) -> GradedSeries:
        """Re-truncate to a smaller bound (or pad with zeros to a larger one)."""
        return GradedSeries.from_coeffs(self.coeffs, max_degree)

    def check_dimension_count(self, what: str = "series") -> GradedSeries:
        """Raise unless every coefficient is nonnegative; returns self for chaining."""
        for k, c in enumerate(self.coeffs):
            if c < 0:
                raise SeriesError(f"{what} has negative coefficient {c} in degree {k}")
        return self

    # arithmetic

    def _check_bound(self, other: GradedSeries):
        if not isinstance(other, GradedSeries):
            raise TypeError(f"expected GradedSeries, got {type(other).__name__}")
        if other.max_degree != self.max_degree:
            raise SeriesError(
                f"mismatched truncation bounds {self.max_degree} and {other.max_degree}"
            )

    def add(self, other: GradedSeries) -> GradedSeries:
        self._check_bound(other)
        return GradedSeries(self.max_degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def sub(self, other: GradedSeries) -> GradedSeries:
        self._check_bound(other)
        return GradedSeries(self.max_degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def neg(self) -> GradedSeries:
        return GradedSeries(self.max_degree, tuple(-a for a in self.coeffs))

    def scale(self, c: int) -> GradedSeries:
        return GradedSeries(self.max_degree, tuple(c * a for a in self.coeffs))

    def mul(self, other: GradedSeries) -> GradedSeries:
        """Cauchy product truncated at the common bound."""
        self._check_bound(other)
        n = self.max_degree
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(n - i + 1):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return GradedSeries(n, tuple(out))

    def invert(self) -> GradedSeries:
        """Multiplicative inverse of a series with constant term 1.

        Uses the triangular recursion ``b_k = -sum_{j=1..k} a_j b_{k-j}``, so
        the result stays integral.
        """
        if self.coeffs[0] != 1:
            raise SeriesError(
                f"can only invert series with constant term 1, got {self.coeffs[0]}"
            )
        n = self.max_degree
        a = self.coeffs
        support = [j for j in range(1, n + 1) if a[j]]
        b = [0] * (n + 1)
        b[0] = 1
        for k in range(1, n + 1):
            s = 0
            for j in support:
                if j > k:
                    break
                s += a[j] * b[k - j]
            b[k] = -s
        return GradedSeries(n, tuple(b))

    def pow(self, e: int) -> GradedSeries:
        if e < 0:
            raise SeriesError(f"negative exponent {e}; invert explicitly")
        result = GradedSeries.one(self.max_degree)
        base = self
        while e:
            if e & 1:
                result = result.mul(base)
            e >>= 1
            if e:
                base = base.mul(base)
        return result

    def shift_up(self) -> GradedSeries:
        """Multiply by ``t``; the top coefficient falls off the truncation."""
        return GradedSeries(self.max_degree, (0,) + self.coeffs[:-1])

    def shift_down(self) -> GradedSeries:
        """Divide by ``t``; requires a vanishing constant term."""
        if self.coeffs[0] != 0:
            raise SeriesError(f"shift_down needs zero constant term, got {self.coeffs[0]}")
        return GradedSeries(self.max_degree, self.coeffs[1:] + (0,))

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __neg__ = neg
    __pow__ = pow

    # rendering

    def to_text(self) -> str:
        return render_polynomial(self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> GradedSeries:
        return cls(len(data) - 1, tuple(int(c) for c in data))

    def __str__(self):
        return self.to_text()


def render_polynomial(coeffs: Sequence[int], var: str = "t") -> str:
    """Render ``c0 + c1*t + c2*t^2 + ...`` omitting zero terms and unit factors."""
    parts: list[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            term = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            term = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


def render_rational(series: GradedSeries) -> str:
    """Render a unit series compactly as ``1/(...)`` when its inverse is visibly a polynomial.

    The inverse counts as a polynomial when its nonzero terms stop at or
    below half the truncation bound; otherwise the expansion itself is shown.
    """
    if series.coeffs[0] == 1:
        inv = series.invert()
        top = inv.top_degree()
        if top is not None and top <= series.max_degree // 2:
            if top == 0:
                return "1"
            return f"1/({render_polynomial(inv.coeffs[: top + 1])})"
    return f"{series.to_text()} + O(t^{series.max_degree + 1})"


# functional spellings of the core operations

def add(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    return a.add(b)


def mul(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    return a.mul(b)


def invert(a: GradedSeries) -> GradedSeries:
    return a.invert()


def pow(a: GradedSeries, e: int) -> GradedSeries:  # noqa: A001
    return a.pow(e)


def shift_down(a: GradedSeries) -> GradedSeries:
    return a.shift_down()


def shift_up(a: GradedSeries) -> GradedSeries:
    return a.shift_up()
