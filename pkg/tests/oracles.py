"""Independent reference computations used to freeze expected values.

None of these touch loopsplit's series arithmetic.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

import sympy

t = sympy.Symbol("t")


def taylor(expr, n):
    """First ``n + 1`` Taylor coefficients of a sympy expression in ``t``, as ints."""
    poly = sympy.series(expr, t, 0, n + 1).removeO()
    out = [poly.coeff(t, k) for k in range(n + 1)]
    out[0] = poly.subs(t, 0)
    assert all(c == int(c) for c in out)
    return [int(c) for c in out]


def long_division(denominator, n):
    """Coefficients of ``1/denominator`` by schoolbook long division over Fractions."""
    den = [Fraction(c) for c in denominator]
    remainder = [Fraction(1)] + [Fraction(0)] * (n + len(den))
    quotient = []
    for k in range(n + 1):
        q = remainder[k] / den[0]
        quotient.append(q)
        for j, d in enumerate(den):
            remainder[k + j] -= q * d
    assert all(q.denominator == 1 for q in quotient)
    return [int(q) for q in quotient]


def partitions_into(parts, n):
    """Number of ways to write ``n`` as an unordered sum of the given part sizes (brute force)."""

    @lru_cache(None)
    def count(rest, i):
        if rest == 0:
            return 1
        if i == len(parts):
            return 0
        return sum(count(rest - j * parts[i], i + 1) for j in range(rest // parts[i] + 1))

    return count(n, 0)


def tensor_algebra_dims(generator_degrees, n):
    """Dimensions of the tensor algebra on generators of the given degrees, by enumerating words."""
    dims = [0] * (n + 1)
    dims[0] = 1
    gens = [d for d in generator_degrees if d <= n]
    for length in range(1, n + 1):
        if min(gens, default=n + 1) * length > n:
            break
        for word in product(gens, repeat=length):
            s = sum(word)
            if s <= n:
                dims[s] += 1
    return dims


def ranks_from_log(coeffs):
    """Homotopy ranks from ``log`` of an enveloping algebra series.

    ``log prod (1+t^k)^{l_k} (1-t^k)^{-l_k}`` has ``n``-th coefficient
    ``(1/n) sum_{k|n} k l_k e(k, n/k)`` with ``e = 1`` for even ``k`` and
    ``(-1)^(j+1)`` for odd ``k``; solve degree by degree.
    """
    n_max = len(coeffs) - 1
    a = [Fraction(c) for c in coeffs]
    # log of the series via (log f)' = f'/f
    log = [Fraction(0)] * (n_max + 1)
    for n in range(1, n_max + 1):
        s = n * a[n] - sum(k * log[k] * a[n - k] for k in range(1, n))
        log[n] = s / n
    ranks = {}
    for n in range(1, n_max + 1):
        total = n * log[n]
        for k in range(1, n):
            if n % k == 0 and ranks.get(k):
                j = n // k
                sign = 1 if k % 2 == 0 else (-1) ** (j + 1)
                total -= k * ranks[k] * sign
        assert total % n == 0
        ranks[n] = int(total / n)
    return [ranks[k] for k in range(1, n_max + 1)]


def product_cells(sphere_dims, n):
    """Reduced homology of a product of spheres by counting cells of the product CW structure."""
    dims = [0] * (n + 1)
    for choice in product((0, 1), repeat=len(sphere_dims)):
        d = sum(c * s for c, s in zip(choice, sphere_dims))
        if 0 < d <= n:
            dims[d] += 1
    return dims
