"""
Truncated graded series
=======================

Exact integer power series cut off at a fixed degree, the arithmetic every
other module is built on.
"""

from loopsplit.series import GradedSeries, render_rational

N = 12

# a polynomial and its inverse as a truncated series
p = GradedSeries.from_coeffs([1, 0, -1, -1, 0, 1], N)
q = p.invert()
print("p       =", p.to_text())
print("1/p     =", q.to_text())
print("p * 1/p =", (p * q).to_text())

# the renderer recognizes short inverses
print("rendered:", render_rational(q))

# shifting by one degree corresponds to looping a suspension
t3 = GradedSeries.monomial(3, N)
print("t^3 shifted down:", t3.shift_down().to_text())

# series are values: equal coefficients, equal objects
assert q == GradedSeries.from_coeffs(list(q), N)
