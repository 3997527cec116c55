"""
Rational homotopy ranks
=======================

Reading the ranks of the homotopy groups off a loop series, and a rough
growth diagnostic.
"""

from loopsplit import growth_diagnostic, loop_series, parse, pbw_forward, pbw_invert

# even spheres carry a second rational homotopy group in degree 2n - 1
for text in ("S^3", "S^4", "S^3 x S^4"):
    ranks = pbw_invert(loop_series(parse(text), 16)[0])
    groups = {k + 1: r for k, r in ranks.nonzero().items()}
    print(f"{text:<10} pi_k tensor Q: {groups}  -> {growth_diagnostic(ranks)}")

# a connected sum of products is hyperbolic: the ranks grow exponentially
s = loop_series(parse("(S^3 x S^4) # (S^3 x S^4) # (S^3 x S^4)"), 24)[0]
ranks = pbw_invert(s)
print(ranks.to_text())
print("diagnostic:", growth_diagnostic(ranks))

# the inversion is exact: rebuilding the series from the ranks is lossless
assert pbw_forward(ranks) == s
