"""
Loop space homology series
==========================

The dimensions of the rational homology of the loop space, computed by
a short list of rules and recorded step by step.
"""

from loopsplit import attach_rule, loop_series, parse
from loopsplit.series import render_rational

# a product: loop spaces multiply
s, trace = loop_series(parse("S^3 x S^4"), 10)
print(s.to_text())
print(trace.render())

# the same space seen as a two-cell skeleton with an inert top cell
s2, trace2 = attach_rule(parse("S^3 x S^4"), 10)
print(trace2.render())
assert s == s2

# a connected sum of three copies: only the inverse-series rule applies
s3, trace3 = loop_series(parse("(S^3 x S^4) # (S^3 x S^4) # (S^3 x S^4)"), 16)
print(render_rational(s3))
print("first coefficients:", list(s3)[:8])

# rational CP^2 has a one-generator skeleton, so no rule is allowed
try:
    loop_series(parse("attach(S^2, 4)"))
except Exception as exc:
    print("refused:", exc)
