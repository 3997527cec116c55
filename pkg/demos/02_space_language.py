"""
Writing spaces down
===================

Spheres glued by wedge, product and connected sum, plus half-smash,
suspension and a single top cell.
"""

from loopsplit import attrs, parse, reduced_homology, to_text

# the product binds tighter than the connected sum
e = parse("S^3 x S^4 # S^3 x S^4")
print(repr(e))
print("printed back:", to_text(e))

# reduced rational homology up to degree 10
print("homology:", reduced_homology(e, 10).to_text())

# the attributes the loop engine reads
a = attrs(e)
print("connectivity", a.connectivity, "| duality dimension", a.pd_dim, "| generators", a.generator_count)

# skel() removes the top cell while parsing
print("skeleton:", to_text(parse("skel(S^3 x S^4 # S^3 x S^4)")))

# malformed input points at the offending character
try:
    parse("S^3 x S^0")
except ValueError as exc:
    print(exc)
    print(exc.pointer())
