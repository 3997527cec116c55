"""Hypothesis strategies for space expressions."""

from hypothesis import strategies as st

from loopsplit.expr import (
    Attach,
    ConnectedSum,
    HalfSmash,
    Point,
    Product,
    Smash,
    Sphere,
    Suspension,
    Wedge,
)

spheres = st.integers(1, 9).map(Sphere)
simply_connected_spheres = st.integers(2, 7).map(Sphere)


def _extend(children):
    return st.one_of(
        st.builds(Wedge, children, children),
        st.builds(Product, children, children),
        st.builds(Smash, children, children),
        st.builds(HalfSmash, children, children),
        st.builds(ConnectedSum, children, children),
        st.builds(Suspension, children),
        st.builds(Attach, children, st.integers(2, 12)),
    )


# syntactically valid trees, semantics ignored
any_expr = st.recursive(st.one_of(spheres, st.just(Point())), _extend, max_leaves=8)


def _wedge_ext(children):
    return st.builds(Wedge, children, children)


# rational wedges of simply connected spheres
sphere_wedges = st.recursive(simply_connected_spheres, _wedge_ext, max_leaves=5)

two_sphere_products = st.builds(
    Product, st.integers(2, 6).map(Sphere), st.integers(2, 6).map(Sphere)
)


@st.composite
def pd_forms(draw, max_summands=3):
    """Connected sums of products of two spheres sharing one total dimension, or spheres."""
    n = draw(st.integers(4, 11))
    pieces = []
    for _ in range(draw(st.integers(1, max_summands))):
        a = draw(st.integers(2, n - 2))
        pieces.append(Product(Sphere(a), Sphere(n - a)))
    out = pieces[0]
    for p in pieces[1:]:
        out = ConnectedSum(out, p)
    return out
