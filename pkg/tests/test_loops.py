from types import SimpleNamespace

import pytest
from hypothesis import given, settings, strategies as st

from loopsplit.expr import Attach, Product, Sphere
from loopsplit.lang import parse
from loopsplit.loops import (
    RuleError,
    attach_rule,
    bott_samelson,
    loop_series,
    pullback_loop_series,
    sphere_loop_series,
    splitting_rule,
    theriault_residual,
)
from loopsplit.semantics import attrs, exact_reduced_homology, reduced_homology, skeleton
from loopsplit.series import GradedSeries

from .oracles import partitions_into, t, taylor, tensor_algebra_dims
from .strategies import pd_forms, sphere_wedges, two_sphere_products

N = 32


def coeffs(text, n=N, **kw):
    return list(loop_series(parse(text), n, **kw)[0])


class TestSpheres:
    def test_odd_sphere(self):
        assert coeffs("S^3", 10) == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]

    @pytest.mark.parametrize("n", range(2, 9))
    def test_all_spheres_are_free_on_one_generator(self, n):
        # rationally H(ΩS^n) is a polynomial or exterior-times-polynomial algebra of series 1/(1-t^{n-1})
        assert list(sphere_loop_series(n, 20)) == taylor(1 / (1 - t ** (n - 1)), 20)

    def test_even_sphere_closed_form(self):
        assert list(sphere_loop_series(4, 12)) == taylor((1 + t**3) / (1 - t**6), 12)

    def test_circle_rejected(self):
        with pytest.raises(RuleError, match="simply connected"):
            loop_series(Sphere(1))


class TestProducts:
    def test_s3_x_s4(self):
        s, trace = loop_series(parse("S^3 x S^4"), 10)
        assert list(s) == [partitions_into((2, 3), k) for k in range(11)]
        assert list(s) == [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2]
        assert trace.rules() == ["R1", "R2", "R3"]

    def test_s3_x_s4_by_cell_attachment(self):
        s, trace = attach_rule(parse("S^3 x S^4"), N)
        assert list(s) == taylor(1 / (1 - t**2 - t**3 + t**5), N)
        assert trace.rules() == ["R4", "R5"]

    def test_s2_x_s2_by_cell_attachment(self):
        s, _ = attach_rule(parse("S^2 x S^2"), 12)
        assert list(s) == [k + 1 for k in range(13)]
        assert s == loop_series(parse("S^2 x S^2"), 12)[0]


class TestConnectedSums:
    def test_triple_connected_sum(self):
        s, trace = loop_series(parse("(S^3 x S^4) # (S^3 x S^4) # (S^3 x S^4)"), N)
        expected = taylor(1 / (1 - 3 * t**2 - 3 * t**3 + t**5), N)
        assert expected[:6] == [1, 0, 3, 3, 9, 17]
        assert list(s) == expected
        assert trace.rules() == ["R4", "R5"]

    def test_mixed_summands(self):
        s = coeffs("(S^2 x S^5) # (S^3 x S^4)", 20)
        assert s == taylor(1 / (1 - t - t**2 - t**3 - t**4 + t**5), 20)

    def test_connected_sum_with_sphere(self):
        # S^n # Y is Y; skeleton pt v skel(Y)
        assert coeffs("S^7 # S^3 x S^4") == coeffs("S^3 x S^4")


class TestSphericalRule:
    @given(sphere_wedges)
    def test_bott_samelson_counts_words(self, e):
        n = 7
        degrees = [d - 1 for d, c in enumerate(exact_reduced_homology(e).coeffs) for _ in range(c)]
        assert list(loop_series(e, n)[0]) == tensor_algebra_dims(degrees, n)

    def test_half_smash(self):
        assert coeffs("hsmash(S^1, S^3 v S^3)", 12) == tensor_algebra_dims([2, 2, 3, 3], 12)

    def test_point(self):
        s, trace = loop_series(parse("pt"), 5)
        assert s == GradedSeries.one(5)
        assert trace.rules() == ["R4"]

    def test_needs_vanishing_low_degrees(self):
        with pytest.raises(RuleError):
            bott_samelson(GradedSeries.from_coeffs([0, 1], 4))


class TestFailures:
    def test_no_rule(self):
        with pytest.raises(RuleError, match="no rule"):
            loop_series(parse("(S^3 x S^4) v S^2"))

    def test_inertness_not_established(self):
        # rational CP^2: one generator on the skeleton
        cp2 = parse("attach(S^2, 4)")
        with pytest.raises(RuleError, match="inertness") as info:
            loop_series(cp2)
        assert info.value.trace is not None

    def test_inertness_assertion_discharges(self):
        e = parse("attach(S^3 v S^5, 8)")
        s, trace = loop_series(e, 10, inert=[e])
        assert trace.rules()[-1] == "R5"
        assert list(s) == taylor(1 / (1 - t**2 - t**4 + t**6), 10)

    def test_non_pd_attach(self):
        with pytest.raises(RuleError, match="Poincaré"):
            loop_series(parse("attach(S^3 x S^4, 5)"))


class TestSplittingRule:
    def test_hopf_pullback_factorization(self):
        base = loop_series(parse("S^3 x S^4"), N + 1)[0]
        red = reduced_homology(parse("hsmash(S^1, S^3 v S^3)"), N + 1)
        s = splitting_rule(base, red)
        assert list(s) == taylor(1 / (1 - 3 * t**2 - 3 * t**3 + t**5), N)

    def test_pullback_hopf(self):
        sc = SimpleNamespace(F=Sphere(1), L=parse("S^3 x S^4"), B=parse("S^3 x S^3"))
        s, trace = pullback_loop_series(sc, N)
        assert list(s) == taylor(1 / (1 - 3 * t**2 - 3 * t**3 + t**5), N)
        assert trace.rules() == ["R1", "R2", "R3", "R6"]

    def test_point_fibre_uses_skeleton_of_b(self):
        sc = SimpleNamespace(F=parse("pt"), L=parse("S^2 x S^2"), B=parse("S^2 x S^2"))
        s, _ = pullback_loop_series(sc, 16)
        # red(X') = 2t^2, so 1/((1-t)^2 - 2t)
        assert list(s) == taylor(1 / (1 - 4 * t + t**2), 16)

    def test_non_spherical_skeleton_rejected(self):
        sc = SimpleNamespace(F=Sphere(1), L=parse("S^4 x S^6"), B=parse("attach(S^3 x S^3, 9)"))
        with pytest.raises(RuleError, match="wedge of spheres"):
            pullback_loop_series(sc, 8)


# properties

@pytest.mark.parametrize("a", range(2, 7))
@pytest.mark.parametrize("b", range(2, 7))
def test_path_independence(a, b):
    e = Product(Sphere(a), Sphere(b))
    assert loop_series(e, N)[0] == attach_rule(e, N)[0]


@settings(max_examples=40)
@given(pd_forms())
def test_theriault_identity(e):
    m = attrs(e).pd_dim
    whole = loop_series(e, N + 1)[0]
    skel = loop_series(skeleton(e), N)[0]
    assert skel == theriault_residual(whole, m)


@settings(max_examples=40)
@given(st.one_of(pd_forms(), two_sphere_products, sphere_wedges))
def test_loop_series_are_dimension_counts(e):
    s, trace = loop_series(e, 24)
    assert s[0] == 1
    s.check_dimension_count()
    assert all(step.series[0] == 1 for step in trace.steps)


@settings(max_examples=30)
@given(pd_forms(), st.integers(1, 31))
def test_truncation_monotone(e, n):
    assert loop_series(e, N)[0].truncate(n) == loop_series(e, n)[0]


def test_trace_rendering():
    _, trace = loop_series(Attach(parse("S^3 v S^4"), 7), N)
    assert trace.render().splitlines()[-1] == "[R5] attach(S^3 v S^4, 7): 1/(1 - t^2 - t^3 + t^5)"
    assert trace.to_json()[-1]["rule"] == "R5"


def test_non_dual_top_cell_is_not_inert():
    # two generators on the skeleton, but the homology is not dual
    with pytest.raises(RuleError, match="inertness"):
        loop_series(parse("attach(S^3 x S^3, 9)"))
