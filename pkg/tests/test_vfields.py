from fractions import Fraction

import pytest

from bracketwidth.errors import (
    NeedTwoVariables,
    NotDivergenceFree,
    UnknownVariable,
)
from bracketwidth.exactpoly import AFFINE, LAURENT, Polynomial, VariableSpace, parse_poly
from bracketwidth.randgen import (
    rand_divfree_field,
    rand_poly,
    rand_ratcurve_element,
    rand_vfield,
    rng_for,
)
from bracketwidth.rings import SPACE_X, RatCurveRing, parse_ratcurve, ratcurve_from_poly
from bracketwidth.vfields import (
    PTVectorField,
    RatCurveField,
    format_vfield,
    parse_vfield,
    ratcurve_field_bracket,
    solve_bracket_affine,
    solve_bracket_divfree,
    solve_bracket_torus,
    solve_width2_ratcurve,
    vf_bracket,
    vf_divergence,
)

A2 = VariableSpace.make(x=AFFINE, y=AFFINE)
T1 = VariableSpace.make(t=LAURENT)
MIXED = VariableSpace.make(x=AFFINE, t=LAURENT)
SPACES = (A2, T1, MIXED)


def vf(space, **coeffs):
    return PTVectorField(space, {name: parse_poly(text, space)
                                 for name, text in coeffs.items()})


class TestBracketAndDivergence:
    def test_bracket_examples(self):
        assert vf_bracket(vf(A2, x="1"), vf(A2, x="x")) == vf(A2, x="1")
        assert vf_bracket(vf(A2, x="x"), vf(A2, y="y")).is_zero()
        assert vf_bracket(vf(A2, x="1"), vf(A2, y="x^2")) == vf(A2, y="2*x")

    def test_divergence_examples(self):
        assert vf_divergence(vf(A2, x="x")) == parse_poly("1", A2)
        assert vf_divergence(vf(T1, t="t")).is_zero()
        assert vf_divergence(vf(A2, x="x^2", y="x*y")) == parse_poly("3*x", A2)

    def test_bracket_laws_random(self):
        rng = rng_for(20242, "vfields", "laws")
        for space in SPACES:
            for _ in range(60):
                a, b, c = (rand_vfield(rng, space, 4) for _ in range(3))
                assert (vf_bracket(a, b) + vf_bracket(b, a)).is_zero()
                jac = (vf_bracket(a, vf_bracket(b, c))
                       + vf_bracket(b, vf_bracket(c, a))
                       + vf_bracket(c, vf_bracket(a, b)))
                assert jac.is_zero()

    def test_divergence_of_bracket(self):
        rng = rng_for(20242, "vfields", "div-identity")
        for space in SPACES:
            for _ in range(60):
                a = rand_vfield(rng, space, 4)
                b = rand_vfield(rng, space, 4)
                lhs = vf_divergence(vf_bracket(a, b))
                assert lhs == a.apply(vf_divergence(b)) - b.apply(vf_divergence(a))

    def test_divergence_leibniz(self):
        rng = rng_for(20242, "vfields", "div-leibniz")
        for space in SPACES:
            for _ in range(60):
                xi = rand_vfield(rng, space, 4)
                f = rand_poly(rng, space, 4)
                scaled = PTVectorField(space, {n: f * c for n, c in xi.coeffs.items()})
                assert vf_divergence(scaled) == f * vf_divergence(xi) + xi.apply(f)


class TestAffineSolver:
    def test_examples(self):
        assert solve_bracket_affine(vf(A2, x="x^2"), "x") == vf(A2, x="1/3*x^3")
        assert solve_bracket_affine(vf(A2, x="1"), "x") == vf(A2, x="x")
        got = solve_bracket_affine(vf(MIXED, t="x*t^-1"), "x")
        assert got == vf(MIXED, t="1/2*x^2*t^-1")

    def test_replay_random(self):
        rng = rng_for(20242, "vfields", "affine-replay")
        for space in (A2, MIXED):
            one = vf(space, **{space.names[0]: "1"})
            for _ in range(100):
                mu = rand_vfield(rng, space, 6)
                delta = solve_bracket_affine(mu, space.names[0])
                assert vf_bracket(one, delta) == mu

    def test_requires_affine_kind(self):
        with pytest.raises(UnknownVariable):
            solve_bracket_affine(vf(T1, t="t"), "t")


class TestTorusSolver:
    def test_examples(self):
        l, delta = solve_bracket_torus(vf(T1, t="t^-1"), "t")
        assert (l, delta) == (1, vf(T1, t="-1/2*t^-1"))
        l2, delta2 = solve_bracket_torus(vf(T1, t="1"), "t")
        assert (l2, delta2) == (2, vf(T1, t="-1/3*t^-1"))
        l0, delta0 = solve_bracket_torus(PTVectorField.zero(T1), "t")
        assert l0 == 0 and delta0.is_zero()

    def test_replay_random(self):
        rng = rng_for(20242, "vfields", "torus-replay")
        for space, tname in ((T1, "t"), (MIXED, "t")):
            for _ in range(100):
                mu = rand_vfield(rng, space, 6)
                l, delta = solve_bracket_torus(mu, tname)
                partner = PTVectorField(space, {tname: Polynomial.var(space, tname, l)})
                assert vf_bracket(partner, delta) == mu

    def test_requires_torus_kind(self):
        with pytest.raises(UnknownVariable):
            solve_bracket_torus(vf(A2, x="x"), "x")


class TestDivfreeSolver:
    def test_examples(self):
        # mu = y d/dx: antiderivative gives x*y d/dx, correction -(y^2/2) d/dy
        assert solve_bracket_divfree(vf(A2, x="y")) == vf(A2, x="x*y", y="-1/2*y^2")
        assert solve_bracket_divfree(vf(A2, x="1")) == vf(A2, x="x", y="-y")
        assert solve_bracket_divfree(vf(A2, y="x")) == vf(A2, y="1/2*x^2")

    def test_replay_and_divfree(self):
        rng = rng_for(20242, "vfields", "divfree")
        one = vf(A2, x="1")
        for _ in range(100):
            mu = rand_divfree_field(rng, A2, 4)
            eta = solve_bracket_divfree(mu)
            assert vf_bracket(one, eta) == mu
            assert vf_divergence(eta).is_zero()

    def test_preconditions(self):
        with pytest.raises(NotDivergenceFree):
            solve_bracket_divfree(vf(A2, x="x"))
        with pytest.raises(NeedTwoVariables):
            solve_bracket_divfree(vf(VariableSpace.make(x=AFFINE), x="1"))
        with pytest.raises(NeedTwoVariables):
            solve_bracket_divfree(PTVectorField.zero(MIXED))


class TestRatCurveWidth2:
    RING = RatCurveRing.from_text("0,1")

    def fields(self, ring):
        ddx = RatCurveField(ring, ratcurve_from_poly(ring, Polynomial.constant(SPACE_X, 1)))
        xdx = RatCurveField(ring, ratcurve_from_poly(ring, Polynomial.var(SPACE_X, "x")))
        return ddx, xdx

    def replay(self, mu):
        nu, delta = solve_width2_ratcurve(mu)
        ddx, xdx = self.fields(mu.ring)
        recomposed = (ratcurve_field_bracket(ddx, nu).coeff
                      + ratcurve_field_bracket(xdx, delta).coeff)
        return nu, delta, recomposed == mu.coeff

    def test_examples(self):
        mu = RatCurveField(self.RING, parse_ratcurve(self.RING, "(x-1)^-1"))
        nu, delta, ok = self.replay(mu)
        assert ok
        assert delta.coeff == parse_ratcurve(self.RING, "-1/2*(x-1)^-1")
        assert nu.coeff == parse_ratcurve(self.RING, "1/2*(x-1)^-1")

        mu2 = RatCurveField(self.RING, parse_ratcurve(self.RING, "x^2"))
        nu2, delta2, ok2 = self.replay(mu2)
        assert ok2 and delta2.coeff.is_zero()
        assert nu2.coeff == parse_ratcurve(self.RING, "1/3*x^3")

        ring0 = RatCurveRing.from_text("0")
        mu3 = RatCurveField(ring0, parse_ratcurve(ring0, "x^-1"))
        nu3, delta3, ok3 = self.replay(mu3)
        assert ok3 and nu3.coeff.is_zero()
        assert delta3.coeff == parse_ratcurve(ring0, "-1/2*x^-1")

    def test_replay_random(self):
        rng = rng_for(20242, "vfields", "ratcurve")
        for poles in ("0,1", "0,1,-1"):
            ring = RatCurveRing.from_text(poles)
            for _ in range(100):
                mu = RatCurveField(ring, rand_ratcurve_element(rng, ring, 4))
                _, _, ok = self.replay(mu)
                assert ok


class TestSerialization:
    def test_examples(self):
        xi = PTVectorField(MIXED, {
            "x": parse_poly("x^2", MIXED),
            "t": parse_poly("t^-1", MIXED).scale(Fraction(1, 2)),
        })
        text = format_vfield(xi)
        assert text == "x^2*d/dx + (1/2)*t^-1*d/dt"
        assert parse_vfield(text, MIXED) == xi

    def test_roundtrip_random(self):
        rng = rng_for(20242, "vfields", "serialize")
        for space in SPACES:
            for _ in range(100):
                xi = rand_vfield(rng, space, 4)
                assert parse_vfield(format_vfield(xi), space) == xi

    def test_zero(self):
        assert format_vfield(PTVectorField.zero(A2)) == "0"
        assert parse_vfield("0", A2).is_zero()
