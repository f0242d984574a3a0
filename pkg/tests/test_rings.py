from fractions import Fraction

import pytest

from bracketwidth.errors import MixedRings, NotInImage, UndeclaredPole, ValidationError
from bracketwidth.exactpoly import Polynomial, dense_eval, parse_poly, univariate_coeffs
from bracketwidth.randgen import rand_dan_element, rand_ratcurve_element, rng_for
from bracketwidth.rings import (
    SPACE_LOC,
    SPACE_X,
    SPACE_XY,
    SPACE_XYZ,
    SPACE_Z,
    CurveRing,
    DanRing,
    RatCurveRing,
    curve_from_text,
    curve_normalize,
    dan_delocalize,
    dan_from_text,
    dan_localize,
    dan_mul,
    dan_normalize,
    format_dan,
    format_ratcurve,
    parse_ratcurve,
    ratcurve_normalize,
)

RING = DanRing.from_text("z^2-1")


class TestDanRing:
    def test_rejects_non_squarefree(self):
        with pytest.raises(ValidationError) as err:
            DanRing.from_text("z^2")
        assert err.value.code == "not_squarefree"

    def test_rejects_constants(self):
        with pytest.raises(ValidationError):
            DanRing.from_text("3")

    def test_normalize_defining_relation(self):
        e = dan_from_text(RING, "x*y")
        assert e.A.is_zero() and e.B.is_zero() and e.c == RING.p

    def test_normalize_higher_powers(self):
        e = dan_from_text(RING, "x^2*y")
        assert e.A == RING.p.cast(e.A.space) and e.B.is_zero() and e.c.is_zero()
        e2 = dan_from_text(RING, "x^2*y^2")
        assert e2.c == RING.p * RING.p and e2.A.is_zero() and e2.B.is_zero()

    def test_normalize_idempotent(self):
        rng = rng_for(20241, "rings", "dan-idem")
        for _ in range(50):
            e = rand_dan_element(rng, RING, 4)
            assert dan_normalize(RING, e.raw()) == e

    def test_mul_examples(self):
        x, y, z = (dan_from_text(RING, t) for t in "xyz")
        assert x * y == dan_from_text(RING, "z^2-1")
        both = (x + y) * z
        assert both.A == parse_poly("z", both.A.space)
        assert both.B == parse_poly("z", both.B.space)
        assert both.c.is_zero()
        ysq = y * y
        assert ysq.B == parse_poly("y", ysq.B.space)

    def test_mixed_rings_rejected(self):
        other = DanRing.from_text("z^3-z")
        with pytest.raises(MixedRings):
            dan_mul(dan_from_text(RING, "x"), dan_from_text(other, "x"))


class TestDanLocalization:
    def test_examples(self):
        y = dan_from_text(RING, "y")
        assert dan_localize(y) == parse_poly("(z^2-1)*x^-1", SPACE_LOC)
        assert dan_localize(dan_from_text(RING, "x*y")) == parse_poly("z^2-1", SPACE_LOC)
        assert dan_localize(dan_from_text(RING, "x^2+z")) == parse_poly("x^2+z", SPACE_LOC)

    def test_delocalize_examples(self):
        assert dan_delocalize(RING, parse_poly("(z^2-1)*x^-1", SPACE_LOC)) == \
            dan_from_text(RING, "y")
        assert dan_delocalize(RING, parse_poly("x^3", SPACE_LOC)) == \
            dan_from_text(RING, "x^3")

    def test_delocalize_rejects_non_divisible(self):
        with pytest.raises(NotInImage):
            dan_delocalize(RING, parse_poly("x^-1*z", SPACE_LOC))

    def test_roundtrip_and_homomorphism(self):
        rng = rng_for(20241, "rings", "dan-loc")
        for _ in range(200):
            a = rand_dan_element(rng, RING, 4)
            b = rand_dan_element(rng, RING, 4)
            assert dan_delocalize(RING, dan_localize(a)) == a
            assert dan_localize(a * b) == dan_localize(a) * dan_localize(b)

    def test_format(self):
        e = dan_from_text(RING, "x*z + y + 3")
        assert format_dan(e) == "x*(z) + y*(1) + (3)"


class TestCurveRing:
    def test_validation(self):
        with pytest.raises(ValidationError) as err:
            CurveRing.from_text("x^2")
        assert err.value.code == "even_degree"
        with pytest.raises(ValidationError) as err:
            CurveRing.from_text("x^3")  # gcd(x^3, 3x^2) = x^2
        assert err.value.code == "not_squarefree"
        with pytest.raises(ValidationError) as err:
            CurveRing.from_text("2*x^3 - 1")
        assert err.value.code == "not_monic"
        assert CurveRing.from_text("x^3-1").genus == 1
        assert CurveRing.from_text("x^5-x+1").genus == 2

    def test_normalize_defining_relation(self):
        ring = CurveRing.from_text("x^3-1")
        e = curve_from_text(ring, "y^2")
        assert e.a == ring.h and e.b.is_zero()
        e3 = curve_from_text(ring, "y^3")
        assert e3.a.is_zero() and e3.b == ring.h

    def test_product_formula_matches_raw_reduction(self):
        # oracle: multiply raw representatives in k[x,y], then reduce;
        # the closed product formula must agree
        ring = CurveRing.from_text("x^3-1")
        rng = rng_for(20241, "rings", "curve-mul")
        from bracketwidth.randgen import rand_curve_element
        for _ in range(100):
            e1 = rand_curve_element(rng, ring, 4)
            e2 = rand_curve_element(rng, ring, 4)
            assert e1 * e2 == curve_normalize(ring, e1.raw() * e2.raw())


class TestRatCurve:
    RING = RatCurveRing.from_text("0,1")

    def test_duplicate_poles_rejected(self):
        with pytest.raises(ValidationError):
            RatCurveRing((Fraction(0), Fraction(0)))

    def test_partial_fraction_examples(self):
        e = parse_ratcurve(self.RING, "1/(x*(x-1))")
        assert e.polar_map() == {(0, 1): Fraction(-1), (1, 1): Fraction(1)}
        assert e.poly.is_zero()
        e2 = parse_ratcurve(self.RING, "x^2/(x-1)")
        # polynomial division oracle: x^2 = (x+1)(x-1) + 1
        assert e2.poly == parse_poly("x + 1", SPACE_X)
        assert e2.polar_map() == {(1, 1): Fraction(1)}
        e3 = parse_ratcurve(self.RING, "x^3")
        assert e3.poly == parse_poly("x^3", SPACE_X) and not e3.polar

    def test_undeclared_pole(self):
        with pytest.raises(UndeclaredPole):
            parse_ratcurve(self.RING, "1/(x-2)")
        with pytest.raises(UndeclaredPole):
            ratcurve_normalize(self.RING, Polynomial.constant(SPACE_X, 1), {5: 1})

    def test_normalize_idempotent_through_text(self):
        rng = rng_for(20241, "rings", "rat-idem")
        for _ in range(50):
            e = rand_ratcurve_element(rng, self.RING, 4)
            assert parse_ratcurve(self.RING, format_ratcurve(e)) == e

    def test_ring_axioms_and_numeric_oracle(self):
        # independent oracle: evaluate exactly at rational sample points
        def ev(e, x0):
            _, coeffs = univariate_coeffs(e.poly)
            val = dense_eval(coeffs, x0)
            for (i, j), coeff in e.polar:
                val += coeff / (x0 - e.ring.poles[i]) ** j
            return val

        rng = rng_for(20241, "rings", "rat-axioms")
        points = [Fraction(3), Fraction(5, 2), Fraction(-7, 3)]
        for _ in range(100):
            a = rand_ratcurve_element(rng, self.RING, 4)
            b = rand_ratcurve_element(rng, self.RING, 4)
            c = rand_ratcurve_element(rng, self.RING, 4)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            for x0 in points:
                assert ev(a * b, x0) == ev(a, x0) * ev(b, x0)
                assert ev(a + b, x0) == ev(a, x0) + ev(b, x0)
