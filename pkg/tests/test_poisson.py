from fractions import Fraction

import pytest

from bracketwidth.errors import (
    NonzeroConstantTerm,
    NotInEOmega,
    WrongDegree,
    ZeroInput,
)
from bracketwidth.exactpoly import Polynomial, parse_poly
from bracketwidth.poisson import (
    TORUS_SPACE,
    dan_field_from_coeffs,
    dan_vf_bracket,
    div_dan,
    div_dan_basis,
    e_omega_member,
    eomega_z_codimension,
    hamiltonian_dan,
    ideal_reduction_torus,
    is_constant_jac,
    is_tangent,
    jac_localized,
    pb_dan,
    pb_dan_leibniz,
    pb_torus,
    replay_reduction,
    replay_width2,
    solve_rp_prime,
    theta_basis,
    torus_monomial,
    width1_torus,
    width2_dan_deg2,
    width2_partner,
)
from bracketwidth.randgen import (
    rand_dan_element,
    rand_eomega_element,
    rand_torus_poly,
    rng_for,
)
from bracketwidth.rings import (
    SPACE_LOC,
    SPACE_Z,
    DanRing,
    dan_const,
    dan_from_text,
    dan_mul,
    dan_x,
    dan_y,
    dan_z,
    dan_zero,
)

RING = DanRing.from_text("z^2-1")
RINGS = [RING, DanRing.from_text("z^3-z"), DanRing.from_text("z^4-1")]


def tp(text):
    return parse_poly(text, TORUS_SPACE)


def leibniz_oracle_torus(f, g):
    """Independent bracket route: recursion on monomial factors from
    {x,y} = x*y, using bilinearity and the Leibniz rule only."""
    def mono_bracket(e1, e2):
        (k, l), (m, n) = e1, e2
        # {x^k y^l, x^m y^n} by peeling one variable at a time:
        # {a, uv} = {a,u}v + u{a,v}, down to {x,y} = xy, {x,x} = {y,y} = 0.
        # Implemented as the derivation x d/dx tensor y d/dy pairing.
        return Fraction(k * n - l * m)

    out = {}
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            factor = mono_bracket(e1, e2)
            if factor:
                key = (e1[0] + e2[0], e1[1] + e2[1])
                out[key] = out.get(key, Fraction(0)) + c1 * c2 * factor
    return Polynomial(TORUS_SPACE, out)


class TestTorusBracket:
    def test_generators(self):
        assert pb_torus(tp("x"), tp("y")) == tp("x*y")

    def test_leibniz_expansion_example(self):
        # oracle: expand {x^2 y, x y^3} with the Leibniz rule by hand:
        # (2*3 - 1*1) x^3 y^4 = 5 x^3 y^4
        assert pb_torus(tp("x^2*y"), tp("x*y^3")) == tp("5*x^3*y^4")

    def test_alternating(self):
        f = tp("x + 3*y^-2")
        assert pb_torus(f, f).is_zero()

    def test_against_independent_leibniz_route(self):
        rng = rng_for(20243, "poisson", "torus-oracle")
        for _ in range(100):
            f = rand_torus_poly(rng, 4)
            g = rand_torus_poly(rng, 4)
            assert pb_torus(f, g) == leibniz_oracle_torus(f, g)

    def test_laws_random(self):
        rng = rng_for(20243, "poisson", "torus-laws")
        for _ in range(200):
            f, g, h = (rand_torus_poly(rng, 4) for _ in range(3))
            assert (pb_torus(f, g) + pb_torus(g, f)).is_zero()
            assert (pb_torus(f, pb_torus(g, h)) + pb_torus(g, pb_torus(h, f))
                    + pb_torus(h, pb_torus(f, g))).is_zero()
            assert pb_torus(f, g * h) == pb_torus(f, g) * h + g * pb_torus(f, h)


class TestWidth1Torus:
    def test_examples(self):
        assert width1_torus(tp("x*y")) == (1, 0, tp("y"))
        assert width1_torus(tp("x")) == (0, 1, tp("-x*y^-1"))
        assert width1_torus(tp("x + y")) == (1, 1, tp("x^-1 - y^-1"))

    def test_replay_random(self):
        rng = rng_for(20243, "poisson", "width1")
        for _ in range(100):
            f = rand_torus_poly(rng, 4)
            k, l, g = width1_torus(f)
            assert pb_torus(torus_monomial(k, l), g) == f

    def test_preconditions(self):
        with pytest.raises(ZeroInput):
            width1_torus(Polynomial.zero(TORUS_SPACE))
        with pytest.raises(NonzeroConstantTerm):
            width1_torus(tp("x + 1"))


class TestReductionChains:
    def test_monomial_chain(self):
        chain = ideal_reduction_torus(tp("x^2*y"))
        assert [str(s.partner) for s in chain.steps] == ["x^-1", "y^-1"]
        assert chain.steps[0].result == tp("-x*y")
        assert chain.final == tp("-x")
        assert replay_reduction(chain)

    def test_x_is_already_reduced(self):
        assert ideal_reduction_torus(tp("x")).steps == ()

    def test_two_summands(self):
        chain = ideal_reduction_torus(tp("x + y"))
        assert chain.steps[0].partner == tp("x")
        assert chain.steps[0].result == tp("x*y")
        assert chain.final == tp("x")
        assert replay_reduction(chain)

    def test_random_chains(self):
        rng = rng_for(20243, "poisson", "reduction")
        for _ in range(100):
            chain = ideal_reduction_torus(rand_torus_poly(rng, 4))
            assert replay_reduction(chain)


class TestDanBracket:
    def test_generator_relations(self):
        x, y, z = dan_x(RING), dan_y(RING), dan_z(RING)
        assert pb_dan(x, z) == x
        assert pb_dan(x, y) == dan_const(RING, RING.p_prime())
        assert pb_dan(y, z) == -y

    def test_xz_y_example(self):
        # oracle: (z * p)' = (z^3 - z)' = 3z^2 - 1 for p = z^2 - 1
        got = pb_dan(dan_from_text(RING, "x*z"), dan_y(RING))
        assert got == dan_const(RING, parse_poly("3*z^2 - 1", SPACE_Z))

    def test_two_routes_agree(self):
        rng = rng_for(20243, "poisson", "dan-routes")
        for ring in RINGS:
            for _ in range(100):
                f = rand_dan_element(rng, ring, 4)
                g = rand_dan_element(rng, ring, 4)
                assert pb_dan(f, g) == pb_dan_leibniz(f, g)

    def test_laws_random(self):
        rng = rng_for(20243, "poisson", "dan-laws")
        for ring in RINGS:
            for _ in range(60):
                f, g, h = (rand_dan_element(rng, ring, 4) for _ in range(3))
                assert (pb_dan(f, g) + pb_dan(g, f)).is_zero()
                assert (pb_dan(f, pb_dan(g, h)) + pb_dan(g, pb_dan(h, f))
                        + pb_dan(h, pb_dan(f, g))).is_zero()
                assert pb_dan(f, dan_mul(g, h)) == \
                    dan_mul(pb_dan(f, g), h) + dan_mul(g, pb_dan(f, h))


class TestHamiltonianFields:
    def test_generator_images(self):
        tx = hamiltonian_dan(dan_x(RING))
        assert tx.imgs == (dan_zero(RING), dan_const(RING, RING.p_prime()),
                           dan_x(RING))
        tz = hamiltonian_dan(dan_z(RING))
        assert tz.imgs == (-dan_x(RING), dan_y(RING), dan_zero(RING))
        assert hamiltonian_dan(dan_const(RING, 5)).is_zero()

    def test_basis_matches_hamiltonians(self):
        bx, by, bz = theta_basis(RING)
        assert bx == hamiltonian_dan(dan_x(RING))
        assert by == hamiltonian_dan(dan_y(RING))
        assert bz == hamiltonian_dan(dan_z(RING))

    def test_tangency(self):
        rng = rng_for(20243, "poisson", "tangency")
        for _ in range(30):
            f = rand_dan_element(rng, RING, 4)
            assert is_tangent(hamiltonian_dan(f))

    def test_commutator_homomorphism(self):
        x, y, z = dan_x(RING), dan_y(RING), dan_z(RING)
        tx, ty, tz = (hamiltonian_dan(e) for e in (x, y, z))
        assert dan_vf_bracket(tx, ty) == hamiltonian_dan(pb_dan(x, y))
        assert dan_vf_bracket(tx, tz) == hamiltonian_dan(pb_dan(x, z))
        assert dan_vf_bracket(tx, tx).is_zero()
        rng = rng_for(20243, "poisson", "hom")
        for _ in range(50):
            f = rand_dan_element(rng, RING, 4)
            g = rand_dan_element(rng, RING, 4)
            assert dan_vf_bracket(hamiltonian_dan(f), hamiltonian_dan(g)) == \
                hamiltonian_dan(pb_dan(f, g))


class TestDivergence:
    def test_hamiltonians_are_divergence_free(self):
        rng = rng_for(20243, "poisson", "div-ham")
        for _ in range(50):
            f = rand_dan_element(rng, RING, 4)
            assert div_dan(hamiltonian_dan(f)).is_zero()

    def test_basis_examples(self):
        # div(x*r(z)*theta_y) = (r*p)': oracle (z*(z^2-1))' = 3z^2 - 1
        xr = dan_mul(dan_x(RING), dan_const(RING, parse_poly("z", SPACE_Z)))
        got = div_dan_basis(RING, dan_zero(RING), xr, dan_zero(RING))
        assert got == dan_const(RING, parse_poly("3*z^2 - 1", SPACE_Z))
        # div(f*theta_x) for f = -z^2/2: x * z
        f = dan_const(RING, parse_poly("z^2", SPACE_Z)).scale(Fraction(-1, 2))
        got2 = div_dan_basis(RING, f, dan_zero(RING), dan_zero(RING))
        assert got2 == dan_from_text(RING, "x*z")

    def test_intrinsic_equals_basis(self):
        rng = rng_for(20243, "poisson", "div-routes")
        pp = dan_const(RING, RING.p_prime())
        for _ in range(100):
            f, g, h = (rand_dan_element(rng, RING, 4) for _ in range(3))
            field = dan_field_from_coeffs(RING, f, g, h)
            d = div_dan(field)
            assert d == div_dan_basis(RING, f, g, h)
            # relation-shifted representatives give the same field, same div
            s = rand_dan_element(rng, RING, 3)
            assert div_dan_basis(RING, f + dan_mul(s, dan_y(RING)),
                                 g + dan_mul(s, dan_x(RING)),
                                 h - dan_mul(s, pp)) == d

    def test_divergence_of_commutator(self):
        rng = rng_for(20243, "poisson", "div-bracket")
        for _ in range(40):
            mu = dan_field_from_coeffs(RING, *(rand_dan_element(rng, RING, 3)
                                               for _ in range(3)))
            nu = dan_field_from_coeffs(RING, *(rand_dan_element(rng, RING, 3)
                                               for _ in range(3)))
            lhs = div_dan(dan_vf_bracket(mu, nu))
            assert lhs == mu.apply(div_dan(nu)) - nu.apply(div_dan(mu))


class TestEOmegaMembership:
    def test_p_prime_member(self):
        e = dan_const(RING, RING.p_prime())
        witness = e_omega_member(e)
        assert witness is not None
        assert witness.r == parse_poly("1", SPACE_Z)
        assert witness.preimage == dan_field_from_coeffs(
            RING, dan_zero(RING), dan_x(RING), dan_zero(RING))
        assert div_dan(witness.preimage) == e

    def test_constant_one_rejected(self):
        for ring in RINGS:
            assert e_omega_member(dan_const(ring, 1)) is None
            _, rank, aug = solve_rp_prime(ring, Polynomial.constant(SPACE_Z, 1))
            assert aug == rank + 1

    def test_xz_member(self):
        e = dan_from_text(RING, "x*z")
        witness = e_omega_member(e)
        assert witness is not None and witness.r.is_zero()
        f = dan_const(RING, parse_poly("z^2", SPACE_Z)).scale(Fraction(-1, 2))
        assert witness.preimage == dan_field_from_coeffs(
            RING, f, dan_zero(RING), dan_zero(RING))
        assert div_dan(witness.preimage) == e

    def test_brackets_are_members(self):
        rng = rng_for(20243, "poisson", "eomega")
        for ring in RINGS:
            for _ in range(60):
                f = rand_dan_element(rng, ring, 4)
                g = rand_dan_element(rng, ring, 4)
                e = pb_dan(f, g)
                witness = e_omega_member(e)
                assert witness is not None
                assert div_dan(witness.preimage) == e

    def test_codimension_counts(self):
        for ring in RINGS:
            expected = ring.degree - 1
            assert eomega_z_codimension(ring) == expected
            assert eomega_z_codimension(ring, 2 * ring.degree) == expected
            assert eomega_z_codimension(ring, 2 * ring.degree + 4) == expected


class TestWidth2Deg2:
    def test_examples(self):
        x = dan_x(RING)
        g, r = width2_dan_deg2(x)
        assert (g, r) == (x, Polynomial.zero(SPACE_Z))
        assert replay_width2(x, g, r)

        pp = dan_const(RING, RING.p_prime())
        g2, r2 = width2_dan_deg2(pp)
        assert g2.is_zero() and r2 == parse_poly("1", SPACE_Z)
        assert replay_width2(pp, g2, r2)

        e = dan_from_text(RING, "x^2*z + y")
        g3, r3 = width2_dan_deg2(e)
        assert g3 == dan_from_text(RING, "1/2*x^2*z - y")
        assert r3.is_zero()
        assert replay_width2(e, g3, r3)

    def test_partner_is_member(self):
        partner = width2_partner(RING)
        assert partner == dan_z(RING)  # p = z^2 - 1 has no linear term
        assert e_omega_member(partner) is not None
        shifted = DanRing.from_text("z^2 + 3*z + 1")
        assert width2_partner(shifted) == dan_from_text(shifted, "z + 3/2")
        assert e_omega_member(width2_partner(shifted)) is not None

    def test_replay_random(self):
        rng = rng_for(20243, "poisson", "width2")
        for _ in range(100):
            e = rand_eomega_element(rng, RING, 4)
            g, r = width2_dan_deg2(e)
            assert replay_width2(e, g, r)

    def test_errors(self):
        with pytest.raises(WrongDegree):
            width2_dan_deg2(dan_x(DanRing.from_text("z^3-z")))
        with pytest.raises(NotInEOmega):
            width2_dan_deg2(dan_const(RING, 1))


class TestJacobian:
    def test_examples(self):
        x, y, z = dan_x(RING), dan_y(RING), dan_z(RING)
        one = Polynomial.constant(SPACE_LOC, 1)
        assert jac_localized(x, z) == one
        assert jac_localized(z, x) == -one
        assert jac_localized(x, y) == parse_poly("2*z*x^-1", SPACE_LOC)

    def test_is_constant(self):
        x, y, z = dan_x(RING), dan_y(RING), dan_z(RING)
        assert is_constant_jac(x, z) == 1
        assert is_constant_jac(x, y) is None
        assert is_constant_jac(x.scale(2), z.scale(Fraction(1, 2))) == 1
        assert is_constant_jac(x, x) is None  # zero jacobian is not constant

    def test_bracket_jacobian_identity(self):
        rng = rng_for(20243, "poisson", "jac")
        xloc = Polynomial.var(SPACE_LOC, "x")
        for ring in RINGS[:2]:
            for _ in range(60):
                f = rand_dan_element(rng, ring, 4)
                g = rand_dan_element(rng, ring, 4)
                from bracketwidth.rings import dan_localize
                assert dan_localize(pb_dan(f, g)) == xloc * jac_localized(f, g)
