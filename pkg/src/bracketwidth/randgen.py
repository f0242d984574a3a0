"""Deterministic random generators for the verification suites.

Every generator takes an explicit ``random.Random``; suites derive one per
check from (seed, suite, check id) via SHA-256, so checks are reproducible
and order-independent.  Coefficients are uniform rationals with numerator
and denominator bounded by 10.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .exactpoly import AFFINE, Polynomial, VariableSpace
from .poisson import TORUS_SPACE
from .rings import (
    SPACE_X,
    SPACE_XYZ,
    SPACE_Z,
    CurveElement,
    CurveRing,
    DanElement,
    DanRing,
    RatCurveElement,
    RatCurveRing,
    _ratcurve_make,
    dan_normalize,
)
from .vfields import PTVectorField


def rng_for(seed: int, *labels) -> random.Random:
    """Independent stream keyed by the seed and any number of labels."""
    material = ":".join([str(seed), *map(str, labels)]).encode()
    digest = hashlib.sha256(material).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def rand_fraction(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-10, 10), rng.randint(1, 10))
        if value != 0 or not nonzero:
            return value


def rand_poly(rng: random.Random, space: VariableSpace, degree_bound: int,
              max_terms: int = 4, nonzero: bool = False) -> Polynomial:
    """Random sparse polynomial with per-variable exponents in the bound."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exps = tuple(
                rng.randint(0, degree_bound) if kind == AFFINE
                else rng.randint(-degree_bound, degree_bound)
                for _, kind in space.vars
            )
            coeff = rand_fraction(rng)
            if coeff:
                terms[exps] = terms.get(exps, Fraction(0)) + coeff
        poly = Polynomial(space, terms)
        if not poly.is_zero() or not nonzero:
            return poly


def rand_vfield(rng: random.Random, space: VariableSpace,
                degree_bound: int) -> PTVectorField:
    coeffs = {}
    for name, _ in space.vars:
        if rng.random() < 0.85:
            coeffs[name] = rand_poly(rng, space, degree_bound)
    return PTVectorField(space, coeffs)


def rand_divfree_field(rng: random.Random, space: VariableSpace,
                       degree_bound: int) -> PTVectorField:
    """Divergence-free field on two affine variables, built from a potential:
    (dH/dx2) d/dx1 - (dH/dx1) d/dx2 always has divergence zero."""
    x1, x2 = space.names[0], space.names[1]
    potential = rand_poly(rng, space, degree_bound)
    return PTVectorField(space, {
        x1: potential.partial(x2),
        x2: -potential.partial(x1),
    })


def rand_dan_element(rng: random.Random, ring: DanRing,
                     degree_bound: int, nonzero: bool = False) -> DanElement:
    while True:
        e = dan_normalize(ring, rand_poly(rng, SPACE_XYZ, max(1, degree_bound // 2),
                                          max_terms=4))
        if not e.is_zero() or not nonzero:
            return e


def rand_eomega_element(rng: random.Random, ring: DanRing,
                        degree_bound: int) -> DanElement:
    """Random member of the divergence image: x*A + y*B + (r*p)'."""
    base = rand_dan_element(rng, ring, degree_bound)
    r = rand_poly(rng, SPACE_Z, degree_bound, max_terms=3)
    c = (r * ring.p).partial("z")
    return DanElement(ring, base.A, base.B, c)


def rand_curve_element(rng: random.Random, ring: CurveRing, degree_bound: int,
                       nonzero: bool = False) -> CurveElement:
    while True:
        a = rand_poly(rng, SPACE_X, degree_bound, max_terms=3)
        b = rand_poly(rng, SPACE_X, degree_bound, max_terms=3)
        e = CurveElement(ring, a, b)
        if not e.is_zero() or not nonzero:
            return e


def rand_ratcurve_element(rng: random.Random, ring: RatCurveRing,
                          degree_bound: int, max_order: int = 3) -> RatCurveElement:
    poly = rand_poly(rng, SPACE_X, degree_bound, max_terms=3)
    polar = {}
    for i in range(len(ring.poles)):
        for j in range(1, max_order + 1):
            if rng.random() < 0.4:
                coeff = rand_fraction(rng)
                if coeff:
                    polar[(i, j)] = coeff
    return _ratcurve_make(ring, poly, polar)


def rand_torus_poly(rng: random.Random, degree_bound: int,
                    max_terms: int = 4) -> Polynomial:
    """Random nonzero torus element with zero constant term."""
    while True:
        poly = rand_poly(rng, TORUS_SPACE, degree_bound, max_terms)
        poly = poly - Polynomial.constant(TORUS_SPACE, poly.constant_value())
        if not poly.is_zero():
            return poly
