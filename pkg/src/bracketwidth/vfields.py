"""Vector fields on products of affine lines and tori, and on punctured lines.

A field on a product space is a map ``variable -> coefficient polynomial``
acting as the derivation ``sum_v coeff_v * d/dv``.  The module provides the
Lie bracket, the divergence attached to the product volume form (the
standard one on affine factors, ``dt/t`` on torus factors), and three
constructive solvers:

* :func:`solve_bracket_affine` writes ``mu = [d/dv, delta]`` by
  componentwise antiderivative in an affine variable.
* :func:`solve_bracket_torus` writes ``mu = [t^l d/dt, delta]`` for the
  smallest admissible ``l >= 1`` (``l = 0`` only for ``mu = 0``).
* :func:`solve_bracket_divfree` writes a divergence-free field as
  ``[d/dx1, eta]`` with ``eta`` again divergence-free.

Fields on a punctured affine line are ``coeff * d/dx`` with a
partial-fraction coefficient; :func:`solve_width2_ratcurve` expresses any
such field as ``[d/dx, nu] + [x d/dx, delta]``.

Serialization: ``"x^2*d/dx + (1/2)*t^-1*d/dt"`` (coefficient first, one
``d/dv`` marker per term).
"""

from __future__ import annotations

from fractions import Fraction
import re

from .errors import (
    MixedSpaces,
    NeedTwoVariables,
    NotDivergenceFree,
    ParseError,
    UnknownVariable,
)
from .exactpoly import (
    AFFINE,
    LAURENT,
    Polynomial,
    VariableSpace,
    format_poly,
    parse_poly,
)
from .rings import (
    RatCurveElement,
    RatCurveRing,
    ratcurve_antiderivative,
    ratcurve_derivative,
    ratcurve_from_poly,
    ratcurve_zero,
    format_ratcurve,
)


class PTVectorField:
    """Immutable vector field on a product of affine/torus factors."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: VariableSpace, coeffs: dict[str, Polynomial]):
        clean: dict[str, Polynomial] = {}
        for name, poly in coeffs.items():
            space.index(name)
            if poly.space != space:
                raise MixedSpaces(f"coefficient of d/d{name} lives in another space")
            if not poly.is_zero():
                clean[name] = poly
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PTVectorField is immutable")

    @classmethod
    def zero(cls, space: VariableSpace) -> "PTVectorField":
        return cls(space, {})

    def coeff(self, name: str) -> Polynomial:
        return self.coeffs.get(name, Polynomial.zero(self.space))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, PTVectorField):
            return NotImplemented
        return self.space == other.space and self.coeffs == other.coeffs

    def __add__(self, other: "PTVectorField") -> "PTVectorField":
        _same_space(self, other)
        out = dict(self.coeffs)
        for name, poly in other.coeffs.items():
            out[name] = out.get(name, Polynomial.zero(self.space)) + poly
        return PTVectorField(self.space, out)

    def __sub__(self, other: "PTVectorField") -> "PTVectorField":
        return self + (-other)

    def __neg__(self) -> "PTVectorField":
        return PTVectorField(self.space, {n: -p for n, p in self.coeffs.items()})

    def scale(self, value) -> "PTVectorField":
        return PTVectorField(self.space,
                             {n: p.scale(value) for n, p in self.coeffs.items()})

    def apply(self, f: Polynomial) -> Polynomial:
        """Act on a function: sum_v coeff_v * df/dv."""
        if f.space != self.space:
            raise MixedSpaces("function lives in another space")
        out = Polynomial.zero(self.space)
        for name, poly in self.coeffs.items():
            out = out + poly * f.partial(name)
        return out

    def __str__(self) -> str:
        return format_vfield(self)

    def __repr__(self) -> str:
        return f"PTVectorField({format_vfield(self)!r})"


def _same_space(a: PTVectorField, b: PTVectorField) -> None:
    if a.space != b.space:
        raise MixedSpaces("vector fields over different spaces")


def vf_bracket(xi: PTVectorField, nu: PTVectorField) -> PTVectorField:
    """Lie bracket: component j is xi(nu_j) - nu(xi_j)."""
    _same_space(xi, nu)
    out: dict[str, Polynomial] = {}
    for name in set(xi.coeffs) | set(nu.coeffs):
        out[name] = xi.apply(nu.coeff(name)) - nu.apply(xi.coeff(name))
    return PTVectorField(xi.space, out)


def vf_divergence(xi: PTVectorField) -> Polynomial:
    """Divergence for the product volume form.

    Affine variables contribute d(coeff)/dv; torus variables contribute
    d(coeff)/dt - coeff/t (the correction from the ``dt/t`` factor).
    """
    out = Polynomial.zero(xi.space)
    for name, poly in xi.coeffs.items():
        out = out + poly.partial(name)
        if xi.space.is_laurent(name):
            out = out - poly * Polynomial.var(xi.space, name, -1)
    return out


def solve_bracket_affine(mu: PTVectorField, name: str) -> PTVectorField:
    """delta with [d/dv, delta] = mu, by componentwise antiderivative in v."""
    if mu.space.kind(name) != AFFINE:
        raise UnknownVariable(f"{name!r} is not an affine variable")
    return PTVectorField(mu.space,
                         {n: p.antiderivative(name) for n, p in mu.coeffs.items()})


def solve_bracket_torus(mu: PTVectorField, name: str) -> tuple[int, PTVectorField]:
    """(l, delta) with [t^l d/dt, delta] = mu, for the smallest l >= 1.

    With S the set of t-exponents across mu's terms, any l with
    ``l - 1 not in S`` and ``2l - 1 not in S`` is admissible: the summand
    t^m*f*d/dt needs the factor 1/(m - 2l + 1) and the summands on other
    variables need 1/(m - l + 1).  The zero field returns (0, 0).
    """
    if mu.space.kind(name) != LAURENT:
        raise UnknownVariable(f"{name!r} is not a torus variable")
    if mu.is_zero():
        return 0, mu
    exponents = {exps[mu.space.index(name)]
                 for poly in mu.coeffs.values() for exps in poly.terms}
    l = 1
    while l - 1 in exponents or 2 * l - 1 in exponents:
        l += 1
    t_shift = Polynomial.var(mu.space, name, 1)
    out: dict[str, Polynomial] = {}
    for comp, poly in mu.coeffs.items():
        acc = Polynomial.zero(mu.space)
        for m, part in poly.split_by_exponent(name).items():
            denom = (m - 2 * l + 1) if comp == name else (m - l + 1)
            acc = acc + part * Polynomial.var(mu.space, name, m - l + 1).scale(
                Fraction(1, denom))
        out[comp] = acc
    return l, PTVectorField(mu.space, out)


def solve_bracket_divfree(mu: PTVectorField) -> PTVectorField:
    """eta with [d/dx1, eta] = mu and divergence(eta) = 0.

    Requires a purely affine space with at least two variables and a
    divergence-free input.  Construction: antiderivative in the first
    variable, then a correction field on the second variable cancelling
    the leftover divergence (which is independent of the first variable).
    """
    names = mu.space.names
    if any(kind != AFFINE for _, kind in mu.space.vars):
        raise NeedTwoVariables("all variables must be affine")
    if len(names) < 2:
        raise NeedTwoVariables("need at least two affine variables")
    if not vf_divergence(mu).is_zero():
        raise NotDivergenceFree(f"divergence of {mu} is nonzero")
    x1, x2 = names[0], names[1]
    delta = solve_bracket_affine(mu, x1)
    leftover = vf_divergence(delta)
    assert leftover.partial(x1).is_zero(), "leftover divergence depends on x1"
    correction = PTVectorField(mu.space, {x2: -leftover.antiderivative(x2)})
    return delta + correction


# -- punctured affine line -----------------------------------------------------


class RatCurveField:
    """Field ``coeff * d/dx`` on the affine line minus the ring's poles."""

    __slots__ = ("ring", "coeff")

    def __init__(self, ring: RatCurveRing, coeff: RatCurveElement):
        if coeff.ring != ring:
            raise MixedSpaces("coefficient belongs to another pole set")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeff", coeff)

    def __setattr__(self, name, value):
        raise AttributeError("RatCurveField is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatCurveField):
            return NotImplemented
        return self.ring == other.ring and self.coeff == other.coeff

    def __str__(self) -> str:
        return f"({format_ratcurve(self.coeff)})*d/dx"


def ratcurve_field_bracket(a: RatCurveField, b: RatCurveField) -> RatCurveField:
    """[f*d/dx, g*d/dx] = (f*g' - g*f')*d/dx."""
    f, g = a.coeff, b.coeff
    return RatCurveField(a.ring,
                         f * ratcurve_derivative(g) - g * ratcurve_derivative(f))


def solve_width2_ratcurve(mu: RatCurveField) -> tuple[RatCurveField, RatCurveField]:
    """(nu, delta) with mu = [d/dx, nu] + [x*d/dx, delta].

    delta collects the simple-pole part: each coefficient c of
    ``(x - p)^-1`` contributes ``(-c/2)(x - p)^-1 d/dx``, because
    ``[x d/dx, (x-p)^-1 d/dx]`` reproduces the simple pole (plus a
    second-order term).  The residual mu - [x d/dx, delta] then has no
    simple poles, so its coefficient has an antiderivative nu.
    """
    ring = mu.ring
    delta_polar = {(i, 1): Fraction(-1, 2) * c
                   for (i, j), c in mu.coeff.polar if j == 1}
    from .rings import _ratcurve_make
    delta = RatCurveField(ring, _ratcurve_make(
        ring, Polynomial.zero(mu.coeff.poly.space), delta_polar))
    x_field = RatCurveField(ring, ratcurve_from_poly(
        ring, Polynomial.var(mu.coeff.poly.space, "x")))
    residual = mu.coeff - ratcurve_field_bracket(x_field, delta).coeff
    nu = RatCurveField(ring, ratcurve_antiderivative(residual))
    return nu, delta


# -- serialization --------------------------------------------------------------

_DIRECTION_RE = re.compile(r"d/d([A-Za-z_]\w*)")


def format_vfield(xi: PTVectorField) -> str:
    if xi.is_zero():
        return "0"
    pieces = []
    for name, _ in xi.space.vars:
        poly = xi.coeffs.get(name)
        if poly is None:
            continue
        if len(poly.terms) == 1:
            ((exps, coeff),) = poly.terms.items()
            factors = []
            for (vname, _), e in zip(poly.space.vars, exps):
                if e:
                    factors.append(vname if e == 1 else f"{vname}^{e}")
            mag = abs(coeff)
            body = "*".join(factors)
            if mag != 1 or not factors:
                coeff_txt = str(mag) if mag.denominator == 1 else f"({mag})"
                body = f"{coeff_txt}*{body}" if body else coeff_txt
            if coeff < 0:
                body = f"-{body}"
        else:
            body = f"({format_poly(poly)})"
        pieces.append(f"{body}*d/d{name}" if body != "1" else f"d/d{name}")
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out


def parse_vfield(text: str, space: VariableSpace) -> PTVectorField:
    """Parse the ``coeff*d/dv`` term-list serialization."""
    text = text.strip()
    if text == "0" or not text:
        return PTVectorField.zero(space)
    coeffs: dict[str, Polynomial] = {}
    for sign, piece in _split_terms(text):
        m = _DIRECTION_RE.search(piece)
        if not m:
            raise ParseError(f"term {piece!r} has no d/dv marker")
        name = m.group(1)
        space.index(name)
        coeff_text = (piece[:m.start()] + piece[m.end():]).strip().strip("*").strip()
        if not coeff_text:
            coeff_text = "1"
        poly = parse_poly(coeff_text, space).scale(sign)
        coeffs[name] = coeffs.get(name, Polynomial.zero(space)) + poly
    return PTVectorField(space, coeffs)


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split at top-level +/- (outside parentheses), keeping signs."""
    terms: list[tuple[int, str]] = []
    depth = 0
    sign = 1
    current = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0:
            stripped = current.strip()
            if not stripped:
                if ch == "-":
                    sign = -sign
                continue
            if stripped.endswith(("^", "*", "/")):
                current += ch  # sign of an exponent, not a term separator
                continue
            terms.append((sign, stripped))
            sign = 1 if ch == "+" else -1
            current = ""
            continue
        current += ch
    if current.strip():
        terms.append((sign, current.strip()))
    return terms
