"""Valuation calculus and certificates on the curve ``y^2 = h(x)``.

The curve has a single point at infinity; the valuation there (pole order,
negatively signed) is determined by ``ord(x) = -2`` and ``ord(y) = -(2g+1)``
on the degree-``2g+1`` model, so for an element ``a(x) + b(x) y``::

    ord = min(-2*deg(a), -2*deg(b) - (2g+1))        (never a tie: parities differ)

Every vector field on the curve is a multiple of the nowhere vanishing
field ``tau = 2y*d/dx + h'(x)*d/dy`` (tangent since tau(y^2 - h) = 0, and
nowhere zero because h is squarefree).  Any other trivializing field
differs by a nonzero constant, so the certificates below are independent
of this choice up to scalar.  Key exact facts this module certifies:

* ``ord(tau(F)) = ord(F) - (2g-1)`` for every nonconstant F, with no
  leading-term cancellation.
* ``ord([f tau, g tau]) = ord(f tau) + ord(g tau) - 1`` whenever
  ``ord f != ord g``.
* A nowhere vanishing field is never a bracket: after at most one leading
  term reduction ``f <- f - lambda*g``, the bracket's order lands strictly
  below ``ord(tau) = 2 - 2g``, and the bracket is checked directly to
  differ from tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import MixedRings, ZeroInput
from .exactpoly import Polynomial, univariate_coeffs
from .rings import (
    SPACE_X,
    CurveElement,
    CurveRing,
    curve_const,
    curve_x,
    curve_y,
    curve_zero,
)


@dataclass(frozen=True)
class Valuation:
    """Order at the place at infinity; ``finite=False`` encodes +infinity."""

    finite: bool
    value: int

    @classmethod
    def of(cls, value: int) -> "Valuation":
        return cls(True, value)

    @classmethod
    def infinity(cls) -> "Valuation":
        return cls(False, 0)

    @property
    def is_infinite(self) -> bool:
        return not self.finite

    def __add__(self, other) -> "Valuation":
        if isinstance(other, int):
            other = Valuation.of(other)
        if self.is_infinite or other.is_infinite:
            return Valuation.infinity()
        return Valuation.of(self.value + other.value)

    __radd__ = __add__

    def __lt__(self, other: "Valuation") -> bool:
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.value < other.value

    def __le__(self, other: "Valuation") -> bool:
        return self == other or self < other

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.value)


INFINITE_ORDER = Valuation.infinity()


def ord_inf(e: CurveElement) -> Valuation:
    """Valuation at infinity: min(-2 deg a, -2 deg b - (2g+1)); inf for 0."""
    g = e.ring.genus
    candidates = []
    da = e.a.degree_in("x")
    if da is not None:
        candidates.append(-2 * da)
    db = e.b.degree_in("x")
    if db is not None:
        candidates.append(-2 * db - (2 * g + 1))
    if not candidates:
        return INFINITE_ORDER
    return Valuation.of(min(candidates))


def tau_apply(e: CurveElement) -> CurveElement:
    """Apply tau = 2y*d/dx + h'(x)*d/dy:  a + b*y  ->  (2h b' + h' b) + 2a' y."""
    ring = e.ring
    h, hp = ring.h, ring.h_prime()
    return CurveElement(ring,
                        h * e.b.partial("x") * 2 + hp * e.b,
                        e.a.partial("x") * 2)


def field_bracket(f: CurveElement, g: CurveElement) -> CurveElement:
    """Coefficient of [f*tau, g*tau] = (f*tau(g) - g*tau(f))*tau."""
    if f.ring != g.ring:
        raise MixedRings("bracket of fields on different curves")
    return f * tau_apply(g) - g * tau_apply(f)


def ord_field(f: CurveElement) -> Valuation:
    """Order of the field f*tau: (2 - 2g) + ord(f); infinite for f = 0."""
    if f.is_zero():
        return INFINITE_ORDER
    return ord_inf(f) + (2 - 2 * f.ring.genus)


def leading_coefficient(e: CurveElement) -> Fraction:
    """Coefficient of the extremal monomial (the one attaining ord_inf)."""
    if e.is_zero():
        raise ZeroInput("zero element has no leading coefficient")
    v = ord_inf(e).value
    if v % 2 == 0:  # attained in the a-part
        return e.a.coefficient_of("x", -v // 2).constant_value()
    g = e.ring.genus
    return e.b.coefficient_of("x", (-v - (2 * g + 1)) // 2).constant_value()


BRACKET_IS_ZERO = "BracketIsZero"
ORDER_MISMATCH = "OrderMismatch"


@dataclass(frozen=True)
class ObstructionCertificate:
    """Proof that [f*tau, g*tau] is not the trivializing field tau.

    Either the bracket is literally zero (after the one-step lambda
    reduction), or the recorded orders witness that the bracket's order
    ``2(2-2g) + ord f + ord g - 1`` falls strictly below ``ord(tau) =
    2-2g``.  The computed bracket coefficient is included for replay.
    """

    conclusion: str
    lambda_step: tuple[Fraction, CurveElement] | None
    ord_f: Valuation
    ord_g: Valuation
    ord_bracket: Valuation
    ord_tau: Valuation
    bracket: CurveElement


def obstruction_certificate(f: CurveElement, g: CurveElement) -> ObstructionCertificate:
    """Certify that [f*tau, g*tau] != tau, with the order computation.

    When ord f = ord g the leading terms are first cancelled by one
    ``f <- f - lambda*g`` step (which leaves the bracket unchanged); the
    parity of orders guarantees a single step suffices.
    """
    if f.ring != g.ring:
        raise MixedRings("certificate for fields on different curves")
    ring = f.ring
    ord_tau = Valuation.of(2 - 2 * ring.genus)
    lambda_step = None
    if not f.is_zero() and not g.is_zero() and ord_inf(f) == ord_inf(g):
        lam = leading_coefficient(f) / leading_coefficient(g)
        f = f - g.scale(lam)
        lambda_step = (lam, f)
    if f.is_zero() or g.is_zero():
        return ObstructionCertificate(BRACKET_IS_ZERO, lambda_step,
                                      ord_inf(f), ord_inf(g),
                                      INFINITE_ORDER, ord_tau, curve_zero(ring))
    assert ord_inf(f) != ord_inf(g), "one reduction step must split the orders"
    bracket = field_bracket(f, g)
    ord_bracket = ord_field(bracket)
    expected = Valuation.of(2 * (2 - 2 * ring.genus)
                            + ord_inf(f).value + ord_inf(g).value - 1)
    assert ord_bracket == expected, "bracket order law failed"
    assert ord_bracket < ord_tau
    assert bracket != curve_const(ring, 1), "bracket equals tau"
    return ObstructionCertificate(ORDER_MISMATCH, lambda_step,
                                  ord_inf(f), ord_inf(g),
                                  ord_bracket, ord_tau, bracket)


@dataclass(frozen=True)
class Proportional:
    """g = lam * f exactly."""

    lam: Fraction


@dataclass(frozen=True)
class Independent:
    """Nonzero bracket coefficient witnessing [f*tau, g*tau] != 0."""

    witness: CurveElement


def centralizer_check(f: CurveElement, g: CurveElement) -> Proportional | Independent:
    """Decide whether g is a scalar multiple of f.

    Scalar pairs commute; for anything else the bracket is nonzero (the
    centralizer of a nonzero field is its scalar line) and is returned as
    the witness.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroInput("centralizer check needs nonzero fields")
    lam = leading_coefficient(g) / leading_coefficient(f)
    if g == f.scale(lam):
        return Proportional(lam)
    witness = field_bracket(f, g)
    assert not witness.is_zero(), "independent fields must have nonzero bracket"
    return Independent(witness)


@dataclass(frozen=True)
class NoEigenCertificate:
    """Direct check that [f*tau, g*tau] != lam * g*tau (lam != 0)."""

    holds: bool
    bracket: CurveElement
    scaled: CurveElement
    valuation_remark: str | None


def no_eigen_check(f: CurveElement, g: CurveElement, lam: Fraction) -> NoEigenCertificate:
    """Certify that g*tau is not an eigenvector of ad(f*tau) for lam != 0.

    Decided by direct computation; when ord f != ord g the order law
    additionally forces ord(f*tau) = 1, impossible since it is <= 2-2g <= 0,
    and that remark is attached.
    """
    if g.is_zero():
        raise ZeroInput("eigenvector check needs a nonzero candidate")
    if lam == 0:
        raise ZeroInput("eigenvalue must be nonzero")
    bracket = field_bracket(f, g)
    scaled = g.scale(lam)
    remark = None
    if not f.is_zero() and ord_inf(f) != ord_inf(g):
        gg = f.ring.genus
        remark = (f"order law would force ord_field(f*tau) = 1, but "
                  f"ord_field(f*tau) = {ord_field(f)} <= {2 - 2 * gg} <= 0")
    return NoEigenCertificate(bracket != scaled, bracket, scaled, remark)


# -- exactness: solving tau(F) = f ------------------------------------------------


def basis_monomials(ring: CurveRing, min_ord: int) -> list[CurveElement]:
    """All basis monomials x^i, x^i*y with order at infinity >= min_ord."""
    g = ring.genus
    out = []
    i = 0
    while -2 * i >= min_ord:
        out.append(CurveElement(ring, Polynomial.var(SPACE_X, "x", i) if i else
                                Polynomial.constant(SPACE_X, 1),
                                Polynomial.zero(SPACE_X)))
        i += 1
    i = 0
    while -2 * i - (2 * g + 1) >= min_ord:
        out.append(CurveElement(ring, Polynomial.zero(SPACE_X),
                                Polynomial.var(SPACE_X, "x", i) if i else
                                Polynomial.constant(SPACE_X, 1)))
        i += 1
    return out


def _coordinates(elements: list[CurveElement]) -> tuple[list[tuple[str, int]], list[list[Fraction]]]:
    keys: set[tuple[str, int]] = set()
    for e in elements:
        keys.update(("a", exps[0]) for exps in e.a.terms)
        keys.update(("b", exps[0]) for exps in e.b.terms)
    index = sorted(keys)
    vectors = []
    for e in elements:
        vec = [Fraction(0)] * len(index)
        for exps, coeff in e.a.terms.items():
            vec[index.index(("a", exps[0]))] = coeff
        for exps, coeff in e.b.terms.items():
            vec[index.index(("b", exps[0]))] = coeff
        vectors.append(vec)
    return index, vectors


def solve_tau_equation(f: CurveElement) -> CurveElement | None:
    """F with tau(F) = f, or None when f is not in the image of tau.

    The search is finite and conclusive: tau drops the order of every
    nonconstant monomial by exactly 2g-1 with no leading cancellation, so
    any solution is supported on monomials of order >= ord(f) + (2g-1).
    """
    ring = f.ring
    if f.is_zero():
        return curve_zero(ring)
    g = ring.genus
    min_ord = ord_inf(f).value + (2 * g - 1)
    basis = [m for m in basis_monomials(ring, min_ord) if not m.is_constant()]
    images = [tau_apply(m) for m in basis]
    index, vectors = _coordinates(images + [f])
    columns = vectors[:-1]
    target = vectors[-1]
    rows = [[col[i] for col in columns] for i in range(len(index))]
    solution = linalg.solve(rows, target)
    if solution is None:
        return None
    out = curve_zero(ring)
    for coeff, mono in zip(solution, basis):
        out = out + mono.scale(coeff)
    assert tau_apply(out) == f
    return out


def tau_image_rank_certificate(f: CurveElement) -> tuple[int, int]:
    """(rank of tau-image matrix, rank with f appended) — unequal ranks
    positively certify that tau(F) = f has no solution."""
    ring = f.ring
    g = ring.genus
    min_ord = (ord_inf(f).value if not f.is_zero() else 0) + (2 * g - 1)
    basis = [m for m in basis_monomials(ring, min_ord) if not m.is_constant()]
    images = [tau_apply(m) for m in basis]
    _, vectors = _coordinates(images + [f])
    return linalg.rank(vectors[:-1]), linalg.rank(vectors)


def coker_dimension(ring: CurveRing, max_pole: int) -> int:
    """Dimension of {order >= -max_pole} modulo the tau-image inside it.

    Exact rank computation over the monomial basis; the value stabilizes
    at 2g once max_pole >= 4g+2 (the de Rham count for the curve).
    """
    g = ring.genus
    ambient = basis_monomials(ring, -max_pole)
    sources = [m for m in basis_monomials(ring, -max_pole + (2 * g - 1))
               if not m.is_constant()]
    images = [tau_apply(m) for m in sources]
    _, vectors = _coordinates(ambient + images)
    dim_ambient = linalg.rank(vectors[:len(ambient)])
    dim_image = linalg.rank(vectors[len(ambient):])
    return dim_ambient - dim_image
