"""Coordinate rings with canonical normal forms.

Three quotient rings back the certificate machinery:

* ``O(D_p)`` for the surface ``x*y = p(z)`` (``p`` squarefree).  Elements
  are kept in the direct-sum normal form ``x*A(x,z) + y*B(y,z) + c(z)``,
  obtained by rewriting every mixed monomial through ``x*y -> p(z)``.
* ``O(C)`` for the plane curve ``y^2 = h(x)`` (``h`` monic, squarefree, of
  odd degree ``2g+1 >= 3``).  Elements are pairs ``a(x) + b(x)*y``.
* ``O(A^1 minus poles)`` in exact partial-fraction normal form: a
  polynomial part plus coefficients for each ``(x - p_i)^-j``.

All values are immutable; all operations return new values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    MixedRings,
    NotInImage,
    UndeclaredPole,
    ValidationError,
)
from .exactpoly import (
    AFFINE,
    LAURENT,
    Polynomial,
    VariableSpace,
    dense_divmod,
    dense_eval,
    dense_trim_copy,
    exact_divide,
    format_poly,
    parse_ast,
    parse_poly,
    poly_from_coeffs,
    squarefree_check,
    univariate_coeffs,
)

SPACE_Z = VariableSpace.make(z=AFFINE)
SPACE_XZ = VariableSpace.make(x=AFFINE, z=AFFINE)
SPACE_YZ = VariableSpace.make(y=AFFINE, z=AFFINE)
SPACE_XYZ = VariableSpace.make(x=AFFINE, y=AFFINE, z=AFFINE)
SPACE_LOC = VariableSpace.make(x=LAURENT, z=AFFINE)

SPACE_X = VariableSpace.make(x=AFFINE)
SPACE_XY = VariableSpace.make(x=AFFINE, y=AFFINE)


# -- Danielewski surface ring O(D_p) ------------------------------------------


@dataclass(frozen=True)
class DanRing:
    """The ring O(D_p) for the surface ``x*y = p(z)``."""

    p: Polynomial

    def __post_init__(self):
        p = self.p.cast(SPACE_Z)
        object.__setattr__(self, "p", p)
        deg = p.degree_in("z")
        if deg is None or deg < 1:
            raise ValidationError("bad_degree", "p must have degree >= 1")
        if not squarefree_check(p):
            raise ValidationError("not_squarefree", f"p = {p} has multiple roots")

    @classmethod
    def from_text(cls, text: str) -> "DanRing":
        return cls(parse_poly(text, SPACE_Z))

    @property
    def degree(self) -> int:
        return self.p.degree_in("z")

    def p_prime(self) -> Polynomial:
        return self.p.partial("z")

    def p_power(self, m: int) -> Polynomial:
        return _p_power(self, m)


@lru_cache(maxsize=None)
def _p_power(ring: DanRing, m: int) -> Polynomial:
    if m == 0:
        return Polynomial.constant(SPACE_Z, 1)
    return _p_power(ring, m - 1) * ring.p


@dataclass(frozen=True)
class DanElement:
    """Normal form ``x*A(x,z) + y*B(y,z) + c(z)`` of an element of O(D_p)."""

    ring: DanRing
    A: Polynomial
    B: Polynomial
    c: Polynomial

    def is_zero(self) -> bool:
        return self.A.is_zero() and self.B.is_zero() and self.c.is_zero()

    def raw(self) -> Polynomial:
        """Canonical representative in k[x,y,z] (memoized: values are immutable)."""
        cached = getattr(self, "_raw", None)
        if cached is None:
            terms: dict[tuple[int, int, int], Fraction] = {}
            for (i, k), coeff in self.A.terms.items():
                terms[(i + 1, 0, k)] = coeff
            for (j, k), coeff in self.B.terms.items():
                terms[(0, j + 1, k)] = coeff
            for (k,), coeff in self.c.terms.items():
                terms[(0, 0, k)] = coeff
            cached = Polynomial._make(SPACE_XYZ, terms)
            object.__setattr__(self, "_raw", cached)
        return cached

    def __add__(self, other: "DanElement") -> "DanElement":
        _same_dan_ring(self, other)
        return DanElement(self.ring, self.A + other.A, self.B + other.B,
                          self.c + other.c)

    def __sub__(self, other: "DanElement") -> "DanElement":
        return self + (-other)

    def __neg__(self) -> "DanElement":
        return DanElement(self.ring, -self.A, -self.B, -self.c)

    def __mul__(self, other: "DanElement") -> "DanElement":
        return dan_mul(self, other)

    def scale(self, value) -> "DanElement":
        v = Fraction(value)
        return DanElement(self.ring, self.A.scale(v), self.B.scale(v), self.c.scale(v))

    def __str__(self) -> str:
        return format_dan(self)


def _same_dan_ring(a: DanElement, b: DanElement) -> None:
    if a.ring != b.ring:
        raise MixedRings(f"elements of D_[{a.ring.p}] and D_[{b.ring.p}]")


def dan_normalize(ring: DanRing, raw: Polynomial) -> DanElement:
    """Rewrite every mixed ``x^i y^j`` monomial via ``x*y -> p(z)``.

    The rewriting ideal is principal on monomials, so replacing the full
    power ``(x*y)^min(i,j)`` at once lands directly in normal form.
    """
    raw = raw.cast(SPACE_XYZ)
    acc_a: dict[tuple[int, int], Fraction] = {}
    acc_b: dict[tuple[int, int], Fraction] = {}
    acc_c: dict[tuple[int], Fraction] = {}
    for (ex, ey, ez), coeff in raw.terms.items():
        m = min(ex, ey)
        ex, ey = ex - m, ey - m
        if ex > 0:
            acc, key_of = acc_a, lambda ze, ex=ex: (ex - 1, ze)
        elif ey > 0:
            acc, key_of = acc_b, lambda ze, ey=ey: (ey - 1, ze)
        else:
            acc, key_of = acc_c, lambda ze: (ze,)
        for (pe,), pc in _p_power(ring, m).terms.items():
            key = key_of(ez + pe)
            cur = acc.get(key)
            value = coeff * pc
            acc[key] = value if cur is None else cur + value
    return DanElement(ring, Polynomial._make(SPACE_XZ, acc_a),
                      Polynomial._make(SPACE_YZ, acc_b),
                      Polynomial._make(SPACE_Z, acc_c))


def dan_from_text(ring: DanRing, text: str) -> DanElement:
    return dan_normalize(ring, parse_poly(text, SPACE_XYZ))


def dan_zero(ring: DanRing) -> DanElement:
    return DanElement(ring, Polynomial.zero(SPACE_XZ), Polynomial.zero(SPACE_YZ),
                      Polynomial.zero(SPACE_Z))


def dan_const(ring: DanRing, value) -> DanElement:
    if isinstance(value, Polynomial):
        return DanElement(ring, Polynomial.zero(SPACE_XZ),
                          Polynomial.zero(SPACE_YZ), value.cast(SPACE_Z))
    return DanElement(ring, Polynomial.zero(SPACE_XZ), Polynomial.zero(SPACE_YZ),
                      Polynomial.constant(SPACE_Z, value))


def dan_x(ring: DanRing) -> DanElement:
    return dan_from_text(ring, "x")


def dan_y(ring: DanRing) -> DanElement:
    return dan_from_text(ring, "y")


def dan_z(ring: DanRing) -> DanElement:
    return dan_from_text(ring, "z")


def dan_add(a: DanElement, b: DanElement) -> DanElement:
    return a + b


def dan_mul(a: DanElement, b: DanElement) -> DanElement:
    _same_dan_ring(a, b)
    return dan_normalize(a.ring, a.raw() * b.raw())


def dan_localize(e: DanElement) -> Polynomial:
    """Image of ``e`` in k[x^(+/-1), z] under ``y -> p(z)/x``:
    x*A stays, c stays, and y^j picks up p(z)^j * x^-j."""
    out: dict[tuple[int, int], Fraction] = {}
    for (i, k), coeff in e.A.terms.items():
        out[(i + 1, k)] = coeff
    for (k,), coeff in e.c.terms.items():
        out[(0, k)] = coeff
    for (j, k), coeff in e.B.terms.items():
        for (pe,), pc in _p_power(e.ring, j + 1).terms.items():
            key = (-(j + 1), k + pe)
            cur = out.get(key)
            value = coeff * pc
            out[key] = value if cur is None else cur + value
    return Polynomial._make(SPACE_LOC, out)


def dan_delocalize(ring: DanRing, q: Polynomial) -> DanElement:
    """Inverse of :func:`dan_localize`.

    Each ``x^-j`` coefficient must be exactly divisible by ``p(z)^j``; the
    quotient becomes the ``y^j`` component.  Raises :class:`NotInImage`
    when divisibility fails.
    """
    q = q.cast(SPACE_LOC)
    acc_a: dict[tuple[int, int], Fraction] = {}
    acc_b: dict[tuple[int, int], Fraction] = {}
    c_acc = Polynomial.zero(SPACE_Z)
    for j, coeff_poly in q.split_by_exponent("x").items():
        zpoly = coeff_poly.cast(SPACE_Z)
        if j > 0:
            for (zexp,), cz in zpoly.terms.items():
                acc_a[(j - 1, zexp)] = acc_a.get((j - 1, zexp), Fraction(0)) + cz
        elif j == 0:
            c_acc = c_acc + zpoly
        else:
            quotient = exact_divide(zpoly, _p_power(ring, -j))
            if quotient is None:
                raise NotInImage(
                    f"coefficient of x^{j} is not divisible by p^{-j}"
                )
            for (zexp,), cz in quotient.cast(SPACE_Z).terms.items():
                key = (-j - 1, zexp)
                acc_b[key] = acc_b.get(key, Fraction(0)) + cz
    return DanElement(ring, Polynomial(SPACE_XZ, acc_a),
                      Polynomial(SPACE_YZ, acc_b), c_acc)


def format_dan(e: DanElement) -> str:
    return f"x*({format_poly(e.A)}) + y*({format_poly(e.B)}) + ({format_poly(e.c)})"


# -- hyperelliptic one-place curve ring O(C) ----------------------------------


@dataclass(frozen=True)
class CurveRing:
    """O(C) for ``y^2 = h(x)``, ``h`` monic squarefree of odd degree 2g+1."""

    h: Polynomial

    def __post_init__(self):
        h = self.h.cast(SPACE_X)
        object.__setattr__(self, "h", h)
        deg = h.degree_in("x")
        if deg is not None and deg >= 1 and deg % 2 == 0:
            raise ValidationError("even_degree", f"h has even degree {deg}")
        if deg is None or deg < 3:
            raise ValidationError("bad_degree", "h must have odd degree >= 3")
        if h.coefficient_of("x", deg) != 1:
            raise ValidationError("not_monic", f"h = {h} is not monic")
        if not squarefree_check(h):
            raise ValidationError("not_squarefree", f"h = {h} has multiple roots")

    @classmethod
    def from_text(cls, text: str) -> "CurveRing":
        return cls(parse_poly(text, SPACE_X))

    @property
    def genus(self) -> int:
        return (self.h.degree_in("x") - 1) // 2

    def h_prime(self) -> Polynomial:
        return self.h.partial("x")


@dataclass(frozen=True)
class CurveElement:
    """Element ``a(x) + b(x)*y`` of O(C) in the basis {x^i, x^i*y}."""

    ring: CurveRing
    a: Polynomial
    b: Polynomial

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_constant(self) -> bool:
        return self.b.is_zero() and self.a.is_constant()

    def raw(self) -> Polynomial:
        return self.a.cast(SPACE_XY) + self.b.cast(SPACE_XY) * Polynomial.var(SPACE_XY, "y")

    def __add__(self, other: "CurveElement") -> "CurveElement":
        _same_curve_ring(self, other)
        return CurveElement(self.ring, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "CurveElement") -> "CurveElement":
        return self + (-other)

    def __neg__(self) -> "CurveElement":
        return CurveElement(self.ring, -self.a, -self.b)

    def __mul__(self, other: "CurveElement") -> "CurveElement":
        _same_curve_ring(self, other)
        # (a1 + b1 y)(a2 + b2 y) with y^2 = h
        return CurveElement(
            self.ring,
            self.a * other.a + self.b * other.b * self.ring.h,
            self.a * other.b + other.a * self.b,
        )

    def scale(self, value) -> "CurveElement":
        v = Fraction(value)
        return CurveElement(self.ring, self.a.scale(v), self.b.scale(v))

    def __str__(self) -> str:
        return format_poly(self.raw())


def _same_curve_ring(a: CurveElement, b: CurveElement) -> None:
    if a.ring != b.ring:
        raise MixedRings(f"elements of different curves {a.ring.h} / {b.ring.h}")


def curve_normalize(ring: CurveRing, raw: Polynomial) -> CurveElement:
    """Rewrite ``y^2 -> h(x)`` until the y-degree is at most one."""
    raw = raw.cast(SPACE_XY)
    a_acc = Polynomial.zero(SPACE_X)
    b_acc = Polynomial.zero(SPACE_X)
    for j, coeff in raw.split_by_exponent("y").items():
        reduced = coeff.cast(SPACE_X) * ring.h ** (j // 2)
        if j % 2 == 0:
            a_acc = a_acc + reduced
        else:
            b_acc = b_acc + reduced
    return CurveElement(ring, a_acc, b_acc)


def curve_from_text(ring: CurveRing, text: str) -> CurveElement:
    return curve_normalize(ring, parse_poly(text, SPACE_XY))


def curve_zero(ring: CurveRing) -> CurveElement:
    return CurveElement(ring, Polynomial.zero(SPACE_X), Polynomial.zero(SPACE_X))


def curve_const(ring: CurveRing, value) -> CurveElement:
    return CurveElement(ring, Polynomial.constant(SPACE_X, value),
                        Polynomial.zero(SPACE_X))


def curve_x(ring: CurveRing) -> CurveElement:
    return CurveElement(ring, Polynomial.var(SPACE_X, "x"), Polynomial.zero(SPACE_X))


def curve_y(ring: CurveRing) -> CurveElement:
    return CurveElement(ring, Polynomial.zero(SPACE_X),
                        Polynomial.constant(SPACE_X, 1))


# -- punctured affine line ring in partial-fraction form ----------------------


@dataclass(frozen=True)
class RatCurveRing:
    """O(A^1 minus {p_1, ..., p_n}) with pairwise distinct rational poles."""

    poles: tuple[Fraction, ...]

    def __post_init__(self):
        poles = tuple(Fraction(p) for p in self.poles)
        object.__setattr__(self, "poles", poles)
        if len(set(poles)) != len(poles):
            raise ValidationError("duplicate_poles", f"poles {poles} not distinct")

    @classmethod
    def from_text(cls, text: str) -> "RatCurveRing":
        return cls(tuple(Fraction(part.strip()) for part in text.split(",") if part.strip()))


@dataclass(frozen=True)
class RatCurveElement:
    """Partial-fraction normal form: poly part + sum of c_ij*(x-p_i)^-j."""

    ring: RatCurveRing
    poly: Polynomial
    polar: tuple[tuple[tuple[int, int], Fraction], ...]  # ((pole_idx, order), coeff)

    def polar_map(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.polar)

    def is_zero(self) -> bool:
        return self.poly.is_zero() and not self.polar

    def __add__(self, other: "RatCurveElement") -> "RatCurveElement":
        _same_ratcurve_ring(self, other)
        merged = self.polar_map()
        for key, coeff in other.polar:
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return _ratcurve_make(self.ring, self.poly + other.poly, merged)

    def __sub__(self, other: "RatCurveElement") -> "RatCurveElement":
        return self + (-other)

    def __neg__(self) -> "RatCurveElement":
        return _ratcurve_make(self.ring, -self.poly,
                              {k: -c for k, c in self.polar})

    def scale(self, value) -> "RatCurveElement":
        v = Fraction(value)
        return _ratcurve_make(self.ring, self.poly.scale(v),
                              {k: c * v for k, c in self.polar})

    def __mul__(self, other: "RatCurveElement") -> "RatCurveElement":
        """Product, re-decomposed term by term.

        Cross terms are normalized piecewise (each involves at most two
        poles and a small numerator), which is exact and avoids one huge
        common denominator.
        """
        _same_ratcurve_ring(self, other)
        ring = self.ring
        result = _ratcurve_make(ring, self.poly * other.poly, {})
        for (i, j), c in other.polar:
            result = result + ratcurve_normalize(ring, self.poly.scale(c), {i: j})
        for (i, j), c in self.polar:
            result = result + ratcurve_normalize(ring, other.poly.scale(c), {i: j})
        same_pole: dict[tuple[int, int], Fraction] = {}
        one = Polynomial.constant(SPACE_X, 1)
        for (i, j), c1 in self.polar:
            for (k, l), c2 in other.polar:
                if i == k:
                    key = (i, j + l)
                    same_pole[key] = same_pole.get(key, Fraction(0)) + c1 * c2
                else:
                    result = result + ratcurve_normalize(
                        ring, one.scale(c1 * c2), {i: j, k: l})
        return result + _ratcurve_make(ring, Polynomial.zero(SPACE_X), same_pole)

    def __str__(self) -> str:
        return format_ratcurve(self)


def _same_ratcurve_ring(a: RatCurveElement, b: RatCurveElement) -> None:
    if a.ring != b.ring:
        raise MixedRings("elements with different pole sets")


def _ratcurve_make(ring: RatCurveRing, poly: Polynomial,
                   polar: dict[tuple[int, int], Fraction]) -> RatCurveElement:
    clean = {k: Fraction(c) for k, c in polar.items() if c != 0}
    for (i, j) in clean:
        if not (0 <= i < len(ring.poles)) or j < 1:
            raise UndeclaredPole(f"bad polar key {(i, j)}")
    ordered = tuple(sorted(clean.items()))
    return RatCurveElement(ring, poly.cast(SPACE_X), ordered)


def ratcurve_zero(ring: RatCurveRing) -> RatCurveElement:
    return _ratcurve_make(ring, Polynomial.zero(SPACE_X), {})


def ratcurve_from_poly(ring: RatCurveRing, poly: Polynomial) -> RatCurveElement:
    return _ratcurve_make(ring, poly, {})


def _linear_factor(pole: Fraction) -> list[Fraction]:
    return [-pole, Fraction(1)]  # x - pole, ascending coefficients


def _ratcurve_as_fraction(e: RatCurveElement) -> tuple[Polynomial, dict[int, int]]:
    """Rewrite as numerator / prod (x - p_i)^e_i over the max pole orders."""
    orders: dict[int, int] = {}
    for (i, j), _ in e.polar:
        orders[i] = max(orders.get(i, 0), j)
    _, den = _denominator_coeffs(e.ring, orders)
    num = _dense_mul(univariate_coeffs(e.poly)[1], den)
    for (i, j), coeff in e.polar:
        partial_den = list(den)
        for _ in range(j):
            partial_den, rem = dense_divmod(partial_den, _linear_factor(e.ring.poles[i]))
            assert not rem
        num = _dense_add(num, [c * coeff for c in partial_den])
    return poly_from_coeffs(SPACE_X, "x", num), orders


def _dense_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def _dense_add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _denominator_coeffs(ring: RatCurveRing, exps: dict[int, int]) -> tuple[dict[int, int], list[Fraction]]:
    den = [Fraction(1)]
    for i, e in exps.items():
        for _ in range(e):
            den = _dense_mul(den, _linear_factor(ring.poles[i]))
    return exps, den


def ratcurve_normalize(ring: RatCurveRing, numerator: Polynomial,
                       denominator_exps: dict[int, int]) -> RatCurveElement:
    """Exact partial-fraction decomposition of numerator / prod (x-p_i)^e_i.

    Pole indices refer to the ring's declared pole list; raises
    :class:`UndeclaredPole` on out-of-range indices.
    """
    for i, e in denominator_exps.items():
        if not (0 <= i < len(ring.poles)):
            raise UndeclaredPole(f"pole index {i} out of range")
        if e < 0:
            raise UndeclaredPole(f"negative denominator exponent at pole {i}")
    exps = {i: e for i, e in denominator_exps.items() if e > 0}
    _, num = univariate_coeffs(numerator.cast(SPACE_X))
    polar: dict[tuple[int, int], Fraction] = {}
    # Peel one pole completely at a time: while pole i still has order e,
    # the coefficient of (x-p_i)^-e is num(p_i)/cofactor(p_i) where the
    # cofactor (the other poles' factors) stays fixed; subtracting and
    # dividing by (x-p_i) is exact because the new numerator vanishes there.
    for i in sorted(exps):
        pole = ring.poles[i]
        cofactor = [Fraction(1)]
        for k, ek in exps.items():
            if k == i or ek == 0:
                continue
            for _ in range(ek):
                cofactor = _dense_mul(cofactor, _linear_factor(ring.poles[k]))
        cofactor_at_pole = dense_eval(cofactor, pole)
        for e in range(exps[i], 0, -1):
            c = dense_eval(num, pole) / cofactor_at_pole
            if c != 0:
                polar[(i, e)] = c
            num = _dense_add(num, [-c * q for q in cofactor])
            num, rem = dense_divmod(num, _linear_factor(pole))
            assert not rem, "vanishing numerator must be divisible"
        exps[i] = 0
    return _ratcurve_make(ring, poly_from_coeffs(SPACE_X, "x", num), polar)


def ratcurve_derivative(e: RatCurveElement) -> RatCurveElement:
    polar: dict[tuple[int, int], Fraction] = {}
    for (i, j), coeff in e.polar:
        polar[(i, j + 1)] = polar.get((i, j + 1), Fraction(0)) - j * coeff
    return _ratcurve_make(e.ring, e.poly.partial("x"), polar)


def ratcurve_antiderivative(e: RatCurveElement) -> RatCurveElement:
    """Antiderivative; defined only when no simple-pole term is present."""
    polar: dict[tuple[int, int], Fraction] = {}
    for (i, j), coeff in e.polar:
        if j == 1:
            raise NotInImage(f"simple pole at index {i} has no antiderivative")
        polar[(i, j - 1)] = polar.get((i, j - 1), Fraction(0)) + coeff / (1 - j)
    return _ratcurve_make(e.ring, e.poly.antiderivative("x"), polar)


def parse_ratcurve(ring: RatCurveRing, text: str) -> RatCurveElement:
    """Parse the shared grammar as a rational function, then decompose.

    General rational expressions are evaluated exactly as fractions of
    polynomials in ``x``; the final denominator must factor into declared
    pole factors (:class:`UndeclaredPole` otherwise).
    """
    num, den = _eval_ratfunc(parse_ast(text))
    _, den_coeffs = univariate_coeffs(den)
    exps: dict[int, int] = {}
    for i, pole in enumerate(ring.poles):
        while len(den_coeffs) > 1 and dense_eval(den_coeffs, pole) == 0:
            den_coeffs, rem = dense_divmod(den_coeffs, _linear_factor(pole))
            assert not rem
            exps[i] = exps.get(i, 0) + 1
    den_coeffs = dense_trim_copy(den_coeffs)
    if len(den_coeffs) != 1:
        raise UndeclaredPole(f"denominator of {text!r} has undeclared roots")
    return ratcurve_normalize(ring, num.scale(1 / den_coeffs[0]), exps)


def _eval_ratfunc(node) -> tuple[Polynomial, Polynomial]:
    op = node[0]
    one = Polynomial.constant(SPACE_X, 1)
    if op == "num":
        return Polynomial.constant(SPACE_X, node[1]), one
    if op == "var":
        if node[1] != "x":
            raise UndeclaredPole(f"unknown variable {node[1]!r}; expected x")
        return Polynomial.var(SPACE_X, "x"), one
    if op == "neg":
        n, d = _eval_ratfunc(node[1])
        return -n, d
    if op == "add" or op == "sub":
        na, da = _eval_ratfunc(node[1])
        nb, db = _eval_ratfunc(node[2])
        nb = nb if op == "add" else -nb
        return na * db + nb * da, da * db
    if op == "mul":
        na, da = _eval_ratfunc(node[1])
        nb, db = _eval_ratfunc(node[2])
        return na * nb, da * db
    if op == "div":
        na, da = _eval_ratfunc(node[1])
        nb, db = _eval_ratfunc(node[2])
        if nb.is_zero():
            raise ZeroDivisionError("division by zero expression")
        return na * db, da * nb
    if op == "pow":
        n, d = _eval_ratfunc(node[1])
        e = node[2]
        if e >= 0:
            return n ** e, d ** e
        if n.is_zero():
            raise ZeroDivisionError("inverting zero expression")
        return d ** (-e), n ** (-e)
    raise UndeclaredPole(f"unsupported expression node {node!r}")


def format_ratcurve(e: RatCurveElement) -> str:
    pieces: list[str] = []
    if not e.poly.is_zero():
        pieces.append(format_poly(e.poly))
    for (i, j), coeff in e.polar:
        pole = e.ring.poles[i]
        if pole == 0:
            base = "x"
        else:
            sign = "-" if pole > 0 else "+"
            base = f"(x {sign} {abs(pole)})"
        term = f"{base}^-{j}"
        if coeff != 1:
            term = f"{coeff}*{term}" if coeff != -1 else f"-{term}"
        pieces.append(term)
    if not pieces:
        return "0"
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out
