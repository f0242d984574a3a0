"""Poisson structures on the symplectic torus and on Danielewski surfaces.

Torus side (coordinates ``x, y``, both invertible, 2-form ``dx/x ^ dy/y``):
the bracket has the closed form ``{x^k y^l, x^m y^n} = (kn - lm) x^(k+m)
y^(l+n)``.  :func:`width1_torus` writes any element with zero constant term
as a single bracket, and :func:`ideal_reduction_torus` produces a replayable
chain of brackets carrying it to a scalar multiple of the monomial ``x``
(the simplicity certificate).

Danielewski side (``x*y = p(z)``, 2-form ``(dx ^ dz)/x``): the bracket is
generated by ``{x,z} = x``, ``{x,y} = p'(z)``, ``{y,z} = -y``.  The primary
computation route localizes at ``x`` and uses the closed Jacobian formula;
an independent Leibniz-rule extension of the generator relations is
provided as a cross-check.  Divergence is normalized so that
``div(x*r(z)*theta_y) = (r*p)'`` — the convention under which the
membership witnesses below replay exactly.

The divergence image inside O(D_p) is ``x*k[x,z] + y*k[y,z] +
{(r*p)' : r in k[z]}``; :func:`e_omega_member` decides membership by an
exact linear solve and returns a vector-field preimage as witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    IncompleteReduction,
    MixedRings,
    NonzeroConstantTerm,
    NotInEOmega,
    WrongDegree,
    ZeroInput,
)
from .exactpoly import (
    LAURENT,
    Polynomial,
    VariableSpace,
    poly_from_coeffs,
    univariate_coeffs,
)
from .rings import (
    SPACE_LOC,
    SPACE_XYZ,
    SPACE_XZ,
    SPACE_YZ,
    SPACE_Z,
    DanElement,
    DanRing,
    dan_const,
    dan_delocalize,
    dan_localize,
    dan_mul,
    dan_normalize,
    dan_x,
    dan_y,
    dan_z,
    dan_zero,
    format_dan,
)

TORUS_SPACE = VariableSpace.make(x=LAURENT, y=LAURENT)


# -- symplectic torus ----------------------------------------------------------


def torus_monomial(k: int, l: int, coeff=1) -> Polynomial:
    return Polynomial.monomial(TORUS_SPACE, {"x": k, "y": l}, coeff)


def pb_torus(f: Polynomial, g: Polynomial) -> Polynomial:
    """Bilinear extension of {x^k y^l, x^m y^n} = (kn - lm) x^(k+m) y^(l+n)."""
    out: dict[tuple[int, ...], Fraction] = {}
    for (k, l), cf in f.cast(TORUS_SPACE).terms.items():
        for (m, n), cg in g.cast(TORUS_SPACE).terms.items():
            factor = k * n - l * m
            if factor == 0:
                continue
            key = (k + m, l + n)
            out[key] = out.get(key, Fraction(0)) + cf * cg * factor
    return Polynomial(TORUS_SPACE, out)


def width1_torus(f: Polynomial) -> tuple[int, int, Polynomial]:
    """(k, l, g) with f = {x^k y^l, g}, for f nonzero with no constant term.

    The pair (k, l) must satisfy k*beta - l*alpha != 0 for every exponent
    (alpha, beta) of f; candidates are enumerated by increasing |k| + |l|
    and then in descending lexicographic order, and the first admissible
    pair wins, which makes the output deterministic.
    """
    f = f.cast(TORUS_SPACE)
    if f.is_zero():
        raise ZeroInput("cannot decompose the zero element")
    if f.constant_value() != 0:
        raise NonzeroConstantTerm(f"{f} has a constant term")
    exponents = list(f.terms)
    k, l = _admissible_pair(exponents)
    out: dict[tuple[int, ...], Fraction] = {}
    for (alpha, beta), coeff in f.terms.items():
        denom = k * beta - l * alpha
        out[(alpha - k, beta - l)] = coeff / denom
    return k, l, Polynomial(TORUS_SPACE, out)


def _admissible_pair(exponents: list[tuple[int, ...]]) -> tuple[int, int]:
    weight = 1
    while True:
        candidates = []
        for k in range(weight, -weight - 1, -1):
            rest = weight - abs(k)
            candidates.extend([(k, rest)] if rest == 0 else [(k, rest), (k, -rest)])
        for k, l in candidates:
            if all(k * beta - l * alpha != 0 for alpha, beta in exponents):
                return k, l
        weight += 1


@dataclass(frozen=True)
class ReductionStep:
    """One replay step: result = scalar * {partner, previous}."""

    partner: Polynomial
    scalar: Fraction
    result: Polynomial


@dataclass(frozen=True)
class ReductionChain:
    """Bracket chain from ``start`` to a scalar multiple of the monomial x."""

    start: Polynomial
    steps: tuple[ReductionStep, ...]

    @property
    def final(self) -> Polynomial:
        return self.steps[-1].result if self.steps else self.start


def _is_multiple_of_x(p: Polynomial) -> bool:
    return len(p.terms) == 1 and next(iter(p.terms)) == (1, 0)


def _parallel(e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    return e1[0] * e2[1] - e1[1] * e2[0] == 0


def ideal_reduction_torus(f: Polynomial) -> ReductionChain:
    """Replayable chain of brackets carrying f to a nonzero multiple of x.

    Phase 1 shrinks the summand count: bracketing with one of f's own
    monomials kills that monomial's parallel class and shifts the rest
    injectively.  When all summands are exponent-parallel, one bracket
    with a deterministic non-parallel monomial makes them pairwise
    non-parallel first.  Phase 2 moves the surviving monomial x^m y^n to x
    through the partners y^(1-n), x^(1-m), y^-1, skipping the degenerate
    identity steps.  Exceeding the iteration cap raises
    :class:`IncompleteReduction` (it would indicate a logic bug, since a
    chain always exists).
    """
    f = f.cast(TORUS_SPACE)
    if f.is_zero():
        raise ZeroInput("cannot reduce the zero element")
    if f.constant_value() != 0:
        raise NonzeroConstantTerm(f"{f} has a constant term")
    cap = 10 * len(f.terms) + 20
    steps: list[ReductionStep] = []
    current = f

    def push(partner: Polynomial) -> None:
        nonlocal current
        if len(steps) >= cap:
            raise IncompleteReduction(f"exceeded {cap} steps reducing {f}")
        result = pb_torus(partner, current)
        assert not result.is_zero(), "reduction step produced zero"
        steps.append(ReductionStep(partner, Fraction(1), result))
        current = result

    # phase 1: down to a single monomial
    while len(current.terms) > 1:
        exps = sorted(current.terms, reverse=True)
        if all(_parallel(exps[0], e) for e in exps[1:]):
            k, l = _admissible_pair(exps)  # non-parallel to the common line
            push(torus_monomial(k, l))
            continue
        pivot = next(e for e in exps if any(not _parallel(e, o) for o in exps))
        push(torus_monomial(*pivot))

    # phase 2: single monomial to x
    (m, n), = current.terms
    if (m, n) == (1, 0):
        return ReductionChain(f, tuple(steps))
    if m == 0:
        push(torus_monomial(1, 0))  # introduce an x factor: {x, y^n} = n x y^n
        (m, n), = current.terms
    if n != 1:
        push(torus_monomial(0, 1 - n))
        (m, n), = current.terms
    if m != 1:
        push(torus_monomial(1 - m, 0))
        (m, n), = current.terms
    push(torus_monomial(0, -1))
    assert _is_multiple_of_x(current)
    return ReductionChain(f, tuple(steps))


def replay_reduction(chain: ReductionChain) -> bool:
    """Recompute every step; True iff all match and the end is c*x."""
    current = chain.start
    for step in chain.steps:
        current = pb_torus(step.partner, current).scale(step.scalar)
        if current != step.result:
            return False
    return _is_multiple_of_x(current)


# -- Danielewski surface -------------------------------------------------------


def pb_dan(f: DanElement, g: DanElement) -> DanElement:
    """Poisson bracket on O(D_p) via the localization at x.

    On localized representatives, {f, g} = x*(f_x g_z - f_z g_x); the
    result always delocalizes back into the ring.
    """
    if f.ring != g.ring:
        raise MixedRings("bracket of elements from different surfaces")
    return dan_delocalize(f.ring, jac_localized(f, g)
                          * Polynomial.var(SPACE_LOC, "x"))


def pb_dan_leibniz(f: DanElement, g: DanElement) -> DanElement:
    """Independent bracket route: bi-derivation extension of the relations
    {x,z} = x, {x,y} = p'(z), {y,z} = -y on raw representatives."""
    if f.ring != g.ring:
        raise MixedRings("bracket of elements from different surfaces")
    ring = f.ring
    fr, gr = f.raw(), g.raw()
    fx, fy, fz = fr.partial("x"), fr.partial("y"), fr.partial("z")
    gx, gy, gz = gr.partial("x"), gr.partial("y"), gr.partial("z")
    pp = ring.p_prime().cast(fr.space)
    x = Polynomial.var(fr.space, "x")
    y = Polynomial.var(fr.space, "y")
    raw = ((fx * gy - fy * gx) * pp
           + (fx * gz - fz * gx) * x
           - (fy * gz - fz * gy) * y)
    return dan_normalize(ring, raw)


def jac_localized(f: DanElement, g: DanElement) -> Polynomial:
    """Jacobian f_x*g_z - f_z*g_x of the localized representatives.

    Signs are normalized so that jac(x, z) = 1, making the identity
    localize({f,g}) = x * jac(f, g) hold with {x, z} = x.
    """
    if f.ring != g.ring:
        raise MixedRings("jacobian of elements from different surfaces")
    floc, gloc = dan_localize(f), dan_localize(g)
    return (floc.partial("x") * gloc.partial("z")
            - floc.partial("z") * gloc.partial("x"))


def is_constant_jac(f: DanElement, g: DanElement) -> Fraction | None:
    """The Jacobian's value when it is a nonzero constant, else None."""
    jac = jac_localized(f, g)
    if jac.is_constant() and not jac.is_zero():
        return jac.constant_value()
    return None


# -- vector fields on D_p --------------------------------------------------------


@dataclass(frozen=True)
class DanVectorField:
    """Derivation of O(D_p), recorded by its images of (x, y, z).

    Tangency to the surface means y*imgs[0] + x*imgs[1] - p'(z)*imgs[2] = 0.
    """

    ring: DanRing
    imgs: tuple[DanElement, DanElement, DanElement]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.imgs)

    def apply(self, e: DanElement) -> DanElement:
        raw = e.raw()
        out = dan_zero(self.ring)
        for name, img in zip(("x", "y", "z"), self.imgs):
            out = out + dan_mul(dan_normalize(self.ring, raw.partial(name)), img)
        return out

    def __add__(self, other: "DanVectorField") -> "DanVectorField":
        _same_field_ring(self, other)
        return DanVectorField(self.ring,
                              tuple(a + b for a, b in zip(self.imgs, other.imgs)))

    def __sub__(self, other: "DanVectorField") -> "DanVectorField":
        _same_field_ring(self, other)
        return DanVectorField(self.ring,
                              tuple(a - b for a, b in zip(self.imgs, other.imgs)))

    def __str__(self) -> str:
        parts = [f"{name} -> {format_dan(img)}"
                 for name, img in zip(("x", "y", "z"), self.imgs)]
        return "; ".join(parts)


def _same_field_ring(a: DanVectorField, b: DanVectorField) -> None:
    if a.ring != b.ring:
        raise MixedRings("fields on different surfaces")


def is_tangent(field: DanVectorField) -> bool:
    ring = field.ring
    ix, iy, iz = field.imgs
    rel = (dan_mul(dan_y(ring), ix) + dan_mul(dan_x(ring), iy)
           - dan_mul(dan_const(ring, ring.p_prime()), iz))
    return rel.is_zero()


def hamiltonian_dan(f: DanElement) -> DanVectorField:
    """The field acting as {f, -}: images ({f,x}, {f,y}, {f,z})."""
    ring = f.ring
    return DanVectorField(ring, (pb_dan(f, dan_x(ring)),
                                 pb_dan(f, dan_y(ring)),
                                 pb_dan(f, dan_z(ring))))


def theta_basis(ring: DanRing) -> tuple[DanVectorField, DanVectorField, DanVectorField]:
    """The generating fields theta_x, theta_y, theta_z (images of x, y, z).

    Read off the generator relations directly:
    theta_x = (0, p', x), theta_y = (-p', 0, -y), theta_z = (-x, y, 0).
    """
    pp = dan_const(ring, ring.p_prime())
    zero = dan_zero(ring)
    x, y = dan_x(ring), dan_y(ring)
    return (
        DanVectorField(ring, (zero, pp, x)),
        DanVectorField(ring, (-pp, zero, -y)),
        DanVectorField(ring, (-x, y, zero)),
    )


def dan_field_from_coeffs(ring: DanRing, f: DanElement, g: DanElement,
                          h: DanElement) -> DanVectorField:
    """The combination f*theta_x + g*theta_y + h*theta_z."""
    theta_x, theta_y, theta_z = theta_basis(ring)
    imgs = tuple(
        dan_mul(f, theta_x.imgs[i]) + dan_mul(g, theta_y.imgs[i])
        + dan_mul(h, theta_z.imgs[i])
        for i in range(3)
    )
    return DanVectorField(ring, imgs)


def dan_vf_bracket(mu: DanVectorField, nu: DanVectorField) -> DanVectorField:
    """Commutator of derivations, componentwise on the images of x, y, z."""
    _same_field_ring(mu, nu)
    imgs = tuple(mu.apply(nu.imgs[i]) - nu.apply(mu.imgs[i]) for i in range(3))
    return DanVectorField(mu.ring, imgs)


def div_dan(mu: DanVectorField) -> DanElement:
    """Divergence of a tangent field, computed on the localization chart.

    With u, w the localized images of x and z, the divergence in this
    package's normalization is u/x - du/dx - dw/dz, delocalized back into
    the ring.  Hamiltonian fields have divergence zero, and
    div(x*r(z)*theta_y) = (r*p)'.
    """
    u = dan_localize(mu.imgs[0])
    w = dan_localize(mu.imgs[2])
    x_inv = Polynomial.var(SPACE_LOC, "x", -1)
    chart = u * x_inv - u.partial("x") - w.partial("z")
    return dan_delocalize(mu.ring, chart)


def div_dan_basis(ring: DanRing, f: DanElement, g: DanElement,
                  h: DanElement) -> DanElement:
    """Divergence of f*theta_x + g*theta_y + h*theta_z from the coefficients.

    Closed form on canonical representatives:
    p'*(g_x - f_y) + x*(h_x - f_z) + y*(g_z - h_y), normalized.
    """
    fr, gr, hr = f.raw(), g.raw(), h.raw()
    space = fr.space
    pp = ring.p_prime().cast(space)
    x = Polynomial.var(space, "x")
    y = Polynomial.var(space, "y")
    raw = (pp * (gr.partial("x") - fr.partial("y"))
           + x * (hr.partial("x") - fr.partial("z"))
           + y * (gr.partial("z") - hr.partial("y")))
    return dan_normalize(ring, raw)


# -- divergence image membership --------------------------------------------------


@dataclass(frozen=True)
class EOmegaWitness:
    """Constructive membership proof: div(preimage) equals the member,
    and (r*p)' equals its k[z]-component."""

    r: Polynomial
    preimage: DanVectorField


def solve_rp_prime(ring: DanRing, c: Polynomial) -> tuple[Polynomial | None, int, int]:
    """Solve (r(z)*p(z))' = c(z) exactly.

    Returns (r, rank, augmented rank); r is None when no solution exists.
    Degree counting pins deg r = deg c + 1 - deg p, so the system is a
    finite exact elimination.
    """
    c = c.cast(SPACE_Z)
    if c.is_zero():
        return Polynomial.zero(SPACE_Z), 0, 0
    deg_c = c.degree_in("z")
    deg_r = deg_c + 1 - ring.degree
    if deg_r < 0:
        return None, 0, 1
    _, p_coeffs = univariate_coeffs(ring.p)
    _, c_coeffs = univariate_coeffs(c)
    c_coeffs += [Fraction(0)] * (deg_c + 1 - len(c_coeffs))
    rows = []
    rhs = []
    for j in range(deg_c + 1):
        # coefficient of z^j in (r*p)' is (j+1) * sum_i r_i p_(j+1-i)
        row = []
        for i in range(deg_r + 1):
            k = j + 1 - i
            pk = p_coeffs[k] if 0 <= k < len(p_coeffs) else Fraction(0)
            row.append((j + 1) * pk)
        rows.append(row)
        rhs.append(c_coeffs[j])
    solution, rank_a, rank_aug = linalg.solve_with_ranks(rows, rhs)
    if solution is None:
        return None, rank_a, rank_aug
    return poly_from_coeffs(SPACE_Z, "z", solution), rank_a, rank_aug


def e_omega_member(e: DanElement) -> EOmegaWitness | None:
    """Membership in the divergence image, with a replayable witness.

    The x- and y-parts are always in the image; membership reduces to
    solving (r*p)' = c for the k[z]-component c.  The witness preimage is
    (-int A dz)*theta_x + (int B dz + r*x)*theta_y, whose divergence is
    exactly e.  Returns None when the linear system is infeasible.
    """
    ring = e.ring
    r, _, _ = solve_rp_prime(ring, e.c)
    if r is None:
        return None
    f_coef = dan_normalize(ring, (-e.A.antiderivative("z")).cast(SPACE_XYZ))
    g_raw = (e.B.antiderivative("z").cast(SPACE_XYZ)
             + r.cast(SPACE_XYZ) * Polynomial.var(SPACE_XYZ, "x"))
    g_coef = dan_normalize(ring, g_raw)
    preimage = dan_field_from_coeffs(ring, f_coef, g_coef, dan_zero(ring))
    return EOmegaWitness(r, preimage)


def eomega_z_codimension(ring: DanRing, trunc_degree: int | None = None) -> int:
    """Codimension of span{(r*p)'} inside k[z] truncated at ``trunc_degree``.

    Computed by exact rank; stabilizes at deg p - 1 once the truncation
    degree is at least 2*deg p.
    """
    d = trunc_degree if trunc_degree is not None else 2 * ring.degree + 1
    ambient_dim = d + 1  # k[z] of degree <= d
    gens = []
    for i in range(max(0, d + 1 - ring.degree) + 1):
        rp = Polynomial.monomial(SPACE_Z, {"z": i}, 1) * ring.p
        gen = rp.partial("z")
        if (gen.degree_in("z") or 0) > d:
            continue
        _, coeffs = univariate_coeffs(gen)
        coeffs += [Fraction(0)] * (ambient_dim - len(coeffs))
        gens.append(coeffs)
    return ambient_dim - linalg.rank(gens)


# -- width-two decomposition for deg p = 2 ------------------------------------------


def width2_partner(ring: DanRing) -> DanElement:
    """The element z + a with p'/(2*lead(p)) = z + a; it satisfies
    {x, z+a} = x and {y, z+a} = -y and lies in the divergence image."""
    if ring.degree != 2:
        raise WrongDegree("partner z + a requires deg p = 2")
    _, pc = univariate_coeffs(ring.p)
    a = pc[1] / (2 * pc[2])
    return dan_const(ring, Polynomial.var(SPACE_Z, "z")
                     + Polynomial.constant(SPACE_Z, a))


def width2_dan_deg2(e: DanElement) -> tuple[DanElement, Polynomial]:
    """(g, r) with e = {g, z+a} + {x, y*r(z)}, for deg p = 2 members.

    g integrates the x/y-parts against the scaling action of z + a:
    g = sum (1/i) a_i(z) x^i - sum (1/j) b_j(z) y^j; r solves (r*p)' = c.
    Raises :class:`WrongDegree` or :class:`NotInEOmega`.
    """
    ring = e.ring
    if ring.degree != 2:
        raise WrongDegree(f"deg p = {ring.degree}, need 2")
    r, _, _ = solve_rp_prime(ring, e.c)
    if r is None:
        raise NotInEOmega(f"{format_dan(e)} is not in the divergence image")
    a_acc: dict[tuple[int, int], Fraction] = {}
    for (i, k), coeff in e.A.terms.items():
        a_acc[(i, k)] = coeff / (i + 1)  # x^(i+1) picks up factor i+1 under {.., z}
    b_acc: dict[tuple[int, int], Fraction] = {}
    for (j, k), coeff in e.B.terms.items():
        b_acc[(j, k)] = -coeff / (j + 1)
    g = DanElement(ring, Polynomial(SPACE_XZ, a_acc), Polynomial(SPACE_YZ, b_acc),
                   Polynomial.zero(SPACE_Z))
    return g, r


def replay_width2(e: DanElement, g: DanElement, r: Polynomial) -> bool:
    ring = e.ring
    y_r = dan_mul(dan_y(ring), dan_const(ring, r))
    recomposed = pb_dan(g, width2_partner(ring)) + pb_dan(dan_x(ring), y_r)
    return recomposed == e
