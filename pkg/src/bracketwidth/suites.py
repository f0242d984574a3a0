"""Seeded verification suites behind ``verify``.

Each suite runs a list of checks; a check either replays a constructive
solver against its defining equation or tests an algebraic identity on
seeded random samples.  A failing check carries a counterexample with the
offending inputs serialized in the shared grammar, so it can be re-fed
through the library.  Identical (suite, config) pairs produce identical
reports: randomness is derived per check from the seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import curves, poisson, randgen, vfields
from .exactpoly import (
    AFFINE,
    LAURENT,
    Polynomial,
    VariableSpace,
    format_poly,
    parse_poly,
)
from .poisson import TORUS_SPACE
from .rings import (
    SPACE_LOC,
    SPACE_X,
    SPACE_XY,
    CurveRing,
    DanRing,
    RatCurveRing,
    dan_const,
    dan_delocalize,
    dan_localize,
    dan_mul,
    dan_x,
    dan_y,
    format_dan,
    format_ratcurve,
    ratcurve_from_poly,
)

VERSION = "0.1.0"


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    samples: int = 100
    degree_bound: int = 4
    p_texts: tuple[str, ...] = ("z^2-1", "z^3-z", "z^4-1")
    h_texts: tuple[str, ...] = ("x^3-1", "x^5-x+1")
    pole_sets: tuple[str, ...] = ("0,1", "0,1,-1")
    space_sigs: tuple[str, ...] = ("a:2", "t:1", "a:1,t:1")

    def count(self, base: int) -> int:
        """Scale a spec-level sample count by samples/100."""
        return max(1, base * self.samples // 100)


@dataclass
class CheckResult:
    id: str
    description: str
    status: str  # "pass" | "fail"
    details: str
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "status": self.status,
            "details": self.details,
            "counterexample": self.counterexample,
        }


@dataclass
class SuiteReport:
    name: str
    params: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "checks": [c.to_json() for c in self.checks],
        }


@dataclass
class Report:
    version: str
    seed: int
    suites: list[SuiteReport]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "seed": self.seed,
            "suites": [s.to_json() for s in self.suites],
        }


class _Checks:
    """Collects CheckResults; runs each check body under a failure guard."""

    def __init__(self, suite: str, cfg: SuiteConfig):
        self.suite = suite
        self.cfg = cfg
        self.results: list[CheckResult] = []

    def rng(self, check_id: str):
        return randgen.rng_for(self.cfg.seed, self.suite, check_id)

    def run(self, check_id: str, description: str, body) -> None:
        """body(rng) returns None on success or a counterexample dict."""
        try:
            counterexample = body(self.rng(check_id))
        except Exception as exc:  # noqa: BLE001 - report, never crash the suite
            self.results.append(CheckResult(
                check_id, description, "fail",
                f"exception: {type(exc).__name__}: {exc}", None))
            return
        if counterexample is None:
            self.results.append(CheckResult(check_id, description, "pass", "ok"))
        else:
            detail = counterexample.pop("_details", "counterexample found")
            self.results.append(CheckResult(
                check_id, description, "fail", detail, counterexample))


def parse_space_sig(sig: str) -> VariableSpace:
    """Space signature like ``a:2,t:1``: affine x1..xn, then torus t1..tm."""
    n_affine = 0
    n_torus = 0
    for part in sig.split(","):
        part = part.strip()
        if not part:
            continue
        kind, _, count = part.partition(":")
        count_int = int(count) if count else 1
        if kind == "a":
            n_affine += count_int
        elif kind == "t":
            n_torus += count_int
        else:
            raise ValueError(f"bad space signature component {part!r}")
    pairs = [(f"x{i+1}", AFFINE) for i in range(n_affine)]
    pairs += [(f"t{i+1}", LAURENT) for i in range(n_torus)]
    if not pairs:
        raise ValueError(f"space signature {sig!r} declares no variables")
    return VariableSpace(tuple(pairs))


# -- width-one solvers on product spaces ----------------------------------------


def suite_width1(cfg: SuiteConfig) -> SuiteReport:
    checks = _Checks("width1", cfg)

    for sig in cfg.space_sigs:
        space = parse_space_sig(sig)

        def replay_solvers(rng, space=space, sig=sig):
            for i in range(cfg.count(100)):
                mu = randgen.rand_vfield(rng, space, min(cfg.degree_bound + 2, 6))
                for name, kind in space.vars:
                    if kind == AFFINE:
                        delta = vfields.solve_bracket_affine(mu, name)
                        partner = vfields.PTVectorField(
                            space, {name: Polynomial.constant(space, 1)})
                        ok = vfields.vf_bracket(partner, delta) == mu
                    else:
                        l, delta = vfields.solve_bracket_torus(mu, name)
                        partner = vfields.PTVectorField(
                            space, {name: Polynomial.var(space, name, l)})
                        ok = vfields.vf_bracket(partner, delta) == mu
                    if not ok:
                        return {"_details": f"sample {i}, direction {name}",
                                "space": sig, "mu": str(mu)}
            return None

        checks.run(f"solver-replay-{sig}",
                   f"width-one solvers replay through the bracket on {sig}",
                   replay_solvers)

    def divfree(rng):
        space = parse_space_sig("a:2")
        dx1 = vfields.PTVectorField(space, {"x1": Polynomial.constant(space, 1)})
        for i in range(cfg.count(100)):
            mu = randgen.rand_divfree_field(rng, space, cfg.degree_bound)
            eta = vfields.solve_bracket_divfree(mu)
            if vfields.vf_bracket(dx1, eta) != mu:
                return {"_details": f"sample {i}: bracket replay failed",
                        "mu": str(mu)}
            if not vfields.vf_divergence(eta).is_zero():
                return {"_details": f"sample {i}: output not divergence-free",
                        "mu": str(mu)}
        return None

    checks.run("divfree-replay",
               "divergence-free solver: bracket replay and div = 0", divfree)

    def bracket_laws(rng):
        for sig in cfg.space_sigs:
            space = parse_space_sig(sig)
            for i in range(cfg.count(200)):
                a = randgen.rand_vfield(rng, space, cfg.degree_bound)
                b = randgen.rand_vfield(rng, space, cfg.degree_bound)
                c = randgen.rand_vfield(rng, space, cfg.degree_bound)
                anti = vfields.vf_bracket(a, b) + vfields.vf_bracket(b, a)
                if not anti.is_zero():
                    return {"_details": f"antisymmetry failed ({sig}, {i})",
                            "a": str(a), "b": str(b)}
                jac = (vfields.vf_bracket(a, vfields.vf_bracket(b, c))
                       + vfields.vf_bracket(b, vfields.vf_bracket(c, a))
                       + vfields.vf_bracket(c, vfields.vf_bracket(a, b)))
                if not jac.is_zero():
                    return {"_details": f"jacobi failed ({sig}, {i})",
                            "a": str(a), "b": str(b), "c": str(c)}
        return None

    checks.run("bracket-laws", "antisymmetry and jacobi identity", bracket_laws)

    def divergence_identity(rng):
        for sig in cfg.space_sigs:
            space = parse_space_sig(sig)
            for i in range(cfg.count(200)):
                a = randgen.rand_vfield(rng, space, cfg.degree_bound)
                b = randgen.rand_vfield(rng, space, cfg.degree_bound)
                lhs = vfields.vf_divergence(vfields.vf_bracket(a, b))
                rhs = a.apply(vfields.vf_divergence(b)) - b.apply(
                    vfields.vf_divergence(a))
                if lhs != rhs:
                    return {"_details": f"divergence identity failed ({sig}, {i})",
                            "a": str(a), "b": str(b)}
        return None

    checks.run("div-bracket-identity",
               "div[a,b] = a(div b) - b(div a) on affine and mixed spaces",
               divergence_identity)

    def divergence_leibniz(rng):
        for sig in cfg.space_sigs:
            space = parse_space_sig(sig)
            for i in range(cfg.count(100)):
                xi = randgen.rand_vfield(rng, space, cfg.degree_bound)
                f = randgen.rand_poly(rng, space, cfg.degree_bound)
                lhs = vfields.vf_divergence(
                    vfields.PTVectorField(space, {n: f * p
                                                  for n, p in xi.coeffs.items()}))
                rhs = f * vfields.vf_divergence(xi) + xi.apply(f)
                if lhs != rhs:
                    return {"_details": f"leibniz failed ({sig}, {i})",
                            "xi": str(xi), "f": format_poly(f)}
        return None

    checks.run("div-leibniz", "div(f*xi) = f*div(xi) + xi(f)", divergence_leibniz)

    return SuiteReport("width1", {"seed": cfg.seed, "samples": cfg.samples,
                                  "degree_bound": cfg.degree_bound,
                                  "spaces": list(cfg.space_sigs)},
                       checks.results)


# -- punctured affine line -------------------------------------------------------


def suite_ratcurve(cfg: SuiteConfig) -> SuiteReport:
    checks = _Checks("ratcurve", cfg)

    for poles_text in cfg.pole_sets:
        ring = RatCurveRing.from_text(poles_text)

        def width2_replay(rng, ring=ring, poles_text=poles_text):
            ddx = vfields.RatCurveField(ring, ratcurve_from_poly(
                ring, Polynomial.constant(SPACE_X, 1)))
            xdx = vfields.RatCurveField(ring, ratcurve_from_poly(
                ring, Polynomial.var(SPACE_X, "x")))
            for i in range(cfg.count(100)):
                mu = vfields.RatCurveField(
                    ring, randgen.rand_ratcurve_element(rng, ring, cfg.degree_bound))
                nu, delta = vfields.solve_width2_ratcurve(mu)
                recomposed = (vfields.ratcurve_field_bracket(ddx, nu).coeff
                              + vfields.ratcurve_field_bracket(xdx, delta).coeff)
                if recomposed != mu.coeff:
                    return {"_details": f"sample {i} replay failed",
                            "poles": poles_text, "mu": format_ratcurve(mu.coeff)}
            return None

        checks.run(f"width2-replay-{poles_text}",
                   f"mu = [d/dx, nu] + [x d/dx, delta] replays (poles {poles_text})",
                   width2_replay)

        def ring_axioms(rng, ring=ring, poles_text=poles_text):
            for i in range(cfg.count(100)):
                a = randgen.rand_ratcurve_element(rng, ring, cfg.degree_bound)
                b = randgen.rand_ratcurve_element(rng, ring, cfg.degree_bound)
                c = randgen.rand_ratcurve_element(rng, ring, cfg.degree_bound)
                if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
                    return {"_details": f"ring axiom failed at sample {i}",
                            "poles": poles_text,
                            "a": format_ratcurve(a), "b": format_ratcurve(b),
                            "c": format_ratcurve(c)}
            return None

        checks.run(f"ring-axioms-{poles_text}",
                   f"partial-fraction ring axioms (poles {poles_text})",
                   ring_axioms)

    return SuiteReport("ratcurve", {"seed": cfg.seed, "samples": cfg.samples,
                                    "poles": list(cfg.pole_sets)},
                       checks.results)


# -- symplectic torus --------------------------------------------------------------


def suite_torus_poisson(cfg: SuiteConfig) -> SuiteReport:
    checks = _Checks("torus-poisson", cfg)

    def poisson_laws(rng):
        for i in range(cfg.count(200)):
            f = randgen.rand_poly(rng, TORUS_SPACE, cfg.degree_bound)
            g = randgen.rand_poly(rng, TORUS_SPACE, cfg.degree_bound)
            h = randgen.rand_poly(rng, TORUS_SPACE, cfg.degree_bound)
            if not (poisson.pb_torus(f, g) + poisson.pb_torus(g, f)).is_zero():
                return {"_details": f"antisymmetry failed at {i}",
                        "f": format_poly(f), "g": format_poly(g)}
            jac = (poisson.pb_torus(f, poisson.pb_torus(g, h))
                   + poisson.pb_torus(g, poisson.pb_torus(h, f))
                   + poisson.pb_torus(h, poisson.pb_torus(f, g)))
            if not jac.is_zero():
                return {"_details": f"jacobi failed at {i}",
                        "f": format_poly(f), "g": format_poly(g),
                        "h": format_poly(h)}
            leib = poisson.pb_torus(f, g * h) - (
                poisson.pb_torus(f, g) * h + g * poisson.pb_torus(f, h))
            if not leib.is_zero():
                return {"_details": f"leibniz failed at {i}",
                        "f": format_poly(f), "g": format_poly(g),
                        "h": format_poly(h)}
        return None

    checks.run("poisson-laws", "antisymmetry, jacobi, leibniz for the torus bracket",
               poisson_laws)

    def brackets_have_no_constant(rng):
        for i in range(cfg.count(100)):
            f = randgen.rand_poly(rng, TORUS_SPACE, cfg.degree_bound)
            g = randgen.rand_poly(rng, TORUS_SPACE, cfg.degree_bound)
            if poisson.pb_torus(f, g).constant_value() != 0:
                return {"_details": f"bracket has constant term at {i}",
                        "f": format_poly(f), "g": format_poly(g)}
        return None

    checks.run("bracket-image", "brackets land in the zero-constant-term ideal",
               brackets_have_no_constant)

    def width1(rng):
        for i in range(cfg.count(100)):
            f = randgen.rand_torus_poly(rng, cfg.degree_bound)
            k, l, g = poisson.width1_torus(f)
            if poisson.pb_torus(poisson.torus_monomial(k, l), g) != f:
                return {"_details": f"sample {i} replay failed",
                        "f": format_poly(f)}
        return None

    checks.run("width1-replay", "every element is a single bracket (replayed)",
               width1)

    def reduction(rng):
        for i in range(cfg.count(100)):
            f = randgen.rand_torus_poly(rng, cfg.degree_bound)
            chain = poisson.ideal_reduction_torus(f)
            if not poisson.replay_reduction(chain):
                return {"_details": f"sample {i} chain replay failed",
                        "f": format_poly(f)}
        return None

    checks.run("reduction-chains",
               "ideals reach the monomial x by replayable bracket chains",
               reduction)

    return SuiteReport("torus-poisson", {"seed": cfg.seed, "samples": cfg.samples,
                                         "degree_bound": cfg.degree_bound},
                       checks.results)


# -- Danielewski surfaces ------------------------------------------------------------


def suite_danielewski(cfg: SuiteConfig) -> SuiteReport:
    checks = _Checks("danielewski", cfg)

    for p_text in cfg.p_texts:
        ring = DanRing.from_text(p_text)
        label = p_text

        def rand_elem(rng):
            return randgen.rand_dan_element(rng, ring, cfg.degree_bound)

        def poisson_laws(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(200)):
                f, g, h = rand_elem(rng), rand_elem(rng), rand_elem(rng)
                if not (poisson.pb_dan(f, g) + poisson.pb_dan(g, f)).is_zero():
                    return {"_details": f"antisymmetry failed at {i}", "p": label,
                            "f": format_dan(f), "g": format_dan(g)}
                jac = (poisson.pb_dan(f, poisson.pb_dan(g, h))
                       + poisson.pb_dan(g, poisson.pb_dan(h, f))
                       + poisson.pb_dan(h, poisson.pb_dan(f, g)))
                if not jac.is_zero():
                    return {"_details": f"jacobi failed at {i}", "p": label,
                            "f": format_dan(f), "g": format_dan(g),
                            "h": format_dan(h)}
                leib = poisson.pb_dan(f, dan_mul(g, h)) - (
                    dan_mul(poisson.pb_dan(f, g), h)
                    + dan_mul(g, poisson.pb_dan(f, h)))
                if not leib.is_zero():
                    return {"_details": f"leibniz failed at {i}", "p": label,
                            "f": format_dan(f), "g": format_dan(g),
                            "h": format_dan(h)}
            return None

        checks.run(f"poisson-laws-{label}",
                   f"antisymmetry, jacobi, leibniz for p = {label}", poisson_laws)

        def bracket_oracle(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(100)):
                f, g = rand_elem(rng), rand_elem(rng)
                if poisson.pb_dan(f, g) != poisson.pb_dan_leibniz(f, g):
                    return {"_details": f"routes disagree at {i}", "p": label,
                            "f": format_dan(f), "g": format_dan(g)}
            return None

        checks.run(f"bracket-two-routes-{label}",
                   f"localized bracket equals the generator-relation route (p = {label})",
                   bracket_oracle)

        def localization_ring_hom(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(200)):
                a, b = rand_elem(rng), rand_elem(rng)
                if dan_localize(dan_mul(a, b)) != dan_localize(a) * dan_localize(b):
                    return {"_details": f"not multiplicative at {i}", "p": label,
                            "a": format_dan(a), "b": format_dan(b)}
                if dan_delocalize(ring, dan_localize(a)) != a:
                    return {"_details": f"roundtrip failed at {i}", "p": label,
                            "a": format_dan(a)}
            return None

        checks.run(f"localization-{label}",
                   f"localization is a ring hom and roundtrips (p = {label})",
                   localization_ring_hom)

        def hamiltonian_hom(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(100)):
                f, g = rand_elem(rng), rand_elem(rng)
                lhs = poisson.dan_vf_bracket(poisson.hamiltonian_dan(f),
                                             poisson.hamiltonian_dan(g))
                rhs = poisson.hamiltonian_dan(poisson.pb_dan(f, g))
                if lhs != rhs:
                    return {"_details": f"homomorphism failed at {i}", "p": label,
                            "f": format_dan(f), "g": format_dan(g)}
            return None

        checks.run(f"hamiltonian-hom-{label}",
                   f"[theta_f, theta_g] = theta_(f,g) (p = {label})", hamiltonian_hom)

        def jacobian_identity(rng, ring=ring, label=label, rand_elem=rand_elem):
            x = Polynomial.var(SPACE_LOC, "x")
            for i in range(cfg.count(100)):
                f, g = rand_elem(rng), rand_elem(rng)
                if dan_localize(poisson.pb_dan(f, g)) != x * poisson.jac_localized(f, g):
                    return {"_details": f"identity failed at {i}", "p": label,
                            "f": format_dan(f), "g": format_dan(g)}
            return None

        checks.run(f"jacobian-identity-{label}",
                   f"localize((f,g)) = x * jac(f,g) (p = {label})", jacobian_identity)

        def divergence_routes(rng, ring=ring, label=label, rand_elem=rand_elem):
            pp = dan_const(ring, ring.p_prime())
            for i in range(cfg.count(100)):
                f, g, h = rand_elem(rng), rand_elem(rng), rand_elem(rng)
                fld = poisson.dan_field_from_coeffs(ring, f, g, h)
                d1 = poisson.div_dan(fld)
                d2 = poisson.div_dan_basis(ring, f, g, h)
                if d1 != d2:
                    return {"_details": f"routes disagree at {i}", "p": label,
                            "f": format_dan(f), "g": format_dan(g),
                            "h": format_dan(h)}
                s = rand_elem(rng)
                shifted = poisson.div_dan_basis(
                    ring, f + dan_mul(s, dan_y(ring)), g + dan_mul(s, dan_x(ring)),
                    h - dan_mul(s, pp))
                if shifted != d2:
                    return {"_details": f"relation shift changed div at {i}",
                            "p": label, "s": format_dan(s)}
            return None

        checks.run(f"divergence-routes-{label}",
                   f"intrinsic divergence equals the coefficient formula (p = {label})",
                   divergence_routes)

        def div_of_hamiltonian(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(50)):
                f = rand_elem(rng)
                if not poisson.div_dan(poisson.hamiltonian_dan(f)).is_zero():
                    return {"_details": f"nonzero divergence at {i}", "p": label,
                            "f": format_dan(f)}
            return None

        checks.run(f"hamiltonian-divfree-{label}",
                   f"hamiltonian fields are divergence-free (p = {label})",
                   div_of_hamiltonian)

        def div_bracket_identity(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(50)):
                coeffs = [rand_elem(rng) for _ in range(6)]
                mu = poisson.dan_field_from_coeffs(ring, *coeffs[:3])
                nu = poisson.dan_field_from_coeffs(ring, *coeffs[3:])
                lhs = poisson.div_dan(poisson.dan_vf_bracket(mu, nu))
                rhs = mu.apply(poisson.div_dan(nu)) - nu.apply(poisson.div_dan(mu))
                if lhs != rhs:
                    return {"_details": f"identity failed at {i}", "p": label}
            return None

        checks.run(f"div-bracket-identity-{label}",
                   f"div[mu,nu] = mu(div nu) - nu(div mu) (p = {label})",
                   div_bracket_identity)

        def eomega(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(100)):
                f, g = rand_elem(rng), rand_elem(rng)
                e = poisson.pb_dan(f, g)
                witness = poisson.e_omega_member(e)
                if witness is None:
                    return {"_details": f"bracket rejected at {i}", "p": label,
                            "f": format_dan(f), "g": format_dan(g)}
                if poisson.div_dan(witness.preimage) != e:
                    return {"_details": f"witness does not replay at {i}",
                            "p": label, "e": format_dan(e)}
            if ring.degree >= 2 and poisson.e_omega_member(dan_const(ring, 1)) is not None:
                return {"_details": "constant 1 must not be in the image",
                        "p": label, "e": "1"}
            return None

        checks.run(f"eomega-membership-{label}",
                   f"brackets are members with replaying witnesses; 1 is not (p = {label})",
                   eomega)

        def codimension(rng, ring=ring, label=label):
            expected = ring.degree - 1
            for d in (2 * ring.degree, 2 * ring.degree + 1, 2 * ring.degree + 3):
                got = poisson.eomega_z_codimension(ring, d)
                if got != expected:
                    return {"_details": f"codim {got} != {expected} at degree {d}",
                            "p": label}
            return None

        checks.run(f"codimension-{label}",
                   f"truncated rank gives codimension deg p - 1 (p = {label})",
                   codimension)

        if ring.degree == 2:
            def width2(rng, ring=ring, label=label):
                for i in range(cfg.count(100)):
                    e = randgen.rand_eomega_element(rng, ring, cfg.degree_bound)
                    g, r = poisson.width2_dan_deg2(e)
                    if not poisson.replay_width2(e, g, r):
                        return {"_details": f"sample {i} replay failed",
                                "p": label, "e": format_dan(e)}
                return None

            checks.run(f"width2-{label}",
                       f"members split as two brackets and replay (p = {label})",
                       width2)

    return SuiteReport("danielewski", {"seed": cfg.seed, "samples": cfg.samples,
                                       "degree_bound": cfg.degree_bound,
                                       "p": list(cfg.p_texts)},
                       checks.results)


# -- hyperelliptic curves ---------------------------------------------------------------


def suite_curve(cfg: SuiteConfig) -> SuiteReport:
    checks = _Checks("curve", cfg)

    for h_text in cfg.h_texts:
        ring = CurveRing.from_text(h_text)
        label = h_text
        genus = ring.genus

        def rand_elem(rng, nonzero=False):
            return randgen.rand_curve_element(rng, ring, min(cfg.degree_bound + 1, 5),
                                              nonzero=nonzero)

        def ord_multiplicative(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(200)):
                a, b = rand_elem(rng, True), rand_elem(rng, True)
                if curves.ord_inf(a * b) != curves.ord_inf(a) + curves.ord_inf(b):
                    return {"_details": f"not multiplicative at {i}", "h": label,
                            "a": str(a), "b": str(b)}
            return None

        checks.run(f"ord-multiplicative-{label}",
                   f"ord(a*b) = ord(a) + ord(b) (h = {label})", ord_multiplicative)

        def tau_derivation(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(100)):
                a, b = rand_elem(rng), rand_elem(rng)
                lhs = curves.tau_apply(a * b)
                rhs = curves.tau_apply(a) * b + a * curves.tau_apply(b)
                if lhs != rhs:
                    return {"_details": f"derivation law failed at {i}", "h": label,
                            "a": str(a), "b": str(b)}
            return None

        checks.run(f"tau-derivation-{label}",
                   f"tau(ab) = tau(a)b + a tau(b) (h = {label})", tau_derivation)

        def tau_tangent(rng, ring=ring, label=label):
            # formal application of 2y d/dx + h' d/dy to y^2 - h(x)
            defining = (Polynomial.var(SPACE_XY, "y") ** 2
                        - ring.h.cast(SPACE_XY))
            image = (Polynomial.var(SPACE_XY, "y") * 2 * defining.partial("x")
                     + ring.h_prime().cast(SPACE_XY) * defining.partial("y"))
            if not image.is_zero():
                return {"_details": "tau does not kill the defining equation",
                        "h": label}
            return None

        checks.run(f"tau-tangency-{label}",
                   f"tau(y^2 - h) = 0 formally (h = {label})", tau_tangent)

        def exact_drop(rng, ring=ring, label=label, genus=genus):
            for m in curves.basis_monomials(ring, -(8 * genus + 10)):
                if m.is_constant():
                    continue
                drop = curves.ord_inf(m).value - curves.ord_inf(curves.tau_apply(m)).value
                if drop != 2 * genus - 1:
                    return {"_details": f"drop {drop} != {2*genus-1}", "h": label,
                            "monomial": str(m)}
            return None

        checks.run(f"tau-exact-drop-{label}",
                   f"tau drops order by exactly 2g-1 on the basis (h = {label})",
                   exact_drop)

        def valuation_law(rng, ring=ring, label=label, genus=genus,
                          rand_elem=rand_elem):
            found = 0
            while found < cfg.count(200):
                f, g = rand_elem(rng, True), rand_elem(rng, True)
                if curves.ord_inf(f) == curves.ord_inf(g):
                    continue
                found += 1
                bracket = curves.field_bracket(f, g)
                lhs = curves.ord_field(bracket)
                rhs = curves.ord_field(f) + curves.ord_field(g) + (-1)
                if lhs != rhs:
                    return {"_details": "bracket order law failed", "h": label,
                            "f": str(f), "g": str(g)}
            return None

        checks.run(f"bracket-order-law-{label}",
                   f"ord[f t, g t] = ord(f t) + ord(g t) - 1 when orders differ (h = {label})",
                   valuation_law)

        def bracket_laws(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(100)):
                f, g, h = rand_elem(rng), rand_elem(rng), rand_elem(rng)
                if not (curves.field_bracket(f, g) + curves.field_bracket(g, f)).is_zero():
                    return {"_details": f"antisymmetry failed at {i}", "h": label}
                jac = (curves.field_bracket(f, curves.field_bracket(g, h))
                       + curves.field_bracket(g, curves.field_bracket(h, f))
                       + curves.field_bracket(h, curves.field_bracket(f, g)))
                if not jac.is_zero():
                    return {"_details": f"jacobi failed at {i}", "h": label}
            return None

        checks.run(f"field-bracket-laws-{label}",
                   f"antisymmetry and jacobi for curve fields (h = {label})",
                   bracket_laws)

        def obstruction(rng, ring=ring, label=label, rand_elem=rand_elem):
            one = curves.curve_const(ring, 1)
            for i in range(cfg.count(500)):
                f, g = rand_elem(rng), rand_elem(rng)
                cert = curves.obstruction_certificate(f, g)
                if cert.conclusion == curves.ORDER_MISMATCH:
                    expected = (2 * cert.ord_tau.value
                                + cert.ord_f.value + cert.ord_g.value - 1)
                    if cert.ord_bracket.value != expected:
                        return {"_details": f"order equation failed at {i}",
                                "h": label, "f": str(f), "g": str(g)}
                    if not cert.ord_bracket < cert.ord_tau:
                        return {"_details": f"order inequality failed at {i}",
                                "h": label, "f": str(f), "g": str(g)}
                if cert.bracket == one:
                    return {"_details": f"bracket equals tau at {i}", "h": label,
                            "f": str(f), "g": str(g)}
            return None

        checks.run(f"obstruction-{label}",
                   f"no bracket equals the trivializing field (h = {label})",
                   obstruction)

        def centralizer(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(200)):
                f, g = rand_elem(rng, True), rand_elem(rng, True)
                result = curves.centralizer_check(f, g)
                proportional = g == f.scale(curves.leading_coefficient(g)
                                            / curves.leading_coefficient(f))
                if isinstance(result, curves.Proportional) != proportional:
                    return {"_details": f"misclassified at {i}", "h": label,
                            "f": str(f), "g": str(g)}
                if isinstance(result, curves.Independent) and result.witness.is_zero():
                    return {"_details": f"zero witness at {i}", "h": label,
                            "f": str(f), "g": str(g)}
            for i in range(20):
                f = rand_elem(rng, True)
                lam = randgen.rand_fraction(rng, nonzero=True)
                result = curves.centralizer_check(f, f.scale(lam))
                if not isinstance(result, curves.Proportional) or result.lam != lam:
                    return {"_details": f"crafted proportional pair missed ({i})",
                            "h": label, "f": str(f), "lam": str(lam)}
            return None

        checks.run(f"centralizer-{label}",
                   f"centralizer is the scalar line (h = {label})", centralizer)

        def no_eigen(rng, ring=ring, label=label, rand_elem=rand_elem):
            for i in range(cfg.count(200)):
                f, g = rand_elem(rng), rand_elem(rng, True)
                lam = randgen.rand_fraction(rng, nonzero=True)
                if not curves.no_eigen_check(f, g, lam).holds:
                    return {"_details": f"eigenvector found at {i}?!", "h": label,
                            "f": str(f), "g": str(g), "lam": str(lam)}
            return None

        checks.run(f"no-eigen-{label}",
                   f"ad(f tau) has no nonzero eigenvalue (h = {label})", no_eigen)

        def tau_solver(rng, ring=ring, label=label, genus=genus,
                       rand_elem=rand_elem):
            for i in range(cfg.count(100)):
                big = rand_elem(rng)
                f = curves.tau_apply(big)
                solution = curves.solve_tau_equation(f)
                if solution is None or curves.tau_apply(solution) != f:
                    return {"_details": f"roundtrip failed at {i}", "h": label,
                            "F": str(big)}
            one = curves.curve_const(ring, 1)
            if curves.solve_tau_equation(one) is not None:
                return {"_details": "constant 1 wrongly solvable", "h": label}
            r_img, r_aug = curves.tau_image_rank_certificate(one)
            if r_aug != r_img + 1:
                return {"_details": "non-solvability rank certificate failed",
                        "h": label}
            return None

        checks.run(f"tau-solver-{label}",
                   f"tau equation roundtrips; misses certified by rank (h = {label})",
                   tau_solver)

        def coker(rng, ring=ring, label=label, genus=genus):
            target = 2 * genus
            for extra in (0, 1, 2, 4):
                got = curves.coker_dimension(ring, 4 * genus + 2 + extra)
                if got != target:
                    return {"_details": f"dimension {got} != {target} at "
                                        f"max_pole {4*genus+2+extra}", "h": label}
            return None

        checks.run(f"cokernel-{label}",
                   f"tau-cokernel stabilizes at 2g = {2*genus} (h = {label})", coker)

    return SuiteReport("curve", {"seed": cfg.seed, "samples": cfg.samples,
                                 "degree_bound": cfg.degree_bound,
                                 "h": list(cfg.h_texts)},
                       checks.results)


SUITES = {
    "width1": suite_width1,
    "ratcurve": suite_ratcurve,
    "torus-poisson": suite_torus_poisson,
    "danielewski": suite_danielewski,
    "curve": suite_curve,
}


def verify(selector: str, cfg: SuiteConfig) -> Report:
    if selector == "all":
        names = list(SUITES)
    elif selector in SUITES:
        names = [selector]
    else:
        raise ValueError(f"unknown suite {selector!r}")
    return Report(VERSION, cfg.seed, [SUITES[name](cfg) for name in names])
