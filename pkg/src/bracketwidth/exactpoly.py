"""Sparse multivariate Laurent polynomials with exact rational coefficients.

A polynomial lives over a fixed :class:`VariableSpace` that declares, per
variable, whether negative exponents are allowed (``laurent``) or forbidden
(``affine``).  Terms are stored as a dict mapping exponent tuples (one
integer per declared variable) to nonzero ``fractions.Fraction``
coefficients, so equality is decidable term by term and every operation is
exact.  The zero polynomial is the empty term map.  Values are immutable
after construction and all operations are pure, so they can be shared
freely between threads.

Canonical term order is lexicographic on exponent tuples in declared
variable order, descending; formatting and "leading term" both use it.

The text grammar shared by the whole package and its CLI is::

    expr     = term (("+"|"-") term)*
    term     = factor (("*"|"/") factor)*
    factor   = ["-"|"+"] atom ["^" ["-"] integer]
    atom     = integer | variable | "(" expr ")"

Whitespace is ignored.  Rationals are written ``n`` or ``n/d``; division is
only allowed by nonzero constants, and negative powers only of invertible
monomials (in particular ``x^-1`` is rejected when ``x`` is affine).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

from .errors import (
    MixedSpaces,
    NegativeExponentOnAffineVar,
    NonIntegrable,
    NonInvertible,
    NonInvertibleSubstitution,
    NotUnivariate,
    ParseError,
    UnknownVariable,
)

AFFINE = "affine"
LAURENT = "laurent"

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class VariableSpace:
    """Ordered list of ``(name, kind)`` pairs, ``kind in {affine, laurent}``."""

    vars: tuple[tuple[str, str], ...]

    def __post_init__(self):
        names = [name for name, _ in self.vars]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for _, kind in self.vars:
            if kind not in (AFFINE, LAURENT):
                raise ValueError(f"unknown variable kind {kind!r}")
        object.__setattr__(self, "_positions",
                           {name: i for i, (name, _) in enumerate(self.vars)})

    @classmethod
    def make(cls, **kinds: str) -> "VariableSpace":
        """Build a space from keyword order, e.g. ``make(x=AFFINE, t=LAURENT)``."""
        return cls(tuple(kinds.items()))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.vars)

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise UnknownVariable(
                f"variable {name!r} not in space {self.names}") from None

    def kind(self, name: str) -> str:
        return self.vars[self.index(name)][1]

    def is_laurent(self, name: str) -> bool:
        return self.kind(name) == LAURENT


class Polynomial:
    """Immutable sparse polynomial over a :class:`VariableSpace`."""

    __slots__ = ("space", "terms")

    def __init__(self, space: VariableSpace, terms: dict[Exponent, Fraction]):
        clean: dict[Exponent, Fraction] = {}
        nvars = len(space.vars)
        for exps, coeff in terms.items():
            if type(coeff) is not Fraction:
                coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not match {space.names}")
            for (name, kind), e in zip(space.vars, exps):
                if kind == AFFINE and e < 0:
                    raise NegativeExponentOnAffineVar(
                        f"negative exponent {e} on affine variable {name!r}"
                    )
            clean[tuple(exps)] = coeff
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _make(cls, space: VariableSpace, terms: dict[Exponent, Fraction]) -> "Polynomial":
        """Fast path for internal arithmetic: drops zeros, skips validation.

        Callers must guarantee exponent tuples of the right length whose
        affine entries are nonnegative (every ring operation preserves
        this).
        """
        obj = object.__new__(cls)
        object.__setattr__(obj, "space", space)
        object.__setattr__(obj, "terms", {e: c for e, c in terms.items() if c})
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, space: VariableSpace) -> "Polynomial":
        return cls(space, {})

    @classmethod
    def constant(cls, space: VariableSpace, value) -> "Polynomial":
        return cls(space, {(0,) * len(space.vars): Fraction(value)})

    @classmethod
    def var(cls, space: VariableSpace, name: str, power: int = 1) -> "Polynomial":
        return cls.monomial(space, {name: power}, 1)

    @classmethod
    def monomial(cls, space: VariableSpace, exps: dict[str, int], coeff) -> "Polynomial":
        vec = [0] * len(space.vars)
        for name, e in exps.items():
            vec[space.index(name)] = e
        return cls(space, {tuple(vec): Fraction(coeff)})

    # -- predicates and accessors -----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Fraction:
        """The coefficient of the constant monomial (0 if absent)."""
        return self.terms.get((0,) * len(self.space.vars), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_term(self) -> tuple[Exponent, Fraction]:
        """Largest term in canonical (descending lex) order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms)
        return exps, self.terms[exps]

    def degree_in(self, name: str) -> int | None:
        """Largest exponent of ``name``; None for the zero polynomial."""
        i = self.space.index(name)
        if not self.terms:
            return None
        return max(exps[i] for exps in self.terms)

    def total_degree(self) -> int | None:
        if not self.terms:
            return None
        return max(sum(exps) for exps in self.terms)

    # -- ring operations ---------------------------------------------------

    def _check_space(self, other: "Polynomial") -> None:
        if self.space is not other.space and self.space != other.space:
            raise MixedSpaces(
                f"spaces {self.space.names} and {other.space.names} differ"
            )

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_space(other)
            return other
        return Polynomial.constant(self.space, other)

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            cur = out.get(exps)
            out[exps] = coeff if cur is None else cur + coeff
        return Polynomial._make(self.space, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._make(self.space, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._lift(other)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                cur = out.get(key)
                prod = ca * cb
                out[key] = prod if cur is None else cur + prod
        return Polynomial._make(self.space, out)

    __rmul__ = __mul__

    def scale(self, value) -> "Polynomial":
        if type(value) is not Fraction:
            value = Fraction(value)
        return Polynomial._make(self.space,
                                {e: c * value for e, c in self.terms.items()})

    def __pow__(self, power: int) -> "Polynomial":
        if not isinstance(power, int):
            raise TypeError("polynomial powers must be integers")
        if power < 0:
            return self._invert_monomial() ** (-power)
        result = Polynomial.constant(self.space, 1)
        base = self
        n = power
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _invert_monomial(self) -> "Polynomial":
        if len(self.terms) != 1:
            raise NonInvertible(f"cannot invert non-monomial {self}")
        (exps, coeff), = self.terms.items()
        for (name, kind), e in zip(self.space.vars, exps):
            if e != 0 and kind == AFFINE:
                raise NegativeExponentOnAffineVar(
                    f"cannot invert affine variable {name!r}"
                )
        return Polynomial(self.space, {tuple(-e for e in exps): 1 / coeff})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            if self.is_constant() and isinstance(other, (int, Fraction)):
                return self.constant_value() == other
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    # -- calculus ----------------------------------------------------------

    def partial(self, name: str) -> "Polynomial":
        """Term-wise formal derivative with respect to ``name``."""
        i = self.space.index(name)
        out: dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            key = exps[:i] + (e - 1,) + exps[i + 1:]
            out[key] = coeff * e
        return Polynomial._make(self.space, out)

    def antiderivative(self, name: str) -> "Polynomial":
        """Term-wise antiderivative in ``name`` with no constant term.

        Raises :class:`NonIntegrable` if some term has exponent -1 in
        ``name`` (the only exponent a formal antiderivative cannot hit).
        """
        i = self.space.index(name)
        out: dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == -1:
                raise NonIntegrable(f"term with exponent -1 in {name!r}")
            key = exps[:i] + (e + 1,) + exps[i + 1:]
            out[key] = coeff / (e + 1)
        return Polynomial._make(self.space, out)

    def substitute(self, name: str, value: "Polynomial") -> "Polynomial":
        """Exact composition: replace ``name`` by ``value`` (same space).

        Negative exponents of ``name`` require ``value`` to be an
        invertible monomial; otherwise :class:`NonInvertibleSubstitution`.
        """
        self._check_space(value)
        i = self.space.index(name)
        exponents = {exps[i] for exps in self.terms}
        if any(e < 0 for e in exponents):
            if len(value.terms) != 1:
                raise NonInvertibleSubstitution(
                    f"substituting into negative powers of {name!r} needs a monomial"
                )
        powers: dict[int, Polynomial] = {}
        for e in exponents:
            try:
                powers[e] = value ** e
            except NonInvertible as exc:
                raise NonInvertibleSubstitution(str(exc)) from exc
        out: dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            rest = exps[:i] + (0,) + exps[i + 1:]
            for pexps, pcoeff in powers[exps[i]].terms.items():
                key = tuple(a + b for a, b in zip(rest, pexps))
                cur = out.get(key)
                prod = coeff * pcoeff
                out[key] = prod if cur is None else cur + prod
        return Polynomial._make(self.space, out)

    # -- structural helpers -------------------------------------------------

    def split_by_exponent(self, name: str) -> dict[int, "Polynomial"]:
        """Group terms by their exponent of ``name`` (exponent zeroed out)."""
        i = self.space.index(name)
        buckets: dict[int, dict[Exponent, Fraction]] = {}
        for exps, coeff in self.terms.items():
            key = exps[:i] + (0,) + exps[i + 1:]
            buckets.setdefault(exps[i], {})[key] = coeff
        return {e: Polynomial._make(self.space, t) for e, t in buckets.items()}

    def coefficient_of(self, name: str, power: int) -> "Polynomial":
        return self.split_by_exponent(name).get(power, Polynomial.zero(self.space))

    def cast(self, space: VariableSpace) -> "Polynomial":
        """Re-home the polynomial over another space, matching variables by name.

        Variables that only occur with exponent zero may be dropped; new
        variables are added with exponent zero.
        """
        if space is self.space or space == self.space:
            return self
        positions: list[tuple[str, int | None]] = []
        for name, _ in self.space.vars:
            try:
                positions.append((name, space.index(name)))
            except UnknownVariable:
                positions.append((name, None))
        out: dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            vec = [0] * len(space.vars)
            for (name, pos), e in zip(positions, exps):
                if pos is None:
                    if e != 0:
                        raise UnknownVariable(
                            f"variable {name!r} missing from target space {space.names}"
                        )
                    continue
                vec[pos] = e
            key = tuple(vec)
            out[key] = out.get(key, Fraction(0)) + coeff
        return Polynomial(space, out)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"


# -- univariate utilities ----------------------------------------------------


def univariate_coeffs(p: Polynomial) -> tuple[str, list[Fraction]]:
    """Dense coefficient list (ascending) of a one-variable polynomial.

    The polynomial must involve at most one variable, with nonnegative
    exponents; raises :class:`NotUnivariate` otherwise.  Returns the name of
    the variable actually used (the first declared one if constant).
    """
    used = [name for i, name in enumerate(p.space.names)
            if any(exps[i] != 0 for exps in p.terms)]
    if len(used) > 1:
        raise NotUnivariate(f"{p} involves several variables: {used}")
    name = used[0] if used else p.space.names[0]
    i = p.space.index(name)
    if any(exps[i] < 0 for exps in p.terms):
        raise NotUnivariate(f"{p} has negative exponents in {name!r}")
    deg = max((exps[i] for exps in p.terms), default=0)
    coeffs = [Fraction(0)] * (deg + 1)
    for exps, coeff in p.terms.items():
        coeffs[exps[i]] = coeff
    return name, coeffs


def poly_from_coeffs(space: VariableSpace, name: str, coeffs: list[Fraction]) -> Polynomial:
    i = space.index(name)
    terms: dict[Exponent, Fraction] = {}
    for e, c in enumerate(coeffs):
        if c:
            vec = [0] * len(space.vars)
            vec[i] = e
            terms[tuple(vec)] = Fraction(c)
    return Polynomial(space, terms)


def _dense_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def dense_trim_copy(c: list[Fraction]) -> list[Fraction]:
    """Copy with trailing zero coefficients removed."""
    return _dense_trim(list(c))


def dense_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Exact quotient and remainder of dense univariate coefficient lists."""
    a = _dense_trim(list(a))
    b = _dense_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        factor = r[-1] / b[-1]
        q[shift] = factor
        for i, bc in enumerate(b):
            r[shift + i] -= factor * bc
        _dense_trim(r)
        if not r:
            break
    return q, r


def dense_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = _dense_trim(list(a))
    b = _dense_trim(list(b))
    while b:
        _, rem = dense_divmod(a, b)
        a, b = b, rem
    return a


def dense_eval(a: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial | None:
    """Exact univariate quotient a/b, or None if b does not divide a."""
    if a.is_zero():
        return a
    name_a, ca = univariate_coeffs(a)
    name_b, cb = univariate_coeffs(b)
    if not b.is_constant() and not a.is_constant() and name_a != name_b:
        raise NotUnivariate(f"{a} and {b} use different variables")
    q, r = dense_divmod(ca, cb)
    if _dense_trim(r):
        return None
    name = name_b if not b.is_constant() else name_a
    return poly_from_coeffs(a.space, name, q)


def squarefree_check(p: Polynomial) -> bool:
    """True iff gcd(p, p') is a nonzero constant (exact Euclid over Q).

    Requires a univariate polynomial in an affine variable.
    """
    name, coeffs = univariate_coeffs(p)
    if p.space.is_laurent(name) and any(e != 0 for e in
                                        (exps[p.space.index(name)] for exps in p.terms)):
        raise NotUnivariate(f"{name!r} is laurent-kind; squarefreeness needs affine")
    if len(_dense_trim(list(coeffs))) <= 1:
        return bool(_dense_trim(list(coeffs)))  # nonzero constants are squarefree
    deriv = [c * i for i, c in enumerate(coeffs)][1:]
    g = dense_gcd(coeffs, deriv)
    return len(g) == 1


# -- parsing and formatting ---------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*|[-+*/^()]|\S)")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        tok = m.group(1)
        if tok not in "+-*/^()" and not tok.isdigit() and not re.fullmatch(r"[A-Za-z_]\w*", tok):
            raise ParseError(f"unexpected character {tok!r} in {text!r}")
        tokens.append(tok)
        pos = m.end()
    return tokens


# AST nodes are plain tuples:
#   ("num", int) ("var", name) ("neg", a) ("add"|"sub"|"mul"|"div", a, b)
#   ("pow", a, int)
Ast = tuple


def parse_ast(text: str) -> Ast:
    """Parse the shared grammar into a small expression tree."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"unexpected end of input in {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r} in {text!r}")
        pos += 1
        return tok

    def parse_expr():
        node = parse_term()
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def parse_term():
        node = parse_factor()
        while peek() in ("*", "/"):
            op = take()
            rhs = parse_factor()
            node = ("mul" if op == "*" else "div", node, rhs)
        return node

    def parse_factor():
        if peek() in ("-", "+"):
            op = take()
            inner = parse_factor()
            return ("neg", inner) if op == "-" else inner
        return parse_power()

    def parse_power():
        base = parse_atom()
        if peek() == "^":
            take("^")
            sign = 1
            if peek() in ("-", "+"):
                sign = -1 if take() == "-" else 1
            digits = take()
            if not digits.isdigit():
                raise ParseError(f"expected integer exponent, found {digits!r}")
            return ("pow", base, sign * int(digits))
        return base

    def parse_atom():
        tok = take()
        if tok == "(":
            node = parse_expr()
            take(")")
            return node
        if tok.isdigit():
            return ("num", int(tok))
        if re.fullmatch(r"[A-Za-z_]\w*", tok):
            return ("var", tok)
        raise ParseError(f"unexpected token {tok!r} in {text!r}")

    node = parse_expr()
    if pos != len(tokens):
        raise ParseError(f"trailing input {' '.join(tokens[pos:])!r} in {text!r}")
    return node


def _eval_poly_ast(node: Ast, space: VariableSpace) -> Polynomial:
    op = node[0]
    if op == "num":
        return Polynomial.constant(space, node[1])
    if op == "var":
        if node[1] not in space.names:
            raise UnknownVariable(f"variable {node[1]!r} not in space {space.names}")
        return Polynomial.var(space, node[1])
    if op == "neg":
        return -_eval_poly_ast(node[1], space)
    if op in ("add", "sub", "mul"):
        a = _eval_poly_ast(node[1], space)
        b = _eval_poly_ast(node[2], space)
        return a + b if op == "add" else a - b if op == "sub" else a * b
    if op == "div":
        a = _eval_poly_ast(node[1], space)
        b = _eval_poly_ast(node[2], space)
        if not b.is_constant() or b.is_zero():
            raise ParseError("division is only allowed by nonzero constants")
        return a.scale(1 / b.constant_value())
    if op == "pow":
        base = _eval_poly_ast(node[1], space)
        return base ** node[2]
    raise ParseError(f"malformed expression node {node!r}")


def parse_poly(text: str, space: VariableSpace) -> Polynomial:
    """Parse ``text`` over ``space`` using the shared grammar."""
    return _eval_poly_ast(parse_ast(text), space)


def _format_coeff(coeff: Fraction) -> str:
    return str(coeff)


def format_poly(p: Polynomial) -> str:
    """Canonical text form; ``parse_poly`` inverts it exactly."""
    if not p.terms:
        return "0"
    pieces = []
    for exps in sorted(p.terms, reverse=True):
        coeff = p.terms[exps]
        factors = []
        for (name, _), e in zip(p.space.vars, exps):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        mag = abs(coeff)
        if factors:
            body = "*".join(factors)
            if mag != 1:
                body = f"{_format_coeff(mag)}*{body}"
        else:
            body = _format_coeff(mag)
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
