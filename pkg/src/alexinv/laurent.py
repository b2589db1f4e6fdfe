"""Exact multivariate Laurent polynomials with integer coefficients.

This module implements the group ring Z[H] for H a free abelian group of
rank n, viewed as Laurent polynomials in variables t1, ..., tn (just ``t``
when n == 1).  Everything is exact: coefficients are arbitrary-precision
integers and no operation ever rounds.

The units of this ring are exactly the signed monomials ``+-t^I``, which is
why polynomial invariants computed here are only well defined up to such a
unit; :func:`normalize` picks a canonical representative of each unit orbit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import product
from types import MappingProxyType


class ParseError(ValueError):
    """Input text failed to parse; ``position`` is a 0-based offset."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None
                         else "%s (at position %d)" % (message, position))
        self.position = position


MAX_EXPONENT = 10**6


class LaurentPoly:
    """An element of Z[t1^{+-1}, ..., tn^{+-1}].

    Stored as a finite map from exponent vectors (tuples of n ints) to
    nonzero integer coefficients; the zero polynomial is the empty map.
    Instances are immutable; all operations return new polynomials.

    >>> t = LaurentPoly.variable(0, 1)
    >>> print((t - 1) * (t + 1))
    t^2 - 1
    >>> print(t**-2 + t**2)
    t^2 + t^-2
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != arity:
                raise ValueError("exponent vector %r has length %d, expected %d"
                                 % (exps, len(exps), arity))
            if coeff != 0:
                clean[exps] = clean.get(exps, 0) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", MappingProxyType(clean))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity):
        return cls(arity, {})

    @classmethod
    def constant(cls, value, arity):
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def one(cls, arity):
        return cls.constant(1, arity)

    @classmethod
    def variable(cls, index, arity):
        """The variable t_{index} (0-based) as a polynomial."""
        if not 0 <= index < arity:
            raise ValueError("variable index out of range")
        exps = tuple(1 if i == index else 0 for i in range(arity))
        return cls(arity, {exps: 1})

    @classmethod
    def monomial(cls, coeff, exps):
        return cls(len(tuple(exps)), {tuple(exps): coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.arity: 1}

    def is_unit(self):
        """True iff this is +-t^I, i.e. a unit of the Laurent ring."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def exponent_range(self):
        """Per-variable (min, max) exponents over the support; None if zero."""
        if not self.terms:
            return None
        lo = [min(e[i] for e in self.terms) for i in range(self.arity)]
        hi = [max(e[i] for e in self.terms) for i in range(self.arity)]
        return tuple(lo), tuple(hi)

    def degree_span(self):
        """Sum over variables of (max - min) exponent; 0 for constants."""
        rng = self.exponent_range()
        if rng is None:
            return 0
        lo, hi = rng
        return sum(h - l for l, h in zip(lo, hi))

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.arity)
        if isinstance(other, LaurentPoly):
            if other.arity != self.arity:
                raise ValueError("arity mismatch: %d vs %d"
                                 % (self.arity, other.arity))
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return LaurentPoly(self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.arity,
                           {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(self.arity, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            (exps, coeff), = self.terms.items()
            return LaurentPoly(self.arity,
                               {tuple(n * e for e in exps):
                                coeff if n % 2 else 1})
        result = LaurentPoly.one(self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exps):
        """Multiply by the monomial t^exps."""
        exps = tuple(exps)
        return LaurentPoly(self.arity,
                           {tuple(a + b for a, b in zip(e, exps)): c
                            for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.arity)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "LaurentPoly(%d, %r)" % (self.arity, dict(self.terms))


def involution(f):
    """The ring automorphism sending each group element to its inverse.

    Negates every exponent vector; an involution, and multiplicative:

    >>> t = LaurentPoly.variable(0, 1)
    >>> print(involution(t**2 - 4*t + 1))
    1 - 4*t^-1 + t^-2
    """
    return LaurentPoly(f.arity, {tuple(-x for x in e): c
                                 for e, c in f.terms.items()})


def trace(f):
    """Sum of the coefficients, i.e. the value at (1, ..., 1)."""
    return sum(f.terms.values())


def normalize(f):
    """Canonical representative of the unit orbit {+-t^I * f}.

    The minimal exponent of each variable over the support becomes 0 and the
    coefficient of the lexicographically largest surviving exponent vector
    is made positive (so gcd(t - 1, t^2 - 1) comes out as t - 1, not 1 - t).
    Idempotent, and constant on unit orbits; the zero polynomial is returned
    unchanged.

    >>> t = LaurentPoly.variable(0, 1)
    >>> print(normalize(t**-1 - 4 + t))
    t^2 - 4*t + 1
    """
    if f.is_zero():
        return f
    lo, _ = f.exponent_range()
    g = f.shift(tuple(-x for x in lo))
    if g.terms[max(g.terms)] < 0:
        g = -g
    return g


def unit_quotient(f, g):
    """The MonomialUnit u with f == u * g, or None if f, g are not associates."""
    if f.arity != g.arity:
        raise ValueError("arity mismatch")
    if f.is_zero() or g.is_zero():
        return None
    if len(f.terms) != len(g.terms):
        return None
    ef, cf = min(f.terms.items())
    eg = min(g.terms)
    shift = tuple(a - b for a, b in zip(ef, eg))
    for sign in (1, -1):
        if f == sign * g.shift(shift):
            return MonomialUnit(sign, shift)
    return None


@dataclass(frozen=True)
class MonomialUnit:
    """A unit +-t^I of the Laurent ring."""

    sign: int
    shift: tuple

    def as_poly(self, arity=None):
        if arity is None:
            arity = len(self.shift)
        return LaurentPoly(arity, {tuple(self.shift): self.sign})

    def __str__(self):
        return format_poly(self.as_poly())


class Symmetry(Enum):
    """Symmetry classes under the exponent-negation automorphism.

    Listed in descending order of strength: symmetric implies unit
    symmetric implies mod unit symmetric.
    """

    SYMMETRIC = "Symmetric"
    UNIT_SYMMETRIC = "UnitSymmetric"
    MOD_UNIT_SYMMETRIC = "ModUnitSymmetric"
    ASYMMETRIC = "Asymmetric"

    @property
    def strength(self):
        order = [Symmetry.ASYMMETRIC, Symmetry.MOD_UNIT_SYMMETRIC,
                 Symmetry.UNIT_SYMMETRIC, Symmetry.SYMMETRIC]
        return order.index(self)

    def at_least(self, other):
        return self.strength >= other.strength


@dataclass(frozen=True)
class SymmetryClass:
    """Strongest applicable symmetry class, with a witnessing unit.

    The witness u satisfies the defining identity of the reported class:
    iota(f) == f for Symmetric (u == 1), iota(u*f) == u*f for UnitSymmetric,
    iota(f) == u*f for ModUnitSymmetric, and is None for Asymmetric.
    """

    kind: Symmetry
    witness: MonomialUnit | None = None


def classify_symmetry(f):
    """Classify a nonzero polynomial as (unit/mod unit) symmetric or not.

    If iota(f) == +-t^J * f at all, comparing the extremes of the support
    forces J_i = -(min_i + max_i), so only that single candidate shift is
    tested.  Unit symmetry additionally needs the sign to be + and every J_i
    to be even (then u = t^(J/2) symmetrizes f).
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no symmetry class")
    iot = involution(f)
    if iot == f:
        return SymmetryClass(Symmetry.SYMMETRIC,
                             MonomialUnit(1, (0,) * f.arity))
    lo, hi = f.exponent_range()
    cand = tuple(-(l + h) for l, h in zip(lo, hi))
    shifted = f.shift(cand)
    if iot == shifted:
        if all(j % 2 == 0 for j in cand):
            half = tuple(j // 2 for j in cand)
            return SymmetryClass(Symmetry.UNIT_SYMMETRIC, MonomialUnit(1, half))
        return SymmetryClass(Symmetry.MOD_UNIT_SYMMETRIC, MonomialUnit(1, cand))
    if iot == -shifted:
        return SymmetryClass(Symmetry.MOD_UNIT_SYMMETRIC, MonomialUnit(-1, cand))
    return SymmetryClass(Symmetry.ASYMMETRIC, None)


# ----------------------------------------------------------------------
# Exact division and GCD.
#
# Internally both work on ordinary (non-negative exponent) polynomials:
# clearing the monomial content of a Laurent polynomial only changes it
# by a unit, and units are irrelevant to divisibility questions.
# ----------------------------------------------------------------------

def _monic_shift(f):
    """Shift f so all exponents are >= 0 with per-variable minimum 0."""
    lo, _ = f.exponent_range()
    return f.shift(tuple(-x for x in lo)).terms


def _dict_mul(f, g):
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def _dict_sub(f, g):
    out = dict(f)
    for e, c in g.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def _dict_div_exact(f, g):
    """Exact quotient f/g in Z[x1..xn] (dicts, exponents >= 0), else None."""
    if not g:
        return None
    if not f:
        return {}
    q = {}
    rem = dict(f)
    glead = max(g)
    gc = g[glead]
    while rem:
        rlead = max(rem)
        qexp = tuple(a - b for a, b in zip(rlead, glead))
        if any(x < 0 for x in qexp) or rem[rlead] % gc:
            return None
        qc = rem[rlead] // gc
        q[qexp] = qc
        rem = _dict_sub(rem, _dict_mul({qexp: qc}, g))
    return q


def divide_exact(f, g):
    """Exact quotient f/g in the Laurent ring, or None if g does not divide f."""
    if f.arity != g.arity:
        raise ValueError("arity mismatch")
    if g.is_zero():
        return None
    if f.is_zero():
        return LaurentPoly.zero(f.arity)
    flo, _ = f.exponent_range()
    glo, _ = g.exponent_range()
    q = _dict_div_exact(_monic_shift(f), _monic_shift(g))
    if q is None:
        return None
    shift = tuple(a - b for a, b in zip(flo, glo))
    return LaurentPoly(f.arity, q).shift(shift)


def _main_degree(f, n):
    return max(e[n - 1] for e in f)


def _main_coeff(f, n, k):
    """Coefficient of x_n^k, kept at full ambient arity with slot n-1 zeroed."""
    return {e[:n - 1] + (0,) + e[n:]: c for e, c in f.items() if e[n - 1] == k}


def _attach_main(coeff, n, k):
    return {e[:n - 1] + (k,) + e[n:]: c for e, c in coeff.items()}


def _content_and_primitive(f, n):
    """Content (gcd of x_n-coefficients, a poly in the other variables)
    and primitive part of f viewed in R[x_n], R = Z[x1..x_{n-1}]."""
    ambient = len(next(iter(f)))
    degs = sorted({e[n - 1] for e in f})
    cont = {}
    for k in degs:
        cont = _dict_gcd(cont, _main_coeff(f, n, k), n - 1)
        if cont == {(0,) * ambient: 1}:
            break
    prim = {}
    for k in degs:
        q = _dict_div_exact(_main_coeff(f, n, k), cont)
        prim.update(_attach_main(q, n, k))
    return cont, prim


def _pseudo_rem(f, g, n):
    """Pseudo-remainder of f by g in the main variable x_n."""
    df, dg = _main_degree(f, n), _main_degree(g, n)
    lg = _main_coeff(g, n, dg)
    r = dict(f)
    steps = df - dg + 1
    while r and _main_degree(r, n) >= dg:
        dr = _main_degree(r, n)
        lr = _main_coeff(r, n, dr)
        r = _dict_sub(_dict_mul(lg, r),
                      _dict_mul(_attach_main(lr, n, dr - dg), g))
        steps -= 1
    for _ in range(steps):
        r = _dict_mul(lg, r)
    return r


def _dict_gcd(f, g, n):
    """GCD in Z[x1..xn] by primitive pseudo-remainder sequences.

    n counts the variables actually in play; exponent tuples keep the full
    ambient arity, with trailing coordinates 0 once recursion passes them.
    At n == 0 both inputs are integer constants.
    """
    if not f:
        return dict(g)
    if not g:
        return dict(f)
    if n == 0:
        arity = len(next(iter(f)))
        a = abs(next(iter(f.values())))
        b = abs(next(iter(g.values())))
        return {(0,) * arity: math.gcd(a, b)}
    cf, pf = _content_and_primitive(f, n)
    cg, pg = _content_and_primitive(g, n)
    cont = _dict_gcd(cf, cg, n - 1)
    if _main_degree(pf, n) < _main_degree(pg, n):
        pf, pg = pg, pf
    while pg:
        r = _pseudo_rem(pf, pg, n)
        pf = pg
        pg = _content_and_primitive(r, n)[1] if r else {}
    return _dict_mul(cont, _content_and_primitive(pf, n)[1])


def gcd(f, g):
    """A greatest common divisor in the Laurent ring, returned normalized.

    gcd(f, 0) == normalize(f) and gcd(0, 0) == 0.  Well defined up to units
    because the ring is a UFD; the normalized representative is returned.
    """
    if f.arity != g.arity:
        raise ValueError("arity mismatch")
    if f.is_zero():
        return normalize(g)
    if g.is_zero():
        return normalize(f)
    n = f.arity
    d = _dict_gcd(_monic_shift(f), _monic_shift(g), n)
    return normalize(LaurentPoly(n, d))


def gcd_list(polys, arity):
    """GCD of a finite family; 0 for an empty family (the zero ideal)."""
    acc = LaurentPoly.zero(arity)
    for f in polys:
        acc = gcd(acc, f)
        if acc.is_one():
            break
    return acc


# ----------------------------------------------------------------------
# Exact products over roots of unity.
# ----------------------------------------------------------------------

def root_of_unity_norm(f, primes):
    """Exact integer product of f over all tuples of p_i-th roots of unity.

    Returns prod f(rho_1^{e_1}, ..., rho_n^{e_n}) over all 0 <= e_i < p_i,
    with rho_i a primitive p_i-th root of unity.  The product is invariant
    under every Galois substitution rho_i -> rho_i^k, so it is a rational
    integer; the computation stays in Z[x_1..x_n]/(x_i^{p_i} - 1) and the
    final reduction modulo the cyclotomic polynomials must leave a constant,
    which is asserted.  A zero return value is legitimate (f vanished at
    some root-of-unity tuple).
    """
    if f.arity != len(primes):
        raise ValueError("need one prime per variable (arity %d, got %d primes)"
                         % (f.arity, len(primes)))
    for p in primes:
        # the final reduction uses 1 + x + ... + x^(p-1), which is the
        # cyclotomic polynomial only for prime p
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("%r is not prime" % (p,))
    n = f.arity
    primes = tuple(primes)

    def mul(a, b):
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple((x + y) % p for x, y, p in zip(e1, e2, primes))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return out

    result = {(0,) * n: 1}
    for exps in product(*(range(p) for p in primes)):
        image = {}
        for mono, coeff in f.terms.items():
            e = tuple((m * x) % p for m, x, p in zip(mono, exps, primes))
            v = image.get(e, 0) + coeff
            if v:
                image[e] = v
            elif e in image:
                del image[e]
        result = mul(result, image)
        if not result:
            return 0

    # Reduce each variable modulo 1 + x + ... + x^(p-1): exponent p-1
    # rewrites to minus the sum of the lower powers.
    for i, p in enumerate(primes):
        reduced = {}
        for e, c in result.items():
            if e[i] < p - 1:
                reduced[e] = reduced.get(e, 0) + c
            else:
                for k in range(p - 1):
                    ek = e[:i] + (k,) + e[i + 1:]
                    reduced[ek] = reduced.get(ek, 0) - c
        result = {e: c for e, c in reduced.items() if c}
    if not result:
        return 0
    if set(result) != {(0,) * n}:
        raise AssertionError("root-of-unity product did not reduce to an integer")
    return result[(0,) * n]


# ----------------------------------------------------------------------
# Text format: integer coefficients, variables t or t1..tn, operators
# + - *, exponents ^ with optional negative integers, parentheses.
# ----------------------------------------------------------------------

def _var_names(arity):
    if arity == 1:
        return ["t"]
    return ["t%d" % (i + 1) for i in range(arity)]


def format_poly(f):
    """Render in the canonical text form, terms in lexicographic exponent
    order from largest to smallest.  The zero polynomial prints as "0"."""
    if f.is_zero():
        return "0"
    names = _var_names(f.arity)
    pieces = []
    for exps in sorted(f.terms, reverse=True):
        coeff = f.terms[exps]
        vars_part = "*".join(
            name if e == 1 else "%s^%d" % (name, e)
            for name, e in zip(names, exps) if e != 0)
        mag = abs(coeff)
        if vars_part:
            body = vars_part if mag == 1 else "%d*%s" % (mag, vars_part)
        else:
            body = str(mag)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)


class _PolyParser:
    """Recursive-descent parser for the polynomial grammar."""

    def __init__(self, text, arity):
        self.text = text
        self.pos = 0
        self.arity = arity

    def error(self, message):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def parse(self):
        result = self.expr()
        if self.peek():
            self.error("unexpected trailing input %r" % self.peek())
        return result

    def expr(self):
        sign = 1
        while True:
            if self.eat("-"):
                sign = -sign
            elif not self.eat("+"):
                break
        result = sign * self.term()
        while True:
            if self.eat("+"):
                result = result + self.term()
            elif self.eat("-"):
                result = result - self.term()
            else:
                return result

    def term(self):
        result = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                result = result * self.factor()
            elif ch.isdigit() or ch == "t" or ch == "(":
                # juxtaposition, e.g. "2t" or "3(t+1)"
                result = result * self.factor()
            else:
                return result

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            exp = self.integer()
            if abs(exp) > MAX_EXPONENT:
                self.error("exponent overflow")
            if base.is_unit():
                return base ** exp
            if exp < 0:
                self.error("negative power of a non-monomial")
            return base ** exp
        return base

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if not self.eat(")"):
                self.error("expected ')'")
            return inner
        if ch == "-":
            self.pos += 1
            return -self.atom()
        if ch.isdigit():
            return LaurentPoly.constant(self.unsigned_integer(), self.arity)
        if ch == "t":
            return self.variable()
        self.error("expected a term" if ch else "unexpected end of input")

    def variable(self):
        self.pos += 1
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits:
            if self.arity != 1:
                self.error("bare 't' needs arity 1; use t1..t%d" % self.arity)
            index = 0
        else:
            index = int(digits) - 1
            if not 0 <= index < self.arity:
                self.pos = start - 1
                self.error("variable t%s out of range for arity %d"
                           % (digits, self.arity))
        return LaurentPoly.variable(index, self.arity)

    def unsigned_integer(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def integer(self):
        self.skip_ws()
        sign = 1
        if self.eat("-"):
            sign = -1
        elif self.eat("+"):
            pass
        self.skip_ws()
        return sign * self.unsigned_integer()


def parse_poly(text, arity):
    """Parse the text format into a polynomial of the given arity.

    >>> dict(parse_poly("t^2 - 4*t + 1", 1).terms)
    {(2,): 1, (1,): -4, (0,): 1}
    """
    return _PolyParser(text, arity).parse()
