"""Finitely presented groups and the algebra extracted from them.

A word is a tuple of (generator index, sign) letters, kept freely reduced.
From a presentation this module computes the abelianization via an exact
integer Smith normal form, the induced map onto the free part of H_1,
and Fox derivatives of relators, which feed the Alexander matrix.

The text format is ``<x, y | x*y*X*Y, ...>``: lowercase names declare
generators, an uppercase letter is the inverse of the corresponding
generator, ``*`` between letters is optional, ``[a,b]`` abbreviates the
commutator a b a^-1 b^-1, ``^n`` repeats (n may be negative), ``1`` is the
empty word, and ``#`` starts a line comment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, ParseError

NAME_CHARS = "abcdefghijklmnopqrstuvwxyz0123456789_"


def reduce_word(word):
    """Freely reduce: cancel adjacent x x^-1 pairs until none remain."""
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inverse_word(word):
    return tuple((g, -s) for g, s in reversed(word))


def concat(*words):
    out = ()
    for w in words:
        out = reduce_word(out + tuple(w))
    return out


def word_power(word, n):
    base = tuple(word) if n >= 0 else inverse_word(word)
    out = ()
    for _ in range(abs(n)):
        out = reduce_word(out + base)
    return out


@dataclass(frozen=True)
class Presentation:
    """A finitely presented group: generator names plus relator words."""

    generator_names: tuple
    relators: tuple

    def __post_init__(self):
        names = self.generator_names
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        for name in names:
            if not name or name[0] not in NAME_CHARS[:26] or \
                    any(c not in NAME_CHARS for c in name):
                raise ValueError("bad generator name %r" % (name,))
        object.__setattr__(self, "generator_names", tuple(names))
        object.__setattr__(self, "relators",
                           tuple(reduce_word(r) for r in self.relators))
        for rel in self.relators:
            for g, s in rel:
                if not 0 <= g < len(names) or s not in (1, -1):
                    raise ValueError("relator letter (%r, %r) out of range"
                                     % (g, s))

    @property
    def num_generators(self):
        return len(self.generator_names)

    @property
    def num_relators(self):
        return len(self.relators)

    def word_str(self, word):
        if not word:
            return "1"
        return "*".join(self.generator_names[g] if s > 0
                        else self.generator_names[g].upper()
                        for g, s in word)

    def __str__(self):
        gens = ", ".join(self.generator_names)
        rels = ", ".join(self.word_str(r) for r in self.relators)
        return "<%s | %s>" % (gens, rels)

    def exponent_matrix(self):
        """num_generators x num_relators matrix of exponent sums; column j
        is the image of relator j in Z^n under abelianization."""
        mat = [[0] * self.num_relators for _ in range(self.num_generators)]
        for j, rel in enumerate(self.relators):
            for g, s in rel:
                mat[g][j] += s
        return mat


# ----------------------------------------------------------------------
# Parsing.
# ----------------------------------------------------------------------

def _strip_comments(text):
    lines = []
    for line in text.splitlines():
        cut = line.find("#")
        lines.append(line if cut < 0 else line[:cut])
    return "\n".join(lines)


class _PresParser:
    def __init__(self, text):
        self.text = _strip_comments(text)
        self.pos = 0
        self.names = []
        self.index = {}
        self.tokens = []  # generator names and their inverses, longest first

    def error(self, message):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error("expected %r" % ch)
        self.pos += 1

    def parse(self):
        self.expect("<")
        if self.peek() != "|":
            self.names.append(self.generator_name())
            while self.peek() == ",":
                self.pos += 1
                self.names.append(self.generator_name())
        if len(set(self.names)) != len(self.names):
            self.error("duplicate generator name")
        self.index = {name: i for i, name in enumerate(self.names)}
        self.tokens = sorted(self.names, key=len, reverse=True)
        relators = []
        self.skip_ws()
        if self.peek() == "|":
            self.pos += 1
            if self.peek() != ">":
                relators.append(self.word())
                while self.peek() == ",":
                    self.pos += 1
                    relators.append(self.word())
        self.expect(">")
        self.skip_ws()
        if self.pos < len(self.text):
            self.error("unexpected trailing input")
        return Presentation(tuple(self.names), tuple(relators))

    def generator_name(self):
        self.skip_ws()
        start = self.pos
        if self.pos >= len(self.text) or self.text[self.pos] not in NAME_CHARS[:26]:
            self.error("expected a generator name (lowercase letter)")
        while self.pos < len(self.text) and self.text[self.pos] in NAME_CHARS:
            self.pos += 1
        return self.text[start:self.pos]

    def word(self):
        out = self.atom()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                out = concat(out, self.atom())
            elif ch and (ch.isalpha() or ch in "([1"):
                out = concat(out, self.atom())
            else:
                return out

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.word()
            self.expect(")")
            return self.maybe_power(inner)
        if ch == "[":
            self.pos += 1
            a = self.word()
            self.expect(",")
            b = self.word()
            self.expect("]")
            return self.maybe_power(concat(a, b, inverse_word(a), inverse_word(b)))
        if ch == "1":
            self.pos += 1
            return self.maybe_power(())
        if ch.isalpha():
            return self.maybe_power(self.letter())
        self.error("expected a word" if ch else "unexpected end of input")

    def letter(self):
        self.skip_ws()
        rest = self.text[self.pos:]
        for name in self.tokens:
            if rest.startswith(name):
                self.pos += len(name)
                return ((self.index[name], 1),)
            if rest.startswith(name.upper()):
                self.pos += len(name)
                return ((self.index[name], -1),)
        # isolate the offending identifier for the message
        end = self.pos
        while end < len(self.text) and self.text[end].lower() in NAME_CHARS:
            end += 1
        self.error("unknown generator name %r" % self.text[self.pos:end])

    def maybe_power(self, word):
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected an integer exponent")
            return word_power(word, sign * int(self.text[start:self.pos]))
        return word


def parse_presentation(text):
    """Parse ``<gens | relators>`` text (with optional # comments)."""
    return _PresParser(text).parse()


# ----------------------------------------------------------------------
# Smith normal form over Z.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V == D with U, V unimodular and D diagonal, the diagonal
    entries nonnegative and each dividing the next."""

    D: tuple
    U: tuple
    V: tuple

    @property
    def diagonal(self):
        m = len(self.D)
        n = len(self.D[0]) if m else 0
        return tuple(self.D[i][i] for i in range(min(m, n)))

    @property
    def invariant_factors(self):
        return tuple(d for d in self.diagonal if d != 0)


def _identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def smith_normal_form(A):
    """Exact Smith normal form of an integer matrix (any shape, may be empty).

    Pivots are chosen with minimal nonzero absolute value; purely integer
    row/column reduction, no modular arithmetic.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(x) for x in row] for row in A]
    U = _identity(m)
    V = _identity(n)

    def swap_rows(a, b):
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def add_row(dst, src, factor):
        # row_dst += factor * row_src
        Dd, Ds = D[dst], D[src]
        for j in range(n):
            Dd[j] += factor * Ds[j]
        Ud, Us = U[dst], U[src]
        for j in range(m):
            Ud[j] += factor * Us[j]

    def add_col(dst, src, factor):
        for row in D:
            row[dst] += factor * row[src]
        for row in V:
            row[dst] += factor * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while True:
        # locate a pivot of minimal absolute value in the trailing block
        pivot = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                v = row[j]
                if v and (pivot is None or abs(v) < pivot[0]):
                    pivot = (abs(v), i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[1])
        swap_cols(t, pivot[2])
        while True:
            if D[t][t] < 0:
                negate_row(t)
            # reduce the pivot column and row; a nonzero remainder becomes
            # the new, strictly smaller pivot
            restart = False
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    if q:
                        add_row(i, t, -q)
                    if D[i][t]:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    if q:
                        add_col(j, t, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            # cross is clear; enforce that the pivot divides the rest
            offender = None
            p = D[t][t]
            for i in range(t + 1, m):
                row = D[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        t += 1

    return SmithDecomposition(tuple(tuple(row) for row in D),
                              tuple(tuple(row) for row in U),
                              tuple(tuple(row) for row in V))


# ----------------------------------------------------------------------
# Abelianization and the map onto the free part of H_1.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianizationData:
    """H_1 of the presented group: free rank, invariant factors > 1, and the
    image of each generator in Z^rank (torsion discarded).  The coordinates
    come from the Smith basis, fixed once and recorded here."""

    rank: int
    torsion: tuple
    gen_images: tuple

    @property
    def torsion_order(self):
        out = 1
        for d in self.torsion:
            out *= d
        return out


def abelianize(P):
    """Abelianization from the Smith form of the exponent-sum matrix."""
    n = P.num_generators
    snf = smith_normal_form(P.exponent_matrix())
    diag = snf.diagonal
    free_idx = [i for i in range(n) if i >= len(diag) or diag[i] == 0]
    torsion = tuple(d for d in diag if d > 1)
    gen_images = tuple(tuple(snf.U[i][j] for i in free_idx) for j in range(n))
    return AbelianizationData(len(free_idx), torsion, gen_images)


def mod_p_rank(A, p):
    """Rank over F_p of an integer matrix."""
    rows = [[x % p for x in row] for row in A]
    n = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(inv * x) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


# ----------------------------------------------------------------------
# Fox calculus.
# ----------------------------------------------------------------------

class FreeGroupRingElement:
    """Integer linear combination of freely reduced words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for word, coeff in (terms or {}).items():
            word = reduce_word(word)
            if coeff:
                clean[word] = clean.get(word, 0) + coeff
                if not clean[word]:
                    del clean[word]
        self.terms = clean

    @classmethod
    def from_word(cls, word, coeff=1):
        return cls({tuple(word): coeff})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return FreeGroupRingElement(terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) - c
        return FreeGroupRingElement(terms)

    def __neg__(self):
        return FreeGroupRingElement({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = reduce_word(w1 + w2)
                terms[w] = terms.get(w, 0) + c1 * c2
        return FreeGroupRingElement(terms)

    def __eq__(self, other):
        return isinstance(other, FreeGroupRingElement) and \
            self.terms == other.terms

    def __repr__(self):
        return "FreeGroupRingElement(%r)" % (self.terms,)


def fox_derivative(word, gen):
    """The free derivative of a word with respect to generator ``gen``.

    Characterized by d(x)/dx = 1, d(x^-1)/dx = -x^-1, d(y)/dx = 0 for
    y != x, and the product rule d(uv)/dx = du/dx + u * dv/dx.
    """
    terms = {}
    prefix = ()
    for g, s in word:
        if g == gen:
            if s > 0:
                key = prefix
            else:
                key = reduce_word(prefix + ((g, -1),))
            terms[key] = terms.get(key, 0) + s
        prefix = reduce_word(prefix + ((g, s),))
    return FreeGroupRingElement(terms)


def abelianized_poly(element, gen_images, arity):
    """Push a free-group-ring element through the free abelianization,
    landing in the Laurent ring on ``arity`` variables."""
    terms = {}
    for word, coeff in element.terms.items():
        exps = [0] * arity
        for g, s in word:
            img = gen_images[g]
            for i in range(arity):
                exps[i] += s * img[i]
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly(arity, terms)


def fox_matrix(P, ab=None):
    """Relator-by-generator matrix of abelianized Fox derivatives.

    Entry (i, j) is the image of d(r_i)/d(x_j) in the Laurent ring on
    rank-many variables.  Requires free rank >= 1.
    """
    if ab is None:
        ab = abelianize(P)
    if ab.rank < 1:
        raise ValueError("free rank is 0; no Alexander matrix")
    rows = []
    for rel in P.relators:
        row = tuple(abelianized_poly(fox_derivative(rel, j),
                                     ab.gen_images, ab.rank)
                    for j in range(P.num_generators))
        rows.append(row)
    return tuple(rows)
