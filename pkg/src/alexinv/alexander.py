"""Alexander matrices, order polynomials, and invariant reports.

Two conventions are exposed and never silently identified:

* ``RelativeFirstMinors``: the polynomial of a group presentation, the GCD
  of the (n-1) x (n-1) minors of the Fox matrix (n = generator count).
* ``OrderZeroDirect``: the zeroth order of a module given directly by a
  presentation matrix, the GCD of the n x n minors (n = column count).

Both are returned normalized, since they are only defined up to units.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import presentation as pres
from .laurent import (LaurentPoly, Symmetry, classify_symmetry, gcd_list,
                      involution, normalize, trace)


@dataclass(frozen=True)
class AlexanderMatrix:
    """A matrix over the Laurent ring; rows index relators, columns
    generators.  May have zero rows (free groups) but ``ncols`` and
    ``arity`` are always meaningful."""

    rows: tuple
    ncols: int
    arity: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")
            for entry in row:
                if entry.arity != self.arity:
                    raise ValueError("entry arity %d != matrix arity %d"
                                     % (entry.arity, self.arity))

    @classmethod
    def from_rows(cls, rows, arity, ncols=None):
        rows = tuple(tuple(row) for row in rows)
        if ncols is None:
            if not rows:
                raise ValueError("need ncols for an empty matrix")
            ncols = len(rows[0])
        return cls(rows, ncols, arity)

    @classmethod
    def diagonal(cls, entries, arity):
        n = len(entries)
        zero = LaurentPoly.zero(arity)
        rows = tuple(tuple(entries[i] if i == j else zero for j in range(n))
                     for i in range(n))
        return cls(rows, n, arity)

    @property
    def nrows(self):
        return len(self.rows)

    def evaluate(self, value_of_exponent):
        """Map every entry through a function on exponent vectors; used by
        the character-evaluation code in :mod:`alexinv.covers`."""
        return [[value_of_exponent(entry) for entry in row]
                for row in self.rows]


def det(rows, arity):
    """Exact determinant by cofactor expansion (matrices here are tiny);
    the empty 0 x 0 determinant is 1."""
    n = len(rows)
    if n == 0:
        return LaurentPoly.one(arity)
    if n == 1:
        return rows[0][0]
    # expand along the row with the most zero entries
    best = max(range(n), key=lambda i: sum(e.is_zero() for e in rows[i]))
    total = LaurentPoly.zero(arity)
    rest = [rows[i] for i in range(n) if i != best]
    for j, entry in enumerate(rows[best]):
        if entry.is_zero():
            continue
        sub = [[row[k] for k in range(n) if k != j] for row in rest]
        cofactor = det(sub, arity)
        if (best + j) % 2:
            cofactor = -cofactor
        total = total + entry * cofactor
    return total


def elementary_minors(A, size):
    """All size x size minors of A.  The 0 x 0 minor is 1; if size exceeds
    the row or column count the list is empty (generating the zero ideal)."""
    if size < 0:
        raise ValueError("minor size must be >= 0")
    if size == 0:
        return [LaurentPoly.one(A.arity)]
    if size > A.nrows or size > A.ncols:
        return []
    out = []
    for rws in combinations(range(A.nrows), size):
        picked = [A.rows[i] for i in rws]
        for cls_ in combinations(range(A.ncols), size):
            out.append(det([[row[j] for j in cls_] for row in picked], A.arity))
    return out


@dataclass(frozen=True)
class AlexanderPolynomial:
    """A normalized order polynomial together with the convention that
    produced it."""

    poly: LaurentPoly
    convention: str

    def __post_init__(self):
        object.__setattr__(self, "poly", normalize(self.poly))

    def __str__(self):
        return str(self.poly)


def fox_alexander_matrix(P, ab=None):
    """The Fox matrix of a presentation, wrapped with its shape data."""
    if ab is None:
        ab = pres.abelianize(P)
    rows = pres.fox_matrix(P, ab)
    return AlexanderMatrix(tuple(rows), P.num_generators, ab.rank)


def alexander_polynomial(P):
    """GCD of the (n-1) x (n-1) minors of the Fox matrix, normalized.

    Zero when no minors of that size exist (e.g. free groups on >= 2
    generators); requires b_1 >= 1.
    """
    A = fox_alexander_matrix(P)
    minors = elementary_minors(A, A.ncols - 1)
    poly = gcd_list(minors, A.arity)
    return AlexanderPolynomial(poly, "RelativeFirstMinors")


def order_zero_direct(A):
    """Zeroth order of a module presented directly by the matrix A: the GCD
    of its n x n minors, n = column count.  Rows are implicitly padded with
    zeros when there are fewer rows than columns, which makes every minor
    vanish; the empty 0 x 0 matrix yields 1."""
    minors = elementary_minors(A, A.ncols)
    if A.ncols > 0 and A.nrows < A.ncols:
        poly = LaurentPoly.zero(A.arity)
    else:
        poly = gcd_list(minors, A.arity)
    return AlexanderPolynomial(poly, "OrderZeroDirect")


# ----------------------------------------------------------------------
# The multiplication construction: diag(P, lambda) multiplies the order
# polynomial by lambda, provided lambda is symmetric with nonzero trace.
# ----------------------------------------------------------------------

class LevineHypothesisError(ValueError):
    """The multiplier polynomial fails a hypothesis; ``failed`` lists which."""

    def __init__(self, failed):
        super().__init__("multiplier rejected: %s" % ", ".join(failed))
        self.failed = tuple(failed)


@dataclass(frozen=True)
class LevineHypotheses:
    is_symmetric: bool
    trace_nonzero: bool
    trace: int

    @property
    def ok(self):
        return self.is_symmetric and self.trace_nonzero


def check_levine_hypotheses(lam):
    """Check the two hypotheses on a multiplier: symmetric (not merely unit
    symmetric) and nonzero trace."""
    tr = trace(lam)
    symmetric = (not lam.is_zero()) and involution(lam) == lam
    return LevineHypotheses(symmetric, tr != 0, tr)


def levine_extend(A, lam):
    """Block-diagonal extension diag(A, lam) of a presentation matrix.

    Requires lam symmetric with nonzero trace; the zeroth order of the
    result is normalize(lam * order) exactly.
    """
    if lam.arity != A.arity:
        raise ValueError("arity mismatch")
    hyp = check_levine_hypotheses(lam)
    if not hyp.ok:
        failed = []
        if not hyp.is_symmetric:
            failed.append("not symmetric")
        if not hyp.trace_nonzero:
            failed.append("trace is zero")
        raise LevineHypothesisError(failed)
    zero = LaurentPoly.zero(A.arity)
    rows = [tuple(row) + (zero,) for row in A.rows]
    rows.append((zero,) * A.ncols + (lam,))
    return AlexanderMatrix(tuple(rows), A.ncols + 1, A.arity)


@dataclass(frozen=True)
class RealizabilityVerdict:
    """Outcome of the one-variable realizability test, with a constructive
    witness matrix when the answer is yes."""

    realizable: bool
    unit_symmetric: bool
    trace_nonzero: bool
    trace: int
    witness: AlexanderMatrix | None = None
    witness_delta: AlexanderPolynomial | None = None


def characterize_b1_one(lam):
    """Decide whether a one-variable polynomial arises as the order
    polynomial of some closed orientable 3-manifold with first Betti
    number 1: it must be unit symmetric with nonzero trace.

    On success the verdict carries diag(1, u*lam) with u the symmetrizing
    unit; its zeroth order equals normalize(lam), a checkable certificate.
    """
    if lam.arity != 1:
        raise ValueError("expected a one-variable polynomial")
    tr = trace(lam)
    if lam.is_zero():
        return RealizabilityVerdict(False, False, False, 0)
    cls = classify_symmetry(lam)
    unit_sym = cls.kind in (Symmetry.SYMMETRIC, Symmetry.UNIT_SYMMETRIC)
    if not (unit_sym and tr != 0):
        return RealizabilityVerdict(False, unit_sym, tr != 0, tr)
    symmetrized = cls.witness.as_poly(lam.arity) * lam
    seed = AlexanderMatrix.diagonal([LaurentPoly.one(1)], 1)
    witness = levine_extend(seed, symmetrized)
    return RealizabilityVerdict(True, True, True, tr,
                                witness, order_zero_direct(witness))


def check_blanchfield(delta):
    """True iff the polynomial is at least mod unit symmetric, the symmetry
    every order polynomial of a closed orientable 3-manifold satisfies."""
    if delta.poly.is_zero():
        raise ValueError("zero polynomial has no symmetry class")
    cls = classify_symmetry(delta.poly)
    return cls.kind.at_least(Symmetry.MOD_UNIT_SYMMETRIC)


def torsion_order_b1_one(delta):
    """|value at 1|: for one-variable order polynomials this is the order
    of the torsion subgroup of H_1 (0 would mean infinite, i.e. the trace
    hypothesis fails)."""
    if delta.poly.arity != 1:
        raise ValueError("expected a one-variable polynomial")
    return abs(trace(delta.poly))


# ----------------------------------------------------------------------
# Bundled report.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    b1: int
    torsion: tuple
    delta: AlexanderPolynomial
    symmetry: object  # SymmetryClass, or None when delta == 0
    trace: int | None
    checks: dict

    @property
    def torsion_order(self):
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def as_dict(self):
        return {
            "b1": self.b1,
            "torsion": list(self.torsion),
            "delta": str(self.delta),
            "convention": self.delta.convention,
            "symmetry": None if self.symmetry is None
                        else self.symmetry.kind.value,
            "trace": self.trace,
            "checks": dict(self.checks),
        }


def full_report(P):
    """Compute b_1, torsion, the order polynomial and its symmetry class,
    plus coherence checks (for b_1 = 1, |delta(1)| must equal the torsion
    order of H_1; the symmetry must be at least mod unit symmetric)."""
    ab = pres.abelianize(P)
    if ab.rank < 1:
        raise ValueError("free rank is 0; no Alexander invariants")
    delta = alexander_polynomial(P)
    checks = {}
    if delta.poly.is_zero():
        symmetry = None
        tr = None
        checks["delta_is_zero"] = True
    else:
        symmetry = classify_symmetry(delta.poly)
        tr = trace(delta.poly)
        checks["mod_unit_symmetric"] = \
            symmetry.kind.at_least(Symmetry.MOD_UNIT_SYMMETRIC)
        if ab.rank == 1:
            checks["trace_matches_torsion_order"] = \
                abs(tr) == ab.torsion_order
    return InvariantReport(ab.rank, ab.torsion, delta, symmetry, tr, checks)
