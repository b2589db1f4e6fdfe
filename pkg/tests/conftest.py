"""Shared independent oracles for the test suite.

These deliberately avoid the code paths they are used to check: integer
determinants come from Bareiss elimination on plain int lists, Smith
invariant factors from gcd-of-minors ratios, and unit symmetry of
one-variable polynomials from a palindrome test on dense coefficient
lists.
"""

from itertools import combinations
from math import gcd as int_gcd


def int_det(A):
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(A)
    if n == 0:
        return 1
    mat = [list(map(int, row)) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if mat[i][k]), None)
            if swap is None:
                return 0
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[k][k] * mat[i][j]
                             - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[-1][-1]


def mat_mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)]
            for row in A]


def mat_pow(A, k):
    n = len(A)
    out = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(k):
        out = mat_mul(out, A)
    return out


def minors_gcd(A, k):
    m = len(A)
    n = len(A[0]) if m else 0
    g = 0
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            sub = [[A[i][j] for j in cols] for i in rows]
            g = int_gcd(g, abs(int_det(sub)))
    return g


def smith_factors_oracle(A):
    """Nonzero invariant factors from gcd-of-minors ratios:
    f_k = gcd(k-minors) / gcd((k-1)-minors)."""
    m = len(A)
    n = len(A[0]) if m else 0
    out = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        dk = minors_gcd(A, k)
        if dk == 0:
            break
        out.append(dk // prev)
        prev = dk
    return tuple(out)


def random_unimodular(rng, n, steps=12):
    A = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.choice((-2, -1, 1, 2))
            A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        elif kind == 1 and i != j:
            A[i], A[j] = A[j], A[i]
        elif kind == 2:
            A[i] = [-a for a in A[i]]
    return A


def dense_coeffs(f):
    """One-variable dense coefficient list from min to max exponent."""
    (lo,), (hi,) = f.exponent_range()
    return [f.terms.get((k,), 0) for k in range(lo, hi + 1)]


def palindrome_unit_symmetric(f):
    """Independent unit-symmetry test: dense list palindromic with even
    span (equivalently the negation-of-exponents image is an even shift)."""
    c = dense_coeffs(f)
    return c == c[::-1] and (len(c) - 1) % 2 == 0


def palindrome_mod_unit_symmetric(f):
    c = dense_coeffs(f)
    return c == c[::-1] or c == [-x for x in c[::-1]]
