"""Exact graded invariant theory for Weyl group actions.

The graded trace of a Weyl element w on the cohomology of a torus power
T^r (generators in degree 1) is det(I + t*w)^r; on the coinvariant-
algebra model of G/T (generators in degree 2) it is

    prod_i (1 - t^(2*d_i)) / det(I - t^2 * w),

a division that is exact because the coinvariant algebra is finite
dimensional.  Averaging these characters over the Weyl group gives the
invariant dimensions degree by degree.  All arithmetic is integer or
rational and exact; summation order can never change a result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InexactDivision, TooLarge
from .rootdata import RootDatum, WeylGroup, enumerate_weyl
from .snf import int_det


# ---------------------------------------------------------------------------
# dense integer polynomials in one grading variable


@dataclass(frozen=True)
class GradedPoly:
    """Polynomial in t with integer coefficients; index = degree.

    The coefficient tuple never has trailing zeros, so equality of values
    is equality of tuples.  Construct through poly() which trims.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        if self.coefficients and self.coefficients[-1] == 0:
            raise ValueError("trailing zero coefficient; build via poly()")

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, d: int) -> int:
        if 0 <= d < len(self.coefficients):
            return self.coefficients[d]
        return 0

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return poly(out)

    def __neg__(self):
        return poly([-c for c in self.coefficients])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return poly([other * c for c in self.coefficients])
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def exact_div(self, den: "GradedPoly") -> "GradedPoly":
        """Quotient self / den, raising InexactDivision on any remainder.

        Works from the low end; the divisors used here have constant
        term +-1, so each step is an exact integer division.
        """
        if not den.coefficients:
            raise InexactDivision("division by zero polynomial")
        num = list(self.coefficients)
        d = list(den.coefficients)
        if abs(d[0]) != 1:
            raise InexactDivision("divisor must have unit constant term")
        if not num:
            return ZERO
        if len(num) < len(d):
            raise InexactDivision("degree of divisor exceeds dividend")
        qlen = len(num) - len(d) + 1
        q = [0] * qlen
        for k in range(qlen):
            q[k] = num[k] // d[0]
            for j, dj in enumerate(d):
                num[k + j] -= q[k] * dj
        if any(num):
            raise InexactDivision("polynomial division left a remainder")
        return poly(q)

    def divide_int(self, k: int) -> "GradedPoly":
        if any(c % k for c in self.coefficients):
            raise InexactDivision("coefficients not divisible by %d" % k)
        return poly([c // k for c in self.coefficients])

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                term = "t" if d == 1 else "t^%d" % d
                if c == 1:
                    parts.append(term)
                elif c == -1:
                    parts.append("-" + term)
                else:
                    parts.append("%d%s" % (c, term))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def poly(coeffs) -> GradedPoly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return GradedPoly(tuple(coeffs))


ZERO = GradedPoly(())
ONE = GradedPoly((1,))


# ---------------------------------------------------------------------------
# graded characters of single Weyl elements


def char_coefficients(w) -> list[int]:
    """Coefficients c_k of det(I + t*w): sums of principal k x k minors."""
    n = len(w)
    out = [0] * (n + 1)
    out[0] = 1
    for size in range(1, n + 1):
        for rows in combinations(range(n), size):
            out[size] += int_det([[w[i][j] for j in rows] for i in rows])
    return out


def exterior_char(w, r: int) -> GradedPoly:
    """Graded trace of w on the cohomology of T^r: det(I + t*w)^r."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return poly(char_coefficients(w)) ** r


def coinvariant_char(w, degrees) -> GradedPoly:
    """Graded trace of w on the coinvariant algebra, generators in degree 2.

    Computed as prod_i (1 - t^(2*d_i)) / det(I - t^2 * w); the division is
    exact for every genuine (Weyl element, degrees) pair, so a remainder
    means the caller paired a matrix with the wrong datum.
    """
    num = ONE
    for d in degrees:
        term = [0] * (2 * d + 1)
        term[0], term[2 * d] = 1, -1
        num = num * poly(term)
    cs = char_coefficients(w)
    den = [0] * (2 * len(w) + 1)
    for k, c in enumerate(cs):
        den[2 * k] = c if k % 2 == 0 else -c
    return num.exact_div(poly(den))


# ---------------------------------------------------------------------------
# Molien averages over the Weyl group


def poincare_char_variety(rd: RootDatum, r: int) -> GradedPoly:
    """Poincare polynomial of the identity component of the character
    variety of Z^r: the W-invariants of H^*(T^r)."""
    weyl = enumerate_weyl(rd)
    total = ZERO
    for w in weyl:
        total = total + exterior_char(w, r)
    return _finalize(total.divide_int(len(weyl)))


def poincare_hom_component(rd: RootDatum, r: int) -> GradedPoly:
    """Poincare polynomial of the identity component of the representation
    variety of Z^r: the W-invariants of H^*(G/T x T^r)."""
    weyl = enumerate_weyl(rd)
    total = ZERO
    for w in weyl:
        total = total + coinvariant_char(w, rd.degrees) * exterior_char(w, r)
    result = _finalize(total.divide_int(len(weyl)))
    assert result.degree() <= 2 * rd.positive_coroot_count() + r * rd.rank
    return result


def _finalize(p: GradedPoly) -> GradedPoly:
    assert p.coefficient(0) == 1, "invariant series must start at 1"
    assert all(c >= 0 for c in p.coefficients), "negative invariant dimension"
    return p


# ---------------------------------------------------------------------------
# independent brute-force oracle


def exterior_invariant_dims_oracle(weyl: WeylGroup, r: int) -> list[int]:
    """Invariant dimensions of the exterior algebra on r copies of the
    reflection lattice, computed without characteristic polynomials.

    Builds the action of every Weyl element on each exterior power in the
    explicit square-free monomial basis (matrix entries are minors of the
    r-fold block matrix), averages those matrices entrywise over the
    group, and reads off the trace of the resulting projector, exactly
    over the rationals.  On small bases the projector is verified to be
    idempotent before its trace is trusted.
    """
    elements = list(weyl)
    n = len(elements[0])
    dim = n * r
    if 2 ** dim > 4096:
        raise TooLarge("exterior algebra basis of size 2^%d" % dim)
    order = len(elements)
    out = []
    for d in range(dim + 1):
        basis = list(combinations(range(dim), d))
        size = len(basis)
        total = [[0] * size for _ in range(size)]
        for w in elements:
            block = [[w[i % n][j % n] if i // n == j // n else 0
                      for j in range(dim)] for i in range(dim)]
            for col, cols in enumerate(basis):
                sub = [[block[i][j] for j in cols] for i in range(dim)]
                for row, rows in enumerate(basis):
                    total[row][col] += int_det([sub[i] for i in rows])
        proj = [[Fraction(e, order) for e in row] for row in total]
        if size <= 40:
            square = [[sum(proj[i][k] * proj[k][j] for k in range(size))
                       for j in range(size)] for i in range(size)]
            assert square == proj, "group average is not idempotent"
        trace = sum(proj[i][i] for i in range(size))
        assert trace.denominator == 1 and trace >= 0
        out.append(int(trace))
    return out
