"""Resultant of a (2,1) triple and the generic / non-generic split.

The resultant is the 4x4 determinant built from the dehomogenized forms
``P_i(x, z) = p_i(x, 1, z, 1)``: expand

    det [[P0(x,z), P1(x,z), P2(x,z)],
         [P0(X,z), P1(X,z), P2(X,z)],
         [P0(X,Z), P1(X,Z), P2(X,Z)]]

divide exactly by ``(x - X)`` and then by ``(z - Z)``, and read off the
coefficients ``b_ij`` of ``{1, x, z, xz} x X^j``.  Its normalization is
fixed by that construction order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bipoly import BiDeg, BiHomPoly, InputTriple, mult_matrix
from .errors import InternalInvariantViolation, InternalNonExactDivision, WrongBidegree, ZeroInput
from .exactnum import ExactMatrix, det, nullity, rational
from .hilbert import InstanceClass

# exponent slots: x, z, X, Z
_VARS = ("x", "z", "X", "Z")


class AffinePoly3:
    """Polynomial in x, z, X, Z with per-variable degree bounds."""

    __slots__ = ("terms", "bounds")

    def __init__(self, terms=None, bounds=(2, 2, 4, 1)):
        self.bounds = tuple(bounds)
        self.terms = {}
        for e, c in (terms or {}).items():
            if c:
                self._check(e)
                self.terms[e] = rational(c)

    def _check(self, e):
        for k, (a, b) in enumerate(zip(e, self.bounds)):
            if a > b:
                raise InternalInvariantViolation(f"degree in {_VARS[k]} exceeds bound {b}")

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return AffinePoly3(out, self.bounds)

    def __neg__(self):
        return AffinePoly3({e: -c for e, c in self.terms.items()}, self.bounds)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                g = tuple(a + b for a, b in zip(e, f))
                out[g] = out.get(g, 0) + c * d
        return AffinePoly3(out, self.bounds)

    def degree(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def divide_by_difference(self, var: int, root: int) -> "AffinePoly3":
        """Exact quotient by ``(v - r)`` where v, r are variable slots.

        Synthetic division in ``v`` with the root ``r`` treated as a
        coefficient-ring element.
        """
        d = self.degree(var)
        if d < 0:
            return AffinePoly3({}, self.bounds)
        # coefficients of v^k, each a polynomial without v
        coeffs = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            rest = list(e)
            k = rest[var]
            rest[var] = 0
            coeffs[k][tuple(rest)] = c
        shift = [0, 0, 0, 0]
        shift[root] = 1

        def times_root(poly):
            return {tuple(a + b for a, b in zip(e, shift)): c for e, c in poly.items()}

        def plus(a, b):
            out = dict(a)
            for e, c in b.items():
                out[e] = out.get(e, 0) + c
            return {e: c for e, c in out.items() if c}

        q = [None] * d
        carry = {}
        for k in range(d, 0, -1):
            carry = plus(coeffs[k], times_root(carry)) if k < d else dict(coeffs[d])
            q[k - 1] = carry
        remainder = plus(coeffs[0], times_root(carry)) if d > 0 else coeffs[0]
        if remainder:
            raise InternalNonExactDivision(f"nonzero remainder dividing by ({_VARS[var]} - {_VARS[root]})")
        out = {}
        for k, poly in enumerate(q):
            for e, c in poly.items():
                g = list(e)
                g[var] = k
                out[tuple(g)] = c
        return AffinePoly3(out, self.bounds)

    def __repr__(self):
        return f"AffinePoly3({self.terms!r})"


def dehomogenize(p: BiHomPoly, xvar: str = "x", zvar: str = "z") -> AffinePoly3:
    """``p(x, 1, z, 1)`` written in the chosen pair of variable slots."""
    if p.deg != (2, 1):
        raise WrongBidegree(f"expected bidegree (2,1), got {p.deg}")
    xi, zi = _VARS.index(xvar), _VARS.index(zvar)
    out = {}
    for i, j, c in p.terms():
        e = [0, 0, 0, 0]
        e[xi] = 2 - i  # x^(2-i) y^i with y = 1
        e[zi] = 1 - j  # z^(1-j) w^j with w = 1
        out[tuple(e)] = c
    return AffinePoly3(out)


def _det3(M):
    (a, b, c), (d, e, f), (g, h, i) = M
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@lru_cache(maxsize=1024)
def bezout_matrix(p: InputTriple) -> ExactMatrix:
    B = [
        [dehomogenize(q, "x", "z") for q in p],
        [dehomogenize(q, "X", "z") for q in p],
        [dehomogenize(q, "X", "Z") for q in p],
    ]
    d = _det3(B)
    b = d.divide_by_difference(0, 2).divide_by_difference(1, 3)
    if b.degree(3) > 0 or b.degree(0) > 1 or b.degree(1) > 1 or b.degree(2) > 3:
        raise InternalInvariantViolation("quotient exceeds the expected degree bounds")
    rows = []
    for ex, ez in ((0, 0), (1, 0), (0, 1), (1, 1)):  # 1, x, z, xz
        rows.append([b.terms.get((ex, ez, j, 0), 0) for j in range(4)])
    return ExactMatrix.from_rows(rows)


@dataclass(frozen=True)
class ResultantReport:
    value: object

    @property
    def is_zero(self) -> bool:
        return self.value == 0


def resultant_21(p: InputTriple) -> ResultantReport:
    return ResultantReport(det(bezout_matrix(p)))


@lru_cache(maxsize=4096)
def classify(p: InputTriple) -> InstanceClass:
    from .syzygy import syz_dim

    if resultant_21(p).is_zero:
        return InstanceClass.Degenerate
    d = syz_dim(p, 2, 3)
    if d == 0:
        return InstanceClass.Generic
    if d == 1:
        return InstanceClass.NonGeneric
    raise InternalInvariantViolation(f"dim Syz(2,3) = {d} for a triple without common zeros")


def coprime_pair(q0: BiHomPoly, q1: BiHomPoly) -> bool:
    """Do two (2,1) forms share no common factor?"""
    if q0.is_zero() or q1.is_zero():
        raise ZeroInput("coprimality of the zero polynomial is undefined")
    src = BiDeg(*q0.deg)
    M = mult_matrix(q0, q1.deg).hstack(mult_matrix(q1, src))
    return nullity(M) == 1


def sylvester_quadratics(g0: BiHomPoly, g1: BiHomPoly):
    """Resultant of two binary quadratics in x, y (bidegree (2,0))."""
    a0, b0, c0 = (r[0] for r in g0.coeffs)
    a1, b1, c1 = (r[0] for r in g1.coeffs)
    S = ExactMatrix.from_rows([
        [a0, b0, c0, 0],
        [0, a0, b0, c0],
        [a1, b1, c1, 0],
        [0, a1, b1, c1],
    ])
    return det(S)


def three_point_product(A, B, C):
    """``C(1+B)(BC-1)(1+A)(A-C)(AB-1)`` for the three-point family."""
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    return rational(C * (1 + B) * (B * C - 1) * (1 + A) * (A - C) * (A * B - 1))
