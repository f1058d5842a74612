"""Bihomogeneous polynomials in R = k[x, y, z, w].

``deg x = deg y = (1, 0)`` and ``deg z = deg w = (0, 1)``.  A polynomial of
bidegree ``(m, n)`` is stored as an ``(m+1) x (n+1)`` grid ``c`` where
``c[i][j]`` multiplies ``x^(m-i) y^i z^(n-j) w^j``.  Flattening the grid
row by row (index ``i*(n+1) + j``) gives the fixed monomial order used by
every matrix in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from .errors import DimensionMismatch, WrongBidegree, ZeroDivisor
from .exactnum import ExactMatrix, kernel_basis, rational, solve


class BiDeg(NamedTuple):
    m: int
    n: int

    def __add__(self, other):  # componentwise, not tuple concatenation
        return BiDeg(self.m + other[0], self.n + other[1])

    def __sub__(self, other):
        return BiDeg(self.m - other[0], self.n - other[1])

    def __neg__(self):
        return BiDeg(-self.m, -self.n)

    def nonneg(self) -> bool:
        return self.m >= 0 and self.n >= 0

    def __str__(self):
        return f"({self.m},{self.n})"


def dim_R(m: int, n: int) -> int:
    """dim R_(m,n)."""
    return (m + 1) * (n + 1) if m >= 0 and n >= 0 else 0


@dataclass(frozen=True)
class BiHomPoly:
    deg: BiDeg
    coeffs: tuple  # tuple of row tuples

    def __post_init__(self):
        m, n = self.deg
        if m < 0 or n < 0:
            raise WrongBidegree(f"bidegree {self.deg} is negative")
        if len(self.coeffs) != m + 1 or any(len(r) != n + 1 for r in self.coeffs):
            raise DimensionMismatch(f"grid does not have shape {m + 1}x{n + 1}")

    # -- construction -----------------------------------------------------
    @classmethod
    def zero(cls, m: int, n: int) -> "BiHomPoly":
        return cls(BiDeg(m, n), tuple((0,) * (n + 1) for _ in range(m + 1)))

    @classmethod
    def from_vector(cls, m: int, n: int, vec: Sequence) -> "BiHomPoly":
        if len(vec) != (m + 1) * (n + 1):
            raise DimensionMismatch("coefficient vector has the wrong length")
        vec = [rational(v) for v in vec]
        return cls(BiDeg(m, n), tuple(tuple(vec[i * (n + 1):(i + 1) * (n + 1)]) for i in range(m + 1)))

    @classmethod
    def monomial(cls, i: int, j: int, m: int, n: int, c=1) -> "BiHomPoly":
        """``c * x^(m-i) y^i z^(n-j) w^j``."""
        grid = [[0] * (n + 1) for _ in range(m + 1)]
        grid[i][j] = rational(c)
        return cls(BiDeg(m, n), tuple(map(tuple, grid)))

    # -- basic queries ----------------------------------------------------
    @property
    def m(self) -> int:
        return self.deg[0]

    @property
    def n(self) -> int:
        return self.deg[1]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.coeffs)

    def coeff(self, i: int, j: int):
        return self.coeffs[i][j]

    def coeff_vector(self) -> list:
        return [c for row in self.coeffs for c in row]

    def terms(self):
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    yield i, j, c

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "BiHomPoly") -> "BiHomPoly":
        if other.deg != self.deg:
            raise WrongBidegree(f"cannot add bidegrees {self.deg} and {other.deg}")
        return BiHomPoly(self.deg, tuple(
            tuple(rational(a + b) for a, b in zip(r, s)) for r, s in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BiHomPoly":
        return BiHomPoly(self.deg, tuple(tuple(-a for a in r) for r in self.coeffs))

    def __sub__(self, other: "BiHomPoly") -> "BiHomPoly":
        return self + (-other)

    def scale(self, c) -> "BiHomPoly":
        c = rational(c)
        return BiHomPoly(self.deg, tuple(tuple(rational(c * a) for a in r) for r in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, BiHomPoly):
            return self.scale(other)
        m, n = self.m + other.m, self.n + other.n
        grid = [[0] * (n + 1) for _ in range(m + 1)]
        for i, j, a in self.terms():
            for k, l, b in other.terms():
                grid[i + k][j + l] += a * b
        return BiHomPoly(BiDeg(m, n), tuple(tuple(rational(v) for v in r) for r in grid))

    __rmul__ = scale

    def __call__(self, x0, y0, z0, w0):
        return eval_poly(self, x0, y0, z0, w0)

    def subs_zw(self, s, t) -> "BiHomPoly":
        """Substitute ``z = s, w = t``; result has bidegree ``(m, 0)``."""
        n = self.n
        weights = [Fraction(s) ** (n - j) * Fraction(t) ** j for j in range(n + 1)]
        return BiHomPoly(BiDeg(self.m, 0), tuple(
            (rational(sum(c * wgt for c, wgt in zip(row, weights))),) for row in self.coeffs))

    def __str__(self):
        return format_poly(self)


def make(deg, coeffs) -> BiHomPoly:
    deg = BiDeg(*deg)
    return BiHomPoly(deg, tuple(tuple(rational(c) for c in row) for row in coeffs))


def mul(p: BiHomPoly, q: BiHomPoly) -> BiHomPoly:
    return p * q


def eval_poly(p: BiHomPoly, x0, y0, z0, w0):
    m, n = p.deg
    total = 0
    for i, j, c in p.terms():
        total += c * Fraction(x0) ** (m - i) * Fraction(y0) ** i * Fraction(z0) ** (n - j) * Fraction(w0) ** j
    return rational(total)


def coeff_vector(p: BiHomPoly) -> list:
    return p.coeff_vector()


# common small polynomials
X = BiHomPoly.monomial(0, 0, 1, 0)
Y = BiHomPoly.monomial(1, 0, 1, 0)
Z = BiHomPoly.monomial(0, 0, 0, 1)
W = BiHomPoly.monomial(0, 1, 0, 1)
ONE = BiHomPoly.monomial(0, 0, 0, 0)


def monomials(m: int, n: int) -> list[BiHomPoly]:
    """Basis of R_(m,n) in the fixed monomial order."""
    if m < 0 or n < 0:
        return []
    return [BiHomPoly.monomial(i, j, m, n) for i in range(m + 1) for j in range(n + 1)]


@lru_cache(maxsize=None)
def _mult_matrix(p: BiHomPoly, src: BiDeg) -> ExactMatrix:
    sm, sn = src
    tm, tn = sm + p.m, sn + p.n
    rows, cols = (tm + 1) * (tn + 1), (sm + 1) * (sn + 1)
    flat = [0] * (rows * cols)
    terms = list(p.terms())
    for a in range(sm + 1):
        for b in range(sn + 1):
            col = a * (sn + 1) + b
            for i, j, c in terms:
                flat[((a + i) * (tn + 1) + b + j) * cols + col] = c
    return ExactMatrix(rows, cols, flat)


def mult_matrix(p: BiHomPoly, src) -> ExactMatrix:
    """Matrix of ``q -> p*q`` from R_src to R_(src + deg p)."""
    src = BiDeg(*src)
    if not src.nonneg():
        raise WrongBidegree(f"source bidegree {src} is negative")
    return _mult_matrix(p, src)


# ---------------------------------------------------------------------------
# splittings


@dataclass(frozen=True)
class SplitZW:
    A: BiHomPoly
    B: BiHomPoly


@dataclass(frozen=True)
class SplitXY:
    C: BiHomPoly
    D: BiHomPoly
    E: BiHomPoly


def split_zw(p: BiHomPoly) -> SplitZW:
    """``p = A z + B w`` for ``p`` of bidegree ``(m, 1)``."""
    if p.n != 1:
        raise WrongBidegree(f"split_zw needs n == 1, got {p.deg}")
    A = BiHomPoly(BiDeg(p.m, 0), tuple((r[0],) for r in p.coeffs))
    B = BiHomPoly(BiDeg(p.m, 0), tuple((r[1],) for r in p.coeffs))
    return SplitZW(A, B)


def split_xy(p: BiHomPoly) -> SplitXY:
    """``p = C x^2 + D xy + E y^2`` for ``p`` of bidegree ``(2, n)``."""
    if p.m != 2:
        raise WrongBidegree(f"split_xy needs m == 2, got {p.deg}")
    C, D, E = (BiHomPoly(BiDeg(0, p.n), (p.coeffs[i],)) for i in range(3))
    return SplitXY(C, D, E)


def join_zw(s: SplitZW) -> BiHomPoly:
    return s.A * Z + s.B * W


def join_xy(s: SplitXY) -> BiHomPoly:
    return s.C * (X * X) + s.D * (X * Y) + s.E * (Y * Y)


def divide_exact(p: BiHomPoly, d: BiHomPoly) -> Optional[BiHomPoly]:
    """``q`` with ``q * d == p``, or ``None`` when ``d`` does not divide ``p``."""
    if d.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    qdeg = p.deg - d.deg
    if not qdeg.nonneg():
        return None
    x = solve(mult_matrix(d, qdeg), p.coeff_vector())
    if x is None:
        return None
    return BiHomPoly.from_vector(qdeg.m, qdeg.n, x)


def linear_content_xy(entries: Sequence[BiHomPoly]):
    """Common linear factor ``l = a x + b y`` of bidegree-(1, n) entries.

    Returns ``(l, quotients)`` with ``l`` normalized to leading coefficient 1,
    or ``None`` if the entries share no such factor (including the case
    where every entry is zero).
    """
    for e in entries:
        if e.m != 1:
            raise WrongBidegree(f"linear_content_xy needs m == 1, got {e.deg}")
    # entry = x u + y v; l | entry  <=>  b u - a v = 0
    rows = []
    for e in entries:
        u, v = e.coeffs
        for uj, vj in zip(u, v):
            rows.append([-vj, uj])
    if not any(any(r) for r in rows):
        return None
    ker = kernel_basis(ExactMatrix.from_rows(rows))
    if len(ker) != 1:
        return None
    a, b = ker[0]
    ell = BiHomPoly(BiDeg(1, 0), ((a,), (b,)))
    quotients = []
    for e in entries:
        u, v = e.coeffs
        row = u if a else v
        c = a if a else b
        quotients.append(BiHomPoly(BiDeg(0, e.n), (tuple(rational(Fraction(t) / c) for t in row),)))
    return ell, tuple(quotients)


# ---------------------------------------------------------------------------
# (2,1) input triples

def from_abcdef(coeffs: Sequence) -> BiHomPoly:
    """Build ``a x^2z + b xyz + c y^2z + d x^2w + e xyw + f y^2w``."""
    if len(coeffs) != 6:
        raise DimensionMismatch("a (2,1) form has six coefficients")
    a, b, c, d, e, f = (rational(v) for v in coeffs)
    return BiHomPoly(BiDeg(2, 1), ((a, d), (b, e), (c, f)))


def to_abcdef(p: BiHomPoly) -> list:
    if p.deg != (2, 1):
        raise WrongBidegree(f"expected bidegree (2,1), got {p.deg}")
    (a, d), (b, e), (c, f) = p.coeffs
    return [a, b, c, d, e, f]


@dataclass(frozen=True)
class InputTriple:
    p0: BiHomPoly
    p1: BiHomPoly
    p2: BiHomPoly

    def __post_init__(self):
        for p in self.polys:
            if p.deg != (2, 1):
                raise WrongBidegree(f"input forms must have bidegree (2,1), got {p.deg}")

    @property
    def polys(self) -> tuple:
        return (self.p0, self.p1, self.p2)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    @classmethod
    def from_rows(cls, rows) -> "InputTriple":
        """Three rows ``[a, b, c, d, e, f]``."""
        return cls(*(from_abcdef(r) for r in rows))

    def rows(self) -> list[list]:
        return [to_abcdef(p) for p in self.polys]

    def transform(self, M) -> "InputTriple":
        """New triple ``q_i = sum_j M[i][j] p_j``."""
        out = []
        for i in range(3):
            acc = BiHomPoly.zero(2, 1)
            for j in range(3):
                if M[i][j]:
                    acc = acc + self.polys[j].scale(M[i][j])
            out.append(acc)
        return InputTriple(*out)


# ---------------------------------------------------------------------------
# formatting

def _fmt_coeff(c) -> str:
    return str(c)


def format_poly(p: BiHomPoly) -> str:
    m, n = p.deg
    parts = []
    for i, j, c in p.terms():
        mono = ""
        for var, e in (("x", m - i), ("y", i), ("z", n - j), ("w", j)):
            if e == 1:
                mono += var
            elif e > 1:
                mono += f"{var}^{e}"
        if mono == "":
            parts.append(_fmt_coeff(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{_fmt_coeff(c)}*{mono}")
    if not parts:
        return "0"
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
