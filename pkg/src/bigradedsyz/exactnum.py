"""Exact rational linear algebra.

Scalars are ``int`` or :class:`fractions.Fraction`; every result is exact.
Two interchangeable backends compute rank, reduced echelon form and
determinants:

* ``"python"``: fraction-free (Bareiss) elimination on integer rows with
  first-nonzero pivoting, written here;
* ``"flint"``: the same fraction-free elimination in FLINT's ``fmpz_mat``.

Both return identical values because the outputs (rank, reduced echelon
form, determinant) are unique; the test-suite cross-checks them.  The
default is ``"flint"`` when python-flint is importable, overridable with
the ``BIGRADEDSYZ_BACKEND`` environment variable.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, NonSquare

try:  # pragma: no cover - exercised implicitly
    import flint as _flint
except ImportError:  # pragma: no cover
    _flint = None

Rational = Fraction

BACKENDS = ("python", "flint") if _flint is not None else ("python",)
DEFAULT_BACKEND = os.environ.get(
    "BIGRADEDSYZ_BACKEND", "flint" if _flint is not None else "python"
)


def rational(value) -> int | Fraction:
    """Normalize a scalar: integral values become ``int``, others ``Fraction``."""
    if isinstance(value, int):
        return value
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else q


class ExactMatrix:
    """Dense row-major matrix of exact rationals. Treated as immutable."""

    __slots__ = ("rows", "cols", "entries", "_cache")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{len(entries)} entries for a {rows}x{cols} matrix"
            )
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)
        self._cache = {}

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
            flat.extend(rational(v) for v in r)
        return cls(len(rows), cols, flat)

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int):
        flat = [0] * (n * n)
        for i in range(n):
            flat[i * n + i] = 1
        return cls(n, n, flat)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        e, c, r = self.entries, self.cols, self.rows
        return ExactMatrix(c, r, [e[i * c + j] for j in range(c) for i in range(r)])

    def mul_vec(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        out = []
        for i in range(self.rows):
            row = self.row(i)
            out.append(rational(sum(a * b for a, b in zip(row, v) if a and b)))
        return out

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        cols = [other.column(j) for j in range(other.cols)]
        flat = []
        for i in range(self.rows):
            row = self.row(i)
            for col in cols:
                flat.append(rational(sum(a * b for a, b in zip(row, col) if a and b)))
        return ExactMatrix(self.rows, other.cols, flat)

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch("row counts differ")
        flat = []
        for i in range(self.rows):
            flat.extend(self.row(i))
            flat.extend(other.row(i))
        return ExactMatrix(self.rows, self.cols + other.cols, flat)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, {self.tolist()!r})"


# ---------------------------------------------------------------------------
# integer rows

def _integer_rows(M: ExactMatrix) -> tuple[list[list[int]], list[int]]:
    """Clear denominators row by row; returns rows and the per-row scales."""
    rows, scales = [], []
    for i in range(M.rows):
        row = M.row(i)
        den = 1
        for v in row:
            if not isinstance(v, int):
                den = lcm(den, v.denominator)
        if den == 1:
            rows.append(list(row))
        else:
            rows.append([int(v * den) for v in row])
        scales.append(den)
    return rows, scales


def _to_fmpz(M: ExactMatrix):
    cached = M._cache.get("fmpz")
    if cached is None:
        rows, scales = _integer_rows(M)
        flat = [v for r in rows for v in r]
        cached = (_flint.fmpz_mat(M.rows, M.cols, flat), scales)
        M._cache["fmpz"] = cached
    return cached


# ---------------------------------------------------------------------------
# python backend: Bareiss

def bareiss_echelon(rows: list[list[int]], ncols: int):
    """Fraction-free row echelon form, in place.

    Pivots are the first nonzero entry at or below the current row in each
    column.  Returns ``(rank, pivot_columns, swaps)``.
    """
    nrows = len(rows)
    prev = 1
    r = 0
    pivots = []
    swaps = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and rows[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            swaps += 1
        piv_row = rows[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            if a == 0:
                if piv != prev:
                    for j in range(c + 1, ncols):
                        if row[j]:
                            row[j] = row[j] * piv // prev
                continue
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - a * piv_row[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return r, pivots, swaps


def _rref_python(M: ExactMatrix):
    rows, _ = _integer_rows(M)
    rank, pivots, _ = bareiss_echelon(rows, M.cols)
    # back-substitution over Q on the (already echelon) integer rows
    R = [[Fraction(v) for v in rows[k]] for k in range(rank)]
    for k in range(rank - 1, -1, -1):
        c = pivots[k]
        inv = 1 / R[k][c]
        R[k] = [v * inv for v in R[k]]
        for i in range(k):
            f = R[i][c]
            if f:
                R[i] = [a - f * b for a, b in zip(R[i], R[k])]
    return [[rational(v) for v in row] for row in R], pivots


def _rref_flint(M: ExactMatrix):
    fz, _ = _to_fmpz(M)
    R, den, rank = fz.rref()
    den = int(den)
    out, pivots = [], []
    for k, row in enumerate(R.tolist()[:rank]):
        vals = [int(v) for v in row]
        c = next(j for j, v in enumerate(vals) if v)
        pivots.append(c)
        out.append([rational(Fraction(v, den)) if v else 0 for v in vals])
    return out, pivots


def rref(M: ExactMatrix, backend: Optional[str] = None):
    """Reduced row echelon form: ``(nonzero rows, pivot columns)``."""
    backend = backend or DEFAULT_BACKEND
    key = ("rref", backend)
    if key not in M._cache:
        if M.rows == 0 or M.cols == 0:
            M._cache[key] = ([], [])
        elif backend == "flint":
            M._cache[key] = _rref_flint(M)
        else:
            M._cache[key] = _rref_python(M)
    return M._cache[key]


# ---------------------------------------------------------------------------
# public operations

def rank(M: ExactMatrix, backend: Optional[str] = None) -> int:
    backend = backend or DEFAULT_BACKEND
    if M.rows == 0 or M.cols == 0:
        return 0
    key = ("rank", backend)
    if key not in M._cache:
        if backend == "flint":
            M._cache[key] = _to_fmpz(M)[0].rank()
        else:
            rows, _ = _integer_rows(M)
            M._cache[key] = bareiss_echelon(rows, M.cols)[0]
    return M._cache[key]


def nullity(M: ExactMatrix, backend: Optional[str] = None) -> int:
    return M.cols - rank(M, backend)


def _lead_one(v: list) -> list:
    for a in v:
        if a:
            return [rational(Fraction(b) / a) if b else 0 for b in v]
    return v


def kernel_basis(M: ExactMatrix, backend: Optional[str] = None) -> list[list]:
    """Basis of the right null space, one vector per free column.

    Vectors are listed in increasing free-column order and scaled so their
    first nonzero coordinate is 1.
    """
    R, pivots = rref(M, backend)
    pivset = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivset:
            continue
        v = [0] * M.cols
        v[f] = 1
        for k, c in enumerate(pivots):
            if R[k][f]:
                v[c] = -R[k][f]
        basis.append(_lead_one(v))
    return basis


def det(M: ExactMatrix, backend: Optional[str] = None):
    if M.rows != M.cols:
        raise NonSquare(f"{M.rows}x{M.cols} matrix has no determinant")
    if M.rows == 0:
        return 1
    backend = backend or DEFAULT_BACKEND
    if backend == "flint":
        fz, scales = _to_fmpz(M)
        value = int(fz.det())
    else:
        rows, scales = _integer_rows(M)
        r, _, swaps = bareiss_echelon(rows, M.cols)
        value = 0 if r < M.rows else (-1) ** swaps * rows[-1][-1]
    den = 1
    for s in scales:
        den *= s
    return rational(Fraction(value, den))


def solve(M: ExactMatrix, v: Sequence, backend: Optional[str] = None):
    """Some ``x`` with ``M x = v`` (free variables zero), or ``None``."""
    if len(v) != M.rows:
        raise DimensionMismatch(f"right-hand side has length {len(v)}, expected {M.rows}")
    if M.rows == 0:
        return [0] * M.cols
    aug = M.hstack(ExactMatrix(M.rows, 1, [rational(a) for a in v]))
    R, pivots = rref(aug, backend)
    if pivots and pivots[-1] == M.cols:
        return None
    x = [0] * M.cols
    for k, c in enumerate(pivots):
        x[c] = R[k][M.cols]
    return x


def is_independent(vectors: Iterable[Sequence], backend: Optional[str] = None) -> bool:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return True
    return rank(ExactMatrix.from_rows(vectors), backend) == len(vectors)
