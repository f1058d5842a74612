"""The syzygy module Syz(p) of a (2,1) triple.

Graded pieces are computed by brute force as kernels of the map
``R_(m-2,n-1)^3 -> R_(m,n)``; this is the oracle every closed formula is
checked against.  The explicit constructors (Koszul columns, the determinant
syzygies of bidegree (6,1), (3,3) and (2,3)) never feed the oracle.

A syzygy of ambient bidegree ``(m, n)`` has entries of bidegree
``(m-2, n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .bipoly import (
    BiDeg,
    BiHomPoly,
    InputTriple,
    SplitZW,
    X,
    Y,
    dim_R,
    linear_content_xy,
    mult_matrix,
    split_xy,
    split_zw,
)
from .errors import DegenerateInput, DegreeMismatch, GenericInstance, InternalInvariantViolation
from .exactnum import ExactMatrix, kernel_basis, rank, solve


@dataclass(frozen=True)
class SyzTriple:
    entries: tuple  # three BiHomPoly of one bidegree

    def __post_init__(self):
        if len(self.entries) != 3:
            raise DegreeMismatch("a syzygy has three entries")
        d = self.entries[0].deg
        if any(e.deg != d for e in self.entries):
            raise DegreeMismatch(f"entry bidegrees differ: {[e.deg for e in self.entries]}")

    @classmethod
    def of(cls, s0, s1, s2) -> "SyzTriple":
        return cls((s0, s1, s2))

    @property
    def entry_deg(self) -> BiDeg:
        return self.entries[0].deg

    @property
    def deg(self) -> BiDeg:
        """Ambient bidegree."""
        return self.entry_deg + (2, 1)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def coeff_vector(self) -> list:
        return [c for e in self.entries for c in e.coeff_vector()]

    def scale(self, c) -> "SyzTriple":
        return SyzTriple(tuple(e.scale(c) for e in self.entries))

    def __mul__(self, f: BiHomPoly) -> "SyzTriple":
        return SyzTriple(tuple(e * f for e in self.entries))

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def normalized(self) -> "SyzTriple":
        """Scale so the first nonzero coefficient is 1."""
        for c in self.coeff_vector():
            if c:
                return self.scale(Fraction(1) / c)
        return self

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def _triple_from_vector(vec: Sequence, m: int, n: int) -> SyzTriple:
    k = dim_R(m, n)
    return SyzTriple(tuple(BiHomPoly.from_vector(m, n, vec[i * k:(i + 1) * k]) for i in range(3)))


def is_syzygy(p: InputTriple, t: SyzTriple) -> bool:
    total = t[0] * p[0]
    total = total + t[1] * p[1] + t[2] * p[2]
    return total.is_zero()


# ---------------------------------------------------------------------------
# oracle


def _block_row(blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    out = blocks[0]
    for b in blocks[1:]:
        out = out.hstack(b)
    return out


@lru_cache(maxsize=4096)
def syz_matrix(p: InputTriple, m: int, n: int) -> ExactMatrix:
    """``[p0 | p1 | p2]`` as a map ``R_(m-2,n-1)^3 -> R_(m,n)``."""
    src = BiDeg(m - 2, n - 1)
    if not src.nonneg() or m < 0 or n < 0:
        return ExactMatrix.zeros(dim_R(m, n), 0)
    return _block_row([mult_matrix(q, src) for q in p])


def syz_dim(p: InputTriple, m: int, n: int) -> int:
    M = syz_matrix(p, m, n)
    return M.cols - rank(M)


def ideal_dim(p: InputTriple, m: int, n: int) -> int:
    """dim I_(m,n), the rank of the multiplication map."""
    return rank(syz_matrix(p, m, n))


def syz_basis(p: InputTriple, m: int, n: int) -> list[SyzTriple]:
    """Basis of Syz(p)_(m,n) from the exact kernel."""
    if m < 2 or n < 1:
        return []
    return [_triple_from_vector(v, m - 2, n - 1) for v in kernel_basis(syz_matrix(p, m, n))]


# ---------------------------------------------------------------------------
# Koszul part


def koszul_columns(p: InputTriple):
    """The three Koszul columns, signs as in the middle Koszul matrix."""
    p0, p1, p2 = p
    zero = BiHomPoly.zero(2, 1)
    return (
        (p1, -p0, zero),
        (p2, zero, -p0),
        (zero, p2, -p1),
    )


def koszul_generators(p: InputTriple) -> list[SyzTriple]:
    return [SyzTriple(col) for col in koszul_columns(p)]


@lru_cache(maxsize=4096)
def koszul_matrix(p: InputTriple, m: int, n: int) -> ExactMatrix:
    """Koszul map ``R_(m-4,n-2)^3 -> R_(m-2,n-1)^3`` in ambient degree (m,n)."""
    src, tgt = BiDeg(m - 4, n - 2), BiDeg(m - 2, n - 1)
    rows = 3 * dim_R(*tgt)
    if not src.nonneg():
        return ExactMatrix.zeros(rows, 0)
    cols = koszul_columns(p)
    blocks = [[mult_matrix(cols[k][i], src) for k in range(3)] for i in range(3)]
    flat = []
    for i in range(3):
        row_block = _block_row(blocks[i])
        flat.extend(row_block.entries)
    return ExactMatrix(rows, 3 * dim_R(*src), flat)


def koszul_image_dim(p: InputTriple, m: int, n: int) -> int:
    if m < 4 or n < 2:
        return 0
    return rank(koszul_matrix(p, m, n))


def nonkoszul_dim(p: InputTriple, m: int, n: int) -> int:
    d = syz_dim(p, m, n) - koszul_image_dim(p, m, n)
    if d < 0:
        raise InternalInvariantViolation(f"Koszul image larger than Syz at ({m},{n})")
    return d


def in_koszul_image(p: InputTriple, t: SyzTriple) -> bool:
    m, n = t.deg
    if m < 4 or n < 2:
        return t.is_zero()
    return solve(koszul_matrix(p, m, n), t.coeff_vector()) is not None


# ---------------------------------------------------------------------------
# explicit non-Koszul syzygies


def syzygy_from_split(splits: Sequence) -> SyzTriple:
    """Minor syzygy ``(A1B2 - A2B1, A2B0 - A0B2, A0B1 - A1B0)``.

    ``splits`` holds three ``(A_i, B_i)`` pairs (or :class:`SplitZW`) with
    ``p_i = A_i g + B_i h`` for a common ``g, h``.
    """
    pairs = [(s.A, s.B) if isinstance(s, SplitZW) else tuple(s) for s in splits]
    if len(pairs) != 3:
        raise DegreeMismatch("need three (A, B) pairs")
    (A0, B0), (A1, B1), (A2, B2) = pairs
    if len({A0.deg, A1.deg, A2.deg}) != 1 or len({B0.deg, B1.deg, B2.deg}) != 1:
        raise DegreeMismatch("A_i (resp. B_i) must share one bidegree")
    return SyzTriple((A1 * B2 - A2 * B1, A2 * B0 - A0 * B2, A0 * B1 - A1 * B0))


def _require_nondegenerate(p: InputTriple):
    from .classify import resultant_21

    if resultant_21(p).is_zero:
        raise DegenerateInput("the forms have a common zero on P1 x P1")


def syzygy_61(p: InputTriple) -> SyzTriple:
    _require_nondegenerate(p)
    return syzygy_from_split([split_zw(q) for q in p])


def syzygies_33(p: InputTriple) -> tuple[SyzTriple, SyzTriple]:
    """The two (3,3) syzygies from ``g = x, h = y^2`` and ``g = x^2, h = y``."""
    xy = [split_xy(q) for q in p]
    c1 = syzygy_from_split([(s.C * X + s.D * Y, s.E) for s in xy])
    c2 = syzygy_from_split([(s.C, s.D * X + s.E * Y) for s in xy])
    return c1, c2


def syzygy_23(p: InputTriple) -> SyzTriple:
    """The (2,3) syzygy of a non-generic triple, as the x,y-content quotient."""
    from .classify import classify
    from .hilbert import InstanceClass

    cls = classify(p)
    if cls is InstanceClass.Degenerate:
        raise DegenerateInput("the forms have a common zero on P1 x P1")
    if cls is InstanceClass.Generic:
        raise GenericInstance("generic triples have no (2,3) syzygy")
    c1, c2 = syzygies_33(p)
    source = c2 if c1.is_zero() else c1
    found = linear_content_xy(source.entries)
    if found is None:
        raise InternalInvariantViolation("(3,3) syzygy has no linear x,y content")
    _, quotient = found
    s = SyzTriple(quotient).normalized()
    if not is_syzygy(p, s):
        raise InternalInvariantViolation("extracted (2,3) triple is not a syzygy")
    return s


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class SyzGens:
    gens: tuple  # SyzTriple, each carrying its ambient bidegree
    labels: tuple = ()

    def degrees(self) -> list[BiDeg]:
        return [g.deg for g in self.gens]

    def degree_multiset(self) -> list[tuple]:
        return sorted(tuple(d) for d in self.degrees())

    def without(self, index: int) -> "SyzGens":
        gens = self.gens[:index] + self.gens[index + 1:]
        labels = self.labels[:index] + self.labels[index + 1:] if self.labels else ()
        return SyzGens(gens, labels)


def min_generators(p: InputTriple) -> SyzGens:
    from .classify import classify
    from .hilbert import InstanceClass

    cls = classify(p)
    if cls is InstanceClass.Degenerate:
        raise DegenerateInput("the forms have a common zero on P1 x P1")
    gens = [syzygy_61(p)] + koszul_generators(p)
    labels = ["(6,1) minors", "koszul 01", "koszul 02", "koszul 12"]
    if cls is InstanceClass.Generic:
        c1, c2 = syzygies_33(p)
        gens += [c1, c2]
        labels += ["C1 (3,3)", "C2 (3,3)"]
    else:
        gens.append(syzygy_23(p))
        labels.append("(2,3) content")
    return SyzGens(tuple(gens), tuple(labels))


def _shifted_vector(g: SyzTriple, i: int, j: int, a: int, b: int) -> list:
    """Coefficients of ``x^(a-i) y^i z^(b-j) w^j * g``."""
    em, en = g.entry_deg
    tm, tn = em + a, en + b
    size = (tm + 1) * (tn + 1)
    vec = [0] * (3 * size)
    for k, e in enumerate(g.entries):
        base = k * size
        for r, s, c in e.terms():
            vec[base + (r + i) * (tn + 1) + s + j] = c
    return vec


def span_rank(gens: Sequence[SyzTriple], m: int, n: int) -> int:
    """Rank of all monomial multiples of ``gens`` landing in degree (m, n)."""
    rows = []
    for g in gens:
        a, b = m - g.deg[0], n - g.deg[1]
        if a < 0 or b < 0:
            continue
        for i in range(a + 1):
            for j in range(b + 1):
                rows.append(_shifted_vector(g, i, j, a, b))
    if not rows:
        return 0
    return rank(ExactMatrix.from_rows(rows))


@dataclass
class GenerationReport:
    ok: bool
    first_failure: Optional[tuple] = None
    detail: str = ""
    cells: dict = field(default_factory=dict)


def check_generation(p: InputTriple, gens: SyzGens, box=(9, 6)) -> GenerationReport:
    """Do ``gens`` span Syz(p)_(m,n) for every (m,n) <= box?"""
    for k, g in enumerate(gens.gens):
        if not is_syzygy(p, g):
            return GenerationReport(False, tuple(g.deg), f"generator {k} is not a syzygy")
    cells = {}
    for m in range(box[0] + 1):
        for n in range(box[1] + 1):
            want = syz_dim(p, m, n)
            got = span_rank(gens.gens, m, n)
            cells[(m, n)] = (got, want)
            if got != want:
                return GenerationReport(False, (m, n), f"span {got} vs dim Syz {want}", cells)
    return GenerationReport(True, None, "", cells)


# ---------------------------------------------------------------------------
# B-torsion

B_GENERATORS = ("xz", "xw", "yz", "yw")


def b_cubed_monomials() -> list[tuple[int, int]]:
    """(i, j) exponents of all bidegree-(3,3) monomials ``x^(3-i) y^i z^(3-j) w^j``.

    Every such monomial is a product of three generators of B = <xz, xw, yz, yw>.
    """
    return [(i, j) for i in range(4) for j in range(4)]


def b_torsion_check(p: InputTriple, gens: SyzGens) -> GenerationReport:
    """Each generator times each B^3 monomial lies in the Koszul image."""
    for k, g in enumerate(gens.gens):
        m, n = g.deg + (3, 3)
        K = koszul_matrix(p, m, n)
        vecs = [_shifted_vector(g, i, j, 3, 3) for i, j in b_cubed_monomials()]
        V = ExactMatrix.from_rows(vecs).transpose()
        if rank(K.hstack(V)) != rank(K):
            return GenerationReport(False, (m, n), f"generator {k} times B^3 is not Koszul")
    return GenerationReport(True)
