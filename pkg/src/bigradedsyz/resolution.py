"""Free resolutions of R/I built from Koszul complexes, Hilbert-Burch
complexes and mapping cones, plus an exact verifier.

Conventions
-----------
A free module ``F = (+)_k R(-a_k, -b_k)`` is stored by its shift list.  A
map ``F -> G`` is a grid of polynomials with one row per summand of ``G`` and
one column per summand of ``F``; entry ``(i, k)`` has bidegree
``F.shifts[k] - G.shifts[i]`` (or is ``None`` for zero).  A complex stores
``maps[0] = d_1 : M_1 -> M_0``, ``maps[1] = d_2 : M_2 -> M_1`` and so on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .bipoly import (
    ONE, W, X, Y, Z, BiDeg, BiHomPoly, InputTriple, dim_R, mult_matrix, split_xy, split_zw,
)
from .classify import classify, coprime_pair, sylvester_quadratics
from .errors import (
    DegenerateInput, DimensionMismatch, FactorizationFailure, GenericInstance,
    LiftInconsistent, NotCompleteIntersection, VerificationFailure, WrongBidegree,
)
from .exactnum import ExactMatrix, det, nullity, rank, rational, solve
from .hilbert import InstanceClass

# ---------------------------------------------------------------------------
# free modules and maps


@dataclass(frozen=True)
class FreeModule:
    shifts: tuple  # of BiDeg

    def __post_init__(self):
        object.__setattr__(self, "shifts", tuple(BiDeg(*s) for s in self.shifts))

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def twist(self, d) -> "FreeModule":
        return FreeModule(tuple(s + d for s in self.shifts))

    def __add__(self, other: "FreeModule") -> "FreeModule":
        return FreeModule(self.shifts + other.shifts)

    def dim(self, m: int, n: int) -> int:
        return sum(dim_R(m - a, n - b) for a, b in self.shifts)

    def multiset(self) -> list[tuple]:
        return sorted(tuple(s) for s in self.shifts)

    def __str__(self):
        if not self.shifts:
            return "0"
        return " + ".join(f"R(-{a},-{b})" for a, b in self.shifts)


def _clean(e: Optional[BiHomPoly]) -> Optional[BiHomPoly]:
    return None if e is None or e.is_zero() else e


@dataclass(frozen=True)
class GradedMap:
    source: FreeModule
    target: FreeModule
    entries: tuple  # rows of (BiHomPoly | None)

    def __post_init__(self):
        rows = tuple(tuple(_clean(e) for e in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if len(rows) != self.target.rank or any(len(r) != self.source.rank for r in rows):
            raise DimensionMismatch(
                f"entry grid is not {self.target.rank}x{self.source.rank}")
        for i, r in enumerate(rows):
            for k, e in enumerate(r):
                if e is None:
                    continue
                want = self.source.shifts[k] - self.target.shifts[i]
                if e.deg != want:
                    raise WrongBidegree(f"entry ({i},{k}) has bidegree {e.deg}, expected {want}")

    @classmethod
    def build(cls, source, target, entries) -> "GradedMap":
        return cls(FreeModule(source), FreeModule(target), tuple(tuple(r) for r in entries))

    @classmethod
    def zero(cls, source: FreeModule, target: FreeModule) -> "GradedMap":
        return cls(source, target, tuple((None,) * source.rank for _ in range(target.rank)))

    def entry_degree(self, i: int, k: int) -> BiDeg:
        return self.source.shifts[k] - self.target.shifts[i]

    def is_zero(self) -> bool:
        return all(e is None for r in self.entries for e in r)

    def constant_entries(self) -> list[tuple]:
        return [(i, k) for i, r in enumerate(self.entries) for k, e in enumerate(r)
                if e is not None and e.deg == (0, 0)]

    def twist(self, d) -> "GradedMap":
        return GradedMap(self.source.twist(d), self.target.twist(d), self.entries)

    def scale(self, c) -> "GradedMap":
        return GradedMap(self.source, self.target,
                         tuple(tuple(None if e is None else e.scale(c) for e in r) for r in self.entries))

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """Composition ``self o other``."""
        if other.target != self.source:
            raise DimensionMismatch("composing maps with different middle modules")
        rows = []
        for i in range(self.target.rank):
            row = []
            for k in range(other.source.rank):
                acc = None
                for j in range(self.source.rank):
                    a, b = self.entries[i][j], other.entries[j][k]
                    if a is None or b is None:
                        continue
                    t = a * b
                    acc = t if acc is None else acc + t
                row.append(acc)
            rows.append(row)
        return GradedMap(other.source, self.target, tuple(map(tuple, rows)))

    def column(self, k: int) -> list:
        return [r[k] for r in self.entries]

    def matrix_at(self, m: int, n: int) -> ExactMatrix:
        """The linear map ``source_(m,n) -> target_(m,n)`` on monomial bases."""
        tdims = [dim_R(m - a, n - b) for a, b in self.target.shifts]
        sdims = [dim_R(m - a, n - b) for a, b in self.source.shifts]
        nrows, ncols = sum(tdims), sum(sdims)
        flat = [0] * (nrows * ncols)
        roff, acc = [], 0
        for d in tdims:
            roff.append(acc)
            acc += d
        coff = 0
        for k, (a, b) in enumerate(self.source.shifts):
            sm, sn = m - a, n - b
            if sdims[k]:
                for i, e in enumerate(self.column(k)):
                    if e is None or not tdims[i]:
                        continue
                    tn1 = n - self.target.shifts[i][1] + 1
                    terms = list(e.terms())
                    for u in range(sm + 1):
                        for v in range(sn + 1):
                            col = coff + u * (sn + 1) + v
                            for r, s, c in terms:
                                flat[(roff[i] + (u + r) * tn1 + v + s) * ncols + col] = c
            coff += sdims[k]
        return ExactMatrix(nrows, ncols, flat)

    def __str__(self):
        lines = []
        for r in self.entries:
            lines.append("[" + ", ".join("0" if e is None else str(e) for e in r) + "]")
        return "\n".join(lines)


def scalar_map(module: FreeModule, M: Sequence[Sequence]) -> GradedMap:
    """Constant matrix acting on ``module``; nonzero entries need equal shifts."""
    rows = []
    for i, r in enumerate(M):
        row = []
        for k, c in enumerate(r):
            c = rational(c)
            if c and module.shifts[i] != module.shifts[k]:
                raise WrongBidegree("scalar entry between summands of different shift")
            row.append(ONE.scale(c) if c else None)
        rows.append(tuple(row))
    return GradedMap(module, module, tuple(rows))


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True)
class GradedComplex:
    maps: tuple  # maps[i] = d_(i+1): M_(i+1) -> M_i
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        for i in range(1, len(self.maps)):
            if self.maps[i].target != self.maps[i - 1].source:
                raise DimensionMismatch(f"map {i + 1} does not land in the source of map {i}")

    @property
    def length(self) -> int:
        return len(self.maps)

    def module(self, i: int) -> FreeModule:
        if i == 0:
            return self.maps[0].target
        if 1 <= i <= len(self.maps):
            return self.maps[i - 1].source
        return FreeModule(())

    def modules(self) -> list[FreeModule]:
        return [self.module(i) for i in range(len(self.maps) + 1)]

    def d(self, i: int) -> Optional[GradedMap]:
        """``d_i : M_i -> M_(i-1)``, or None outside the range."""
        return self.maps[i - 1] if 1 <= i <= len(self.maps) else None

    def ranks(self) -> list[int]:
        return [M.rank for M in self.modules()]

    def shift_multisets(self) -> list[list[tuple]]:
        return [M.multiset() for M in self.modules()]

    def ideal_shifts(self) -> list[list[tuple]]:
        """Shift multisets with the leading ``R`` dropped (a resolution of I)."""
        return self.shift_multisets()[1:]

    def twist(self, d) -> "GradedComplex":
        return GradedComplex(tuple(f.twist(d) for f in self.maps), self.label)

    def replace(self, i: int, new: GradedMap) -> "GradedComplex":
        maps = list(self.maps)
        maps[i - 1] = new
        return GradedComplex(tuple(maps), self.label)

    def composites_vanish(self) -> Optional[int]:
        """First ``i`` with ``d_i d_(i+1) != 0``, or None."""
        for i in range(1, len(self.maps)):
            if not (self.maps[i - 1] @ self.maps[i]).is_zero():
                return i
        return None


def koszul_two(f: BiHomPoly, g: BiHomPoly) -> GradedComplex:
    """``0 -> R(-deg f - deg g) -[g; -f]-> R(-deg f) + R(-deg g) -[f g]-> R``."""
    M1 = FreeModule((f.deg, g.deg))
    M2 = FreeModule((f.deg + g.deg,))
    d1 = GradedMap(M1, FreeModule(((0, 0),)), ((f, g),))
    d2 = GradedMap(M2, M1, ((g,), (-f,)))
    return GradedComplex((d1, d2), f"koszul({f}, {g})")


# ---------------------------------------------------------------------------
# normal form (non-generic)


@dataclass(frozen=True)
class NormalForm:
    g0: BiHomPoly
    g1: BiHomPoly
    M: tuple  # 3x3 scalars with q_i = sum_j M[i][j] p_j
    q: InputTriple

    @property
    def g2(self) -> BiHomPoly:
        return self.g0 + self.g1

    @property
    def lines(self) -> tuple:
        return (Z, W, Z + W)

    @property
    def gs(self) -> tuple:
        return (self.g0, self.g1, self.g2)

    def reconstitutes(self) -> bool:
        return all(g * l == q for g, l, q in zip(self.gs, self.lines, self.q))


NORMAL_FORM_PARAMETERS = ((0, 1), (-1, 0), (-1, 1))


def _matrix_det(M) -> object:
    return det(ExactMatrix.from_rows(M))


def normal_form(p: InputTriple) -> NormalForm:
    from .bipoly import divide_exact
    from .syzygy import syzygy_23

    cls = classify(p)
    if cls is InstanceClass.Degenerate:
        raise DegenerateInput("the forms have a common zero on P1 x P1")
    if cls is InstanceClass.Generic:
        raise GenericInstance("only non-generic triples have a normal form")
    A = syzygy_23(p)
    M, qs, gs = [], [], []
    for s, t in NORMAL_FORM_PARAMETERS:
        row = [a(0, 0, s, t) for a in A.entries]  # A_i has bidegree (0,2)
        q = BiHomPoly.zero(2, 1)
        for c, pi in zip(row, p):
            if c:
                q = q + pi.scale(c)
        l = Z.scale(t) - W.scale(s)
        g = divide_exact(q, l)
        if g is None:
            raise FactorizationFailure(f"q({s},{t}) is not divisible by {l}")
        M.append(tuple(rational(c) for c in row))
        qs.append(q)
        gs.append(g)
    if _matrix_det(M) == 0:
        raise FactorizationFailure("normal-form basis change is singular")
    if gs[2] != gs[0] + gs[1]:
        raise FactorizationFailure("g2 != g0 + g1")
    if sylvester_quadratics(gs[0], gs[1]) == 0:
        raise FactorizationFailure("g0 and g1 share a root")
    return NormalForm(gs[0], gs[1], tuple(M), InputTriple(*qs))


# ---------------------------------------------------------------------------
# ideal quotient generators


@dataclass(frozen=True)
class IdealGens:
    gens: tuple
    labels: tuple

    def degrees(self) -> list[BiDeg]:
        return [g.deg for g in self.gens]

    def degree_multiset(self) -> list[tuple]:
        return sorted(tuple(d) for d in self.degrees())

    def __getitem__(self, label: str) -> BiHomPoly:
        return self.gens[self.labels.index(label)]


def in_ideal(a: BiHomPoly, gens: Sequence[BiHomPoly]) -> bool:
    """Is ``a`` in the ideal generated by ``gens`` (degree-wise linear solve)?"""
    if a.is_zero():
        return True
    blocks = []
    for g in gens:
        src = a.deg - g.deg
        if src.nonneg():
            blocks.append(mult_matrix(g, src))
    if not blocks:
        return False
    K = blocks[0]
    for b in blocks[1:]:
        K = K.hstack(b)
    return solve(K, a.coeff_vector()) is not None


def quotient_gens_nongeneric(nf: NormalForm) -> IdealGens:
    zw = Z * W
    gens = (zw, nf.g0 * Z, nf.g1 * W, nf.g0 * nf.g1)
    C = (nf.q[0], nf.q[1])
    for g in gens:
        if not in_ideal(g * nf.q[2], C):
            raise VerificationFailure(f"{g} times q2 is not in <q0, q1>", where=tuple(g.deg))
    return IdealGens(gens, ("zw", "g0z", "g1w", "g0g1"))


def k_generators(p0: BiHomPoly, p1: BiHomPoly) -> tuple[BiHomPoly, BiHomPoly]:
    s0, s1 = split_xy(p0), split_xy(p1)
    k1 = (s0.C * X + s0.D * Y) * s1.E - (s1.C * X + s1.D * Y) * s0.E
    k2 = s0.C * (s1.D * X + s1.E * Y) - s1.C * (s0.D * X + s0.E * Y)
    return k1, k2


def g_generator(p0: BiHomPoly, p1: BiHomPoly) -> BiHomPoly:
    a, b = split_zw(p0), split_zw(p1)
    return a.A * b.B - b.A * a.B


def quotient_gens_generic(p0: BiHomPoly, p1: BiHomPoly, p2: BiHomPoly) -> IdealGens:
    if not coprime_pair(p0, p1):
        raise NotCompleteIntersection("p0 and p1 share a factor")
    k1, k2 = k_generators(p0, p1)
    g = g_generator(p0, p1)
    gens = (p0, p1, k1, k2, g)
    for h in gens:
        if not in_ideal(h * p2, (p0, p1)):
            raise VerificationFailure(f"{h} times p2 is not in <p0, p1>", where=tuple(h.deg))
    return IdealGens(gens, ("p0", "p1", "k1", "k2", "g"))


# ---------------------------------------------------------------------------
# Hilbert-Burch complexes


def _max_minors(phi: GradedMap) -> list:
    """Signed maximal minors of an (r+1) x r polynomial matrix, one per row."""
    rows = phi.entries
    r = len(rows[0])
    out = []
    for skip in range(len(rows)):
        sub = [rows[i] for i in range(len(rows)) if i != skip]
        out.append(((-1) ** skip, _poly_det(sub, r)))
    return [None if d is None else (d if s > 0 else -d) for s, d in out]


def _poly_det(rows, r):
    if r == 1:
        return rows[0][0]
    acc = None
    for k in range(r):
        e = rows[0][k]
        if e is None:
            continue
        minor = _poly_det([row[:k] + row[k + 1:] for row in rows[1:]], r - 1)
        if minor is None:
            continue
        t = e * minor
        if k % 2:
            t = -t
        acc = t if acc is None else acc + t
    return acc


def minors_proportional(phi: GradedMap, row: Sequence[BiHomPoly]) -> bool:
    """Are the signed maximal minors of ``phi`` a nonzero scalar multiple of ``row``?"""
    minors = _max_minors(phi)
    ratio = None
    for mnr, g in zip(minors, row):
        if mnr is None or mnr.is_zero():
            if not g.is_zero():
                return False
            continue
        gv, mv = g.coeff_vector(), mnr.coeff_vector()
        k = next(i for i, v in enumerate(mv) if v)
        if not gv[k]:
            return False
        lam = rational(Fraction(mv[k]) / gv[k])
        if ratio is None:
            ratio = lam
        if lam != ratio or g.scale(lam) != mnr:
            return False
    return ratio is not None and ratio != 0


def hilbert_burch(kind: str, data) -> GradedComplex:
    """Length-two resolution of ``R/K``.

    ``kind="nongeneric"`` takes a :class:`NormalForm`; ``kind="generic"``
    takes a pair ``(p0, p1)`` forming a complete intersection.
    """
    if kind == "nongeneric":
        nf = data
        row = (Z * W, nf.g0 * Z, nf.g1 * W)
        phi_entries = ((nf.g0, nf.g1), (-W, None), (None, -Z))
        F1 = FreeModule(((0, 2), (2, 1), (2, 1)))
        F2 = FreeModule(((2, 2), (2, 2)))
    elif kind == "generic":
        p0, p1 = data
        if not coprime_pair(p0, p1):
            raise NotCompleteIntersection("p0 and p1 share a factor")
        k1, k2 = k_generators(p0, p1)
        s0, s1 = split_xy(p0), split_xy(p1)
        row = (p0, -p1, -k1, k2)
        phi_entries = (
            (s1.E, -s1.D, s1.C),
            (s0.E, -s0.D, s0.C),
            (X, Y, None),
            (None, X, Y),
        )
        F1 = FreeModule(((2, 1), (2, 1), (1, 2), (1, 2)))
        F2 = FreeModule(((2, 2), (2, 2), (2, 2)))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    d1 = GradedMap(F1, FreeModule(((0, 0),)), (row,))
    d2 = GradedMap(F2, F1, phi_entries)
    cx = GradedComplex((d1, d2), f"hilbert-burch {kind}")
    if cx.composites_vanish() is not None:
        raise VerificationFailure("generator row does not annihilate the Hilbert-Burch matrix", where=1)
    if not minors_proportional(d2, row):
        raise VerificationFailure("maximal minors are not proportional to the generator row", where=2)
    return cx


# ---------------------------------------------------------------------------
# lifting and cones


def _column_vector(col: Sequence[Optional[BiHomPoly]], module: FreeModule, deg: BiDeg) -> list:
    vec = []
    for e, s in zip(col, module.shifts):
        m, n = deg - s
        size = dim_R(m, n)
        if e is None:
            vec.extend([0] * size)
        else:
            vec.extend(e.coeff_vector())
    return vec


def _vector_column(vec: Sequence, module: FreeModule, deg: BiDeg) -> list:
    out, pos = [], 0
    for s in module.shifts:
        m, n = deg - s
        size = dim_R(m, n)
        if size:
            out.append(_clean(BiHomPoly.from_vector(m, n, vec[pos:pos + size])))
        else:
            out.append(None)
        pos += size
    return out


def lift_chain_map(F: GradedComplex, G: GradedComplex, f: BiHomPoly) -> list[GradedMap]:
    """Chain map ``psi: F -> G`` over multiplication by ``f`` on ``H_0``.

    ``F_0`` must be ``R(-deg f)`` and ``G_0 = R``.  Returns ``[psi_0, psi_1, ...]``
    with ``delta_i psi_i = psi_(i-1) d_i``.
    """
    F0, G0 = F.module(0), G.module(0)
    if F0.rank != 1 or G0.rank != 1 or F0.shifts[0] - G0.shifts[0] != f.deg:
        raise DimensionMismatch("H_0 modules do not match multiplication by f")
    psis = [GradedMap(F0, G0, ((f,),))]
    for i in range(1, F.length + 1):
        Fi, Gi, Gprev = F.module(i), G.module(i), G.module(i - 1)
        rhs = psis[-1] @ F.d(i)  # F_i -> G_(i-1)
        delta = G.d(i)
        cols = []
        for k, shift in enumerate(Fi.shifts):
            target = rhs.column(k)
            if delta is None:
                if any(e is not None for e in target):
                    raise LiftInconsistent(f"nonzero obstruction at step {i}, column {k}")
                cols.append([None] * Gi.rank)
                continue
            mat = delta.matrix_at(*shift)
            x = solve(mat, _column_vector(target, Gprev, shift))
            if x is None:
                raise LiftInconsistent(f"no lift at step {i}, column {k} (shift {shift})")
            cols.append(_vector_column(x, Gi, shift))
        entries = tuple(tuple(cols[k][j] for k in range(Fi.rank)) for j in range(Gi.rank))
        psi = GradedMap(Fi, Gi, entries)
        if delta is not None and (delta @ psi) != rhs:
            raise LiftInconsistent(f"lift does not commute at step {i}")
        psis.append(psi)
    return psis


def _block(top_left: Optional[GradedMap], top_right: Optional[GradedMap],
           bottom_left: Optional[GradedMap], bottom_right: Optional[GradedMap],
           source: FreeModule, target: FreeModule, split_src: int, split_tgt: int) -> GradedMap:
    rows = []
    for i in range(target.rank):
        row = []
        for k in range(source.rank):
            top, left = i < split_tgt, k < split_src
            blk = {(True, True): top_left, (True, False): top_right,
                   (False, True): bottom_left, (False, False): bottom_right}[(top, left)]
            if blk is None:
                row.append(None)
            else:
                ii = i if top else i - split_tgt
                kk = k if left else k - split_src
                row.append(blk.entries[ii][kk])
        rows.append(tuple(row))
    return GradedMap(source, target, tuple(rows))


def mapping_cone(F: GradedComplex, G: GradedComplex, psi: Sequence[GradedMap]) -> GradedComplex:
    """``M_0 = G_0``, ``M_i = F_(i-1) + G_i``;
    ``d_1 = [psi_0 | delta_1]`` and
    ``d_i = [[d_(i-1), 0], [(-1)^(i-1) psi_(i-1), delta_i]]``.
    """
    top = max(F.length + 1, G.length)
    maps = []
    for i in range(1, top + 1):
        Fa, Gb = F.module(i - 1), G.module(i)
        src = Fa + Gb
        if i == 1:
            tgt = G.module(0)
            d = _block(None, None, psi[0], G.d(1), src, tgt, Fa.rank, 0)
        else:
            Fc, Gc = F.module(i - 2), G.module(i - 1)
            tgt = Fc + Gc
            p = psi[i - 1] if i - 1 < len(psi) else None
            if p is not None and (i - 1) % 2:
                p = p.scale(-1)
            d = _block(F.d(i - 1), None, p, G.d(i), src, tgt, Fa.rank, Fc.rank)
        maps.append(d)
    cx = GradedComplex(tuple(maps), f"cone[{F.label} -> {G.label}]")
    bad = cx.composites_vanish()
    if bad is not None:
        raise VerificationFailure(f"cone differential squares to nonzero at {bad}", where=bad)
    return cx


# ---------------------------------------------------------------------------
# colon ideals


def colon_dim(gens: Sequence[BiHomPoly], f: BiHomPoly, m: int, n: int) -> int:
    """dim of ``(<gens> : f)`` in bidegree (m, n)."""
    d = BiDeg(m, n) + f.deg
    F = mult_matrix(f, BiDeg(m, n))
    blocks = [mult_matrix(g, d - g.deg) for g in gens if (d - g.deg).nonneg()]
    if not blocks:
        return 0
    K = blocks[0]
    for b in blocks[1:]:
        K = K.hstack(b)
    return nullity(F.hstack(K)) - nullity(K)


def check_colon_is_zw(gens: Sequence[BiHomPoly], f: BiHomPoly, box=(6, 3)):
    """Raise unless ``(<gens> : f)`` agrees with ``<z, w>`` in every cell of ``box``."""
    for m in range(box[0] + 1):
        for n in range(box[1] + 1):
            want = dim_R(m, n) if n >= 1 else 0
            got = colon_dim(gens, f, m, n)
            if got != want:
                raise VerificationFailure(
                    f"colon ideal has dimension {got}, <z,w> has {want}", where=(m, n))


# ---------------------------------------------------------------------------
# the two resolutions


SHAPE_NONGENERIC = (
    ((2, 1),) * 3,
    ((6, 1), (4, 2), (4, 2), (4, 2), (2, 3)),
    ((4, 3), (4, 3), (6, 2), (6, 2)),
    ((6, 3),),
)
SHAPE_GENERIC = (
    ((2, 1),) * 3,
    ((6, 1), (4, 2), (4, 2), (4, 2), (3, 3), (3, 3)),
    ((4, 3), (4, 3), (4, 3), (6, 2), (6, 2)),
    ((6, 3),),
)


def expected_shifts(cls: InstanceClass) -> list[list[tuple]]:
    table = {InstanceClass.NonGeneric: SHAPE_NONGENERIC, InstanceClass.Generic: SHAPE_GENERIC}
    if cls not in table:
        raise DegenerateInput("no resolution shape for a degenerate triple")
    return [sorted(s) for s in table[cls]]


def _inverse(M) -> list[list]:
    A = ExactMatrix.from_rows(M)
    n = A.rows
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        x = solve(A, e)
        if x is None:
            raise DimensionMismatch("singular basis change")
        cols.append(x)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _rebase(cx: GradedComplex, p: InputTriple, C) -> GradedComplex:
    """Change the basis of ``M_1`` so that ``d_1 = [p0 p1 p2]``.

    ``C[k]`` gives the coefficients of the current ``d_1`` entry ``k`` in terms
    of ``p``.
    """
    N = [[C[k][j] for k in range(3)] for j in range(3)]  # r = p^T N
    Ninv = _inverse(N)
    M1 = cx.module(1)
    d1 = cx.d(1) @ scalar_map(M1, Ninv)
    d2 = scalar_map(M1, N) @ cx.d(2)
    if [e for e in d1.entries[0]] != list(p):
        raise VerificationFailure("basis change did not produce [p0 p1 p2]", where=1)
    maps = (d1, d2) + cx.maps[2:]
    return GradedComplex(maps, cx.label)


def _random_invertible(rng: random.Random, bound: int = 3) -> list[list[int]]:
    while True:
        M = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        if _matrix_det(M) != 0:
            return M


CI_ORDERS = ((0, 1, 2), (0, 2, 1), (1, 2, 0))


def choose_ci_basis(p: InputTriple, seed: int = 0, tries: int = 1000):
    """A basis change ``q = M p`` with ``<q0, q1>`` a complete intersection."""
    for a, b, c in CI_ORDERS:
        if coprime_pair(p[a], p[b]):
            M = [[1 if j == k else 0 for j in range(3)] for k in (a, b, c)]
            return M, InputTriple(p[a], p[b], p[c])
    rng = random.Random(seed)
    for _ in range(tries):
        M = _random_invertible(rng)
        q = p.transform(M)
        if coprime_pair(q[0], q[1]):
            return M, q
    raise NotCompleteIntersection("no complete-intersection pair found")


def _final_cone(inner: GradedComplex, q: InputTriple, M, p: InputTriple, label: str) -> GradedComplex:
    F = inner.twist(q[2].deg)
    G = koszul_two(q[0], q[1])
    psi = lift_chain_map(F, G, q[2])
    cx = mapping_cone(F, G, psi)
    # d_1 = [q2, q0, q1]
    C = [list(M[2]), list(M[0]), list(M[1])]
    out = _rebase(cx, p, C)
    return GradedComplex(out.maps, label)


def build_resolution(p: InputTriple, seed: int = 0, colon_box=(6, 3)) -> GradedComplex:
    """Minimal free resolution of ``R/I``; ``ideal_shifts()`` drops the leading R."""
    cls = classify(p)
    if cls is InstanceClass.Degenerate:
        raise DegenerateInput("the forms have a common zero on P1 x P1")
    zw = koszul_two(Z, W)
    if cls is InstanceClass.NonGeneric:
        nf = normal_form(p)
        quotient_gens_nongeneric(nf)
        K = hilbert_burch("nongeneric", nf)
        f = nf.g0 * nf.g1
        Kgens = K.d(1).entries[0]
        check_colon_is_zw(Kgens, f, colon_box)
        F = zw.twist(f.deg)
        J = mapping_cone(F, K, lift_chain_map(F, K, f))
        return _final_cone(J, nf.q, nf.M, p, "nongeneric")
    M, q = choose_ci_basis(p, seed)
    quotient_gens_generic(*q)
    K = hilbert_burch("generic", (q[0], q[1]))
    g = g_generator(q[0], q[1])
    check_colon_is_zw(K.d(1).entries[0], g, colon_box)
    F = zw.twist(g.deg)
    CP = mapping_cone(F, K, lift_chain_map(F, K, g))
    return _final_cone(CP, q, M, p, "generic")


# ---------------------------------------------------------------------------
# verification


@dataclass
class CheckResult:
    name: str
    ok: bool
    where: Optional[object] = None
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_failure(self) -> Optional[CheckResult]:
        return next((c for c in self.checks if not c.ok), None)

    def __getitem__(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            line = f"{c.name}: {'pass' if c.ok else 'FAIL'}"
            if not c.ok:
                line += f" at {c.where} ({c.detail})"
            out.append(line)
        return out


CHECK_NAMES = ("d2_zero", "exactness", "ideal_dim", "minimality", "shape", "euler")


def verify_complex(cx: GradedComplex, p: InputTriple, box=(9, 6),
                   cls: Optional[InstanceClass] = None) -> VerifyReport:
    """Six exact checks of ``cx`` as a minimal resolution of ``R/<p>`` over ``box``."""
    from .syzygy import ideal_dim

    report = VerifyReport()
    bad = cx.composites_vanish()
    report.checks.append(CheckResult("d2_zero", bad is None, bad, "d_i d_(i+1) != 0" if bad else ""))

    L = cx.length
    exact_fail = dim_fail = euler_fail = None
    for m in range(box[0] + 1):
        for n in range(box[1] + 1):
            ranks = [0] + [rank(cx.d(i).matrix_at(m, n)) for i in range(1, L + 1)] + [0]
            dims = [M.dim(m, n) for M in cx.modules()]
            if exact_fail is None:
                for i in range(1, L + 1):
                    if ranks[i + 1] != dims[i] - ranks[i]:
                        exact_fail = ((m, n), i)
                        break
            h_i = ideal_dim(p, m, n)
            if dim_fail is None and ranks[1] != h_i:
                dim_fail = ((m, n), ranks[1], h_i)
            chi = sum((-1) ** i * d for i, d in enumerate(dims))
            if euler_fail is None and chi != dim_R(m, n) - h_i:
                euler_fail = ((m, n), chi, dim_R(m, n) - h_i)
    report.checks.append(CheckResult(
        "exactness", exact_fail is None, exact_fail and exact_fail[0],
        f"homology at M_{exact_fail[1]}" if exact_fail else ""))
    report.checks.append(CheckResult(
        "ideal_dim", dim_fail is None, dim_fail and dim_fail[0],
        f"rank d_1 = {dim_fail[1]}, oracle H_I = {dim_fail[2]}" if dim_fail else ""))

    consts = [(i, ij) for i in range(1, L + 1) for ij in cx.d(i).constant_entries()]
    report.checks.append(CheckResult(
        "minimality", not consts, consts[0] if consts else None,
        f"constant entry in d_{consts[0][0]}" if consts else ""))

    try:
        want = expected_shifts(cls or classify(p))
        got = cx.ideal_shifts()
        where = next((i + 1 for i in range(max(len(want), len(got)))
                      if (want[i] if i < len(want) else []) != (got[i] if i < len(got) else [])), None)
        report.checks.append(CheckResult("shape", where is None, where,
                                         f"M_{where} shifts differ" if where else ""))
    except DegenerateInput as exc:
        report.checks.append(CheckResult("shape", False, None, str(exc)))

    report.checks.append(CheckResult(
        "euler", euler_fail is None, euler_fail and euler_fail[0],
        f"alternating sum {euler_fail[1]} vs {euler_fail[2]}" if euler_fail else ""))
    return report
