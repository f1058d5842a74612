"""Closed-form dimension counts and their comparison with the oracle."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .bipoly import BiDeg, InputTriple, dim_R
from .errors import DegenerateClass, DegenerateInput, InternalInvariantViolation


class InstanceClass(enum.Enum):
    Generic = "Generic"
    NonGeneric = "NonGeneric"
    Degenerate = "Degenerate"

    def __str__(self):
        return self.value


def h_R(m: int, n: int) -> int:
    return dim_R(m, n)


def h0_line(a: int) -> int:
    """dim H^0(P1, O(a))."""
    return max(a + 1, 0)


def h1_line(a: int) -> int:
    """dim H^1(P1, O(a))."""
    return max(-a - 1, 0)


def h1(m: int, n: int) -> int:
    """dim H^1(P1 x P1, O(m, n)) by the Kunneth decomposition."""
    return h0_line(m) * h1_line(n) + h1_line(m) * h0_line(n)


def _check_class(cls: InstanceClass):
    if cls is InstanceClass.Degenerate:
        raise DegenerateClass("no dimension formulas for degenerate triples")


def e2_pred(cls: InstanceClass, m: int, n: int) -> int:
    """Predicted dimension of the non-Koszul part of Syz(p)_(m,n)."""
    _check_class(cls)
    if (m >= 5 and n >= 2) or (m <= 5 and n <= 2):
        return 0
    if n == 1:
        return m - 5 if m >= 6 else 0
    if m == 3 and n >= 3:
        return 2 * (n - 2)
    if m == 4 and n >= 3:
        return n - 2
    if m == 2 and n >= 3:
        return n - 2 if cls is InstanceClass.NonGeneric else 0
    return 0


def h_syz_pred(cls: InstanceClass, m: int, n: int, literal: bool = False) -> int:
    """Predicted dim Syz(p)_(m,n).

    The m = 4 row is applied from n >= 2, so (4,2) counts the three Koszul
    generators.  ``literal=True`` starts that row at n = 3 and predicts 0 at
    (4,2); the oracle rejects that variant there and only there.
    """
    _check_class(cls)
    m4_from = 3 if literal else 2
    if m >= 5 and n >= 2:
        value = 3 * (m - 3) * (n - 1) - (m - 5) * (n - 2)
    elif m >= 6 and n == 1:
        value = m - 5
    elif m == 3 and n >= 3:
        value = 2 * (n - 2)
    elif m == 4 and n >= m4_from:
        value = 3 * (n - 1) + n - 2
    elif m == 2 and n >= 3 and cls is InstanceClass.NonGeneric:
        value = (m - 1) * (n - 2)
    else:
        value = 0
    if value < 0:
        raise InternalInvariantViolation(f"negative prediction at ({m},{n})")
    return value


def h_I_pred(cls: InstanceClass, m: int, n: int) -> int:
    value = 3 * h_R(m - 2, n - 1) - h_syz_pred(cls, m, n)
    if value < 0:
        raise InternalInvariantViolation(f"negative H_I prediction at ({m},{n})")
    return value


@dataclass
class DimCell:
    h_syz_pred: int
    h_syz: int
    h_I_pred: int
    h_I: int
    e2_pred: int
    e2: int

    def mismatches(self) -> list[str]:
        out = []
        for name in ("h_syz", "h_I", "e2"):
            if getattr(self, name + "_pred") != getattr(self, name):
                out.append(name)
        return out


@dataclass
class DimTable:
    box: BiDeg
    cls: InstanceClass
    cells: dict = field(default_factory=dict)  # (m, n) -> DimCell

    def mismatches(self) -> list[tuple]:
        return [(mn, name) for mn, cell in sorted(self.cells.items()) for name in cell.mismatches()]

    def csv_rows(self) -> list[list[int]]:
        out = []
        for (m, n), c in sorted(self.cells.items()):
            out.append([m, n, c.h_syz_pred, c.h_syz, c.h_I_pred, c.h_I, c.e2_pred, c.e2])
        return out


CSV_HEADER = "m,n,h_syz_pred,h_syz,h_I_pred,h_I,e2_pred,e2"


def dim_table(p: InputTriple, box=(9, 6), cls: InstanceClass | None = None) -> DimTable:
    """Predictions next to oracle values for every 0 <= m,n <= box.

    ``cls`` defaults to the computed class; passing another class is how a
    misclassification shows up as mismatches.
    """
    from .classify import classify
    from .syzygy import ideal_dim, nonkoszul_dim, syz_dim

    actual = classify(p)
    if actual is InstanceClass.Degenerate:
        raise DegenerateInput("the forms have a common zero on P1 x P1")
    cls = cls or actual
    table = DimTable(BiDeg(*box), cls)
    for m in range(box[0] + 1):
        for n in range(box[1] + 1):
            table.cells[(m, n)] = DimCell(
                h_syz_pred(cls, m, n), syz_dim(p, m, n),
                h_I_pred(cls, m, n), ideal_dim(p, m, n),
                e2_pred(cls, m, n), nonkoszul_dim(p, m, n),
            )
    return table


def four_term_identity_holds(p: InputTriple, m: int, n: int) -> bool:
    """dim Syz = 3 h_R(m-4,n-2) - h_R(m-6,n-3) + non-Koszul dimension."""
    from .syzygy import nonkoszul_dim, syz_dim

    return syz_dim(p, m, n) == 3 * h_R(m - 4, n - 2) - h_R(m - 6, n - 3) + nonkoszul_dim(p, m, n)
