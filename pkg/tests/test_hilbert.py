import pytest

from bigradedsyz.errors import DegenerateClass, DegenerateInput
from bigradedsyz.hilbert import (
    CSV_HEADER, InstanceClass, dim_table, e2_pred, h1, h_I_pred, h_R, h_syz_pred,
    four_term_identity_holds,
)
from bigradedsyz.instances import degenerate_fixture
from bigradedsyz.syzygy import ideal_dim, syz_dim

G, NG = InstanceClass.Generic, InstanceClass.NonGeneric


def test_h_R():
    assert h_R(2, 1) == 6 and h_R(-1, 5) == 0 and h_R(0, 0) == 1


def test_h1_values():
    assert h1(-4, 0) == 3
    assert h1(-2, 1) == 2
    assert h1(-1, -7) == 0
    assert h1(3, 3) == 0


def test_e2_values():
    for cls in (G, NG):
        assert e2_pred(cls, 7, 1) == 2
        assert e2_pred(cls, 3, 4) == 4
        assert e2_pred(cls, 6, 3) == 0
    assert e2_pred(NG, 2, 3) == 1 and e2_pred(G, 2, 3) == 0


def test_h_syz_values():
    assert h_syz_pred(G, 6, 1) == 1
    assert h_syz_pred(G, 5, 2) == 6
    assert h_syz_pred(NG, 2, 3) == 1
    assert h_syz_pred(G, 4, 2) == 3


def test_h_I_values():
    assert h_I_pred(G, 2, 1) == 3
    assert h_I_pred(G, 6, 3) == 28
    assert h_I_pred(NG, 1, 0) == 0


def test_degenerate_class_rejected():
    with pytest.raises(DegenerateClass):
        h_syz_pred(InstanceClass.Degenerate, 3, 3)
    with pytest.raises(DegenerateInput):
        dim_table(degenerate_fixture())


def test_literal_table_differs_only_at_4_2(mono, gfix):
    for p, cls in ((mono, NG), (gfix, G)):
        diffs = [(m, n) for m in range(10) for n in range(7)
                 if h_syz_pred(cls, m, n, literal=True) != syz_dim(p, m, n)]
        assert diffs == [(4, 2)]
        assert syz_dim(p, 4, 2) == 3


def test_tables_match_oracle(mono, gfix, ngfix):
    for p in (mono, gfix, ngfix):
        assert dim_table(p, (9, 6)).mismatches() == []


def test_misclassification_shows_at_2_3(mono, gfix):
    bad = dim_table(mono, (9, 6), cls=G).mismatches()
    assert bad and bad[0][0] == (2, 3)
    bad = dim_table(gfix, (9, 6), cls=NG).mismatches()
    assert bad and bad[0][0] == (2, 3)


def test_h_I_oracle_at_6_3(gfix):
    assert ideal_dim(gfix, 6, 3) == 28


def test_four_term_identity(mono, gfix):
    for p in (mono, gfix):
        assert all(four_term_identity_holds(p, m, n) for m in range(10) for n in range(7))


def test_csv_rows_shape(mono):
    t = dim_table(mono, (2, 1))
    assert CSV_HEADER == "m,n,h_syz_pred,h_syz,h_I_pred,h_I,e2_pred,e2"
    rows = t.csv_rows()
    assert len(rows) == 6 and all(len(r) == 8 for r in rows)
    assert rows[-1] == [2, 1, 0, 0, 3, 3, 0, 0]
