import pytest

from siegeldim import arthur, golden, localreps
from siegeldim.exactmath import det


def test_table_matches():
    assert localreps.table_mismatches() == []
    assert localreps.dim_table() == golden.LOCALDIM


def test_gamma_p_column_is_restriction_dim():
    table = localreps.dim_table()
    for omega in localreps.OMEGAS:
        assert table[omega][0] == localreps.restriction_dim(omega)


def test_matrices():
    assert [list(r) for r in localreps.full_matrix()] == [list(r) for r in golden.FULL_MATRIX]
    assert [list(r) for r in localreps.g_matrix()] == [list(r) for r in golden.G_MATRIX]
    assert tuple(localreps.klingen4_row()) == tuple(golden.KLINGEN4_ROW)
    assert det(localreps.g_matrix()) == 48


def test_unknown_type():
    with pytest.raises(KeyError):
        localreps.record("XII")


def test_matrices_follow_the_table():
    # a perturbed local table must move the linear systems: nothing is hard-coded
    table = dict(localreps.dim_table())
    row = list(table["I"])
    row[1] += 1
    table["I"] = tuple(row)
    assert localreps.g_matrix(table) != localreps.g_matrix()
    assert localreps.full_matrix(table) != localreps.full_matrix()
    assert localreps.table_mismatches(table)


def test_verify_report():
    rep = localreps.verify()
    assert rep.ok, rep.failures()
    assert arthur.check_lift_rules().ok
