from fractions import Fraction

import pytest

from siegeldim import arthur, golden
from siegeldim.exactmath import parse_rf


def test_determinant():
    assert arthur.g_determinant() == 48


@pytest.mark.parametrize("label", list(golden.COUNTS_G))
def test_g_counts(label):
    assert arthur.solve_g_counts()[label] == parse_rf(golden.COUNTS_G[label])


@pytest.mark.parametrize("group", golden.GROUPS)
def test_sk_p(group):
    assert arthur.dim_sk_p(group) == parse_rf(golden.SKP[group])


def test_klingen4_boundary_values():
    m = arthur.klingen4().M.expand(12)
    s = arthur.klingen4().S.expand(12)
    assert (m[0], m[2], m[4], s[7], s[12], m[12]) == (1, 0, 4, 1, 19, 36)


@pytest.mark.parametrize("split", [0, 1, Fraction(1, 2)])
def test_full_counts_nonnegative(split):
    for f in arthur.full_counts(split).values():
        assert all(c >= 0 for c in f.expand(30))


def test_reports():
    for rep in (arthur.verify_systems(), arthur.verify_klingen4()):
        assert rep.ok, rep.failures()
