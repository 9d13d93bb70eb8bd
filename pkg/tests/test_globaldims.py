from fractions import Fraction

import pytest

from siegeldim import globaldims, golden
from siegeldim.exactmath import parse_rf


@pytest.mark.parametrize("group", golden.GROUPS)
def test_codim_closed_form(group):
    assert globaldims.codim_params(group) == golden.CODIM[group][:4]
    assert globaldims.codim_series(group) == parse_rf(golden.CODIM[group][4])


def test_classify():
    assert globaldims.classify_cusp_group((Fraction(1, 2), 2)) == 1
    assert globaldims.classify_cusp_group((1, 4)) == 4
    with pytest.raises(ValueError):
        globaldims.classify_cusp_group((1, 3))


def test_codim_at_weight_four():
    # Sp(4,Z): M_4 is spanned by the Eisenstein series
    assert globaldims.codim_at("Sp4Z", 4) == 1
    assert globaldims.codim_at("Sp4Z", 5) == 0


def test_unknown_group():
    with pytest.raises(KeyError):
        globaldims.mk_series("Gamma7")


def test_reports():
    for rep in (globaldims.verify_codim_consistency(), globaldims.verify_low_weights()):
        assert rep.ok, rep.failures()
