from fractions import Fraction

import pytest

from siegeldim import jacobi


def test_bernoulli():
    assert [jacobi.bernoulli(n) for n in range(5)] == [1, Fraction(-1, 2), Fraction(1, 6), 0,
                                                      Fraction(-1, 30)]


def test_cohen_numbers():
    # weight 5/2: 1/120 - q/12 - 7q^4/12 - 2q^5/5 - q^8 - ...
    got = [jacobi.cohen_H(2, n) for n in range(9)]
    assert got == [Fraction(1, 120), Fraction(-1, 12), 0, 0, Fraction(-7, 12),
                   Fraction(-2, 5), 0, 0, -1]


def test_eisenstein_G4_head():
    g = jacobi.eisenstein_G(4, 3)
    assert g.coeffs[1:] == tuple(Fraction(x) for x in (1, 9, 28))


def test_jacobi_dims():
    assert jacobi.jacobi_dim(2, 4) == 0
    assert jacobi.jacobi_dim(4, 1) == 1
    assert jacobi.jacobi_dim(4, 4) == 2


def test_V_closed_form_and_commutation():
    e = jacobi.jacobi_eisenstein_Ek1(4, 4)
    assert jacobi.apply_V(e, 2).equals(jacobi.apply_V2_closed(e))
    lhs = jacobi.apply_U(jacobi.apply_V(e, 2), 2)
    rhs = jacobi.apply_V(jacobi.apply_U(e, 2), 2)
    assert lhs.equals(rhs)


def test_index_mismatch():
    e = jacobi.jacobi_eisenstein_Ek1(4, 2)
    with pytest.raises(ValueError):
        e + jacobi.apply_V(e, 2)


def test_appendix(appendix):
    assert appendix.ok, appendix.failures()
