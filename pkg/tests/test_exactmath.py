from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from siegeldim.exactmath import (
    DimensionMismatchError, DivisionByZeroConstantError, Polynomial, RationalFunction,
    SingularMatrixError, det, parse_rf, poly_gcd, rank, rf_equal, rf_expand, solve_linear,
)

coeffs = st.lists(st.integers(-20, 20), min_size=1, max_size=7)


def rf(num, den=(1,)):
    return RationalFunction(Polynomial(num), Polynomial(den))


def test_geometric_series():
    assert rf_expand(parse_rf("1/(1-t)"), 5) == [1] * 6
    assert rf_expand(parse_rf("t^6/(1-t^2)"), 10) == [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1]


def test_reduction_and_normalisation():
    f = parse_rf("(1-t^2)/(2-2t)")
    assert f.den == Polynomial([1])
    assert f.num == Polynomial([Fraction(1, 2), Fraction(1, 2)])


def test_hint_ignored_by_equality():
    a = parse_rf("t^12/((1-t^4)(1-t^6))")
    b = parse_rf("t^12(1+t^2)/((1-t^4)(1-t^6)(1+t^2))")
    assert a == b and rf_equal(a, b)


def test_display_roundtrip():
    for text in ("t^12 / ((1-t^4)(1-t^6))", "15t^6(2-t^2) / (1-t^2)^2",
                 "(1+t^35) / ((1-t^4)(1-t^6)(1-t^10)(1-t^12))"):
        f = parse_rf(text)
        assert str(f) == text
        assert parse_rf(str(f)) == f


def test_bad_denominator():
    with pytest.raises(DivisionByZeroConstantError):
        parse_rf("1/t")
    with pytest.raises(ZeroDivisionError):
        rf([1], [0])


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_rf("1/(1-")
    with pytest.raises(ValueError):
        parse_rf("x^2")


def test_linear_algebra():
    assert det([[2, 1], [1, 1]]) == 1
    assert det([[1, 2], [2, 4]]) == 0
    assert rank([[1, 2, 3], [2, 4, 6], [0, 0, 1]]) == 2
    assert solve_linear([[2, 1], [1, 1]], [3, 2]) == [1, 1]
    with pytest.raises(SingularMatrixError):
        solve_linear([[1, 2], [2, 4]], [1, 2])
    with pytest.raises(DimensionMismatchError):
        det([[1, 2]])


def test_solve_with_series_rhs():
    x, y = solve_linear([[1, 1], [1, -1]], [parse_rf("2/(1-t)"), parse_rf("0")])
    assert x == y == parse_rf("1/(1-t)")


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs)
def test_gcd_divides(a, b):
    pa, pb = Polynomial(a), Polynomial(b)
    g = poly_gcd(pa, pb)
    if g.is_zero():
        assert pa.is_zero() and pb.is_zero()
        return
    assert pa.divmod(g)[1].is_zero() and pb.divmod(g)[1].is_zero()


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs, coeffs)
def test_field_laws(a, b, c):
    f, g = rf(a, [1, 1]), rf(b, [1, -1, 1])
    h = rf(c, [1, 0, -1])
    assert (f + g) * h == f * h + g * h
    assert (f - g) + g == f
    if not g.is_zero():
        assert (f / g) * g == f


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs)
def test_expansion_is_ring_map(a, b):
    f, g = rf(a, [1, -1]), rf(b, [1, 0, -1])
    n = 12
    ef, eg, eprod = rf_expand(f, n), rf_expand(g, n), rf_expand(f * g, n)
    conv = [sum(ef[i] * eg[k - i] for i in range(k + 1)) for k in range(n + 1)]
    assert list(eprod) == conv


@settings(max_examples=40, deadline=None)
@given(coeffs, st.sampled_from([(1,), (1, -1), (1, 0, -1), (1, 0, 0, 0, -1)]))
def test_print_parse_roundtrip(a, den):
    f = rf(a, den)
    assert parse_rf(str(f)) == f
