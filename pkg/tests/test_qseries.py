import pytest
from hypothesis import given, strategies as st

from overparity.errors import DivergentProduct, NonUnitDivisor, OddCoefficient, OrderMismatch
from overparity.qseries import FORM_COUNT, ExprId, Series, build, pochhammer, series_div, series_mul

from .oracles import binomial, distinct_counts, geometric, overpartition_counts, partition_counts, poly_mul

ORDER = 12
coeff_lists = st.lists(st.integers(-50, 50), min_size=ORDER + 1, max_size=ORDER + 1)
unit_lists = st.tuples(st.sampled_from([1, -1]), st.lists(st.integers(-9, 9), min_size=ORDER, max_size=ORDER))


@given(coeff_lists, coeff_lists)
def test_mul_matches_schoolbook(a, b):
    assert list((Series(a) * Series(b)).coeffs) == poly_mul(a, b, ORDER)


@given(coeff_lists, unit_lists)
def test_div_inverts_mul(a, unit):
    b = [unit[0]] + unit[1]
    quotient = series_div(Series(a), Series(b))
    assert series_mul(quotient, Series(b)) == Series(a)


@given(coeff_lists, coeff_lists)
def test_add_sub(a, b):
    s, t = Series(a), Series(b)
    assert (s + t) - t == s
    assert -(-s) == s
    assert (s - s) == Series.zero(ORDER)


@given(coeff_lists, st.integers(-3, 3), st.integers(1, ORDER))
def test_binomial_helpers(a, c, k):
    s = Series(a)
    factor = Series.monomial(0, ORDER) + Series.monomial(k, ORDER, c)
    assert s.mul_binomial(c, k) == s * factor
    assert s.mul_binomial(c, k).div_binomial(c, k) == s


def test_pentagonal_numbers():
    # (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
    got = pochhammer(1, 1, None, 16).coeffs
    expected = [0] * 17
    for k, sign in ((0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)):
        expected[k] = sign
    assert list(got) == expected


def test_finite_pochhammer():
    # (q^2; q)_2 = (1 - q^2)(1 - q^3)
    assert list(pochhammer(1, 2, 2, 6).coeffs) == [1, 0, -1, -1, 0, 1, 0]
    assert pochhammer(5, 1, 0, 4) == Series.one(4)


def test_errors():
    with pytest.raises(NonUnitDivisor):
        Series.one(3) / Series([2, 1, 0, 0])
    with pytest.raises(OrderMismatch):
        Series.one(3) + Series.one(4)
    with pytest.raises(OddCoefficient):
        Series([2, 3, 4]).halve()
    with pytest.raises(DivergentProduct):
        pochhammer(1, 0, None, 5)
    with pytest.raises(ValueError):
        build(ExprId.GEN_P1, 10, form=5)


def test_shift_and_truncate():
    s = Series([1, 2, 3, 4])
    assert list(s.shift(2).coeffs) == [0, 0, 1, 2]
    assert list(s.truncate(1).coeffs) == [1, 2]
    assert list(s.truncate(5).coeffs) == [1, 2, 3, 4, 0, 0]
    assert Series([4, 6]).halve() == Series([2, 3])


def test_named_coefficients():
    assert build(ExprId.OP_TOTAL, 10)[3] == 8
    assert build(ExprId.SUM_BAR_NGTO, 10)[3] == 3
    n = 40
    assert build(ExprId.GEN_P, n, t=1) == build(ExprId.SUM_NLTO, n) + Series.one(n)


def _naive_gen_p(t, order):
    out = [1] + [0] * order
    for k in range(1, order + 1):
        out = poly_mul(out, [t ** (i // k) if i % k == 0 else 0 for i in range(order + 1)], order)
    return out


def _naive_gen_d(t, order):
    out = [1] + [0] * order
    for k in range(1, order + 1):
        out = poly_mul(out, [1] + [0] * (k - 1) + [t] + [0] * (order - k), order)
    return out


@pytest.mark.parametrize("t", range(-2, 4))
@pytest.mark.parametrize("form", range(3))
def test_gen_forms_against_naive_products(t, form):
    assert list(build(ExprId.GEN_P, 25, t=t, form=form).coeffs) == _naive_gen_p(t, 25)
    assert list(build(ExprId.GEN_D, 25, t=t, form=form).coeffs) == _naive_gen_d(t, 25)


def test_fixed_t_shortcuts():
    order = 30
    assert list(build(ExprId.GEN_P1, order).coeffs) == partition_counts(order)
    assert list(build(ExprId.GEN_D1, order).coeffs) == distinct_counts(order)
    assert list(build(ExprId.OP_TOTAL, order).coeffs) == overpartition_counts(order)
    minus = [1] + [0] * order
    for k in range(1, order + 1):
        minus = poly_mul(minus, geometric(k, order, -1), order)
    assert list(build(ExprId.GEN_Pm1, order).coeffs) == minus
    qq = [1] + [0] * order
    for k in range(1, order + 1):
        qq = poly_mul(qq, binomial(k, order, -1), order)
    assert list(build(ExprId.GEN_Dm1, order).coeffs) == qq


@pytest.mark.parametrize("expr", list(ExprId))
def test_every_expression_builds_and_is_deterministic(expr):
    for form in range(FORM_COUNT.get(expr, 1)):
        a = build(expr, 30, form=form)
        assert a.order == 30 and a == build(expr, 30, form=form)


@pytest.mark.parametrize("expr", list(ExprId))
def test_truncation_is_consistent(expr):
    assert build(expr, 40).truncate(20) == build(expr, 20)
