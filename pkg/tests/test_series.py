"""Truncated series arithmetic against brute-force oracles."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agstab.errors import InputError, NonIntegralCoefficient, ZeroConstantTerm
from agstab.series import (
    RationalMatrix,
    TruncatedSeries,
    cycle_type_denominator,
    det_one_minus_tA,
    expand_rational_form,
    product_form,
)


def naive_product(a, b, order):
    # independent convolution, no reuse of library multiplication
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        for j, y in enumerate(b[: order + 1]):
            if i + j <= order:
                out[i + j] += x * y
    return tuple(out)


def poly_det(rows):
    # cofactor expansion over polynomial ring, entries are coefficient lists
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = [Fraction(0)]

    def padd(p, q, sign):
        out = list(p) + [Fraction(0)] * max(0, len(q) - len(p))
        for i, c in enumerate(q):
            out[i] += sign * c
        return out

    def pmul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                out[i + j] += x * y
        return out

    for col in range(n):
        minor = [[row[c] for c in range(n) if c != col] for row in rows[1:]]
        term = pmul(rows[0][col], poly_det(minor))
        total = padd(total, term, Fraction((-1) ** col))
    return total


coeff = st.builds(Fraction, st.integers(min_value=-20, max_value=20),
                  st.integers(min_value=1, max_value=6))
coeff_lists = st.lists(coeff, min_size=1, max_size=8)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists)
def test_multiplication_matches_convolution(a, b):
    order = 7
    sa = TruncatedSeries(a, order)
    sb = TruncatedSeries(b, order)
    assert (sa * sb).coefficients == naive_product(sa.coefficients, sb.coefficients, order)


@settings(max_examples=40, deadline=None)
@given(coeff_lists)
def test_inverse_is_two_sided(a):
    a = [Fraction(1)] + list(a)
    order = 6
    s = TruncatedSeries(a, order)
    assert (s * s.inverse()) == TruncatedSeries.one(order)
    assert (s.inverse() * s) == TruncatedSeries.one(order)


def test_inverse_requires_nonzero_constant():
    s = TruncatedSeries((0, 1, 0, 0))
    with pytest.raises(ZeroConstantTerm):
        s.inverse()


def test_geometric_series():
    assert TruncatedSeries.geometric(1, 5).integer_coefficients() == [1, 1, 1, 1, 1, 1]
    assert TruncatedSeries.geometric(3, 7).integer_coefficients() == [1, 0, 0, 1, 0, 0, 1, 0]


def test_monomial_and_shift():
    m = TruncatedSeries.monomial(3, 6, 5)
    assert m.integer_coefficients() == [0, 0, 0, 5, 0, 0, 0]
    s = TruncatedSeries.one(4).shift(2)
    assert s.integer_coefficients() == [0, 0, 1, 0, 0]


def test_substitute_power():
    s = TruncatedSeries.geometric(1, 8)
    assert s.substitute_power(2).integer_coefficients() == [1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_truncate_and_as_order():
    s = TruncatedSeries.geometric(1, 6)
    assert s.truncate(3).order == 3
    with pytest.raises(ValueError):
        s.truncate(9)
    p = TruncatedSeries((1, 2, 0))
    assert p.as_order(5).integer_coefficients() == [1, 2, 0, 0, 0, 0]


def test_product_form_single_factors():
    assert product_form({1: 1}, 6) == TruncatedSeries.geometric(1, 6)
    assert product_form({2: 1}, 6) == TruncatedSeries.geometric(2, 6)
    # 1/(1-t)^2 has coefficients k+1
    assert product_form({1: 2}, 8).integer_coefficients() == list(range(1, 10))
    with pytest.raises(ValueError):
        product_form({1: 1, 2: -1}, 6)


def test_euler_product_gives_partition_numbers():
    s = product_form({i: 1 for i in range(1, 11)}, 10)
    assert s.integer_coefficients() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_expand_rational_form():
    s = expand_rational_form((1, 0, -1), {1: 2}, 6)
    # (1-t^2)/(1-t)^2 = (1+t)/(1-t)
    assert s.integer_coefficients() == [1, 2, 2, 2, 2, 2, 2]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(min_value=-4, max_value=4), min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_det_one_minus_tA_matches_cofactor_expansion(rows):
    order = 9
    m = RationalMatrix(tuple(tuple(Fraction(v) for v in r) for r in rows))
    got = det_one_minus_tA(m).as_order(order)
    poly = [[[Fraction(1 if i == j else 0), -Fraction(rows[i][j])] for j in range(3)]
            for i in range(3)]
    expect = poly_det(poly)
    expect += [Fraction(0)] * (order + 1 - len(expect))
    assert got.coefficients == tuple(expect[: order + 1])


def test_cycle_type_denominator_equals_matrix_path():
    # permutation with cycles of length 3, 2, 1 on 6 points
    images = (2, 3, 1, 5, 4, 6)
    m = RationalMatrix.permutation(images)
    assert cycle_type_denominator((3, 2, 1), 10) == det_one_minus_tA(m).as_order(10)


def test_json_round_trip():
    s = expand_rational_form((1, -1, 1), {1: 1, 3: 2}, 12)
    assert TruncatedSeries.from_json(s.to_json()) == s
    d = s.to_json_dict()
    assert d["order"] == 12
    assert all(isinstance(c, str) for c in d["coefficients"])


def test_from_json_rejects_malformed_payloads():
    with pytest.raises(InputError):
        TruncatedSeries.from_json(json.dumps({"order": 2}))
    with pytest.raises(InputError):
        TruncatedSeries.from_json(json.dumps({"order": 2, "coefficients": ["1", "x"]}))
    with pytest.raises(InputError):
        TruncatedSeries.from_json(json.dumps({"order": 3, "coefficients": ["1", "2"]}))


def test_integer_coefficients_rejects_fractions():
    s = TruncatedSeries((Fraction(1), Fraction(1, 2)))
    with pytest.raises(NonIntegralCoefficient):
        s.integer_coefficients()


def test_polynomial_string():
    s = expand_rational_form((1, 0, -1), {1: 2}, 3)
    assert s.polynomial_string() == "1 + 2*t + 2*t^2 + 2*t^3"


def test_agrees_with_compares_common_prefix():
    a = TruncatedSeries.geometric(1, 10)
    b = TruncatedSeries.geometric(1, 5)
    assert a.agrees_with(b)
    c = b + TruncatedSeries.monomial(5, 5)
    assert not a.agrees_with(c)
    assert a.truncate(4).agrees_with(c)
