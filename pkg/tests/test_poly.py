import json

import pytest
from hypothesis import given, strategies as st

from qtcatalan.errors import ValidationError
from qtcatalan.poly import BivariatePolynomial, TruncatedSeries

from conftest import DY4_MATRIX, ONE, ONE_QT, Q, T

terms = st.dictionaries(
    st.tuples(st.integers(0, 6), st.integers(0, 4)), st.integers(-5, 5), max_size=6
)


def test_zero_coefficients_are_dropped():
    p = BivariatePolynomial({(1, 1): 0, (0, 0): 2})
    assert len(p) == 1
    assert p == 2 * ONE


def test_negative_exponent_rejected():
    with pytest.raises(ValidationError):
        BivariatePolynomial({(-1, 0): 1})


def test_binomial_expansion():
    p = ONE_QT ** 3
    assert p == BivariatePolynomial({(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1})


def test_subtraction_to_zero():
    p = ONE_QT ** 2
    assert not (p - p)
    assert str(p - p) == "0"


def test_reflect_t():
    p = BivariatePolynomial({(2, 0): 1, (3, 1): 4})
    assert p.reflect_t(3) == BivariatePolynomial({(2, 3): 1, (3, 2): 4})


def test_t_over_q_requires_area_at_least_rank():
    assert (Q * T).t_over_q() == T
    with pytest.raises(ValidationError):
        T.t_over_q()


def test_specialisations():
    p = BivariatePolynomial.from_matrix(DY4_MATRIX)
    assert p.at_q1().t_coefficients() == [1, 6, 6, 1]
    assert p.evaluate(1, 1) == 14
    assert p.at_t1().q_coefficients() == [1, 3, 3, 3, 2, 1, 1]


def test_matrix_layout_rows_t_cols_q():
    p = 3 * Q ** 2 * T
    assert p.matrix() == [[0, 0, 0], [0, 0, 3]]


def test_json_layout():
    p = BivariatePolynomial.from_matrix(DY4_MATRIX)
    obj = json.loads(p.to_json(4))
    assert obj == {"n": 4, "rows": "t", "cols": "q", "matrix": DY4_MATRIX}
    assert BivariatePolynomial.from_json(p.to_json(4)) == p


def test_json_layout_mismatch():
    with pytest.raises(ValidationError):
        BivariatePolynomial.from_json({"rows": "q", "cols": "t", "matrix": [[1]]})


def test_csv():
    assert (ONE + Q * T).to_csv() == "t\\q,0,1\n0,1,0\n1,0,1\n"


def test_str():
    assert str(ONE + 2 * Q ** 3 * T) == "1 + 2*q^3*t"


@given(terms, terms)
def test_ring_laws(a, b):
    a = {k: v for k, v in a.items()}
    pa, pb = BivariatePolynomial(a), BivariatePolynomial(b)
    assert pa + pb == pb + pa
    assert pa * pb == pb * pa
    assert (pa + pb) * ONE_QT == pa * ONE_QT + pb * ONE_QT
    assert pa - pa == BivariatePolynomial.zero()


@given(terms)
def test_json_round_trip(a):
    p = BivariatePolynomial({k: v for k, v in a.items()})
    if p:
        assert BivariatePolynomial.from_json(p.to_json(0)) == p


def test_series_reciprocal():
    # 1 / (1 - z) = 1 + z + z^2 + ...
    s = TruncatedSeries([ONE, -1 * ONE], 5)
    inv = s.reciprocal()
    assert [inv[k] for k in range(6)] == [ONE] * 6
    assert (s * inv)[0] == ONE
    assert all(not (s * inv)[k] for k in range(1, 6))


def test_series_reciprocal_needs_unit_constant():
    with pytest.raises(ValidationError):
        TruncatedSeries([2 * ONE], 3).reciprocal()
