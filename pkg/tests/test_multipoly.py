import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dldegree.multipoly import (
    MultiPoly,
    VariableMismatch,
    build_coeff_poly,
    degree_via_coeff,
    target_monomial,
    vandermonde,
)
from dldegree.qseries import ONE, Q, QPoly, q_double_factorial
from dldegree.schur import alternant


def x(d, i):
    return MultiPoly.var(d, i)


def test_add_cancels():
    assert x(1, 0) + (-x(1, 0)) == MultiPoly(1)
    assert not (x(2, 0) - x(2, 0)).terms


def test_difference_of_squares():
    lhs = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1))
    assert lhs == MultiPoly(2, {(2, 0): 1, (0, 2): -1})


def test_q_coefficient_product():
    assert MultiPoly.var(2, 0, Q) * x(2, 1) == MultiPoly(2, {(1, 1): Q})


def test_mismatch():
    with pytest.raises(VariableMismatch):
        x(2, 0) + x(3, 0)
    with pytest.raises(VariableMismatch):
        x(2, 0) * x(3, 0)
    with pytest.raises(VariableMismatch):
        x(2, 0).coefficient_of((1,))


def test_vandermonde_small():
    assert vandermonde(1) == MultiPoly.constant(1)
    assert vandermonde(2) == x(2, 0) - x(2, 1)
    v3 = vandermonde(3)
    assert v3 == MultiPoly(
        3,
        {(2, 1, 0): 1, (2, 0, 1): -1, (1, 2, 0): -1, (1, 0, 2): 1, (0, 2, 1): 1, (0, 1, 2): -1},
    )


@pytest.mark.parametrize("d", range(1, 6))
def test_vandermonde_is_the_alternant(d):
    assert vandermonde(d) == alternant(list(range(d - 1, -1, -1)))


@pytest.mark.parametrize("d", range(2, 5))
def test_vandermonde_alternating(d):
    v = vandermonde(d)
    for i in range(d):
        for j in range(i + 1, d):
            assert v.swap(i, j) == -v


def test_coefficient_of():
    p = MultiPoly(1, {(2,): ONE + Q})
    assert p.coefficient_of((2,)) == ONE + Q
    assert (x(2, 0) * x(2, 1)).coefficient_of((2, 0)) == QPoly()


def test_build_coeff_poly_d1():
    assert build_coeff_poly(1) == MultiPoly(1, {(2,): ONE + Q})


def test_build_coeff_poly_d2_expansion():
    expected = MultiPoly(
        2,
        {
            (6, 1): QPoly((0, 1, 2, 1)),
            (5, 2): QPoly((1, 3, 4, 3, 1)),
            (4, 3): QPoly((1, 2, 2, 2, 1)),
            (3, 4): QPoly((-1, -2, -2, -2, -1)),
            (2, 5): QPoly((-1, -3, -4, -3, -1)),
            (1, 6): QPoly((0, -1, -2, -1)),
        },
    )
    assert build_coeff_poly(2) == expected
    assert len(build_coeff_poly(2)) == 6


def test_build_coeff_poly_d3_coefficient():
    assert build_coeff_poly(3).coefficient_of((6, 5, 4)) == QPoly((1, 3, 5, 7, 8, 8, 7, 5, 3, 1))


@pytest.mark.parametrize("d", range(1, 5))
def test_build_coeff_poly_homogeneous(d):
    p = build_coeff_poly(d)
    assert p.total_degrees() == {d * d + d + d * (d - 1) // 2}


@pytest.mark.parametrize("d", range(2, 4))
def test_build_coeff_poly_antisymmetric(d):
    p = build_coeff_poly(d)
    for i in range(d):
        for j in range(i + 1, d):
            assert p.swap(i, j) == -p


@pytest.mark.parametrize("d", range(1, 5))
def test_bounded_product_keeps_target(d):
    target = target_monomial(d)
    assert build_coeff_poly(d).coefficient_of(target) == build_coeff_poly(d, bound=target).coefficient_of(target)


@pytest.mark.parametrize(
    "d, expected", [(1, (1, 1)), (2, (1, 2, 2, 2, 1))]
)
def test_degree_via_coeff_small(d, expected):
    assert degree_via_coeff(d) == QPoly(expected)


@pytest.mark.parametrize("d", range(1, 6))
def test_degree_via_coeff_closed_form(d):
    assert degree_via_coeff(d) == q_double_factorial(d)


def test_scale_vars_by_q():
    assert MultiPoly(1, {(2,): 1}).scale_vars_by_q() == MultiPoly(1, {(2,): Q ** 2})
    p = MultiPoly(2, {(1, 1): 1, (0, 0): 1})
    assert p.scale_vars_by_q() == MultiPoly(2, {(1, 1): Q ** 2, (0, 0): 1})
    s1 = x(2, 0) + x(2, 1)
    assert s1.scale_vars_by_q() == s1 * Q


def test_divexact():
    v = vandermonde(3)
    p = (x(3, 0) + x(3, 2) * Q) * v
    assert p.divexact(v) == x(3, 0) + x(3, 2) * Q


def test_rendering_and_json():
    p = MultiPoly(2, {(1, 0): ONE + Q, (0, 2): -1, (0, 0): 3})
    assert str(p) == "(-1)*x2^2 + (1 + q)*x1 + (3)"
    data = p.to_json()
    assert data[1] == {"exponents": [1, 0], "coeff": ["1", "1"]}
    assert MultiPoly.from_json(2, data) == p


def test_embed_and_drop():
    p = x(2, 0) * x(2, 1)
    assert p.embed(4, 2) == MultiPoly(4, {(0, 0, 1, 1): 1})
    assert (x(3, 0) + x(3, 2)).drop_last_var() == x(2, 0)


small_terms = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 3),
    st.lists(st.integers(-3, 3), max_size=3).map(QPoly),
    max_size=4,
)


@settings(max_examples=60, deadline=None)
@given(small_terms, small_terms, small_terms)
def test_ring_axioms(a, b, c):
    a, b, c = MultiPoly(3, a), MultiPoly(3, b), MultiPoly(3, c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert all(v for v in (a * b).terms.values())


@settings(max_examples=40, deadline=None)
@given(small_terms, st.permutations(range(3)))
def test_permute_is_ring_map(a, perm):
    a = MultiPoly(3, a)
    b = MultiPoly(3, {(1, 0, 2): Q})
    assert (a * b).permute(perm) == a.permute(perm) * b.permute(perm)
