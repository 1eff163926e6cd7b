import pytest

from dldegree.multipoly import MultiPoly, build_coeff_poly, linear_sum, vandermonde
from dldegree.partitions import box_partitions
from dldegree.qseries import Q
from dldegree.schur import (
    TooManyRows,
    build_S,
    build_S_product_form,
    schur_bialternant,
    schur_ssyt,
    verify_dual_cauchy,
)


def test_bialternant_examples():
    assert schur_bialternant((), 2) == MultiPoly.constant(2)
    assert schur_bialternant((1,), 3) == linear_sum(3)
    assert schur_bialternant((2, 1), 2) == MultiPoly(2, {(2, 1): 1, (1, 2): 1})


def test_ssyt_examples():
    assert schur_ssyt((1,), 2) == linear_sum(2)
    assert schur_ssyt((2,), 2) == MultiPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert schur_ssyt((1, 1), 2) == MultiPoly(2, {(1, 1): 1})


def test_too_many_rows():
    with pytest.raises(TooManyRows):
        schur_bialternant((1, 1, 1), 2)
    with pytest.raises(TooManyRows):
        schur_ssyt((1, 1, 1), 2)


BOX4 = [(lam, d) for lam in box_partitions(4) for d in range(max(1, len(lam)), 5)]


@pytest.mark.parametrize("lam, d", BOX4, ids=lambda v: str(v))
def test_bialternant_equals_ssyt(lam, d):
    s = schur_bialternant(lam, d)
    assert s == schur_ssyt(lam, d)
    assert s.total_degrees() <= {lam.weight}


@pytest.mark.parametrize("lam, d", BOX4, ids=lambda v: str(v))
def test_schur_symmetric(lam, d):
    s = schur_ssyt(lam, d)
    for i in range(d):
        for j in range(i + 1, d):
            assert s.swap(i, j) == s


@pytest.mark.parametrize("lam, d", [(lam, d) for lam, d in BOX4 if len(lam) < d and d >= 2])
def test_stability(lam, d):
    assert schur_bialternant(lam, d).drop_last_var() == schur_bialternant(lam, d - 1)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_dual_cauchy(d):
    assert verify_dual_cauchy(d)


def test_dual_cauchy_d1_by_hand():
    # 1*y1 + x1*1
    assert verify_dual_cauchy(1)


def test_build_S_d1():
    assert build_S(1) == MultiPoly(1, {(2,): 1 + Q})


@pytest.mark.parametrize("d", [1, 2, 3])
def test_build_S_product_form(d):
    assert build_S(d) == build_S_product_form(d)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_build_S_times_vandermonde(d):
    assert build_S(d) * vandermonde(d) == build_coeff_poly(d)
