import random
from itertools import product

import pytest

from dldegree.hermitian import (
    BudgetExceeded,
    FieldError,
    FiniteField,
    HermSpace,
    classify_pairs,
    classify_pairs_all,
    count_dl_points,
    count_isotropic_frames,
    count_isotropic_lines,
    enumerate_special_subspaces,
    fermat_point_count,
    field,
    gl_order,
)
from dldegree.qseries import isotropic_line_count_formula


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_field_tables(q):
    F = field(q)
    assert F.size == q * q
    assert sorted(a for a in range(F.size) if F.conj[a] == a)[:2] == [0, 1]
    for a in range(1, F.size):
        assert F.mul[a][F.inv[a]] == 1
    # distributivity on the full table
    for a, b, c in product(range(F.size), repeat=3):
        assert F.mul[a][F.add[b][c]] == F.add[F.mul[a][b]][F.mul[a][c]]


def test_unsupported_q():
    with pytest.raises(FieldError):
        FiniteField(7)


@pytest.mark.parametrize("q, n", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_form_is_hermitian(q, n):
    hs = HermSpace(q, n)
    F = hs.F
    vecs = list(hs.vectors())
    if len(vecs) > 300:
        vecs = random.Random(n * 10 + q).sample(vecs, 300)
    for x in vecs:
        for y in vecs:
            assert hs.form(x, y) == F.conj[hs.form(y, x)]
    for x in vecs:
        if any(x):
            assert any(hs.form(x, e) for e in hs.whole().basis)


def test_orth_extremes():
    hs = HermSpace(2, 3)
    assert hs.whole().orth() == hs.zero()
    assert hs.zero().orth() == hs.whole()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orth_involution_exhaustive(n):
    hs = HermSpace(2, n)
    for k in range(n + 1):
        for U in hs.grassmannian(k):
            P = U.orth()
            assert P.dim == n - k
            assert P.orth() == U
            for u in U.basis:
                for x in P.basis:
                    assert hs.form(x, u) == 0


def test_orth_involution_sampled_n5():
    hs = HermSpace(2, 5)
    rng = random.Random(5)
    for _ in range(200):
        k = rng.randint(1, 4)
        U = hs.subspace([tuple(rng.randrange(4) for _ in range(5)) for _ in range(k)])
        assert U.dim + U.orth().dim == 5
        assert U.orth().orth() == U


def test_intersection_agrees_with_complements():
    hs = HermSpace(2, 4)
    subs = list(hs.grassmannian(2))[:60]
    for U in subs[:20]:
        for V in subs:
            assert U.intersect(V) == (U.orth() + V.orth()).orth()


@pytest.mark.parametrize("n, expected", [(1, 0), (3, 9), (5, 165)])
def test_isotropic_lines_q2(n, expected):
    assert count_isotropic_lines(n, 2) == expected


@pytest.mark.parametrize("n, q", [(3, 2), (5, 2), (7, 2), (3, 3), (5, 3)])
def test_isotropic_lines_formula(n, q):
    assert count_isotropic_lines(n, q) == isotropic_line_count_formula(n)(q)


def test_budget():
    with pytest.raises(BudgetExceeded):
        count_isotropic_lines(9, 2)
    with pytest.raises(BudgetExceeded):
        count_isotropic_lines(7, 3)
    assert count_isotropic_lines(9, 2, budget=10 ** 6) == isotropic_line_count_formula(9)(2)


def test_special_subspaces():
    assert len(enumerate_special_subspaces(1, HermSpace(2, 3))) == 9
    hs5 = HermSpace(2, 5)
    special = enumerate_special_subspaces(1, hs5)
    assert len(special) == 165
    assert len(set(special)) == 165
    for W in special:
        assert W.dim == 4
        assert W.is_special()
        assert W.orth().dim == 1 and W.orth().is_totally_isotropic()
    assert enumerate_special_subspaces(0, hs5) == [hs5.whole()]


def test_special_matches_grassmannian_scan():
    hs = HermSpace(2, 3)
    scanned = {W for W in hs.grassmannian(2) if W.is_special()}
    assert scanned == set(enumerate_special_subspaces(1, hs))


@pytest.mark.parametrize("d, q, expected", [(0, 2, 1), (1, 2, 9), (1, 3, 28)])
def test_dl_points(d, q, expected):
    assert count_dl_points(d, q) == expected


@pytest.mark.parametrize("q", [2, 3])
def test_dl_points_fermat_oracle(q):
    assert count_dl_points(1, q) == fermat_point_count(q) == q ** 3 + 1


def test_dl_points_d2_frames_oracle():
    hs = HermSpace(2, 5)
    frames = count_isotropic_frames(hs, 2)
    assert frames % gl_order(2, 4) == 0
    assert count_dl_points(2, 2) == frames // gl_order(2, 4)


def test_classify_pairs_d2():
    a, b, c = classify_pairs(2, 2)
    assert a == 1
    assert b == 36
    assert a + b + c == 165


def test_classify_pairs_independent_of_w_prime():
    assert classify_pairs_all(2, 2) == {(1, 36, 128)}
