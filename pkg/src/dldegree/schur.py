"""Schur polynomials (bialternant and tableau definitions) and the dual Cauchy identity."""

from __future__ import annotations

from itertools import permutations

from .multipoly import MultiPoly, bilinear_product, linear_sum, vandermonde
from .partitions import Partition, box_partitions, complement, conjugate


class TooManyRows(ValueError):
    pass


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _validate(lam, d):
    lam = Partition(lam)
    if d < 1:
        raise ValueError("d must be positive")
    if len(lam) > d:
        raise TooManyRows(f"{lam} has more than {d} rows")
    return lam


def alternant(exponents):
    """det(x_i^{e_j}) expanded as a permutation sum."""
    d = len(exponents)
    terms = {}
    for perm in permutations(range(d)):
        mono = [0] * d
        for j, i in enumerate(perm):
            mono[i] = exponents[j]
        terms[tuple(mono)] = terms.get(tuple(mono), 0) + _perm_sign(perm)
    return MultiPoly(d, terms)


def schur_bialternant(lam, d):
    """S_lam(x_1..x_d) = det(x_i^{lam_j + d - j}) / det(x_i^{d - j})."""
    lam = _validate(lam, d)
    num = alternant([lam.part(j) + d - 1 - j for j in range(d)])
    return num.divexact(vandermonde(d))


def _ssyt(lam, d):
    """Yield the content vectors of all semistandard tableaux of shape lam, entries 1..d."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    filling = {}
    content = [0] * d

    def rec(k):
        if k == len(cells):
            yield tuple(content)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = filling[(i, j - 1)]
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, d + 1):
            filling[(i, j)] = v
            content[v - 1] += 1
            yield from rec(k + 1)
            content[v - 1] -= 1
        filling.pop((i, j), None)

    yield from rec(0)


def schur_ssyt(lam, d):
    """S_lam as the sum of x^content over semistandard tableaux."""
    lam = _validate(lam, d)
    terms = {}
    for content in _ssyt(lam, d):
        terms[content] = terms.get(content, 0) + 1
    return MultiPoly(d, terms)


schur = schur_bialternant


def cauchy_summand_shape(c, d):
    """conj(complement(c)) in the d x d box."""
    return conjugate(complement(c, d))


def verify_dual_cauchy(d):
    """Check sum_c S_c(x) S_{conj(complement(c))}(y) = prod_{i,j} (x_i + y_j) in 2d variables."""
    n = 2 * d
    lhs = MultiPoly(n)
    for c in box_partitions(d):
        sx = schur(c, d).embed(n, 0)
        sy = schur(cauchy_summand_shape(c, d), d).embed(n, d)
        lhs = lhs + sx * sy
    rhs = MultiPoly.constant(n)
    for i in range(d):
        for j in range(d):
            rhs = rhs * (MultiPoly.var(n, i) + MultiPoly.var(n, d + j))
    return lhs == rhs


def build_S(d):
    """sum_c S_c(q x) S_{conj(complement(c))}(x) S_1(x)^d, summand by summand."""
    total = MultiPoly(d)
    for c in box_partitions(d):
        total = total + schur(c, d).scale_vars_by_q() * schur(cauchy_summand_shape(c, d), d)
    return total * linear_sum(d) ** d


def build_S_product_form(d):
    """(prod_{i,j} (q x_i + x_j)) (x_1 + ... + x_d)^d."""
    return bilinear_product(d) * linear_sum(d) ** d
