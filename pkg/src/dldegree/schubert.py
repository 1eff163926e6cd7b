"""Schubert calculus on a single Grassmannian box.

Classes are partitions inside an m x w rectangle; anything leaving the
rectangle is zero and is discarded as soon as it appears.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .partitions import (
    OutOfBox,
    Partition,
    box_partitions,
    complement,
    conjugate,
    count_skew_syt,
    dl_skew_shape,
)
from .qseries import QPoly


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GrassBox:
    m: int
    w: int

    def __post_init__(self):
        if self.m < 1 or self.w < 1:
            raise ValueError(f"box dimensions must be positive, got {self.m}x{self.w}")

    @property
    def dim(self):
        return self.m * self.w

    @property
    def point(self):
        """The full rectangle, i.e. the class of a point."""
        return Partition((self.w,) * self.m)

    def check(self, a):
        a = Partition(a)
        if not a.fits(self.m, self.w):
            raise OutOfBox(f"{a} does not fit in the {self.m}x{self.w} box")
        return a

    def partitions(self, weight=None):
        return box_partitions(self.w, weight, rows=self.m)


class SchubertExpr:
    """A QPoly-linear combination of Schubert classes in a box."""

    __slots__ = ("box", "terms")

    def __init__(self, box, terms=None):
        self.box = box
        self.terms = {}
        for a, c in (terms or {}).items():
            self._add(box.check(a), c if isinstance(c, QPoly) else QPoly(c))

    def _add(self, a, c):
        s = self.terms.get(a)
        s = c if s is None else s + c
        if s:
            self.terms[a] = s
        else:
            self.terms.pop(a, None)

    @classmethod
    def cls(cls, a, box, c=1):
        return cls(box, {Partition(a): c})

    def __eq__(self, other):
        if not isinstance(other, SchubertExpr):
            return NotImplemented
        return self.box == other.box and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, a):
        return self.terms.get(Partition(a), QPoly())

    def codimensions(self):
        return {a.weight for a in self.terms}

    def __add__(self, other):
        if self.box != other.box:
            raise ValueError("box mismatch")
        out = SchubertExpr(self.box)
        out.terms = dict(self.terms)
        for a, c in other.terms.items():
            out._add(a, c)
        return out

    def scale(self, c):
        c = c if isinstance(c, QPoly) else QPoly(c)
        out = SchubertExpr(self.box)
        for a, v in self.terms.items():
            out._add(a, v * c)
        return out

    def __mul__(self, other):
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        if not isinstance(other, SchubertExpr):
            return NotImplemented
        if self.box != other.box:
            raise ValueError("box mismatch")
        out = SchubertExpr(self.box)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                for nu, mult in _lr_terms(a, b, self.box.m, self.box.w).items():
                    out._add(nu, ca * cb * mult)
        return out

    __rmul__ = scale

    def times_sigma1(self):
        out = SchubertExpr(self.box)
        for a, c in self.terms.items():
            for b in _add_one_box(a, self.box.m, self.box.w):
                out._add(b, c)
        return out

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda t: (t[0].weight, t[0].padded(self.box.m)),
            reverse=True,
        )

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*s{a}" for a, c in self.sorted_terms())

    def __repr__(self):
        return f"SchubertExpr({self.box.m}x{self.box.w}: {self})"

    def to_json(self):
        return [{"partition": list(a), "coeff": c.to_json()} for a, c in self.sorted_terms()]


def _add_one_box(a, m, w):
    out = []
    for i in range(min(len(a) + 1, m)):
        row = a.part(i)
        if row < w and (i == 0 or a.part(i - 1) > row):
            parts = list(a) + [0]
            parts[i] += 1
            out.append(Partition(parts))
    return out


def pieri(a, box):
    """sigma_a * sigma_1: every way of adding one box inside the rectangle."""
    a = box.check(a)
    return SchubertExpr(box, {b: 1 for b in _add_one_box(a, box.m, box.w)})


def _horizontal_strips(shape, k, m, w):
    """All shapes obtained from `shape` by adding a horizontal strip of k boxes.

    Yields (new_shape, added) where added[r] is the number of boxes put in row r.
    """
    rows = min(len(shape) + 1, m)
    parts = list(shape.padded(rows))

    def rec(r, left, added):
        if r == rows:
            if left == 0:
                yield added
            return
        # a horizontal strip may not extend past the old row above
        cap = (w if r == 0 else parts[r - 1]) - parts[r]
        for t in range(min(cap, left), -1, -1):
            yield from rec(r + 1, left - t, added + [t])

    for added in rec(0, k, []):
        yield Partition(p + t for p, t in zip(parts, added)), added


@cache
def _lr_terms(a, b, m, w):
    """Littlewood-Richardson expansion of sigma_a * sigma_b truncated to the m x w box.

    Builds LR tableaux of shape nu/a and content b label by label: label k
    forms a horizontal strip, and the reverse reading word stays a lattice
    word, i.e. #k in rows 1..r <= #(k-1) in rows 1..r-1 for every r.
    """
    result = {}
    if not b:
        return {a: 1}

    def rec(k, shape, prev_counts):
        if k == len(b):
            result[shape] = result.get(shape, 0) + 1
            return
        for nxt, added in _horizontal_strips(shape, b[k], m, w):
            if k > 0:
                ok = True
                have = 0
                used = 0
                for r, t in enumerate(added):
                    used += t
                    if used > have:
                        ok = False
                        break
                    have += prev_counts[r] if r < len(prev_counts) else 0
                if not ok:
                    continue
            rec(k + 1, nxt, added)

    rec(0, a, [])
    return result


def lr_product(a, b, box):
    a, b = box.check(a), box.check(b)
    return SchubertExpr(box, _lr_terms(a, b, box.m, box.w))


def pairing(a, b, box):
    """Intersection number of sigma_a and sigma_b in complementary codimension."""
    a, b = box.check(a), box.check(b)
    if a.weight + b.weight != box.dim:
        raise DegreeMismatch(f"|{a}| + |{b}| != {box.dim}")
    c = lr_product(a, b, box).coefficient(box.point)
    if c.degree > 0:
        raise AssertionError("integer product produced a q-dependent coefficient")
    return c[0]


def dl_box(d):
    return GrassBox(d + 1, d)


def dl_class(d):
    """sum_c q^{|c|} sigma_c sigma_{conj(complement(c))} in the (d+1) x d box."""
    if d < 1:
        raise ValueError("d must be positive")
    box = dl_box(d)
    total = SchubertExpr(box)
    for c in box_partitions(d):
        partner = conjugate(complement(c, d))
        total = total + lr_product(c, partner, box).scale(QPoly.monomial(c.weight))
    return total


def degree_via_syt(d):
    """sum_c q^{|c|} #SYT((conj(complement(c)))* / c)."""
    if d < 1:
        raise ValueError("d must be positive")
    coeffs = [0] * (d * d + 1)
    for c in box_partitions(d):
        shape = dl_skew_shape(c, d)
        if shape is not None:
            coeffs[c.weight] += count_skew_syt(shape)
    return QPoly(coeffs)


def degree_via_pieri(d):
    """Multiply dl_class(d) by sigma_1 d times and read off the point class."""
    expr = dl_class(d)
    for _ in range(d):
        expr = expr.times_sigma1()
    return expr.coefficient(expr.box.point)


def degree_via_schubert(d):
    """Degree from Schubert calculus; the SYT and Pieri routes must agree."""
    via_syt = degree_via_syt(d)
    via_pieri = degree_via_pieri(d)
    if via_syt != via_pieri:
        raise AssertionError(f"SYT route {via_syt} disagrees with Pieri route {via_pieri}")
    return via_syt
