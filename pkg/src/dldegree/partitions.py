"""Young diagrams: conjugation, box complement and dual, skew shapes, SYT counts."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial


class OutOfBox(ValueError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative ints, trailing zeros stripped."""

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def rows(self):
        return len(self)

    def part(self, i):
        """Row i (0-based), zero beyond the last row."""
        return self[i] if i < len(self) else 0

    def padded(self, m):
        if len(self) > m:
            raise OutOfBox(f"{self} has more than {m} rows")
        return tuple(self) + (0,) * (m - len(self))

    def fits(self, m, w):
        return len(self) <= m and (not self or self[0] <= w)

    def contains(self, other):
        return all(self.part(i) >= v for i, v in enumerate(other))

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self):
        return f"Partition({tuple(self)})"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            text = text[1:-1]
        text = text.strip()
        if not text:
            return cls()
        return cls(int(s) for s in text.split(","))


def _check_box(a, m, w):
    if not a.fits(m, w):
        raise OutOfBox(f"{a} does not fit in the {m}x{w} box")


def conjugate(a):
    a = Partition(a)
    if not a:
        return a
    return Partition(sum(1 for x in a if x >= j) for j in range(1, a[0] + 1))


def complement(c, d):
    """(d - c_d, ..., d - c_1) in the d x d box."""
    c = Partition(c)
    _check_box(c, d, d)
    return Partition(d - x for x in reversed(c.padded(d)))


def dual(a, m, w):
    """(w - a_m, ..., w - a_1) in the m x w box."""
    a = Partition(a)
    _check_box(a, m, w)
    return Partition(w - x for x in reversed(a.padded(m)))


def box_partitions(d, weight=None, rows=None):
    """All partitions with parts <= d and at most `rows` rows (default d).

    Ordered lexicographically descending on the padded tuples; for d = 3 and
    weight 4 this gives [(3,1), (2,2), (2,1,1)].
    """
    m = d if rows is None else rows
    out = []

    def rec(prefix, cap, left):
        slots = m - len(prefix)
        if slots == 0:
            if weight is None or left == 0:
                out.append(Partition(prefix))
            return
        hi = cap
        lo = 0
        if weight is not None:
            hi = min(hi, left)
            lo = -(-left // slots)  # remaining rows are each <= v
        for v in range(hi, lo - 1, -1):
            rec(prefix + [v], v, left - v if weight is not None else 0)

    rec([], d, weight if weight is not None else 0)
    return out


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self):
        return self.outer.weight - self.inner.weight

    def cells(self):
        """Cells (row, col) in row-major order."""
        return [
            (i, j)
            for i, row in enumerate(self.outer)
            for j in range(self.inner.part(i), row)
        ]

    def __str__(self):
        return f"{self.outer}/{self.inner}"

    @classmethod
    def parse(cls, text):
        outer, _, inner = text.partition("/")
        return cls(Partition.parse(outer), Partition.parse(inner))


def count_skew_syt(shape):
    """Count standard Young tableaux of a skew shape by backtracking.

    Cells are filled in row-major order; a value must exceed both the left
    and the upper neighbour when those lie inside the skew shape.
    """
    cells = shape.cells()
    n = len(cells)
    if n == 0:
        return 1
    index = {cell: k for k, cell in enumerate(cells)}
    left = [index.get((i, j - 1)) for i, j in cells]
    up = [index.get((i - 1, j)) for i, j in cells]
    # number of cells forced to be larger (hook within the skew shape), for pruning
    below = [
        sum(1 for (a, b) in cells if (a, b) != (i, j) and a >= i and b >= j)
        for i, j in cells
    ]
    values = [0] * n
    used = [False] * (n + 1)

    def rec(k):
        if k == n:
            return 1
        lo = 1
        if left[k] is not None:
            lo = max(lo, values[left[k]] + 1)
        if up[k] is not None:
            lo = max(lo, values[up[k]] + 1)
        total = 0
        for v in range(lo, n - below[k] + 1):
            if used[v]:
                continue
            used[v] = True
            values[k] = v
            total += rec(k + 1)
            used[v] = False
        return total

    return rec(0)


def bareiss_det(matrix):
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def count_skew_syt_det(shape):
    """SYT count from the Aitken determinant N! det[1/(lam_i - mu_j - i + j)!]."""
    return aitken_count(shape.outer, shape.inner)


def aitken_count(lam, mu):
    """Aitken determinant for an arbitrary pair of partitions.

    Row i is scaled by (lam_i - i + l)! so every entry becomes an integer
    falling factorial; the scaling is divided back out at the end. When mu
    is not contained in lam the determinant vanishes.
    """
    lam, mu = Partition(lam), Partition(mu)
    l = len(lam)
    n = lam.weight - mu.weight
    if n < 0 or len(mu) > l:
        return 0
    if l == 0:
        return 1
    matrix = []
    scale = 1
    for i in range(1, l + 1):
        top = lam.part(i - 1) - i + l
        row_scale = factorial(top)
        scale *= row_scale
        row = []
        for j in range(1, l + 1):
            k = lam.part(i - 1) - mu.part(j - 1) - i + j
            row.append(row_scale // factorial(k) if k >= 0 else 0)
        matrix.append(row)
    num = factorial(n) * bareiss_det(matrix)
    q, r = divmod(num, scale)
    if r:
        raise ArithmeticError(f"non-integral determinant count for {lam}/{mu}")
    return q


def ordered_partition_count(d, l):
    """Tuples (l_1..l_d) summing to l with 0 <= l_i <= 2i - 1."""
    ways = [1] + [0] * l
    for i in range(1, d + 1):
        cap = 2 * i - 1
        nxt = [0] * (l + 1)
        for total, w in enumerate(ways):
            if w:
                for k in range(min(cap, l - total) + 1):
                    nxt[total + k] += w
        ways = nxt
    return ways[l] if l >= 0 else 0


def dl_outer(c, d):
    """(conj(complement(c)))* in the (d+1) x d box."""
    return dual(conjugate(complement(c, d)), d + 1, d)


def dl_skew_shape(c, d):
    """The skew shape dl_outer(c, d) / c, or None when c does not fit inside.

    The non-nested case happens (e.g. c = (3,3), d = 3) and contributes no
    tableaux.
    """
    outer = dl_outer(c, d)
    c = Partition(c)
    if not outer.contains(c):
        return None
    return SkewShape(outer, c)
