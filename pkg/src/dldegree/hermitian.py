"""Brute-force hermitian geometry over F_{q^2} for small q.

Field elements are ints 0..q^2-1 (base-p digit vectors of polynomials modulo
a Conway polynomial). Vectors are tuples of field elements, subspaces are
reduced row-echelon tuples of rows.
"""

from __future__ import annotations

from itertools import product
from math import prod

# Conway polynomials for F_{q^2} = F_{p^k}, coefficients low to high (monic).
CONWAY = {
    2: (2, (1, 1, 1)),           # F_4:  x^2 + x + 1
    3: (3, (2, 2, 1)),           # F_9:  x^2 + 2x + 2
    4: (2, (1, 1, 0, 0, 1)),     # F_16: x^4 + x + 1
    5: (5, (2, 4, 1)),           # F_25: x^2 + 4x + 2
}

DEFAULT_BUDGET = 60_000


class BudgetExceeded(RuntimeError):
    pass


class FieldError(ValueError):
    pass


class FiniteField:
    """F_{q^2} with lookup tables and the conjugation x -> x^q."""

    def __init__(self, q):
        if q not in CONWAY:
            raise FieldError(f"unsupported q={q}; choose from {sorted(CONWAY)}")
        p, modulus = CONWAY[q]
        k = len(modulus) - 1
        self.q = q
        self.p = p
        self.size = size = p ** k

        def digits(x):
            out = []
            for _ in range(k):
                x, r = divmod(x, p)
                out.append(r)
            return out

        def undigits(ds):
            return sum(c * p ** i for i, c in enumerate(ds))

        def polymul(a, b):
            prod_ = [0] * (2 * k - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        prod_[i + j] = (prod_[i + j] + x * y) % p
            for deg in range(2 * k - 2, k - 1, -1):
                c = prod_[deg]
                if c:
                    for i, m in enumerate(modulus):
                        prod_[deg - k + i] = (prod_[deg - k + i] - c * m) % p
            return prod_[:k]

        digs = [digits(x) for x in range(size)]
        self.add = [[undigits([(a + b) % p for a, b in zip(da, db)]) for db in digs] for da in digs]
        self.mul = [[undigits(polymul(da, db)) for db in digs] for da in digs]
        self.neg = [undigits([(-a) % p for a in da]) for da in digs]
        self.sub = [[self.add[a][self.neg[b]] for b in range(size)] for a in range(size)]
        self.inv = [0] * size
        for a in range(1, size):
            for b in range(1, size):
                if self.mul[a][b] == 1:
                    self.inv[a] = b
                    break
            else:
                raise FieldError(f"{a} has no inverse; modulus is not irreducible")
        self.conj = [self.pow(a, q) for a in range(size)]
        self._check_axioms()

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul[r][a]
        return r

    def _check_axioms(self):
        n = self.size
        mul, add = self.mul, self.add
        for a in range(n):
            if add[a][0] != a or mul[a][1] != a or add[a][self.neg[a]] != 0:
                raise FieldError("identity/negation tables are broken")
            for b in range(n):
                if mul[a][b] != mul[b][a] or add[a][b] != add[b][a]:
                    raise FieldError("tables are not commutative")
                if a and b and mul[a][b] == 0:
                    raise FieldError("zero divisors present")
        conj = self.conj
        for a in range(n):
            if conj[conj[a]] != a:
                raise FieldError("conjugation is not an involution")
            for b in range(n):
                if conj[add[a][b]] != add[conj[a]][conj[b]] or conj[mul[a][b]] != mul[conj[a]][conj[b]]:
                    raise FieldError("conjugation is not a field automorphism")
        fixed = sum(1 for a in range(n) if conj[a] == a)
        if fixed != self.q:
            raise FieldError(f"conjugation fixes {fixed} elements, expected {self.q}")

    def norm(self, a):
        return self.mul[a][self.conj[a]]


_FIELDS = {}


def field(q):
    if q not in _FIELDS:
        _FIELDS[q] = FiniteField(q)
    return _FIELDS[q]


class HermSpace:
    """F_{q^2}^n with the standard form h(x, y) = sum x_i conj(y_i)."""

    def __init__(self, q, n, budget=DEFAULT_BUDGET):
        self.F = field(q)
        self.q = q
        self.n = n
        self.budget = budget

    # -- vectors --------------------------------------------------------------

    def form(self, x, y):
        F = self.F
        acc = 0
        for a, b in zip(x, y):
            acc = F.add[acc][F.mul[a][F.conj[b]]]
        return acc

    def is_isotropic(self, x):
        return self.form(x, x) == 0

    def _guard(self, count):
        if count > self.budget:
            raise BudgetExceeded(
                f"enumeration of {count} vectors exceeds budget {self.budget} (q={self.q}, n={self.n})"
            )

    def vectors(self):
        self._guard(self.F.size ** self.n)
        return product(range(self.F.size), repeat=self.n)

    def projective_points(self):
        """Nonzero vectors whose first nonzero coordinate is 1."""
        self._guard(self.F.size ** self.n)
        size, n = self.F.size, self.n
        for lead in range(n):
            for tail in product(range(size), repeat=n - lead - 1):
                yield (0,) * lead + (1,) + tail

    # -- linear algebra -------------------------------------------------------

    def rref(self, rows):
        """Reduced row-echelon form with zero rows removed."""
        F = self.F
        m = [list(r) for r in rows]
        out = []
        col = 0
        n = self.n
        r = 0
        while r < len(m) and col < n:
            piv = next((i for i in range(r, len(m)) if m[i][col]), None)
            if piv is None:
                col += 1
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = F.inv[m[r][col]]
            m[r] = [F.mul[inv][v] for v in m[r]]
            for i in range(len(m)):
                if i != r and m[i][col]:
                    f = m[i][col]
                    m[i] = [F.sub[a][F.mul[f][b]] for a, b in zip(m[i], m[r])]
            r += 1
            col += 1
        for row in m[:r]:
            out.append(tuple(row))
        return tuple(out)

    def subspace(self, rows):
        return Subspace(self, self.rref(rows))

    def whole(self):
        return self.subspace([tuple(int(i == j) for j in range(self.n)) for i in range(self.n)])

    def zero(self):
        return Subspace(self, ())

    def nullspace(self, rows):
        """Basis of {x : sum_j rows[i][j] x_j = 0 for all i}."""
        F = self.F
        n = self.n
        red = self.rref(rows)
        pivots = [next(j for j, v in enumerate(row) if v) for row in red]
        free = [j for j in range(n) if j not in pivots]
        basis = []
        for f in free:
            x = [0] * n
            x[f] = 1
            for row, pc in zip(red, pivots):
                x[pc] = F.neg[row[f]]
            basis.append(tuple(x))
        return basis

    def grassmannian(self, k):
        """All k-dimensional subspaces, as RREF matrices built from pivot patterns."""
        from itertools import combinations

        F, n = self.F, self.n
        total = 0
        for pivots in combinations(range(n), k):
            free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivots]
            total += F.size ** len(free)
        self._guard(total)
        for pivots in combinations(range(n), k):
            free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivots]
            for vals in product(range(F.size), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), v in zip(free, vals):
                    rows[i][j] = v
                yield Subspace(self, tuple(tuple(r) for r in rows))


class Subspace:
    """A subspace stored by its reduced row-echelon basis."""

    __slots__ = ("basis", "space")

    def __init__(self, space, basis):
        self.space = space
        self.basis = basis

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Subspace({[list(r) for r in self.basis]})"

    def to_json(self):
        return [list(r) for r in self.basis]

    def __add__(self, other):
        return self.space.subspace(self.basis + other.basis)

    def contains(self, other):
        return (self + other).dim == self.dim

    def contains_vector(self, v):
        return self.space.rref(self.basis + (tuple(v),)).__len__() == self.dim

    def intersect(self, other):
        """Solve a*U = b*V directly; independent of the orthogonal complement."""
        hs = self.space
        F = hs.F
        U, V = self.basis, other.basis
        if not U or not V:
            return hs.zero()
        k = len(U) + len(V)
        # columns of the system are the ambient coordinates, unknowns are (a, b)
        cols = [tuple(U[i][j] for i in range(len(U))) + tuple(V[i][j] for i in range(len(V)))
                for j in range(hs.n)]
        sol = _nullspace_general(F, cols, k)
        vecs = []
        for s in sol:
            a = s[: len(U)]
            v = [0] * hs.n
            for c, row in zip(a, U):
                if c:
                    v = [F.add[x][F.mul[c][y]] for x, y in zip(v, row)]
            vecs.append(tuple(v))
        return hs.subspace(vecs)

    def orth(self):
        """Left orthogonal complement {x : h(x, u) = 0 for all u}."""
        hs = self.space
        F = hs.F
        if not self.basis:
            return hs.whole()
        rows = [tuple(F.conj[v] for v in u) for u in self.basis]
        return hs.subspace(hs.nullspace(rows))

    def is_totally_isotropic(self):
        hs = self.space
        return all(hs.form(u, v) == 0 for u in self.basis for v in self.basis)

    def is_special(self):
        return self.contains(self.orth())

    def vectors(self):
        F = self.space.F
        for coeffs in product(range(F.size), repeat=self.dim):
            v = [0] * self.space.n
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [F.add[x][F.mul[c][y]] for x, y in zip(v, row)]
            yield tuple(v)


def _nullspace_general(F, rows, width):
    """Nullspace for a system whose rows have `width` entries."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv[m[r][col]]
        m[r] = [F.mul[inv][v] for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [F.sub[a][F.mul[f][b]] for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    basis = []
    for f in (c for c in range(width) if c not in pivots):
        x = [0] * width
        x[f] = 1
        for row, pc in zip(m[:r], pivots):
            x[pc] = F.neg[row[f]]
        basis.append(tuple(x))
    return basis


# -- counts -------------------------------------------------------------------


def isotropic_points(hs):
    return [x for x in hs.projective_points() if hs.is_isotropic(x)]


def count_isotropic_lines(n, q, budget=DEFAULT_BUDGET):
    """Number of isotropic lines in the standard n-dimensional hermitian space."""
    hs = HermSpace(q, n, budget)
    return sum(1 for x in hs.projective_points() if hs.is_isotropic(x))


def totally_isotropic_subspaces(hs, r):
    """All totally isotropic r-dimensional subspaces, grown one isotropic vector at a time."""
    if r == 0:
        return [hs.zero()]
    points = isotropic_points(hs)
    level = {hs.subspace([p]) for p in points}
    for _ in range(r - 1):
        nxt = set()
        for T in level:
            perp = T.orth()
            for p in points:
                if perp.contains_vector(p) and not T.contains_vector(p):
                    nxt.add(hs.subspace(T.basis + (p,)))
        level = nxt
    return sorted(level, key=lambda s: s.basis)


def enumerate_special_subspaces(r, hs):
    """Codimension-r subspaces W with W^perp inside W, via W = T^perp for T totally isotropic."""
    if r == 0:
        return [hs.whole()]
    return [T.orth() for T in totally_isotropic_subspaces(hs, r)]


def count_dl_points(d, q, budget=DEFAULT_BUDGET):
    """(d+1)-dimensional U in F_{q^2}^{2d+1} with U^perp inside U."""
    if d == 0:
        return 1
    hs = HermSpace(q, 2 * d + 1, budget)
    if d == 1:
        return sum(1 for U in hs.grassmannian(2) if U.contains(U.orth()))
    return sum(1 for U in enumerate_special_subspaces(d, hs) if U.dim == d + 1)


def fermat_point_count(q, budget=DEFAULT_BUDGET):
    """Projective points of x^{q+1} + y^{q+1} + z^{q+1} = 0 over F_{q^2}."""
    hs = HermSpace(q, 3, budget)
    F = hs.F
    powers = [F.pow(a, q + 1) for a in range(F.size)]
    count = 0
    for x, y, z in hs.projective_points():
        if F.add[F.add[powers[x]][powers[y]]][powers[z]] == 0:
            count += 1
    return count


def gl_order(k, size):
    """|GL_k(F)| for a field with `size` elements."""
    return prod(size ** k - size ** i for i in range(k))


def count_isotropic_frames(hs, k):
    """Ordered k-tuples of independent, pairwise orthogonal isotropic vectors.

    Divided by |GL_k| this counts totally isotropic k-subspaces without
    any subspace deduplication.
    """
    vecs = [v for v in hs.vectors() if any(v) and hs.is_isotropic(v)]

    def rec(chosen, span):
        if len(chosen) == k:
            return 1
        total = 0
        for v in vecs:
            if all(hs.form(v, u) == 0 for u in chosen) and v not in span:
                new_span = set(span)
                F = hs.F
                for c in range(1, F.size):
                    cv = tuple(F.mul[c][x] for x in v)
                    for s in span:
                        new_span.add(tuple(F.add[a][b] for a, b in zip(s, cv)))
                total += rec(chosen + [v], new_span)
        return total

    return rec([], {(0,) * hs.n})


def classify_pair(W, Wp):
    """'a' if Wp lies in W, 'b' if not and W cap Wp is special, else 'c'."""
    if W.contains(Wp):
        return "a"
    if W.intersect(Wp).is_special():
        return "b"
    return "c"


def classify_pairs(d, q, budget=DEFAULT_BUDGET, w_prime=None):
    """Case counts (a, b, c) over codimension-1 special W for one fixed W' of codimension d-1."""
    if d < 2:
        raise ValueError("d must be at least 2")
    hs = HermSpace(q, 2 * d + 1, budget)
    hyper = enumerate_special_subspaces(1, hs)
    if w_prime is None:
        w_prime = enumerate_special_subspaces(d - 1, hs)[0]
    counts = {"a": 0, "b": 0, "c": 0}
    for W in hyper:
        counts[classify_pair(W, w_prime)] += 1
    return counts["a"], counts["b"], counts["c"]


def classify_pairs_all(d, q, budget=DEFAULT_BUDGET):
    """classify_pairs for every W'; returns the set of distinct count triples."""
    hs = HermSpace(q, 2 * d + 1, budget)
    return {classify_pairs(d, q, budget, Wp) for Wp in enumerate_special_subspaces(d - 1, hs)}
