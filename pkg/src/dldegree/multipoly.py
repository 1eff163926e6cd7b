"""Sparse polynomials in x_1..x_d with QPoly coefficients.

Terms live in a dict keyed by exponent tuples. q never appears in an
exponent vector; it is carried entirely by the coefficients.
"""

from __future__ import annotations

from .qseries import InexactDivision, Q, QPoly


class VariableMismatch(ValueError):
    pass


def _coerce_coeff(c):
    if isinstance(c, QPoly):
        return c
    return QPoly(c)


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, c in items:
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise VariableMismatch(f"exponent {exps} has length != {nvars}")
                c = _coerce_coeff(c)
                if exps in self.terms:
                    c = self.terms[exps] + c
                if c:
                    self.terms[exps] = c
                else:
                    self.terms.pop(exps, None)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i, c=1):
        """c * x_{i+1} (i is 0-based)."""
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): c})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # -- inspection ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _check(self, other):
        if self.nvars != other.nvars:
            raise VariableMismatch(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def coefficient_of(self, mono):
        mono = tuple(mono)
        if len(mono) != self.nvars:
            raise VariableMismatch(f"monomial {mono} has length != {self.nvars}")
        return self.terms.get(mono, QPoly())

    def total_degrees(self):
        return {sum(e) for e in self.terms}

    def is_homogeneous(self):
        return len(self.total_degrees()) <= 1

    def sorted_terms(self):
        """Terms in graded-lex order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coerce_coeff(c)
        if not c:
            return MultiPoly(self.nvars)
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items() if v * c})

    def mul(self, other, bound=None):
        """Product; with `bound`, drop terms whose exponent exceeds bound in any variable.

        Dropping is sound for extracting coefficients at or below `bound`
        whenever every later factor has nonnegative exponents.
        """
        self._check(other)
        out = {}
        n = self.nvars
        rng = range(n)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple([e1[i] + e2[i] for i in rng])
                if bound is not None and any(e[i] > bound[i] for i in rng):
                    continue
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return MultiPoly._raw(n, {e: c for e, c in out.items() if c})

    def __mul__(self, other):
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.mul(other)

    def __rmul__(self, other):
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        result = MultiPoly.constant(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def divexact(self, den):
        """Exact quotient self/den using lex-leading-term reduction.

        The leading coefficient of den must divide every leading coefficient
        met along the way; a nonzero remainder raises InexactDivision.
        """
        self._check(den)
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = max(den.terms)
        lead_c = den.terms[lead_e]
        rest = [(e, c) for e, c in den.terms.items() if e != lead_e]
        rem = dict(self.terms)
        quot = {}
        n = self.nvars
        while rem:
            e = max(rem)
            c = rem[e]
            shift = tuple(e[i] - lead_e[i] for i in range(n))
            if min(shift) < 0:
                raise InexactDivision(self, den, MultiPoly._raw(n, rem))
            f, r = c.divmod(lead_c)
            if r:
                raise InexactDivision(self, den, MultiPoly._raw(n, rem))
            quot[shift] = f
            del rem[e]
            for e2, c2 in rest:
                t = tuple(shift[i] + e2[i] for i in range(n))
                s = rem.get(t)
                v = -(f * c2) if s is None else s - f * c2
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MultiPoly._raw(n, quot)

    # -- substitutions ------------------------------------------------------

    def permute(self, perm):
        """Rename variables: x_i -> x_{perm[i]} (0-based)."""
        n = self.nvars
        out = {}
        for e, c in self.terms.items():
            new = [0] * n
            for i, k in enumerate(e):
                new[perm[i]] = k
            out[tuple(new)] = c
        return MultiPoly._raw(n, out)

    def swap(self, i, j):
        perm = list(range(self.nvars))
        perm[i], perm[j] = j, i
        return self.permute(perm)

    def drop_last_var(self):
        """Set x_d = 0 and return a polynomial in d - 1 variables."""
        return MultiPoly._raw(
            self.nvars - 1, {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0}
        )

    def embed(self, nvars, offset=0):
        """View as a polynomial in nvars variables, placing x_1 at position offset."""
        pre = (0,) * offset
        post = (0,) * (nvars - offset - self.nvars)
        return MultiPoly._raw(nvars, {pre + e + post: c for e, c in self.terms.items()})

    def scale_vars_by_q(self):
        """Substitute x_i -> q x_i for every i."""
        return MultiPoly._raw(self.nvars, {e: c.shift(sum(e)) for e, c in self.terms.items()})

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            out.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(out)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self})"

    def to_json(self):
        return [{"exponents": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars, data):
        return cls(nvars, [(tuple(t["exponents"]), QPoly.from_json(t["coeff"])) for t in data])


def vandermonde(d):
    """prod_{i<j} (x_i - x_j) in d variables."""
    result = MultiPoly.constant(d)
    for i in range(d):
        for j in range(i + 1, d):
            result = result * (MultiPoly.var(d, i) - MultiPoly.var(d, j))
    return result


def linear_sum(d):
    """x_1 + ... + x_d."""
    return MultiPoly(d, {tuple(int(k == i) for k in range(d)): 1 for i in range(d)})


def bilinear_product(d, bound=None):
    """prod_{i,j} (q x_i + x_j)."""
    result = MultiPoly.constant(d)
    for i in range(d):
        for j in range(d):
            factor = MultiPoly.var(d, i, Q) + MultiPoly.var(d, j)
            result = result.mul(factor, bound)
    return result


def build_coeff_poly(d, bound=None):
    """(prod_{i,j} (q x_i + x_j)) (x_1 + ... + x_d)^d prod_{i<j} (x_i - x_j).

    Factors are multiplied in that order. `bound` prunes terms that can
    no longer reach a target monomial (see MultiPoly.mul).
    """
    result = bilinear_product(d, bound)
    lin = linear_sum(d)
    for _ in range(d):
        result = result.mul(lin, bound)
    return result.mul(vandermonde(d), bound)


def target_monomial(d):
    """Exponents (2d, 2d-1, ..., d+1)."""
    return tuple(2 * d - i for i in range(d))


def degree_via_coeff(d):
    """Coefficient of x_1^{2d} x_2^{2d-1} ... x_d^{d+1} in build_coeff_poly(d)."""
    if d < 1:
        raise ValueError("d must be positive")
    target = target_monomial(d)
    return build_coeff_poly(d, bound=target).coefficient_of(target)
