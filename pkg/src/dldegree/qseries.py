"""Exact univariate polynomials in q and the closed-form counting functions.

Coefficients are Python ints, stored in ascending order with trailing zeros
stripped, so the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from itertools import zip_longest


class InexactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""

    def __init__(self, num, den, remainder):
        self.num = num
        self.den = den
        self.remainder = remainder
        super().__init__(f"inexact division: ({num}) / ({den}) leaves remainder {remainder}")


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        self.coeffs = _strip(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, k, c=1):
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    @classmethod
    def from_json(cls, data):
        return cls(int(s) for s in data)

    # -- inspection ---------------------------------------------------------

    @property
    def degree(self):
        """Degree in q; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self):
        return self.coeffs == self.coeffs[::-1]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return QPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(c * other for c in self.coeffs)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = QPoly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k):
        """Multiply by q**k."""
        if not self.coeffs:
            return self
        return QPoly((0,) * k + self.coeffs)

    def divmod(self, den):
        """Synthetic division over the integers.

        The divisor must have leading coefficient +-1 unless the quotient
        happens to be integral; a non-integral step raises InexactDivision.
        """
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dc = den.coeffs
        lead = dc[-1]
        dd = len(dc) - 1
        if len(rem) <= dd:
            return QPoly(), self
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            top = rem[k + dd]
            if top == 0:
                continue
            f, r = divmod(top, lead)
            if r:
                raise InexactDivision(self, den, QPoly(rem))
            quot[k] = f
            for j, c in enumerate(dc):
                rem[k + j] -= f * c
        return QPoly(quot), QPoly(rem)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def to_json(self):
        return [str(c) for c in self.coeffs]


ZERO = QPoly()
ONE = QPoly(1)
Q = QPoly((0, 1))


def exact_div(num, den):
    """Quotient num/den, raising InexactDivision if the remainder is nonzero."""
    quot, rem = num.divmod(den)
    if rem:
        raise InexactDivision(num, den, rem)
    return quot


def q_int(n):
    """The q-analogue [n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return QPoly((1,) * n)


def q_double_factorial(d):
    """[2]_q [4]_q ... [2d]_q; equal to 1 for d = 0."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    result = ONE
    for i in range(1, d + 1):
        result = result * q_int(2 * i)
    return result


def isotropic_line_count_formula(n):
    """(1 + q^n)(1 - q^(n-1)) / (1 - q^2) for odd n = 2d + 1."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    d = (n - 1) // 2
    num = (ONE + Q ** n) * (ONE - Q ** (2 * d))
    return exact_div(num, ONE - Q ** 2)


def line_count_formula(k):
    """Number of lines in a k-dimensional space over F_{q^2}: (1 - q^(2k)) / (1 - q^2)."""
    return exact_div(ONE - Q ** (2 * k), ONE - Q ** 2)


def case_b_count_formula(d):
    """q^(2(d-1)) (1 + q^3): codimension-1 special subspaces meeting a fixed W' specially."""
    return (ONE + Q ** 3).shift(2 * (d - 1))
