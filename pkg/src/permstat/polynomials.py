"""Exact integer polynomials in one indeterminate, plus Eulerian polynomials,
Gaussian binomials, q-factorials and the nabla operator."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import InexactDivision, KExceedsN


class IntPolynomial:
    """Dense polynomial with Python-int coefficients, ascending by degree.

    The zero polynomial is stored as ``(0,)``; otherwise the top coefficient
    is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = (0,)):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs) if cs else (0,)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "IntPolynomial":
        """Build from ``{exponent: coefficient}``, e.g. a tally of statistic values."""
        if not counts:
            return cls()
        cs = [0] * (max(counts) + 1)
        for e, c in counts.items():
            cs[e] += c
        return cls(cs)

    @staticmethod
    def _lift(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    # -- structure ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return -1 if self.is_zero() else len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def coefficient(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, factor: int) -> "IntPolynomial":
        return IntPolynomial(factor * c for c in self.coeffs)

    def shift(self, degree: int) -> "IntPolynomial":
        """Multiply by ``x**degree``."""
        if self.is_zero():
            return self
        return IntPolynomial([0] * degree + list(self.coeffs))

    def derivative(self, order: int = 1) -> "IntPolynomial":
        cs = list(self.coeffs)
        for _ in range(order):
            cs = [i * c for i, c in enumerate(cs)][1:] or [0]
        return IntPolynomial(cs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- rendering ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        """Descending human-readable form, e.g. ``x^4 + 2x^3 + 2x + 1``."""
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                num = "" if mag == 1 else str(mag)
                body = num + (var if e == 1 else f"{var}^{e}")
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "IntPolynomial":
        return cls(int(c) for c in data["coeffs"])


X = IntPolynomial.x()
ONE = IntPolynomial((1,))


@lru_cache(maxsize=None)
def eulerian(n: int) -> IntPolynomial:
    """Descent distribution over S_n: ``A(n, m) = (m+1)A(n-1, m) + (n-m)A(n-1, m-1)``."""
    if n < 1:
        raise ValueError(f"eulerian needs n >= 1, got {n}")
    row = [1]
    for size in range(2, n + 1):
        prev = row + [0]
        row = [
            (m + 1) * prev[m] + ((size - m) * prev[m - 1] if m else 0)
            for m in range(size)
        ]
    return IntPolynomial(row)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> IntPolynomial:
    if n < 0 or k < 0:
        raise ValueError("q_binomial needs nonnegative arguments")
    if k > n:
        raise KExceedsN(f"k={k} exceeds n={n}")
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def q_integer(j: int) -> IntPolynomial:
    """``1 + x + ... + x^(j-1)``."""
    return IntPolynomial([1] * j)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    out = ONE
    for j in range(2, n + 1):
        out = out * q_integer(j)
    return out


def falling(k: int, j: int) -> int:
    """``k (k-1) ... (k-j+1)``."""
    out = 1
    for i in range(j):
        out *= k - i
    return out


def nabla(k: int, p: IntPolynomial) -> IntPolynomial:
    """Apply ``sum_{j=0}^{k} (j+1)/(k)_j d^j/dx^j``.

    The result must have integer coefficients; otherwise :class:`InexactDivision`.
    """
    if k < 1:
        raise ValueError(f"nabla needs k >= 1, got {k}")
    acc = [Fraction(0)] * len(p.coeffs)
    deriv = p
    for j in range(k + 1):
        if deriv.is_zero():
            break
        weight = Fraction(j + 1, falling(k, j))
        for e, c in enumerate(deriv.coeffs):
            acc[e] += weight * c
        deriv = deriv.derivative()
    if any(c.denominator != 1 for c in acc):
        raise InexactDivision(f"nabla_{k} of {p.pretty()} is not integral")
    return IntPolynomial(int(c) for c in acc)
