"""Exact integer/rational arithmetic: binomials, integer polynomials, rank.

Everything here works on Python ints and :class:`fractions.Fraction`; no
floating point is used anywhere in the package.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k), taken to be 0 when k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    result = math.factorial(n)
    for p in parts:
        result //= math.factorial(p)
    return result


class IntPolynomial:
    """Polynomial with integer coefficients, ``coeffs[i]`` multiplying t**i.

    Trailing zeros are stripped so equal polynomials have equal coefficient
    tuples; the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def t_minus_one_pow(cls, e: int) -> IntPolynomial:
        """(t - 1)**e, expanded."""
        if e < 0:
            raise ValueError("negative exponent")
        return cls((-1) ** (e - i) * math.comb(e, i) for i in range(e + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = IntPolynomial([1])
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == IntPolynomial(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                term = ("-" if c < 0 else "") + mono
            else:
                term = f"{c}{'*' if mono else ''}{mono}"
            terms.append(term)
        return " + ".join(terms).replace("+ -", "- ")


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q by exact Gaussian elimination on Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    if any(len(row) != ncols for row in m):
        raise ValueError("matrix is not rectangular")
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank]
        for r in range(rank + 1, len(m)):
            factor = m[r][col] / p[col]
            if factor:
                row = m[r]
                for c in range(col, ncols):
                    row[c] -= factor * p[c]
        rank += 1
        if rank == len(m):
            break
    return rank


def as_int(x) -> int:
    """Convert an exact value to int, refusing anything fractional."""
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"{x} is not an integer")
    return x.numerator


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)
