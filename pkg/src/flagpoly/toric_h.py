"""Toric h- and g-vectors.

For an Eulerian lattice of rank d+1 the h-polynomial is

    h(P, t) = sum over faces G != P of g(G, t) (t - 1)^(d - 1 - dim G),

with g(empty) = h(empty) = 1, h_i the coefficient of t^(d-i), and g the
truncation g_0 = h_0, g_i = h_i - h_{i-1} for i <= d/2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import AsymmetricResult, BadParams, NotEulerian
from .exact_math import IntPolynomial, binomial
from .face_lattice import FaceLattice, eulerian_check
from .ordinary import alpha, c, ordinary_params, phi


@dataclass(frozen=True)
class HVector:
    d: int
    h: tuple

    def __post_init__(self):
        if len(self.h) != self.d + 1:
            raise ValueError(f"h-vector of a {self.d}-polytope needs {self.d + 1} entries")

    @classmethod
    def from_polynomial(cls, d: int, p: IntPolynomial) -> HVector:
        return cls(d, tuple(p.coefficient(d - i) for i in range(d + 1)))

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.h[self.d - j] for j in range(self.d + 1))

    def is_symmetric(self) -> bool:
        return self.h == self.h[::-1]

    def g(self) -> GVector:
        return GVector(self.d, g_from_h(self.h))


@dataclass(frozen=True)
class GVector:
    d: int
    g: tuple

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.g)


def g_from_h(h: Sequence[int]) -> tuple[int, ...]:
    d = len(h) - 1
    return (h[0],) + tuple(h[i] - h[i - 1] for i in range(1, d // 2 + 1))


def _g_poly_from_h_poly(e: int, p: IntPolynomial) -> IntPolynomial:
    h = [p.coefficient(e - i) for i in range(e + 1)]
    return IntPolynomial(g_from_h(h))


def toric_hg(L: FaceLattice, check: bool = True, multiplicial_cache: bool = False) -> tuple[HVector, GVector]:
    """Run the toric recursion bottom-up over every face of ``L``.

    With ``multiplicial_cache`` the g-polynomial of a face is memoized by
    (dimension, vertex count), which is only valid when every proper face
    is a multiplex.
    """
    if check and not eulerian_check(L):
        raise NotEulerian("toric h-vector needs an Eulerian lattice")
    powers = [IntPolynomial.t_minus_one_pow(e) for e in range(L.dim + 2)]
    g: list[IntPolynomial | None] = [None] * len(L.faces)
    g[0] = IntPolynomial([1])
    by_type: dict[tuple[int, int], IntPolynomial] = {}
    h_top = None
    for j in range(1, len(L.faces)):
        e = L.rank[j]
        key = (e, L.faces[j].bit_count())
        if multiplicial_cache and j != L.top and key in by_type:
            g[j] = by_type[key]
            continue
        h = IntPolynomial()
        for i in L.below[j]:
            h = h + g[i] * powers[e - 1 - L.rank[i]]
        if j == L.top:
            h_top = h
        g[j] = _g_poly_from_h_poly(e, h)
        by_type[key] = g[j]
    hv = HVector.from_polynomial(L.dim, h_top)
    if not hv.is_symmetric():
        raise AsymmetricResult(f"h = {hv.h} is not symmetric")
    return hv, hv.g()


def toric_h_multiplicial(d: int, f: Sequence[int], f0: Sequence[int]) -> HVector:
    """h-vector of a multiplicial d-polytope from f = (f_0..f_{d-1}) and f0 = (f_{0,1}..f_{0,d-1}).

    Uses g(M^{e,v}) = 1 + (v - e) t for every proper face.
    """
    if d < 2:
        raise BadParams("d must be at least 2")
    if len(f) != d or len(f0) != d - 1:
        raise BadParams("f needs d entries and f0 needs d-1 entries")
    tm1 = IntPolynomial.t_minus_one_pow
    t = IntPolynomial([0, 1])
    p = tm1(d) + f[0] * tm1(d - 1)
    for i in range(1, d):
        p = p + f[i] * tm1(d - 1 - i) + (f0[i - 1] - (i + 1) * f[i]) * (t * tm1(d - 1 - i))
    hv = HVector.from_polynomial(d, p)
    if p.degree > d or not hv.is_symmetric():
        raise AsymmetricResult(f"h = {hv.h} from f={tuple(f)}, f0={tuple(f0)} is not symmetric")
    return hv


def ordinary_h(d: int, k: int, n: int, i: int) -> int:
    ordinary_params(d, k, n)
    if not 0 <= i <= d:
        raise BadParams(f"index {i} outside 0..{d}")
    m = (d - 1) // 2
    if i > m:
        i = d - i
    return binomial(k - d + i, i) + (n - k) * binomial(k - d + i - 1, i - 1)


def ordinary_h_vector(d: int, k: int, n: int) -> HVector:
    return HVector(d, tuple(ordinary_h(d, k, n, i) for i in range(d + 1)))


def A_polynomial(d: int, k: int) -> IntPolynomial:
    """Per-vertex increment (h(P^{d,k,n}) - h(P^{d,k,k})) / (n - k) as a polynomial in t."""
    ordinary_params(d, k, k)
    tm1 = IntPolynomial.t_minus_one_pow
    t = IntPolynomial([0, 1])
    A = IntPolynomial()
    for i in range(d):
        A = A + c(d, k, i) * tm1(d - 1 - i)
    for i in range(1, d):
        A = A + (phi(d - 1, k - 1, i - 1) - alpha(d, k, i)) * (t * tm1(d - 1 - i))
    return A


def A_identity_check(d: int, k: int) -> bool:
    """Coefficient of t^j in A equals C(k-j-1, d-j-1) for every j >= m+1."""
    A = A_polynomial(d, k)
    m = (d - 1) // 2
    return all(A.coefficient(j) == binomial(k - j - 1, d - j - 1) for j in range(m + 1, d + 1))


def g_shift_check(d: int, k: int, n: int) -> bool:
    """g_i(P^{d,k,n}) == h_i(P^{d,k-1,n-1}) for 0 <= i <= m."""
    if k < d + 1:
        raise BadParams(f"need k >= d+1, got d={d}, k={k}")
    g = ordinary_h_vector(d, k, n).g().g
    h = ordinary_h_vector(d, k - 1, n - 1).h
    return all(g[i] == h[i] for i in range(len(g)))
