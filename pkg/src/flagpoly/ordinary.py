"""Ordinary polytopes P^{d,k,n} (odd d = 2m+1 >= 5) and cyclic polytopes.

P^{d,k,n} has n+1 vertices and characteristic k; P^{d,d,n} is the multiplex
M^{d,n} and P^{d,k,k} is the cyclic polytope with k+1 vertices.  Face
numbers come from the vertex-insertion counts alpha_i (new faces) and c_i
(net gain), on top of the cyclic f-vector phi_i.
"""
from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .errors import BadParams, NonIntegral
from .exact_math import binomial
from .face_lattice import FacetList, FlagVector, all_subsets
from .multiplicial import is_gale_subset, chain_coefficients


class OrdinaryParams(NamedTuple):
    d: int
    k: int
    n: int

    @property
    def m(self) -> int:
        return (self.d - 1) // 2


def ordinary_params(d: int, k: int, n: int) -> OrdinaryParams:
    if d < 5 or d % 2 == 0:
        raise BadParams(f"ordinary polytopes need odd d >= 5, got d={d}")
    if not n >= k >= d:
        raise BadParams(f"need n >= k >= d, got d={d}, k={k}, n={n}")
    return OrdinaryParams(d, k, n)


def _check_i(d: int, i: int, lo: int = 0) -> None:
    if not lo <= i <= d - 1:
        raise BadParams(f"face dimension {i} outside {lo}..{d - 1}")


def N(s: int, t: int, u: int) -> int:
    return (binomial(u - t, t) * binomial(s - u + t, u - t)
            + binomial(u - 1 - t, t) * binomial(s - u + t, u - 1 - t))


def alpha_sum(d: int, k: int, i: int) -> int:
    m = (d - 1) // 2
    return sum(2 * N(k - 1, j, i) - N(k - 2, j, i) for j in range(max(0, i - m), i // 2 + 1))


def alpha(d: int, k: int, i: int) -> int:
    """Number of new i-faces when a vertex is appended to P^{d,k,n-1}."""
    ordinary_params(d, k, k)
    _check_i(d, i)
    value = alpha_sum(d, k, i)
    if i <= (d - 1) // 2:
        short = binomial(k - 1, i) + binomial(k - 2, i - 1)
        assert short == value, (d, k, i, short, value)
    return value


def c_sum(d: int, k: int, i: int) -> int:
    m = (d - 1) // 2
    return sum(binomial(m + 1, i - j) * binomial(k - m - 2, j) for j in range(m))


def c(d: int, k: int, i: int) -> int:
    """Net number of i-faces gained per appended vertex: f_i(P^{d,k,n}) - f_i(P^{d,k,n-1})."""
    ordinary_params(d, k, k)
    _check_i(d, i)
    value = c_sum(d, k, i)
    if i <= (d - 1) // 2 - 1:
        assert binomial(k - 1, i) == value, (d, k, i, value)
    return value


def phi_sum(d: int, k: int, i: int) -> int:
    m = d // 2
    total = sum((binomial(j, d - 1 - i) + binomial(d - j, d - 1 - i)) * binomial(k - d + j, j)
                for j in range(m + 1))
    if d % 2 == 0:
        total -= binomial(m, 2 * m - 1 - i) * binomial(k - m, m)
    return total


def phi(d: int, k: int, i: int) -> int:
    """f_i of the cyclic d-polytope with k+1 vertices (any parity of d)."""
    if d < 2 or k < d:
        raise BadParams(f"cyclic polytope needs k >= d >= 2, got d={d}, k={k}")
    _check_i(d, i)
    value = phi_sum(d, k, i)
    if i <= d // 2 - 1:
        assert binomial(k + 1, i + 1) == value, (d, k, i, value)
    return value


def ordinary_f(d: int, k: int, n: int, i: int) -> int:
    ordinary_params(d, k, n)
    _check_i(d, i)
    return phi(d, k, i) + (n - k) * c(d, k, i)


def ordinary_f0(d: int, k: int, n: int, i: int) -> int:
    """f_{0,i}(P^{d,k,n}), the vertex / i-face incidence count."""
    ordinary_params(d, k, n)
    _check_i(d, i, lo=1)
    gain = (i + 1) * c(d, k, i) + phi(d - 1, k - 1, i - 1) - alpha(d, k, i)
    return (i + 1) * phi(d, k, i) + (n - k) * gain


def ordinary_f_vector(d: int, k: int, n: int) -> tuple[int, ...]:
    return tuple(ordinary_f(d, k, n, i) for i in range(d))


def ordinary_f0_vector(d: int, k: int, n: int) -> tuple[int, ...]:
    """(f_{0,1}, ..., f_{0,d-1})."""
    return tuple(ordinary_f0(d, k, n, i) for i in range(1, d))


def ordinary_flag_vector(d: int, k: int, n: int) -> FlagVector:
    f = ordinary_f_vector(d, k, n)
    f0 = (None,) + ordinary_f0_vector(d, k, n)
    counts = {}
    for S in all_subsets(d):
        if not S:
            counts[S] = 1
            continue
        t = S[-1]
        if len(S) == 1:
            counts[S] = f[t]
            continue
        a, b = chain_coefficients(S)
        value = a * f[t] + b * f0[t]
        if value.denominator != 1 or value < 0:
            raise NonIntegral(f"f_{S}(P^{d},{k},{n}) = {value}")
        counts[S] = value.numerator
    return FlagVector(d, counts)


def cyclic_facets(d: int, num_vertices: int) -> FacetList:
    """Facets of the cyclic d-polytope on vertices 0..N-1 by Gale's evenness condition."""
    if not num_vertices >= d + 1 >= 3:
        raise BadParams(f"cyclic polytope needs N >= d+1 >= 3, got d={d}, N={num_vertices}")
    V = tuple(range(num_vertices))
    facets = [Y for Y in combinations(V, d) if is_gale_subset(V, Y)]
    return FacetList(d, V, facets)
