"""Multiplexes M^{d,n}: facet lists, closed-form face and flag numbers.

M^{d,n} has ordered vertices x_0..x_n and facets

    F_i = {x_{i-d+1}, ..., x_{i-1}, x_{i+1}, ..., x_{i+d-1}},

where an index below 0 means x_0 and an index above n means x_n.  With
n = d this is the simplex.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, NamedTuple, Sequence

from .errors import BadParams, NonIntegral
from .exact_math import IntPolynomial, binomial, multinomial
from .face_lattice import FacetList, FlagVector, all_subsets


class MultiplexParams(NamedTuple):
    d: int
    n: int


def _check(d: int, n: int) -> None:
    if not n >= d >= 2:
        raise BadParams(f"multiplex needs n >= d >= 2, got d={d}, n={n}")


def multiplex_facet_positions(d: int, n: int) -> list[frozenset[int]]:
    """Facets of M^{d,n} as sets of vertex positions 0..n (duplicates collapsed)."""
    _check(d, n)
    facets = []
    for i in range(n + 1):
        idx = [j for j in range(i - d + 1, i + d) if j != i]
        facets.append(frozenset(min(max(j, 0), n) for j in idx))
    return facets


def multiplex_facets(d: int, n: int, labels: Sequence[Hashable] | None = None) -> FacetList:
    """Facets of M^{d,n} over positions 0..n, optionally relabelled position -> ``labels[pos]``."""
    facets = multiplex_facet_positions(d, n)
    if labels is None:
        labels = range(n + 1)
    labels = tuple(labels)
    if len(labels) != n + 1:
        raise BadParams(f"need {n + 1} labels, got {len(labels)}")
    return FacetList(d, labels, [[labels[p] for p in f] for f in facets])


def multiplex_f(d: int, n: int, i: int) -> int:
    """Number of i-faces: C(d+1, i+1) + (n-d) C(d-1, i)."""
    _check(d, n)
    if not 0 <= i <= d - 1:
        raise BadParams(f"face dimension {i} outside 0..{d - 1}")
    return binomial(d + 1, i + 1) + (n - d) * binomial(d - 1, i)


def _chain_sum(S: Sequence[int], top: int) -> int:
    """sum_j (s_j + 1)(s_{j+1} - s_j)(s_{j+1} - 1) with s_{r+1} = top."""
    s = list(S) + [top]
    return sum((s[j] + 1) * (s[j + 1] - s[j]) * (s[j + 1] - 1) for j in range(len(S)))


def _parts(S: Sequence[int], top: int) -> list[int]:
    return [S[0] + 1] + [S[j + 1] - S[j] for j in range(len(S) - 1)] + [top - S[-1]]


def multiplex_flag_exact(d: int, n: int, S: Iterable[int]) -> Fraction:
    S = sorted(set(S))
    _check(d, n)
    if any(not 0 <= s < d for s in S):
        raise BadParams(f"{S} is not a subset of 0..{d - 1}")
    if not S:
        return Fraction(1)
    coeff = multinomial(d + 1, _parts(S, d))
    bracket = 1 + Fraction(n - d, (d + 1) * d * (d - 1)) * _chain_sum(S, d)
    return coeff * bracket


def multiplex_flag(d: int, n: int, S: Iterable[int]) -> int:
    """The flag number f_S(M^{d,n}) from the closed form; checked to be integral."""
    value = multiplex_flag_exact(d, n, S)
    if value.denominator != 1:
        raise NonIntegral(f"f_{sorted(S)}(M^{d},{n}) = {value}")
    return value.numerator


def multiplex_flag_vector(d: int, n: int) -> FlagVector:
    return FlagVector(d, {S: multiplex_flag(d, n, S) for S in all_subsets(d)})


def multiplex_g(d: int, n: int) -> IntPolynomial:
    _check(d, n)
    return IntPolynomial([1, n - d])


def multiplex_h(d: int, n: int) -> tuple[int, ...]:
    """Toric h-vector of M^{d,n}: (1, n-d+1, ..., n-d+1, 1)."""
    _check(d, n)
    return (1,) + (n - d + 1,) * (d - 1) + (1,)


def is_order_multiplex(vertices: Sequence[Hashable], facets: Iterable[Iterable[Hashable]]) -> MultiplexParams | None:
    """Recognize a facet family as M^{d,n} in the given vertex order.

    The smallest facet of M^{d,n} is F_0 = {x_0..x_{d-1}}, so d is read off
    the facet sizes and the family compared against the multiplex pattern.
    """
    pos = {v: i for i, v in enumerate(vertices)}
    n = len(vertices) - 1
    try:
        family = {frozenset(pos[v] for v in f) for f in facets}
    except KeyError:
        return None
    if not family:
        return None
    d = min(len(f) for f in family)
    if d < 2 or n < d:
        return None
    if family == set(multiplex_facet_positions(d, n)):
        return MultiplexParams(d, n)
    return None
