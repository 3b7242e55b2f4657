"""Multiplicial polytopes: recognition, and flag numbers from face numbers.

For a multiplicial d-polytope every flag number is a rational linear
combination of 1, f_0, ..., f_{d-2}.  :func:`reduction_table` derives those
combinations by downward induction on f_{0,t}, using that each t-face is a
multiplex together with the generalized Dehn-Sommerville relations, and
:func:`full_flag_from_f` evaluates them.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Iterable, Sequence

from .errors import DegenerateDenominator, NonIntegral
from .exact_math import matrix_rank, multinomial
from .face_lattice import (
    FaceLattice,
    FacetList,
    FlagVector,
    all_subsets,
    build_lattice,
    euler_check,
    is_isomorphic,
)
from .multiplex import _chain_sum, is_order_multiplex, multiplex_facets


def is_gale_subset(V: Sequence[Hashable], Y: Iterable[Hashable]) -> bool:
    """Between any two elements of V outside Y lie evenly many elements of Y."""
    Y = set(Y)
    outside = [i for i, v in enumerate(V) if v not in Y]
    return all((b - a - 1) % 2 == 0 for a, b in zip(outside, outside[1:]))


def is_gale_polytope(p: FacetList) -> bool:
    return all(is_gale_subset(p.vertices, f) for f in p.facets)


def is_order_multiplicial(p: FacetList | FaceLattice) -> bool:
    """Every proper face is a multiplex in the vertex order of ``p``."""
    L = p if isinstance(p, FaceLattice) else build_lattice(p)
    return all(face_is_order_multiplex(L, j) for j in range(1, L.top))


def face_is_order_multiplex(L: FaceLattice, j: int) -> bool:
    r = L.rank[j]
    verts = L.labels(j)
    if r <= 1:
        return len(verts) == r + 1
    params = is_order_multiplex(verts, [L.labels(i) for i in L.lower[j]])
    return params is not None and params.d == r


@lru_cache(maxsize=None)
def _reference_multiplex(e: int, n: int) -> FaceLattice:
    return build_lattice(multiplex_facets(e, n))


def is_weakly_multiplicial(L: FaceLattice) -> bool:
    """Every proper face is isomorphic to the multiplex with its dimension and vertex count."""
    for j in range(1, L.top):
        r = L.rank[j]
        v = L.faces[j].bit_count()
        if r <= 1:
            if v != r + 1:
                return False
            continue
        if v - 1 < r:
            return False
        if not is_isomorphic(L.sublattice(j), _reference_multiplex(r, v - 1)):
            return False
    return True


def chain_coefficients(S: Iterable[int]) -> tuple[Fraction, Fraction]:
    """(a, b) with f_S = a f_t + b f_{0,t} on multiplicial polytopes, t = max S."""
    S = sorted(set(S))
    if not S:
        raise ValueError("S must be nonempty")
    if len(S) == 1:
        return Fraction(1), Fraction(0)
    t = S[-1]
    head = S[:-1]
    coeff = multinomial(t + 1, [head[0] + 1] + [head[j + 1] - head[j] for j in range(len(head) - 1)] + [t - head[-1]])
    sigma = _chain_sum(head, t)
    if sigma == 0:
        return Fraction(coeff), Fraction(0)
    if t <= 1:
        raise DegenerateDenominator(f"t={t} for S={S}")
    a = coeff * (1 - Fraction(sigma, t * (t - 1)))
    b = coeff * Fraction(sigma, (t + 1) * t * (t - 1))
    return a, b


def flag_from_face_data(S: Iterable[int], f_t, f_0t) -> Fraction:
    a, b = chain_coefficients(S)
    return a * f_t + b * f_0t


# A reduction row is a tuple of Fractions over the basis (1, f_0, ..., f_{d-2}).

def _unit(d: int, k: int) -> tuple[Fraction, ...]:
    row = [Fraction(0)] * d
    row[k] = Fraction(1)
    return tuple(row)


def _combine(*terms) -> tuple[Fraction, ...]:
    """Linear combination of (coefficient, row) pairs."""
    out = [Fraction(0)] * len(terms[0][1])
    for c, row in terms:
        if c:
            for k, x in enumerate(row):
                out[k] += c * x
    return tuple(out)


@lru_cache(maxsize=None)
def reduction_table(d: int) -> dict[tuple[int, ...], tuple[Fraction, ...]]:
    """Rows expressing every f_S over (1, f_0, ..., f_{d-2}).

    f_{d-1} is eliminated with Euler's relation; f_{0,d-1} = 2 f_{d-2};
    then for t = d-2 down to 1, f_{0,t} = f_{t-1,t} is solved from the
    Dehn-Sommerville relation at the (t-1)-faces.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    f_row: dict[int, tuple[Fraction, ...]] = {i: _unit(d, i + 1) for i in range(d - 1)}
    sign = (-1) ** (d - 1)
    f_row[d - 1] = _combine(
        (sign * (1 - (-1) ** d), _unit(d, 0)),
        *[(-sign * (-1) ** i, f_row[i]) for i in range(d - 1)],
    )

    f0_row: dict[int, tuple[Fraction, ...]] = {d - 1: _combine((2, f_row[d - 2]))}

    def pair_row(s: int, k: int) -> tuple[Fraction, ...]:
        a, b = chain_coefficients((s, k))
        return _combine((a, f_row[k]), (b, f0_row[k]))

    for t in range(d - 2, 0, -1):
        # f_{t-1,t} = (1 - (-1)^{d-t}) f_{t-1} + sum_{k>t} (-1)^{k-t+1} f_{t-1,k}
        terms = [(1 - (-1) ** (d - t), f_row[t - 1])]
        terms += [((-1) ** (k - t + 1), pair_row(t - 1, k)) for k in range(t + 1, d)]
        f0_row[t] = _combine(*terms)

    table = {}
    for S in all_subsets(d):
        if not S:
            table[S] = _unit(d, 0)
        elif len(S) == 1:
            table[S] = f_row[S[0]]
        else:
            t = S[-1]
            a, b = chain_coefficients(S)
            table[S] = _combine((a, f_row[t]), (b, f0_row[t]))
    return table


def full_flag_from_f(d: int, f: Sequence[int]) -> FlagVector:
    """The full flag vector of a multiplicial d-polytope with f-vector ``f``."""
    f = tuple(f)
    if len(f) != d:
        raise ValueError(f"f-vector must have length {d}")
    if not euler_check(f, d):
        raise NonIntegral(f"{f} violates Euler's relation")
    basis = (1,) + f[: d - 1]
    counts = {}
    for S, row in reduction_table(d).items():
        value = sum(c * x for c, x in zip(row, basis))
        if value.denominator != 1 or value < 0:
            raise NonIntegral(f"f_{S} = {value} for f = {f}")
        counts[S] = value.numerator
    return FlagVector(d, counts)


def span_rank(flags: Sequence[FlagVector]) -> int:
    """Dimension of the linear span of the flag vectors (f_empty = 1 included)."""
    if not flags:
        return 0
    d = flags[0].dim
    if any(fv.dim != d for fv in flags):
        raise ValueError("flag vectors of mixed dimension")
    return matrix_rank([fv.as_row() for fv in flags])
