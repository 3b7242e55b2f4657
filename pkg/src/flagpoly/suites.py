"""Verification sweeps: closed forms against brute-force lattices.

Each suite yields :class:`Check` records; the CLI ``verify`` command and
the acceptance tests both consume them.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple

from .face_lattice import (
    FlagVector,
    build_lattice,
    dehn_sommerville_check,
    euler_check,
    eulerian_check,
    flag_vector,
    is_self_dual,
)
from .large_facet import verify as verify_large_facet
from .multiplex import multiplex_f, multiplex_flag, multiplex_flag_vector, multiplex_facets, multiplex_h
from .multiplicial import face_is_order_multiplex, full_flag_from_f, span_rank
from .ordinary import cyclic_facets, ordinary_f, ordinary_f0, ordinary_flag_vector, phi
from .toric_h import A_identity_check, g_shift_check, ordinary_h_vector, toric_h_multiplicial, toric_hg

SUITES = ("multiplex", "ordinary", "largefacet", "toric")


class Check(NamedTuple):
    suite: str
    params: str
    name: str
    ok: bool


def flag_sanity(fv: FlagVector) -> bool:
    """f_empty = 1, f_{0,1} = 2 f_1, f_{d-2,d-1} = 2 f_{d-2}, Euler, all Dehn-Sommerville."""
    d = fv.dim
    ok = fv[()] == 1 and all(v >= 0 for v in fv.counts.values()) and euler_check(fv.f_vector(), d)
    if d >= 2:
        ok = ok and fv[0, 1] == 2 * fv[1] and fv[d - 2, d - 1] == 2 * fv[d - 2]
    return ok and all(dehn_sommerville_check(fv, t) for t in range(1, d))


def h_sanity(h, f0: int) -> bool:
    """h_0 = h_d = 1, h_1 = f_0 - d, symmetry."""
    d = len(h) - 1
    return h[0] == h[d] == 1 and h[1] == f0 - d and tuple(h) == tuple(h)[::-1]


def multiplex_suite(dmax: int = 6, nmax: int = 10) -> Iterator[Check]:
    for d in range(2, dmax + 1):
        for n in range(d, nmax + 1):
            tag = f"d={d},n={n}"
            L = build_lattice(multiplex_facets(d, n))
            fv = flag_vector(L)
            yield Check("multiplex", tag, "flag_vector", fv == multiplex_flag_vector(d, n))
            yield Check("multiplex", tag, "f_vector", fv.f_vector() == tuple(multiplex_f(d, n, i) for i in range(d)))
            yield Check("multiplex", tag, "eulerian", eulerian_check(L))
            yield Check("multiplex", tag, "self_dual", is_self_dual(L))
            yield Check("multiplex", tag, "faces_order_multiplex",
                        all(face_is_order_multiplex(L, j) for j in range(1, L.top)))
            yield Check("multiplex", tag, "sanity", flag_sanity(fv))
            yield Check("multiplex", tag, "flags_from_f", full_flag_from_f(d, fv.f_vector()) == fv)


def ordinary_suite(dims=(5, 7), kspan: int = 6, nspan: int = 6, cyclic_max_vertices: int = 10) -> Iterator[Check]:
    for d in range(3, 7):
        for N in range(d + 1, cyclic_max_vertices + 1):
            L = build_lattice(cyclic_facets(d, N))
            ok = L.f_vector() == tuple(phi(d, N - 1, i) for i in range(d))
            yield Check("ordinary", f"cyclic d={d},N={N}", "f_equals_phi", ok)
    for d in dims:
        flags = []
        for k in range(d, d + kspan + 1):
            for n in range(k, k + nspan + 1):
                tag = f"d={d},k={k},n={n}"
                fv = ordinary_flag_vector(d, k, n)
                flags.append(fv)
                if k == d:
                    ok = all(ordinary_f(d, k, n, i) == multiplex_f(d, n, i) for i in range(d))
                    ok = ok and all(ordinary_f0(d, k, n, i) == multiplex_flag(d, n, (0, i)) for i in range(1, d))
                    yield Check("ordinary", tag, "multiplex_collapse", ok)
                if k == n:
                    ok = all(ordinary_f0(d, k, n, i) == (i + 1) * ordinary_f(d, k, n, i) for i in range(1, d))
                    yield Check("ordinary", tag, "simplicial_collapse", ok)
                    if n + 1 <= cyclic_max_vertices:
                        yield Check("ordinary", tag, "cyclic_lattice",
                                    flag_vector(build_lattice(cyclic_facets(d, n + 1))) == fv)
                yield Check("ordinary", tag, "sanity", flag_sanity(fv))
                yield Check("ordinary", tag, "flags_from_f", full_flag_from_f(d, fv.f_vector()) == fv)
        yield Check("ordinary", f"d={d}", "span_rank", span_rank(flags) == d)


def toric_suite(dmax: int = 6, nmax: int = 10, dims=(5, 7), kspan: int = 6, nspan: int = 6) -> Iterator[Check]:
    for d in range(2, dmax + 1):
        for n in range(d, nmax + 1):
            h, _ = toric_hg(build_lattice(multiplex_facets(d, n)))
            yield Check("toric", f"multiplex d={d},n={n}", "h", h.h == multiplex_h(d, n))
    for d in dims:
        for k in range(d, d + kspan + 1):
            for n in range(k, k + nspan + 1):
                tag = f"d={d},k={k},n={n}"
                closed = ordinary_h_vector(d, k, n)
                f = tuple(ordinary_f(d, k, n, i) for i in range(d))
                f0 = tuple(ordinary_f0(d, k, n, i) for i in range(1, d))
                yield Check("toric", tag, "h_multiplicial", toric_h_multiplicial(d, f, f0) == closed)
                yield Check("toric", tag, "h_sanity", h_sanity(closed.h, f[0]))
                if k == n and n + 1 <= 10:
                    h, _ = toric_hg(build_lattice(cyclic_facets(d, n + 1)))
                    yield Check("toric", tag, "h_lattice", h == closed)
                if k > d:
                    yield Check("toric", tag, "g_shift", g_shift_check(d, k, n))
    for d in (5, 7, 9):
        for k in range(d, d + 9):
            yield Check("toric", f"d={d},k={k}", "A_identity", A_identity_check(d, k))


def largefacet_suite(qmin: int = 5, qmax: int = 60) -> Iterator[Check]:
    for q in range(qmin, qmax + 1):
        report = verify_large_facet(q)
        for name, ok in report["checks"].items():
            yield Check("largefacet", f"q={q}", name, bool(ok))


def run_suite(name: str, **bounds) -> list[Check]:
    dmax = bounds.get("dmax", 6)
    nmax = bounds.get("nmax", 10)
    qmax = bounds.get("qmax", 60)
    if name == "multiplex":
        return list(multiplex_suite(dmax, nmax))
    if name == "ordinary":
        return list(ordinary_suite())
    if name == "toric":
        return list(toric_suite(dmax, nmax))
    if name == "largefacet":
        return list(largefacet_suite(5, qmax))
    if name == "all":
        return [c for s in SUITES for c in run_suite(s, **bounds)]
    raise ValueError(f"unknown suite {name!r}")
