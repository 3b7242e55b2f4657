"""Face lattices of combinatorial polytopes given by facet vertex sets.

Faces are stored as bitmasks over the ordered vertex list, so containment
and intersection are integer operations.  A :class:`FaceLattice` keeps its
faces sorted by rank, with bottom (the empty face) at index 0 and top (the
whole polytope) last.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_node_match

from .errors import EmptyInput, NotGraded, UnknownVertex


@dataclass(frozen=True)
class FacetList:
    """A combinatorial polytope: dimension, ordered vertices, facet vertex sets.

    The vertex order is significant (order-multiplicial and Gale checks read
    it).  Facets are normalized to frozensets.
    """

    dim: int
    vertices: tuple
    facets: tuple

    def __init__(self, dim: int, vertices: Iterable[Hashable], facets: Iterable[Iterable[Hashable]]):
        vertices = tuple(vertices)
        facets = tuple(frozenset(f) for f in facets)
        if len(set(vertices)) != len(vertices):
            raise ValueError("vertex labels must be distinct")
        vset = set(vertices)
        for f in facets:
            if not f or not f <= vset or f == vset:
                raise ValueError(f"facet {sorted(f)} is not a nonempty proper subset of the vertices")
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "facets", facets)

    def sorted_facets(self) -> list[list]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        keyed = [sorted(f, key=pos.__getitem__) for f in self.facets]
        return sorted(keyed, key=lambda f: [pos[v] for v in f])


@dataclass(frozen=True)
class FlagVector:
    """Flag numbers f_S for every S subset of {0, ..., dim-1}.

    ``counts`` is keyed by sorted tuples of dimensions; ``fv[0, 3]``,
    ``fv[(0, 3)]`` and ``fv["0,3"]`` all read the same entry.
    """

    dim: int
    counts: dict

    def __getitem__(self, S) -> int:
        return self.counts[_as_key(S)]

    def __eq__(self, other):
        if not isinstance(other, FlagVector):
            return NotImplemented
        return self.dim == other.dim and self.counts == other.counts

    def f_vector(self) -> tuple[int, ...]:
        return tuple(self.counts[(i,)] for i in range(self.dim))

    def as_row(self) -> list[int]:
        """Entries in the order of :func:`all_subsets`."""
        return [self.counts[S] for S in all_subsets(self.dim)]

    def to_json(self) -> dict[str, int]:
        return {encode_subset(S): v for S, v in self.counts.items()}


def _as_key(S) -> tuple[int, ...]:
    if isinstance(S, str):
        return decode_subset(S)
    if isinstance(S, int):
        return (S,)
    return tuple(sorted(S))


def encode_subset(S: Sequence[int]) -> str:
    return ",".join(str(s) for s in sorted(S))


def decode_subset(key: str) -> tuple[int, ...]:
    return tuple(sorted(int(x) for x in key.split(","))) if key else ()


def all_subsets(d: int) -> list[tuple[int, ...]]:
    """All subsets of {0..d-1}, ordered by bitmask value."""
    return [tuple(i for i in range(d) if mask >> i & 1) for mask in range(1 << d)]


class FaceLattice:
    """Graded lattice of faces, ranks -1..dim.

    Built with :func:`build_lattice` or :meth:`from_faces`; construction
    computes cover relations and longest-chain ranks, then rejects anything
    that is not graded with singleton atoms.
    """

    def __init__(self, dim: int, vertices: Sequence[Hashable], masks: Iterable[int]):
        self.dim = dim
        self.vertices = tuple(vertices)
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        full = (1 << len(self.vertices)) - 1
        masks = set(masks) | {0, full}
        order = sorted(masks, key=lambda m: (m.bit_count(), m))
        n = len(order)

        # lower covers: maximal proper subfaces, found largest-first
        lower: list[list[int]] = [[] for _ in range(n)]
        below: list[list[int]] = [[] for _ in range(n)]
        for j, y in enumerate(order):
            subs = [i for i in range(j) if order[i] & ~y == 0 and order[i] != y]
            below[j] = subs
            covers: list[int] = []
            for i in reversed(subs):
                x = order[i]
                if not any(x & ~order[c] == 0 for c in covers):
                    covers.append(i)
            lower[j] = covers

        rank = [0] * n
        rank[0] = -1
        for j in range(1, n):
            rank[j] = 1 + max(rank[i] for i in lower[j])
        for j in range(1, n):
            for i in lower[j]:
                if rank[i] != rank[j] - 1:
                    raise NotGraded(f"cover {order[i]:b} < {order[j]:b} skips a rank")
        if rank[n - 1] != dim:
            raise NotGraded(f"top has rank {rank[n - 1]}, expected {dim}")
        atoms = [order[j] for j in range(n) if rank[j] == 0]
        if sorted(atoms) != sorted(1 << i for i in range(len(self.vertices))):
            raise NotGraded("atoms are not exactly the singleton vertices")

        perm = sorted(range(n), key=lambda j: (rank[j], order[j].bit_count(), order[j]))
        new_index = {old: new for new, old in enumerate(perm)}
        self.faces = [order[j] for j in perm]
        self.rank = [rank[j] for j in perm]
        self.lower = [sorted(new_index[i] for i in lower[j]) for j in perm]
        self.below = [sorted(new_index[i] for i in below[j]) for j in perm]
        self.upper: list[list[int]] = [[] for _ in range(n)]
        for j, covs in enumerate(self.lower):
            for i in covs:
                self.upper[i].append(j)
        self.index = {m: i for i, m in enumerate(self.faces)}

    @classmethod
    def from_faces(cls, dim: int, vertices: Sequence[Hashable], faces: Iterable[Iterable[Hashable]]) -> FaceLattice:
        pos = {v: i for i, v in enumerate(vertices)}
        masks = []
        for face in faces:
            m = 0
            for v in face:
                m |= 1 << pos[v]
            masks.append(m)
        return cls(dim, vertices, masks)

    def __len__(self) -> int:
        return len(self.faces)

    def __repr__(self) -> str:
        return f"FaceLattice(dim={self.dim}, f={self.f_vector()})"

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.faces) - 1

    def labels(self, idx: int) -> tuple:
        """Vertex labels of face ``idx`` in vertex order."""
        m = self.faces[idx]
        return tuple(v for i, v in enumerate(self.vertices) if m >> i & 1)

    def mask_of(self, labels: Iterable[Hashable]) -> int:
        m = 0
        for v in labels:
            m |= 1 << self._pos[v]
        return m

    def find(self, labels: Iterable[Hashable]) -> int | None:
        return self.index.get(self.mask_of(labels))

    def faces_of_rank(self, r: int) -> list[int]:
        return [i for i, rk in enumerate(self.rank) if rk == r]

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * self.dim
        for rk in self.rank:
            if 0 <= rk < self.dim:
                counts[rk] += 1
        return tuple(counts)

    def facet_list(self) -> FacetList:
        return FacetList(self.dim, self.vertices, [self.labels(i) for i in self.faces_of_rank(self.dim - 1)])

    def sublattice(self, idx: int) -> FaceLattice:
        """The lattice of faces of face ``idx`` (the interval [bottom, idx])."""
        verts = self.labels(idx)
        return FaceLattice.from_faces(self.rank[idx], verts, [self.labels(i) for i in self.below[idx]])

    @cached_property
    def _below_by_rank(self) -> list[dict[int, list[int]]]:
        out = []
        for j in range(len(self.faces)):
            groups: dict[int, list[int]] = {}
            for i in self.below[j]:
                groups.setdefault(self.rank[i], []).append(i)
            out.append(groups)
        return out

    def hasse(self, dual: bool = False) -> nx.DiGraph:
        """Cover relations as edges pointing up; ``dual`` flips order and ranks."""
        G = nx.DiGraph()
        for i, r in enumerate(self.rank):
            G.add_node(i, rank=self.dim - 1 - r if dual else r)
        for i, ups in enumerate(self.upper):
            G.add_edges_from(((j, i) if dual else (i, j)) for j in ups)
        return G


def build_lattice(p: FacetList) -> FaceLattice:
    """Close the facet sets under intersection and grade the result."""
    if not p.facets:
        raise EmptyInput("facet list is empty")
    pos = {v: i for i, v in enumerate(p.vertices)}
    facet_masks = []
    for f in p.facets:
        m = 0
        for v in f:
            m |= 1 << pos[v]
        facet_masks.append(m)
    facet_masks = list(dict.fromkeys(facet_masks))
    faces = set(facet_masks)
    frontier = list(faces)
    while frontier:
        nxt = []
        for x in frontier:
            for f in facet_masks:
                y = x & f
                if y not in faces:
                    faces.add(y)
                    nxt.append(y)
        frontier = nxt
    return FaceLattice(p.dim, p.vertices, faces)


def flag_vector(L: FaceLattice) -> FlagVector:
    """Count S-flags for every S by dynamic programming over chains.

    ``chains[j][T]`` is the number of chains with dimension set
    T + {rank j} ending at face j, for T a bitmask below rank j.
    """
    d = L.dim
    by_rank = L._below_by_rank
    chains: list[list[int] | None] = [None] * len(L.faces)
    totals = [0] * (1 << d)
    totals[0] = 1
    for j, r in enumerate(L.rank):
        if r < 0 or r >= d:
            continue
        c = [0] * (1 << r)
        c[0] = 1
        groups = by_rank[j]
        for T in range(1, 1 << r):
            t = T.bit_length() - 1
            rest = T ^ (1 << t)
            c[T] = sum(chains[i][rest] for i in groups.get(t, ()))
        chains[j] = c
        for T in range(1 << r):
            totals[T | (1 << r)] += c[T]
    counts = {S: totals[mask] for mask, S in enumerate(all_subsets(d))}
    return FlagVector(d, counts)


def f_vector(L: FaceLattice) -> tuple[int, ...]:
    return L.f_vector()


def euler_check(L: FaceLattice | Sequence[int], d: int | None = None) -> bool:
    """Euler's relation sum (-1)^i f_i = 1 - (-1)^d.

    Accepts a lattice, or an f-vector together with ``d``.
    """
    if isinstance(L, FaceLattice):
        f, d = L.f_vector(), L.dim
    else:
        f = tuple(L)
        d = len(f) if d is None else d
    return sum((-1) ** i * fi for i, fi in enumerate(f)) == 1 - (-1) ** d


def eulerian_check(L: FaceLattice) -> bool:
    """True iff every interval [x, y], x < y, has as many even- as odd-rank elements.

    Uses face-index bitsets: the interval is up(x) & down(y).
    """
    n = len(L.faces)
    down = [0] * n
    for j in range(n):
        m = 1 << j
        for i in L.below[j]:
            m |= 1 << i
        down[j] = m
    up = [0] * n
    for j in range(n):
        for i in L.below[j]:
            up[i] |= 1 << j
    for j in range(n):
        up[j] |= 1 << j
    even = 0
    for j, r in enumerate(L.rank):
        if r % 2 == 0:
            even |= 1 << j
    for y in range(n):
        for x in L.below[y]:
            interval = up[x] & down[y]
            e = (interval & even).bit_count()
            if 2 * e != interval.bit_count():
                return False
    return True


_same_rank = categorical_node_match("rank", None)


def _hasse_isomorphic(G: nx.DiGraph, H: nx.DiGraph) -> bool:
    return DiGraphMatcher(G, H, node_match=_same_rank).is_isomorphic()


def is_self_dual(L: FaceLattice) -> bool:
    return _hasse_isomorphic(L.hasse(), L.hasse(dual=True))


def is_isomorphic(L1: FaceLattice, L2: FaceLattice) -> bool:
    if L1.dim != L2.dim or L1.f_vector() != L2.f_vector():
        return False
    return _hasse_isomorphic(L1.hasse(), L2.hasse())


def vertex_figure(L: FaceLattice, v: Hashable) -> FaceLattice:
    """The interval [v, top] as a (dim-1)-dimensional lattice.

    Each edge through ``v`` becomes a vertex, labelled by the edge's other
    endpoint; a face above ``v`` becomes the set of edges it contains.
    """
    if v not in L._pos:
        raise UnknownVertex(v)
    vmask = 1 << L._pos[v]
    edges = [i for i in L.faces_of_rank(1) if L.faces[i] & vmask]
    other = {}
    for e in edges:
        (w,) = [u for u in L.labels(e) if u != v]
        other[e] = w
    new_vertices = [w for w in L.vertices if w in set(other.values())]
    faces = []
    for j, m in enumerate(L.faces):
        if m & vmask:
            faces.append([other[e] for e in edges if L.faces[e] & ~m == 0])
    return FaceLattice.from_faces(L.dim - 1, new_vertices, faces)


def dehn_sommerville_check(fv: FlagVector, t: int) -> bool:
    """Generalized Dehn-Sommerville relation at the (t-1)-faces.

    f_{t-1,t} - f_{t-1,t+1} + ... + (-1)^{d-1-t} f_{t-1,d-1} = (1 - (-1)^{d-t}) f_{t-1}
    """
    d = fv.dim
    if not 1 <= t <= d - 1:
        raise ValueError(f"t={t} outside 1..{d - 1}")
    lhs = sum((-1) ** (k - t) * fv[(t - 1, k)] for k in range(t, d))
    return lhs == (1 - (-1) ** (d - t)) * fv[(t - 1,)]
