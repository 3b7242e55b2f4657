import pytest

from flagpoly.errors import EmptyInput, NotGraded, UnknownVertex
from flagpoly.face_lattice import (
    FaceLattice,
    FacetList,
    all_subsets,
    build_lattice,
    decode_subset,
    dehn_sommerville_check,
    encode_subset,
    euler_check,
    eulerian_check,
    f_vector,
    flag_vector,
    is_isomorphic,
    is_self_dual,
    vertex_figure,
)
from flagpoly.multiplex import multiplex_facets
from flagpoly.ordinary import cyclic_facets

import oracles

PENTAGON = FacetList(2, range(5), [{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}])
TETRAHEDRON = FacetList(3, range(4), [{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}])


def small_corpus():
    yield PENTAGON
    yield TETRAHEDRON
    yield multiplex_facets(3, 4)
    yield multiplex_facets(4, 6)
    yield cyclic_facets(4, 6)
    yield FacetList(3, range(8), oracles.cube_facets(3))
    yield FacetList(3, range(6), oracles.prism_facets())


@pytest.mark.parametrize("p", list(small_corpus()), ids=lambda p: f"d{p.dim}v{len(p.vertices)}")
def test_lattice_matches_subfamily_intersections(p):
    L = build_lattice(p)
    brute = oracles.faces_by_subfamilies(p.vertices, p.facets)
    assert {frozenset(L.labels(i)) for i in range(len(L))} == brute
    rank = oracles.ranks_by_longest_chain(brute)
    for i in range(len(L)):
        assert L.rank[i] == rank[frozenset(L.labels(i))]


@pytest.mark.parametrize("p", list(small_corpus()), ids=lambda p: f"d{p.dim}v{len(p.vertices)}")
def test_flag_vector_matches_chain_enumeration(p):
    L = build_lattice(p)
    fv = flag_vector(L)
    rank = oracles.ranks_by_longest_chain(oracles.faces_by_subfamilies(p.vertices, p.facets))
    for S in all_subsets(p.dim):
        assert fv[S] == oracles.chain_count(rank, S), S


@pytest.mark.parametrize("p", list(small_corpus()), ids=lambda p: f"d{p.dim}v{len(p.vertices)}")
def test_eulerian_matches_mobius_oracle(p):
    L = build_lattice(p)
    rank = {frozenset(L.labels(i)): L.rank[i] for i in range(len(L))}
    assert eulerian_check(L) == oracles.mobius_is_eulerian(rank) is True


def test_build_lattice_examples():
    assert f_vector(build_lattice(PENTAGON)) == (5, 5)
    L = build_lattice(TETRAHEDRON)
    assert L.f_vector() == (4, 6, 4)
    assert len(L) == 16
    assert build_lattice(multiplex_facets(4, 6)).f_vector() == (7, 16, 16, 7)
    assert build_lattice(cyclic_facets(4, 6)).f_vector() == (6, 15, 18, 9)


def test_lattice_structure_invariants():
    L = build_lattice(multiplex_facets(4, 6))
    masks = set(L.faces)
    assert all(a & b in masks for a in masks for b in masks)
    assert L.rank[L.bottom] == -1 and L.rank[L.top] == 4
    assert sorted(L.labels(i) for i in L.faces_of_rank(0)) == [(v,) for v in range(7)]
    for j in range(1, len(L)):
        assert all(L.rank[i] == L.rank[j] - 1 for i in L.lower[j])


def test_build_lattice_errors():
    with pytest.raises(EmptyInput):
        build_lattice(FacetList(2, range(3), []))
    # two disjoint edges do not bound a polygon
    with pytest.raises(NotGraded):
        build_lattice(FacetList(2, range(4), [{0, 1}, {2, 3}]))
    # stated dimension disagrees with the lattice
    with pytest.raises(NotGraded):
        build_lattice(FacetList(3, range(5), PENTAGON.facets))
    with pytest.raises(ValueError):
        FacetList(2, range(3), [{0, 1, 2}])


def test_flag_vector_examples():
    simplex = flag_vector(build_lattice(multiplex_facets(4, 4)))
    assert simplex[0, 1, 2, 3] == 120
    m46 = flag_vector(build_lattice(multiplex_facets(4, 6)))
    assert m46[0, 3] == 32
    assert m46["1,3"] == 50 and m46[(1, 2)] == 50
    assert m46[()] == 1 and m46[""] == 1
    assert m46.f_vector() == (7, 16, 16, 7)


def test_subset_encoding_roundtrip():
    for S in all_subsets(5):
        assert decode_subset(encode_subset(S)) == S
    assert encode_subset(()) == ""


def test_euler_check():
    assert euler_check(build_lattice(multiplex_facets(4, 6)))
    assert euler_check(build_lattice(PENTAGON))
    assert euler_check((4, 6, 4), 3)
    assert not euler_check((4, 6, 5), 3)


def test_eulerian_check_detects_deleted_face():
    L = build_lattice(multiplex_facets(3, 4))
    assert eulerian_check(L)
    # drop one edge: the lattice stays graded but two intervals lose an element
    edge = L.faces_of_rank(1)[0]
    mutated = FaceLattice(L.dim, L.vertices, [m for i, m in enumerate(L.faces) if i != edge])
    assert not eulerian_check(mutated)


def test_boolean_lattice_is_eulerian():
    assert eulerian_check(build_lattice(multiplex_facets(5, 5)))


@pytest.mark.parametrize("p,expected", [
    (multiplex_facets(3, 4), True),
    (multiplex_facets(4, 6), True),
    (FacetList(3, range(6), oracles.prism_facets()), False),
    (FacetList(3, range(8), oracles.cube_facets(3)), False),
    (cyclic_facets(4, 6), False),
    (TETRAHEDRON, True),
])
def test_self_duality(p, expected):
    assert is_self_dual(build_lattice(p)) is expected


def test_vertex_figure_of_cyclic_is_cyclic():
    L = build_lattice(cyclic_facets(5, 7))
    vf = vertex_figure(L, 0)
    assert vf.dim == 4 and vf.vertices == (1, 2, 3, 4, 5, 6)
    assert is_isomorphic(vf, build_lattice(cyclic_facets(4, 6)))


def test_vertex_figure_simplex_and_multiplex():
    vf = vertex_figure(build_lattice(multiplex_facets(4, 4)), 2)
    assert vf.f_vector() == (4, 6, 4)
    vf = vertex_figure(build_lattice(multiplex_facets(4, 6)), 6)
    assert euler_check(vf) and eulerian_check(vf)
    with pytest.raises(UnknownVertex):
        vertex_figure(build_lattice(PENTAGON), 99)


def test_dehn_sommerville_examples():
    fv = flag_vector(build_lattice(multiplex_facets(4, 6)))
    assert fv[2, 3] == 2 * fv[2] == 32
    assert fv[1, 2] == fv[1, 3] == 50
    assert all(dehn_sommerville_check(fv, t) for t in (1, 2, 3))
    simplex = flag_vector(build_lattice(multiplex_facets(5, 5)))
    assert all(dehn_sommerville_check(simplex, t) for t in range(1, 5))
    with pytest.raises(ValueError):
        dehn_sommerville_check(fv, 4)


def test_isomorphism_under_relabelling():
    prism = build_lattice(FacetList(3, range(6), oracles.prism_facets()))
    relabelled = build_lattice(FacetList(3, [5, 3, 1, 0, 2, 4], oracles.prism_facets()))
    assert is_isomorphic(prism, relabelled)
    assert not is_isomorphic(prism, build_lattice(multiplex_facets(3, 5)))


def test_hasse_diagram_and_its_dual():
    L = build_lattice(multiplex_facets(3, 4))
    G, D = L.hasse(), L.hasse(dual=True)
    assert G.number_of_edges() == sum(len(c) for c in L.lower)
    assert G.nodes[L.top]["rank"] == 3 and D.nodes[L.top]["rank"] == -1
    assert set(D.edges) == {(j, i) for i, j in G.edges}
