from fractions import Fraction

import pytest

from flagpoly.errors import NonIntegral
from flagpoly.face_lattice import FacetList, all_subsets, build_lattice, dehn_sommerville_check, flag_vector
from flagpoly.large_facet import construct
from flagpoly.multiplex import multiplex_facets, multiplex_flag_vector
from flagpoly.multiplicial import (
    flag_from_face_data,
    full_flag_from_f,
    is_gale_polytope,
    is_gale_subset,
    is_order_multiplicial,
    is_weakly_multiplicial,
    reduction_table,
    span_rank,
    chain_coefficients,
)
from flagpoly.ordinary import cyclic_facets, ordinary_flag_vector

import oracles


def pyramid_over_multiplex(n, apex_position):
    """Pyramid over M^{3,n} whose apex sits at ``apex_position`` in the vertex order."""
    labels = [v for v in range(n + 2) if v != apex_position]
    base = multiplex_facets(3, n, labels)
    return FacetList(4, range(n + 2), [set(labels)] + [set(f) | {apex_position} for f in base.facets])


def test_gale_subset_examples():
    assert is_gale_subset(range(7), {1, 2, 5, 6})
    assert not is_gale_subset(range(4), {1})
    assert is_gale_subset(range(4), range(4))
    assert not is_gale_subset((0, 1, 2), {1})


def test_gale_subset_matches_pairwise_statement():
    from itertools import combinations

    for n in range(1, 8):
        for r in range(n + 1):
            for Y in combinations(range(n), r):
                rest = [v for v in range(n) if v not in Y]
                brute = all(sum(1 for y in Y if a < y < b) % 2 == 0 for a, b in combinations(rest, 2))
                assert is_gale_subset(range(n), Y) == brute


def test_gale_polytope_examples():
    assert is_gale_polytope(cyclic_facets(5, 8))
    assert is_gale_polytope(multiplex_facets(5, 8))
    # facet {0,2,3,4} of M^{4,6}: three of its vertices lie between 1 and 5
    assert not is_gale_polytope(multiplex_facets(4, 6))
    square = [{0, 1}, {1, 2}, {2, 3}, {0, 3}]
    assert is_gale_polytope(FacetList(2, range(4), square))
    assert not is_gale_polytope(FacetList(2, (0, 2, 1, 3), square))


def test_order_multiplicial_examples():
    assert is_order_multiplicial(multiplex_facets(4, 6))
    assert is_order_multiplicial(construct(7).final)
    # apex at position 3 over M^{3,5} is the q = 7 polytope; other positions fail
    assert is_order_multiplicial(pyramid_over_multiplex(5, 3))
    assert not is_order_multiplicial(pyramid_over_multiplex(5, 2))
    assert not is_order_multiplicial(pyramid_over_multiplex(7, 3))


def test_weakly_multiplicial_examples():
    assert is_weakly_multiplicial(build_lattice(FacetList(3, range(8), oracles.cube_facets(3))))
    assert is_weakly_multiplicial(build_lattice(FacetList(3, range(6), oracles.prism_facets())))
    assert is_weakly_multiplicial(build_lattice(pyramid_over_multiplex(5, 2)))
    assert not is_weakly_multiplicial(build_lattice(FacetList(4, range(16), oracles.cube_facets(4))))


def test_chain_coefficient_examples():
    for t in range(2, 9):
        assert chain_coefficients({0, t}) == (0, 1)
    assert chain_coefficients({0, 1}) == (2, 0)
    assert chain_coefficients({1, 3}) == (-2, 2)
    assert chain_coefficients({4}) == (1, 0)
    with pytest.raises(ValueError):
        chain_coefficients(())


@pytest.mark.parametrize("d,n", [(4, 6), (5, 8), (6, 9), (3, 7)])
def test_chain_coefficients_reproduces_multiplex_flags(d, n):
    fv = multiplex_flag_vector(d, n)
    for S in all_subsets(d):
        if S:
            t = S[-1]
            f0t = fv[0, t] if t > 0 else fv[0]
            assert flag_from_face_data(S, fv[t], f0t) == fv[S]


def test_flag_from_face_data_examples():
    assert flag_from_face_data({1, 3}, 7, 32) == 50
    assert flag_from_face_data({2}, 16, 999) == 16
    assert flag_from_face_data({0, 2}, 16, 50) == 50


def test_reduction_table_d4():
    table = reduction_table(4)
    assert table[(0, 3)] == (0, 0, 0, 2)
    assert table[(0, 2)] == (0, -2, 2, 2)
    assert table[()] == (1, 0, 0, 0)
    for i in range(3):
        assert table[(i,)] == tuple(Fraction(int(k == i + 1)) for k in range(4))
    # f_3 = f_0 - f_1 + f_2
    assert table[(3,)] == (0, 1, -1, 1)


@pytest.mark.parametrize("d", range(2, 8))
def test_reduction_table_shape(d):
    table = reduction_table(d)
    assert len(table) == 2 ** d
    assert all(len(row) == d for row in table.values())
    f = (multiplex_flag_vector(d, d + 3)).f_vector()
    basis = (1,) + f[:-1]
    assert sum(c * x for c, x in zip(table[(0, d - 1)], basis)) == 2 * f[d - 2]


def test_full_flag_from_f():
    assert full_flag_from_f(4, (7, 16, 16, 7)) == flag_vector(build_lattice(multiplex_facets(4, 6)))
    assert full_flag_from_f(5, (9, 31, 52, 44, 16)) == ordinary_flag_vector(5, 6, 8)
    assert full_flag_from_f(3, (4, 6, 4)) == flag_vector(build_lattice(multiplex_facets(3, 3)))
    fv = full_flag_from_f(5, (9, 31, 52, 44, 16))
    assert all(dehn_sommerville_check(fv, t) for t in range(1, 5))
    with pytest.raises(NonIntegral):
        full_flag_from_f(4, (7, 16, 16, 8))
    with pytest.raises(ValueError):
        full_flag_from_f(4, (7, 16, 16))


def test_full_flag_rejects_non_multiplicial_profile():
    # 4-cube: f = (16, 32, 24, 8) satisfies Euler, but the multiplicial
    # reduction predicts f_{0,3} = 2 f_2 = 48, while the cube has 64
    cube = flag_vector(build_lattice(FacetList(4, range(16), oracles.cube_facets(4))))
    try:
        predicted = full_flag_from_f(4, cube.f_vector())
    except NonIntegral:
        return
    assert predicted != cube


def test_span_rank_examples():
    ordinary = [ordinary_flag_vector(5, k, n) for k, n in [(5, 5), (5, 7), (7, 7), (7, 9), (9, 9), (9, 11)]]
    assert span_rank(ordinary) == 5
    assert span_rank(ordinary[:1]) == 1
    simplex = multiplex_flag_vector(4, 4)
    assert span_rank([simplex, multiplex_flag_vector(4, 6), simplex, simplex]) == 2
    assert span_rank([]) == 0
    with pytest.raises(ValueError):
        span_rank([simplex, multiplex_flag_vector(3, 4)])
