from itertools import product

import pytest

from critmod.divisors import (canonical_divisor, divisor_class, is_effective_class,
                              linearly_equivalent, nonspecial_classes, picard_classes,
                              principal_divisor, q_reduce, rank, riemann_roch_check)
from critmod.multigraph import Multigraph, banana_graph, laplacian, spanning_tree_count
from critmod.orientations import enumerate_unique_sink

from conftest import small_graphs
from oracles import (effective_class_brute, is_q_reduced_brute, lattice_equivalent_brute,
                     lattice_equivalent_exact, q_reduced_brute, rank_brute)

LOOPLESS = [g.without_loops() for g in small_graphs()]
TINY = [g for g in LOOPLESS if g.n <= 4]
# simple graphs on which every firing script needed below fits the [-4, 4] search box
SIMPLE = [g for g in TINY if all(k == 1 for k in g.mult.values())]


def _box(n, lo=-2, hi=2):
    return product(range(lo, hi + 1), repeat=n)


def test_zero_is_reduced(triangle, k4):
    assert q_reduce(triangle, (0, 0, 0), 1) == (0, 0, 0)
    assert q_reduce(k4, (0,) * 4, 2) == (0,) * 4


def test_triangle_reduction_example(triangle):
    d = (1, -1, 0)
    assert q_reduce(triangle, d, 1) == q_reduced_brute(3, list(triangle.edges), d, 1) == d


@pytest.mark.parametrize("g", TINY, ids=repr)
def test_q_reduce_is_reduced_and_equivalent(g):
    edges = list(g.edges)
    for d in _box(g.n, -1, 2):
        for q in range(g.n):
            r = q_reduce(g, d, q)
            assert is_q_reduced_brute(g.n, edges, r, q)
            assert lattice_equivalent_exact(g.n, edges, d, r)
            assert q_reduce(g, r, q) == r


@pytest.mark.parametrize("g", SIMPLE, ids=repr)
def test_q_reduce_vs_bounded_search(g):
    edges = list(g.edges)
    for d in _box(g.n, -1, 1):
        for q in range(g.n):
            assert q_reduce(g, d, q) == q_reduced_brute(g.n, edges, d, q)


@pytest.mark.parametrize("g", TINY, ids=repr)
def test_lattice_invariance(g):
    Q = laplacian(g)
    for d in _box(g.n, -1, 1):
        for row in Q:
            moved = tuple(a + b for a, b in zip(d, row))
            assert q_reduce(g, moved, 0) == q_reduce(g, d, 0)
            assert linearly_equivalent(g, d, moved)


def test_linear_equivalence_examples(triangle):
    assert not linearly_equivalent(triangle, (1, 0, -1), (0, 1, -1))
    assert not lattice_equivalent_brute(3, list(triangle.edges), (1, 0, -1), (0, 1, -1))
    assert not linearly_equivalent(triangle, (1, 0, 0), (0, 0, 0))
    assert linearly_equivalent(triangle, (2, -1, -1), (0, 0, 0))


@pytest.mark.parametrize("g", TINY, ids=repr)
def test_equivalence_vs_lattice_search(g):
    edges = list(g.edges)
    ds = [d for d in _box(g.n, -1, 1) if sum(d) == 0]
    for d1 in ds[::3]:
        for d2 in ds:
            want = lattice_equivalent_exact(g.n, edges, d1, d2)
            assert linearly_equivalent(g, d1, d2) == want
            if g in SIMPLE:
                assert lattice_equivalent_brute(g.n, edges, d1, d2) == want


@pytest.mark.parametrize("g", TINY, ids=repr)
def test_rank_vs_exhaustive_search(g):
    edges = list(g.edges)

    def eff(d):
        return effective_class_brute(g.n, edges, d)

    for d in _box(g.n, -1, 1):
        if sum(d) <= 2 * g.genus:
            assert rank(g, d) == rank_brute(g.n, edges, d, 0, eff)
            assert is_effective_class(g, d) == eff(d)


@pytest.mark.parametrize("g", LOOPLESS, ids=repr)
def test_rank_landmarks(g):
    gen = g.genus
    assert rank(g, (0,) * g.n) == 0
    K = canonical_divisor(g)
    assert sum(K) == 2 * gen - 2
    assert rank(g, K) == gen - 1
    for deg in range(max(2 * gen - 1, 0), 2 * gen + 3):
        for c in picard_classes(g, deg):
            assert rank(g, c.reduced) == deg - gen


def test_triangle_divisor_examples(triangle):
    K = canonical_divisor(triangle)
    assert K == (0, 0, 0) and rank(triangle, K) == 0
    for d in range(-3, 5):
        assert len(picard_classes(triangle, d, 1)) == 3
    assert len(nonspecial_classes(triangle, 1)) == 2 == len(enumerate_unique_sink(triangle, 1))


@pytest.mark.parametrize("g", LOOPLESS, ids=repr)
def test_riemann_roch_and_class_counts(g):
    N = spanning_tree_count(g)
    for q in range(g.n):
        for deg in range(-2, 2 * g.genus + 1):
            classes = picard_classes(g, deg, q)
            assert len(classes) == N
            for c in classes:
                assert c.degree == deg and riemann_roch_check(g, c.reduced, q)


@pytest.mark.parametrize("g", TINY, ids=repr)
def test_rank_monotone(g):
    for d in _box(g.n, -1, 1):
        r = rank(g, d)
        for v in range(g.n):
            up = tuple(a + (1 if k == v else 0) for k, a in enumerate(d))
            assert rank(g, up) in (r, r + 1)


def test_principal_and_class(triangle):
    assert principal_divisor(triangle, (1, 0, 0)) == (-2, 1, 1)
    c = divisor_class(triangle, (3, 0, 0), 1)
    assert c.q == 1 and c.degree == 3 and linearly_equivalent(triangle, c.reduced, (3, 0, 0))


def test_loops_are_ignored():
    g = banana_graph(2, loops=2)
    assert q_reduce(g, (3, -1), 1) == q_reduce(banana_graph(2), (3, -1), 1)
    assert canonical_divisor(Multigraph(2, [(0, 1), (0, 1), (1, 1)])) == (0, 0)
