import pytest

from critmod.betti import (alternating_numbers, alternating_polynomial, betti_table,
                           check_alt_deletion_contraction, check_vanishing_implies_equality,
                           tutte_side)
from critmod.errors import BridgeEdge
from critmod.gradedalg import gpark_presentation, toppling_presentation
from critmod.multigraph import contract_edge, delete_edge, merge_relabel, non_bridge_pairs
from critmod.orientations import enumerate_unique_sink

from conftest import small_graphs


def test_triangle_tables(triangle):
    assert betti_table(triangle, 1).entries == {(0, 0): 2, (1, 1): 3, (2, 3): 1}
    assert betti_table(contract_edge(triangle, 0, 1), 0).entries == {(0, 0): 1, (1, 2): 1}
    assert betti_table(delete_edge(triangle, 0, 1), 1).entries == \
        {(0, 0): 1, (1, 1): 2, (2, 2): 1}


def test_triangle_alternating(triangle):
    assert alternating_numbers(triangle, 1, 6) == [2, -3, 0, 1, 0, 0, 0]
    assert alternating_numbers(contract_edge(triangle, 0, 1), 0, 4) == [1, 0, -1, 0, 0]
    assert alternating_numbers(delete_edge(triangle, 0, 1), 1, 4) == [1, -2, 1, 0, 0]
    # (2 + t)(1 - t)^2
    assert tutte_side(triangle) == (2, -3, 0, 1)


def test_triangle_edge_checks(triangle):
    assert check_alt_deletion_contraction(triangle, 0, 1, 1).passed
    res = check_vanishing_implies_equality(triangle, 0, 1, 1)
    assert res.passed and [2, 4] in res.details["tested"]
    assert betti_table(triangle, 1).get(2, 4) == 0
    assert betti_table(delete_edge(triangle, 0, 1), 1).get(2, 4) == 0


@pytest.mark.parametrize("g", small_graphs(), ids=repr)
def test_table_invariants(g):
    for sink in range(g.n):
        t = betti_table(g, sink)
        assert all(i < g.n and k <= g.m + g.loops and v > 0 for (i, k), v in t.entries.items())
        assert t.get(0, g.loops) == len(enumerate_unique_sink(g, sink))
        assert alternating_polynomial(g, sink, table=t) == tutte_side(g)


@pytest.mark.parametrize("g", [g for g in small_graphs() if g.n >= 2], ids=repr)
def test_presentation_census_matches_first_column(g):
    for sink in range(g.n):
        t = betti_table(g, sink)
        beta1 = {k: v for (i, k), v in t.entries.items() if i == 1}
        for p in (gpark_presentation(g, sink), toppling_presentation(g, sink)):
            assert p.relation_degrees() == beta1
            assert len(p.labels) == t.get(0, g.loops)
            assert set(p.degrees) <= {g.loops}


@pytest.mark.parametrize("g", small_graphs(), ids=repr)
def test_edge_identities(g):
    for u, v in non_bridge_pairs(g):
        for sink in (u, v):
            assert check_alt_deletion_contraction(g, u, v, sink).passed
            assert check_vanishing_implies_equality(g, u, v, sink).passed
            s_e = merge_relabel(g.n, u, v)[sink]
            a0 = alternating_numbers(g, sink, 0)[0]
            assert a0 == alternating_numbers(contract_edge(g, u, v), s_e, 0)[0] + \
                alternating_numbers(delete_edge(g, u, v), sink, 0)[0]


def test_bridge_rejected(path3):
    with pytest.raises(BridgeEdge):
        check_alt_deletion_contraction(path3, 0, 1, 1)
    with pytest.raises(BridgeEdge):
        check_vanishing_implies_equality(path3, 1, 2, 1)


def test_json(triangle):
    assert betti_table(triangle, 1).to_json() == [[0, 0, 2], [1, 1, 3], [2, 3, 1]]
