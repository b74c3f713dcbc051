import pytest

from critmod.errors import (CritModError, DisconnectedGraph, GraphError, GraphFormatError,
                            InvalidPartition,
                            NoSuchEdge, SameVertex)
from critmod.multigraph import (Multigraph, VertexPartition, banana_graph, connected_partitions,
                                contract_edge, contract_pair, cycle_graph, delete_edge,
                                format_graph, is_bridge, laplacian, merge_relabel,
                                non_bridge_pairs, parse_graph, partition_graph, path_graph,
                                spanning_tree_count)

from conftest import small_graphs
from oracles import connected_partitions_brute, spanning_trees_brute


def test_derived_counts(banana3):
    g = Multigraph(3, [(0, 1), (0, 1), (1, 2), (2, 2)])
    assert (g.n, g.m, g.loops) == (3, 3, 1)
    assert g.multiplicity(1, 0) == 2 and g.multiplicity(0, 2) == 0
    assert g.m + g.loops == len(g.edges)
    assert g.valence(1) == 3
    assert banana3.genus == 2


def test_construction_errors():
    with pytest.raises(DisconnectedGraph):
        Multigraph(3, [(0, 1)])
    with pytest.raises(GraphError):
        Multigraph(2, [(0, 2)])
    with pytest.raises(GraphError):
        Multigraph(0, [])


def test_contract_edge_examples(triangle, banana3, k4):
    h = contract_edge(triangle, 0, 1)
    assert (h.n, h.m, h.loops, h.multiplicity(0, 1)) == (2, 2, 0, 2)
    h = contract_edge(banana3, 0, 1)
    assert (h.n, h.loops) == (1, 2)
    # derived by hand: merged vertex doubly joined to both others, one edge between them
    assert contract_edge(k4, 0, 1).edges == ((0, 1), (0, 1), (0, 2), (0, 2), (1, 2))


def test_contract_pair_examples(triangle, k4):
    assert contract_pair(triangle, 0, 1) == contract_edge(triangle, 0, 1)
    g = Multigraph(3, [(0, 1), (0, 1), (1, 2)])
    h = contract_pair(g, 0, 1)
    assert (h.n, h.edges) == (2, ((0, 1),))
    assert contract_pair(k4, 0, 1).edges == ((0, 1), (0, 1), (0, 2), (0, 2), (1, 2))
    looped = Multigraph(3, [(0, 1), (0, 1), (1, 2), (2, 2)])
    assert contract_pair(looped, 0, 1).loops == 1


def test_surgery_errors(triangle, path3):
    for op in (contract_edge, contract_pair):
        with pytest.raises(SameVertex):
            op(triangle, 1, 1)
        with pytest.raises(NoSuchEdge):
            op(path3, 0, 2)
    with pytest.raises(NoSuchEdge):
        delete_edge(path3, 0, 2)
    with pytest.raises(NoSuchEdge):
        is_bridge(path3, 0, 2)


def test_delete_edge_examples(triangle, c4):
    assert delete_edge(triangle, 0, 1) == Multigraph(3, [(0, 2), (1, 2)])
    assert delete_edge(banana_graph(2), 0, 1) == banana_graph(1)
    assert delete_edge(c4, 0, 3) == path_graph(4)


def test_merge_relabel():
    assert merge_relabel(5, 3, 1) == [0, 1, 2, 1, 3]
    assert merge_relabel(3, 0, 1) == [0, 0, 1]


def test_connected_partitions_triangle(triangle):
    assert [p.blocks for p in connected_partitions(triangle, 0)] == [((0,), (1,), (2,))]
    assert len(connected_partitions(triangle, 1)) == 3
    assert [p.blocks for p in connected_partitions(triangle, 2)] == [((0, 1, 2),)]
    assert connected_partitions(triangle, 3) == []


@pytest.mark.parametrize("g", small_graphs(), ids=repr)
def test_connected_partitions_vs_oracle(g):
    for i in range(g.n):
        got = [[tuple(b) for b in p.blocks] for p in connected_partitions(g, i)]
        assert sorted(got) == connected_partitions_brute(g.n, list(g.edges), i)
        for p in connected_partitions(g, i):
            assert p.size == i
            partition_graph(g, p)  # connected by construction or it raises
    assert len(connected_partitions(g, 0)) == 1


def test_partition_graph_examples(triangle):
    two = partition_graph(triangle, VertexPartition.from_blocks([[0, 1], [2]]))
    assert two == Multigraph(2, [(0, 1), (0, 1)])
    one = partition_graph(triangle, VertexPartition.from_blocks([[0, 1, 2]]))
    assert (one.n, one.edges) == (1, ())
    looped = Multigraph(3, [(0, 1), (0, 2), (1, 2), (0, 0)])
    assert partition_graph(looped, VertexPartition.from_blocks([[0], [1], [2]])) == triangle


def test_partition_graph_errors(path3):
    with pytest.raises(InvalidPartition):
        partition_graph(path3, VertexPartition.from_blocks([[0, 2], [1]]))
    with pytest.raises(InvalidPartition):
        partition_graph(path3, VertexPartition.from_blocks([[0], [1]]))


def test_bridges(triangle, path3):
    assert is_bridge(path3, 0, 1) and not is_bridge(triangle, 0, 1)
    assert not is_bridge(Multigraph(3, [(0, 1), (0, 1), (1, 2)]), 0, 1)
    assert non_bridge_pairs(path3) == []
    with pytest.raises(DisconnectedGraph):
        delete_edge(path3, 0, 1)


def test_spanning_tree_examples(triangle, path3, k4):
    assert spanning_tree_count(triangle) == 3
    assert spanning_tree_count(path3) == 1
    assert spanning_tree_count(k4) == 16
    assert spanning_tree_count(banana_graph(3, 2)) == 3
    assert laplacian(triangle) == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]


@pytest.mark.parametrize("g", small_graphs(), ids=repr)
def test_spanning_tree_count_vs_oracle(g):
    N = spanning_trees_brute(g.n, list(g.edges))
    assert all(spanning_tree_count(g, drop=q) == N for q in range(g.n))


@pytest.mark.parametrize("g", small_graphs(), ids=repr)
def test_contract_then_count(g):
    for u, v in g.pairs:
        h = contract_edge(g, u, v)
        assert h.n == g.n - 1 and len(h.edges) == len(g.edges) - 1
        assert delete_edge(g.add_edge(u, v), u, v) == g


def test_text_round_trip():
    text = "4\n0 1\n# comment\n1 2  # trailing\n2 2\n\n2 3\n0 1\n"
    g = parse_graph(text)
    assert g == Multigraph(4, [(0, 1), (0, 1), (1, 2), (2, 2), (2, 3)])
    assert parse_graph(format_graph(g)) == g
    assert format_graph(parse_graph(format_graph(g))) == format_graph(g)


@pytest.mark.parametrize("text", ["", "x\n", "3\n0\n", "3\n0 a\n", "2\n0 5\n", "3\n0 1\n"])
def test_text_errors(text):
    with pytest.raises(CritModError):
        parse_graph(text)


def test_format_error_type():
    with pytest.raises(GraphFormatError):
        parse_graph("2\n0 1 1\n")


def test_immutability_and_equality():
    a = cycle_graph(3)
    b = Multigraph(3, [(2, 1), (1, 0), (0, 2)])
    assert a == b and hash(a) == hash(b)
    with pytest.raises(AttributeError):
        a.n = 4


def test_pickle_round_trip(k4):
    import pickle

    from critmod.orientations import enumerate_acyclic
    looped = Multigraph(2, [(0, 1), (1, 1)])
    assert pickle.loads(pickle.dumps(looped)) == looped
    a = enumerate_acyclic(k4)[5]
    assert pickle.loads(pickle.dumps(a)) == a
