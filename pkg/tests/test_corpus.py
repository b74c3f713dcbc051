from itertools import permutations

import pytest

from critmod.corpus import (EXACTNESS_GRAPHS, generate_multigraphs, load_corpus, medium_corpus,
                            merino_corpus, named_graphs, write_corpus)

from oracles import multigraph_classes_brute

# connected multigraphs with <= 8 edges, loops counted, by vertex count; n = 5 frozen from a
# one-off run of multigraph_classes_brute (about 45 s)
CLASS_COUNTS = {1: 9, 2: 70, 3: 349, 4: 1068, 5: 1804}


def _canon(g):
    return min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges))
               for p in permutations(range(g.n)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_generator_vs_brute_force(n):
    got = [g for g in generate_multigraphs(n, 8) if g.n == n]
    assert {_canon(g) for g in got} == multigraph_classes_brute(n, 8)
    assert len(got) == CLASS_COUNTS[n]


def test_merino_corpus_shape():
    gs = merino_corpus()
    assert len(gs) == sum(CLASS_COUNTS.values())
    for n in range(1, 6):
        of_n = [g for g in gs if g.n == n]
        assert len(of_n) == CLASS_COUNTS[n]
        assert len({_canon(g) for g in of_n}) == len(of_n)
    assert all(len(g.edges) <= 8 for g in gs)
    assert any(g.loops for g in gs) and any(max(g.mult.values(), default=0) > 1 for g in gs)


def test_medium_corpus_contains_named():
    gs = medium_corpus()
    assert len(gs) == len(set(gs))
    for g in named_graphs().values():
        assert g in gs
    assert set(EXACTNESS_GRAPHS) <= set(named_graphs())


def test_named_graph_shapes(named):
    assert named["theta"].genus == 2 and named["theta"].n == 5
    assert named["triple_path"].multiplicity(0, 1) == 3
    assert named["triangle_loop"].loops == 1


def test_round_trip(tmp_path, named):
    write_corpus(tmp_path, named)
    assert load_corpus(tmp_path) == named


def test_shipped_corpus_matches_named():
    import os
    here = os.path.join(os.path.dirname(__file__), os.pardir, "corpus")
    assert load_corpus(here) == named_graphs()
