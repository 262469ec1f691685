import pytest

from heckejones.coxeter import Permutation, all_permutations, evaluate_word
from heckejones.laurent import LaurentPoly
from heckejones.matrices import HeckeMatrix
from heckejones.tableaux import cell_of, partitions, representative
from heckejones.wgraph import build_wgraph, edge_weight, generator_matrices, verify_hecke_relations

q = LaurentPoly.gen()
one = LaurentPoly.const(1)
zero = LaurentPoly()


def test_s3_two_vertex_graph():
    s1 = Permutation.generator(1, 3)
    graph = build_wgraph(cell_of(s1))
    assert graph.vertices == (s1, evaluate_word([2, 1], 3))
    assert graph.descents == (frozenset({1}), frozenset({2}))
    assert edge_weight(s1, evaluate_word([2, 1], 3)) == 1
    t1, t2 = generator_matrices(graph)
    assert t1 == HeckeMatrix([[-(q ** -1), one], [zero, q]])
    assert t2 == HeckeMatrix([[q, zero], [one, -(q ** -1)]])


def test_weights_are_symmetric():
    graph = build_wgraph(cell_of(representative((3, 3))))
    for (a, b), m in graph.edges.items():
        assert graph.weight(b, a) == m


@pytest.mark.parametrize("n", range(2, 7))
def test_every_cell_gives_a_hecke_module(n):
    for lam in partitions(n):
        graph = build_wgraph(cell_of(representative(lam)), check=False)
        report = verify_hecke_relations(generator_matrices(graph))
        assert report.ok, (lam, report.failures())


def test_distinct_cells_of_one_shape_give_equal_traces():
    # two left cells of shape [2,1] carry isomorphic modules
    cells = {cell_of(w).members for w in all_permutations(3) if cell_of(w).shape == (2, 1)}
    assert len(cells) == 2
    traces = [[m.trace() for m in generator_matrices(build_wgraph(cell_of(c[0])))] for c in cells]
    assert traces[0] == traces[1]


def test_relation_report_detects_failure():
    graph = build_wgraph(cell_of(representative((2, 2))))
    mats = generator_matrices(graph)
    mats[0] = mats[0].scale(q)
    report = verify_hecke_relations(mats)
    assert not report.ok
    assert "quadratic[1]" in report.failures()


def test_generator_out_of_range():
    from heckejones.wgraph import generator_matrix
    graph = build_wgraph(cell_of(representative((2, 1))))
    with pytest.raises(ValueError):
        generator_matrix(graph, 3)
