from collections import defaultdict
from math import factorial

import pytest
from hypothesis import given

from heckejones.coxeter import Permutation, all_permutations, left_descents
from heckejones.tableaux import (YoungDiagram, cell_of, dimension, dual_knuth_neighbors, p_symbol,
                                 partitions, q_symbol, representative, restriction_shapes,
                                 rs_correspondence, standard_tableaux)

from conftest import permutations


def test_insertion_by_hand():
    p, q = rs_correspondence(Permutation([3, 1, 2]))
    assert p.rows == ((1, 2), (3,))
    assert q.rows == ((1, 3), (2,))


def test_diagram_parse_and_conjugate():
    lam = YoungDiagram.parse("[3,3]")
    assert lam == YoungDiagram((3, 3)) and lam.is_rectangular()
    assert YoungDiagram((4, 2, 1)).conjugate() == YoungDiagram((3, 2, 1, 1))
    with pytest.raises(ValueError):
        YoungDiagram((1, 2))


@pytest.mark.parametrize("shape,dim", [((2, 2), 2), ((3, 3), 5), ((4, 4), 14), ((5, 5), 42),
                                       ((3, 2, 1), 16), ((6, 6), 132)])
def test_hook_length_dimensions(shape, dim):
    assert dimension(shape) == dim


@pytest.mark.parametrize("n", range(1, 8))
def test_tableau_enumeration_matches_hook_formula(n):
    for lam in partitions(n):
        tabs = list(standard_tableaux(lam))
        assert len(tabs) == len(set(tabs)) == dimension(lam)
        assert all(t.shape == lam for t in tabs)


@pytest.mark.parametrize("n", range(1, 8))
def test_sum_of_squares(n):
    assert sum(dimension(lam) ** 2 for lam in partitions(n)) == factorial(n)


@pytest.mark.parametrize("n", range(2, 8))
def test_branching_rule(n):
    for lam in partitions(n):
        assert dimension(lam) == sum(dimension(mu) for mu in restriction_shapes(lam))


@pytest.mark.parametrize("n", range(1, 7))
def test_rs_is_bijection(n):
    pairs = {rs_correspondence(w) for w in all_permutations(n)}
    assert len(pairs) == factorial(n)
    assert all(p.shape == q.shape for p, q in pairs)


@given(permutations(max_n=7))
def test_q_symbol_is_recording_tableau(w):
    assert q_symbol(w) == rs_correspondence(w)[1]
    assert p_symbol(w.inverse()) == rs_correspondence(w)[1]


@pytest.mark.parametrize("n", range(2, 6))
def test_dual_knuth_classes_are_q_classes(n):
    by_q = defaultdict(set)
    for w in all_permutations(n):
        by_q[q_symbol(w)].add(w)
    for w in all_permutations(n):
        assert set(cell_of(w).members) == by_q[q_symbol(w)]


@given(permutations(max_n=7))
def test_dual_knuth_moves_preserve_q_symbol(w):
    for y in dual_knuth_neighbors(w):
        assert q_symbol(y) == q_symbol(w)


@pytest.mark.parametrize("shape", [(2, 2), (3, 3), (4, 4), (3, 2, 1), (5, 1), (4, 1, 1), (2, 2, 2)])
def test_representative_cell(shape):
    cell = cell_of(representative(shape))
    assert cell.shape == YoungDiagram(shape)
    assert len(cell) == dimension(shape)


def test_rectangular_representative_is_odd_generator_product():
    for g in (1, 2, 3):
        w = representative((g + 1, g + 1))
        assert left_descents(w) == set(range(1, 2 * g + 2, 2))


def test_cell_canonical_order():
    cell = cell_of(representative((3, 3)))
    lengths = [sum(1 for i in range(6) for j in range(i + 1, 6) if w[i] > w[j]) for w in cell.members]
    assert lengths == sorted(lengths)
    assert cell.members[0] == representative((3, 3))
