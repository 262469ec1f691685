from itertools import combinations, product

import pytest
from hypothesis import given

from heckejones.coxeter import (Permutation, all_permutations, bruhat_leq, evaluate_word, format_word,
                                is_reduced, left_descents, length, longest_element, multiply,
                                parse_word, reduced_word, right_descents)

from conftest import permutations


def all_reduced_words(w):
    """Every reduced word of w, by recursion on left descents."""
    if length(w) == 0:
        return [()]
    out = []
    for i in sorted(left_descents(w)):
        out.extend((i,) + rest for rest in all_reduced_words(w.lmul(i)))
    return out


def subword_leq(y, w):
    """Oracle: y <= w iff a reduced word of y is a subword of a reduced word of w."""
    target = reduced_word(y)
    word = reduced_word(w)
    k = len(target)
    for positions in combinations(range(len(word)), k):
        if evaluate_word([word[p] for p in positions], len(w)) == y:
            return True
    return False


def test_multiply_by_hand():
    assert multiply(Permutation([2, 1, 3]), Permutation([1, 3, 2])) == Permutation([2, 3, 1])


def test_multiply_size_mismatch():
    with pytest.raises(ValueError):
        multiply(Permutation([1, 2]), Permutation([1, 2, 3]))


def test_invalid_permutation():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


def test_examples():
    s1, s2 = Permutation.generator(1, 3), Permutation.generator(2, 3)
    assert s1 * s1 == Permutation.identity(3)
    assert length(Permutation([2, 3, 1])) == 2
    assert reduced_word(Permutation([2, 3, 1])) == (1, 2)
    assert left_descents(s1) == {1}
    assert left_descents(s2 * s1) == {2}
    assert left_descents(Permutation.identity(4)) == frozenset()
    assert not bruhat_leq(s1, s2)
    assert length(longest_element(7)) == 21


def test_s1s3s5_word():
    w = evaluate_word([1, 3, 5], 6)
    word = reduced_word(w)
    assert len(word) == 3 and set(word) == {1, 3, 5}


def test_parse_and_format():
    assert parse_word("s1s3s5") == (1, 3, 5)
    assert parse_word("1,3,5") == (1, 3, 5)
    assert parse_word("s_1 s_3") == (1, 3)
    assert parse_word("") == () and parse_word("e") == ()
    assert format_word((1, 3, 5)) == "1,3,5"
    assert str(Permutation.parse("2 3 1")) == "2 3 1"


@pytest.mark.parametrize("n", range(1, 7))
def test_reduced_word_round_trip(n):
    for w in all_permutations(n):
        word = reduced_word(w)
        assert evaluate_word(word, n) == w
        assert is_reduced(word, n)


@pytest.mark.parametrize("n", range(2, 6))
def test_bruhat_matches_subword_oracle(n):
    perms = all_permutations(n)
    for y, w in product(perms, perms):
        assert bruhat_leq(y, w) == subword_leq(y, w)


@pytest.mark.parametrize("n", range(2, 6))
def test_exchange_property(n):
    for w in all_permutations(n):
        firsts = {word[0] for word in all_reduced_words(w) if word}
        assert firsts == left_descents(w)


@given(permutations(min_n=2))
def test_length_changes_by_one(w):
    for i in range(1, len(w)):
        assert abs(length(w.lmul(i)) - length(w)) == 1
        assert (length(w.lmul(i)) < length(w)) == (i in left_descents(w))
        assert (length(w.rmul(i)) < length(w)) == (i in right_descents(w))


@given(permutations(), permutations())
def test_bruhat_refines_length(y, w):
    if len(y) != len(w):
        return
    if bruhat_leq(y, w) and y != w:
        assert length(y) < length(w)
        assert not bruhat_leq(w, y)


@given(permutations(max_n=5), permutations(max_n=5), permutations(max_n=5))
def test_bruhat_transitive(a, b, c):
    if not len(a) == len(b) == len(c):
        return
    if bruhat_leq(a, b) and bruhat_leq(b, c):
        assert bruhat_leq(a, c)


@given(permutations(), permutations(), permutations())
def test_multiplication_associative(a, b, c):
    if not len(a) == len(b) == len(c):
        return
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Permutation.identity(len(a))


@given(permutations())
def test_inversion_count_matches_word_length(w):
    assert length(w) == len(reduced_word(w)) == length(w.inverse())
