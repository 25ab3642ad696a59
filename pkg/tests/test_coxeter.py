from collections import deque
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subword_shell.coxeter import (
    CoxeterSystem, bruhat_leq, demazure_product, element_of_word, inverse,
    is_reduced_word, left_descents, length, multiply, reduced_words, right_descents,
)
from subword_shell.errors import InvalidGenerator
from subword_shell.oracles import exhaustive_bruhat

from conftest import SMALL_SYSTEMS, elements, systems, words

A3 = CoxeterSystem.A(3)
PI = A3.element((2, 4, 3, 1))


def bfs_lengths(sys):
    """Word length by breadth-first search on the Cayley graph."""
    e = sys.identity()
    dist = {e.value: 0}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in sys.generators:
            h = sys.mul_right(g, s)
            if h.value not in dist:
                dist[h.value] = dist[g.value] + 1
                queue.append(h)
    return dist


@pytest.mark.parametrize("sys", SMALL_SYSTEMS + [CoxeterSystem.A(4), CoxeterSystem.I2(12)], ids=str)
def test_length_matches_cayley_graph(sys):
    dist = bfs_lengths(sys)
    assert len(dist) == len(sys.elements())
    for g in sys.elements():
        assert g.length == dist[g.value]


@pytest.mark.parametrize("sys,order", [
    (CoxeterSystem.A(3), 24), (CoxeterSystem.B(3), 48), (CoxeterSystem.I2(5), 10),
])
def test_group_orders(sys, order):
    assert len(sys.elements()) == order


def test_element_of_word_examples():
    assert element_of_word(A3, ()).value == (1, 2, 3, 4)
    assert element_of_word(A3, (1, 2, 3, 2)) == PI
    assert PI.length == 4
    assert A3.element((4, 3, 2, 1)).length == 6


def test_i2_longest_element():
    I25 = CoxeterSystem.I2(5)
    w0 = element_of_word(I25, (1, 2, 1, 2, 1))
    assert w0.length == 5 == max(g.length for g in I25.elements())
    assert w0 == element_of_word(I25, (2, 1, 2, 1, 2))


def test_coxeter_matrix_b():
    assert CoxeterSystem.B(3).coxeter_matrix == ((1, 4, 2), (4, 1, 3), (2, 3, 1))


def test_invalid_generator():
    with pytest.raises(InvalidGenerator):
        element_of_word(A3, (1, 4))
    with pytest.raises(ValueError):
        CoxeterSystem.I2(2)


def test_reduced_word_examples():
    assert is_reduced_word(A3, (1, 2, 3, 2))
    assert not is_reduced_word(A3, (1, 1))
    # prefix-length scan by hand: 1, 2, 3, 4
    lengths = [element_of_word(A3, (2, 1, 3, 2)[:k]).length for k in range(5)]
    assert lengths == [0, 1, 2, 3, 4]
    assert is_reduced_word(A3, (2, 1, 3, 2))


def test_descents_examples():
    assert left_descents(A3, A3.identity()) == frozenset()
    assert left_descents(A3, PI) == {1, 3}
    assert left_descents(A3, A3.element((4, 3, 2, 1))) == {1, 2, 3}


def test_reduced_words_examples():
    assert set(reduced_words(A3, PI)) == {(1, 2, 3, 2), (1, 3, 2, 3), (3, 1, 2, 3)}
    assert reduced_words(A3, A3.identity()) == ((),)
    A2 = CoxeterSystem.A(2)
    assert set(reduced_words(A2, A2.element((3, 2, 1)))) == {(1, 2, 1), (2, 1, 2)}


def test_bruhat_examples():
    s2 = element_of_word(A3, (2,))
    s1s3 = element_of_word(A3, (1, 3))
    assert not bruhat_leq(A3, s2, s1s3)
    assert not exhaustive_bruhat(A3, s2, s1s3)
    assert bruhat_leq(A3, A3.identity(), PI)
    assert bruhat_leq(A3, PI, PI)


def test_demazure_examples():
    assert demazure_product(A3, (1, 1)) == element_of_word(A3, (1,))
    assert demazure_product(A3, (1, 2, 2, 2, 3)) == element_of_word(A3, (1, 2, 3))


@given(elements(), st.data())
def test_length_changes_by_one(gs, data):
    sys, g = gs
    s = data.draw(st.sampled_from(list(sys.generators)))
    assert abs(sys.mul_right(g, s).length - g.length) == 1
    assert abs(sys.mul_left(s, g).length - g.length) == 1
    assert (s in right_descents(sys, g)) == (sys.mul_right(g, s).length < g.length)


@given(elements())
def test_inverse_and_reduced_words(gs):
    sys, g = gs
    assert multiply(sys, g, inverse(sys, g)) == sys.identity()
    assert length(sys, inverse(sys, g)) == g.length
    rws = reduced_words(sys, g)
    assert list(rws) == sorted(set(rws))
    for w in rws:
        assert len(w) == g.length and element_of_word(sys, w) == g


@given(systems.flatmap(lambda s: st.tuples(st.just(s), words(s, 0, 10))))
def test_demazure_absorbs_descents_and_concatenates(sw):
    sys, w = sw
    d = demazure_product(sys, w)
    assert d.length <= len(w)
    if is_reduced_word(sys, w):
        assert d == element_of_word(sys, w)
    for s in right_descents(sys, d):
        assert demazure_product(sys, w + (s,)) == d
    half = len(w) // 2
    head = reduced_words(sys, demazure_product(sys, w[:half]))[0]
    assert demazure_product(sys, head + w[half:]) == d
    # every subword product lies below the Demazure product
    sub = [s for k, s in enumerate(w) if k % 2 == 0]
    assert bruhat_leq(sys, element_of_word(sys, sub), d)


@pytest.mark.parametrize("sys", [CoxeterSystem.A(3), CoxeterSystem.B(2), CoxeterSystem.I2(5)], ids=str)
def test_bruhat_agrees_with_oracle_everywhere(sys):
    els = sys.elements()
    for u, w in product(els, els):
        assert bruhat_leq(sys, u, w) == exhaustive_bruhat(sys, u, w)
