from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subword_shell.complexes import alexander_dual_ideal, minimal_nonfaces, subword_complex
from subword_shell.coxeter import CoxeterSystem, element_of_word
from subword_shell.errors import MixedDegrees, NoLinearQuotients, UnitIdeal, ZeroIdeal
from subword_shell.ideals import (
    BettiTable, HilbertNumerator, MonomialIdeal, betti_from_certificate,
    colon_by_monomial, has_linear_quotients, height, hilbert_numerator,
    lex_compare, lex_sorted, linear_quotients_certificate, min_formula_sets,
    monomial, monomial_str, projdim_bound_check, regularity_of_SR_ideal,
    set_via_min_formula,
)
from subword_shell.oracles import hochster_betti
from subword_shell.words import demazure_subwords, representations

from conftest import instances

A3 = CoxeterSystem.A(3)
PI = A3.element((2, 4, 3, 1))
Q15 = (1, 2, 1, 3, 1, 2, 3, 1)
G15 = [monomial(1, 2, 4, 6), monomial(1, 4, 6, 7), monomial(3, 4, 6, 7), monomial(4, 5, 6, 7)]
I15 = MonomialIdeal(8, tuple(G15))


def test_lex_compare():
    assert lex_compare(G15[0], G15[1]) == 1
    assert lex_compare(G15[2], G15[2]) == 0
    assert lex_compare(monomial(2, 3), monomial(1, 4)) == -1
    assert lex_sorted(reversed(G15)) == G15
    assert monomial_str(G15[0]) == "x1x2x4x6"
    assert monomial_str(()) == "1"


def test_ideal_normalisation():
    I = MonomialIdeal(4, (monomial(1, 2, 3), monomial(1, 2), monomial(3, 4)))
    assert I.gens == (monomial(1, 2), monomial(3, 4))
    assert MonomialIdeal(3, (monomial(), monomial(1))).is_unit
    assert MonomialIdeal(3).is_zero
    with pytest.raises(ValueError):
        MonomialIdeal(2, (monomial(3),))


def test_colon_examples():
    assert colon_by_monomial(MonomialIdeal(8, (G15[0],)), G15[1]).gens == (monomial(2),)
    assert colon_by_monomial(MonomialIdeal(8, tuple(G15[:3])), G15[3]).gens == (monomial(1), monomial(3))
    assert colon_by_monomial(I15, monomial(1, 2, 4, 6, 8)).is_unit


def test_certificate_example():
    cert = linear_quotients_certificate(I15)
    assert list(cert.order) == G15
    assert list(cert.sets) == [set(), {2}, {1}, {1, 3}]
    assert cert.d == (0, 1, 1, 2) and cert.projdim == 2
    principal = linear_quotients_certificate(MonomialIdeal(3, (monomial(1, 2),)))
    assert principal.sets == (frozenset(),)


def test_certificate_failure_index():
    I = MonomialIdeal(4, (monomial(1, 2), monomial(3, 4)))
    for order in ([monomial(1, 2), monomial(3, 4)], [monomial(3, 4), monomial(1, 2)]):
        with pytest.raises(NoLinearQuotients) as exc:
            linear_quotients_certificate(I, order)
        assert exc.value.index == 2
    assert not has_linear_quotients(I)
    with pytest.raises(ValueError):
        linear_quotients_certificate(I, [monomial(1, 2)])


def test_min_formula_counterexample():
    w = [monomial(1, 2, 3), monomial(2, 3, 4), monomial(2, 4, 5)]
    cert = linear_quotients_certificate(MonomialIdeal(5, tuple(w)), w)
    assert list(cert.sets) == [set(), {1}, {3}]
    formula = min_formula_sets(w)
    assert formula[1] == {1}
    assert formula[2] == {1, 3} != cert.sets[2]


def test_min_formula_guard():
    reps = representations(A3, Q15, PI)
    assert set_via_min_formula(reps) == [set(), {2}, {1}, {1, 3}]
    assert set_via_min_formula(reps[:1]) == [set()]
    with pytest.raises(TypeError):
        set_via_min_formula([r.support for r in reps])
    with pytest.raises(ValueError):
        set_via_min_formula(list(reversed(reps)))


def test_betti_example():
    cert = linear_quotients_certificate(I15)
    b = betti_from_certificate(cert)
    assert b.entries == {(0, 4): 4, (1, 5): 4, (2, 6): 1}
    assert b == hochster_betti(I15)
    assert b.projdim == 2 and b.regularity == 4
    principal = betti_from_certificate(linear_quotients_certificate(MonomialIdeal(3, (monomial(1, 3),))))
    assert principal.entries == {(0, 2): 1}
    mixed = MonomialIdeal(3, (monomial(1), monomial(2, 3)))
    with pytest.raises(MixedDegrees):
        betti_from_certificate(linear_quotients_certificate(mixed))


def test_projdim_and_regularity_examples():
    cert = linear_quotients_certificate(I15)
    assert projdim_bound_check(cert, 8, 4)
    assert regularity_of_SR_ideal(A3, Q15, PI) == (3, 5, True)
    assert regularity_of_SR_ideal(A3, (1, 2, 3, 2), PI) == (1, 1, True)
    assert regularity_of_SR_ideal(A3, (1, 2, 2, 2, 3), element_of_word(A3, (1, 2, 3))) == (3, 3, True)


def test_hilbert_numerator_routes():
    cert = linear_quotients_certificate(I15)
    resolution = hilbert_numerator(I15, cert)
    census = hilbert_numerator(subwords=demazure_subwords(A3, Q15, PI), ell=4)
    assert str(resolution) == "4t^4 - 4t^5 + t^6"
    assert resolution == census
    assert sum(census.fine.values()) == 1
    assert str(hilbert_numerator(cert=linear_quotients_certificate(MonomialIdeal(4, (monomial(1, 2, 3),))))) == "t^3"
    with pytest.raises(ValueError):
        HilbertNumerator({2: 1}, {monomial(1): 1})


def test_height_examples():
    assert height(MonomialIdeal(5, (monomial(1, 2, 5), monomial(1, 3, 5), monomial(1, 4, 5)))) == 1
    assert height(MonomialIdeal(2, (monomial(1), monomial(2)))) == 2
    assert height(I15) == 1
    with pytest.raises(ZeroIdeal):
        height(MonomialIdeal(2))
    with pytest.raises(UnitIdeal):
        height(MonomialIdeal(2, (monomial(),)))


def brute_height(I):
    vs = sorted(frozenset().union(*I.gens))
    return min(k for k in range(len(vs) + 1) for c in combinations(vs, k)
               if all(g & set(c) for g in I.gens))


squarefree_ideals = st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.frozensets(st.integers(1, n), min_size=1), min_size=1, max_size=5),
))


@given(squarefree_ideals)
def test_height_is_min_cover(ng):
    n, gens = ng
    I = MonomialIdeal(n, tuple(gens))
    assert height(I) == brute_height(I)


@given(squarefree_ideals)
def test_colon_contains_ideal(ng):
    n, gens = ng
    I = MonomialIdeal(n, tuple(gens))
    u = gens[0]
    J = colon_by_monomial(I, u)
    assert all(J.contains_monomial(g) for g in I.gens)
    assert J.is_unit


@given(instances(max_word=8))
def test_linear_quotients_and_set_bounds(inst):
    sys, Q, pi = inst
    delta = subword_complex(sys, Q, pi)
    I = alexander_dual_ideal(delta)
    cert = linear_quotients_certificate(I)
    reps = representations(sys, Q, pi)
    assert list(cert.order) == [p.support for p in reps]
    assert list(cert.sets) == set_via_min_formula(reps)
    for w, s in zip(cert.order, cert.sets):
        # set(w_i) avoids supp(w_i) and stays below max(w_i)
        assert not (s & w) and all(v < max(w) for v in s)
    assert projdim_bound_check(cert, len(Q), pi.length)
    # d_i = i - 1 propagates backwards
    for i in range(1, len(cert.d)):
        if cert.d[i] == i:
            assert cert.d[i - 1] == i - 1


@given(instances(max_word=7))
def test_betti_from_certificate_matches_hochster(inst):
    sys, Q, pi = inst
    I = alexander_dual_ideal(subword_complex(sys, Q, pi))
    cert = linear_quotients_certificate(I)
    assert betti_from_certificate(cert) == hochster_betti(I)
    assert hilbert_numerator(cert=cert) == hilbert_numerator(
        subwords=demazure_subwords(sys, Q, pi), ell=pi.length)


@given(instances(max_word=7))
def test_terai_regularity(inst):
    sys, Q, pi = inst
    delta = subword_complex(sys, Q, pi)
    reg = regularity_of_SR_ideal(sys, Q, pi)
    I_delta = minimal_nonfaces(delta)
    if not I_delta.is_zero:
        assert hochster_betti(I_delta).regularity == reg.reg
    assert reg.within_bound


def test_betti_table_helpers():
    b = BettiTable({(0, 3): 3, (1, 4): 3, (2, 5): 1})
    assert b.totals() == (3, 3, 1)
    assert b.rows() == [[0, 3, 3], [1, 4, 3], [2, 5, 1]]
    assert BettiTable().projdim == -1
