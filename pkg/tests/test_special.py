import pytest
from hypothesis import assume, given

from subword_shell.analysis import analyze
from subword_shell.complexes import alexander_dual_ideal, minimal_nonfaces, subword_complex
from subword_shell.coxeter import CoxeterSystem, demazure_product, element_of_word
from subword_shell.errors import NotSpecial
from subword_shell.ideals import MonomialIdeal, height, linear_quotients_certificate, monomial
from subword_shell.oracles import hochster_betti, simplicial_homology
from subword_shell.special import (
    census_check, ci_and_cm, detect_and_factor, expected_census, has_linear_resolution,
    special_formulas, sphere_criterion,
)
from subword_shell.words import demazure_census, representations

from conftest import instances

A3 = CoxeterSystem.A(3)
S123 = element_of_word(A3, (1, 2, 3))


def report_for(sys, Q, pi):
    delta = subword_complex(sys, Q, pi)
    cert = linear_quotients_certificate(alexander_dual_ideal(delta))
    return delta, detect_and_factor(cert, representations(sys, Q, pi), len(Q), pi.length)


def test_repeated_letter_example():
    Q = (1, 2, 2, 2, 3)
    delta, rep = report_for(A3, Q, S123)
    assert rep.is_special and rep.r == 3
    assert rep.pivot_l == 4 and rep.pivot_unique
    assert rep.common_factor == {1, 5} and rep.linear_vars == (2, 3, 4)
    rep = special_formulas(rep)
    assert rep.betti.totals() == (3, 3, 1)
    assert str(rep.numerator) == "3t^3 - 3t^4 + t^5"
    assert expected_census(rep) == {3: 3, 4: 3, 5: 1}
    assert census_check(A3, Q, S123, rep)
    sphere = sphere_criterion(A3, Q, S123, rep, delta)
    assert sphere == (True, True, True)
    rep = ci_and_cm(rep, delta)
    assert rep.ci_generators == MonomialIdeal(5, (monomial(2, 3, 4), monomial(1), monomial(5)))
    assert rep.ci_disjoint
    assert rep.cm_dual is False and rep.cm_dual_formula is False


def test_single_representation():
    Q = (1, 2, 3, 2)
    pi = A3.element((2, 4, 3, 1))
    delta, rep = report_for(A3, Q, pi)
    assert rep.is_special and rep.r == 1 and not rep.pivot_unique
    assert rep.dual_generators == [frozenset({1, 2, 3, 4})]
    rep = special_formulas(rep)
    assert rep.betti.entries == {(0, 4): 1} and str(rep.numerator) == "t^4"
    assert census_check(A3, Q, pi, rep)
    assert sphere_criterion(A3, Q, pi, rep, delta).verdict
    rep = ci_and_cm(rep, delta)
    # I_Delta is generated by the variables of x_{P_1}
    assert rep.ci_generators == MonomialIdeal(4, tuple(monomial(v) for v in (1, 2, 3, 4)))
    assert rep.cm_dual is True


def test_example_is_not_special():
    _, rep = report_for(A3, (1, 2, 1, 3, 1, 2, 3, 1), A3.element((2, 4, 3, 1)))
    assert not rep.is_special
    with pytest.raises(NotSpecial):
        special_formulas(rep)


def test_non_sphere_special_instance():
    # r = 2 < n - l + 1 = 3
    Q = (1, 1, 2, 1)
    A2 = CoxeterSystem.A(2)
    pi = element_of_word(A2, (1, 2))
    delta, rep = report_for(A2, Q, pi)
    assert rep.is_special and rep.r == 2
    sphere = sphere_criterion(A2, Q, pi, rep, delta)
    assert sphere.verdict is False and sphere.ok
    assert simplicial_homology(delta)[len(Q) - pi.length - 1] == 0


def test_length_one_element_with_repeats():
    # pi a single generator repeated: the common factor is trivial
    Q = (1, 1)
    pi = element_of_word(A3, (1,))
    delta, rep = report_for(A3, Q, pi)
    assert rep.is_special and rep.r == 2 and rep.common_factor == frozenset()
    I = alexander_dual_ideal(delta)
    assert I.gens == (monomial(1), monomial(2))
    assert height(I) == 2
    assert minimal_nonfaces(delta).gens == (monomial(1, 2),)
    rep = ci_and_cm(special_formulas(rep), delta)
    assert rep.cm_dual is True and rep.cm_dual_formula is False


def test_linear_resolution():
    assert has_linear_resolution(MonomialIdeal(3, (monomial(1, 2), monomial(2, 3))))
    assert not has_linear_resolution(MonomialIdeal(4, (monomial(1, 2), monomial(3, 4))))


@given(instances(max_word=8))
def test_special_class_identities(inst):
    sys, Q, pi = inst
    delta, rep = report_for(sys, Q, pi)
    assume(rep.is_special)
    n, ell, r = len(Q), pi.length, rep.r
    rep = special_formulas(rep)
    assert hochster_betti(alexander_dual_ideal(delta)) == rep.betti
    assert demazure_census(sys, Q, pi) == expected_census(rep)
    assert sphere_criterion(sys, Q, pi, rep, delta).ok
    assert (demazure_product(sys, Q) == pi) == (r == n - ell + 1)
    rep = ci_and_cm(rep, delta)
    assert rep.ci_disjoint
    # height and Cohen-Macaulayness of the dual, including the l(pi) = 1 case
    I = alexander_dual_ideal(delta)
    assert (height(I) == 1) == (ell >= 2 or r == 1)
    assert rep.cm_dual == (r == 1 or ell == 1)


def test_analyze_flags_length_one_instances():
    rep = analyze(A3, (1, 1), element_of_word(A3, (1,)))
    assert set(rep.failures) == {"special_height", "special_cm_dual"}
    rep = analyze(A3, (1, 2, 2, 2, 3), S123)
    assert rep.failures == []
