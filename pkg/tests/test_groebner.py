"""Engine tests: S-polynomials, ordered division, Buchberger, monomial ideals.

Expected values come from hand-checkable long division, the worked
three-variable example, and the principal-ideal lcm rule for intersections.
"""

import itertools

import pytest
from hypothesis import given, settings

from conftest import nonzero_polynomials, polynomials, seeded
from tensorcert.groebner import (
    BudgetExceededError,
    GroebnerBasis,
    IdealPresentation,
    MonomialIdeal,
    StepBudget,
    buchberger,
    buchberger_criterion,
    groebner_basis,
    initial_ideal,
    membership,
    normal_form,
    reduce_basis,
    reduce_standard_form,
    s_polynomial,
)
from tensorcert.ideals import intersect_pair
from tensorcert.parse import parse_polynomial
from tensorcert.poly import MonomialOrder, leading_term, mono_divides, monic
from tensorcert.xyz import elimination_order, letter_block_order, xyz_ring

R1 = xyz_ring(1)
LEX = MonomialOrder(("x1", "y1", "z1"))


def p(text, ring=R1):
    return parse_polynomial(text, ring)


def pres(texts, order=LEX, ring=R1):
    return IdealPresentation(tuple(p(t, ring) for t in texts), order)


class TestSPolynomial:
    def test_worked_example(self):
        s = s_polynomial(p("x1 - y1"), p("x1 - z1"), LEX)
        assert s == p("z1 - y1")

    def test_coprime_leads_cancel_fully(self):
        s = s_polynomial(p("x1"), p("y1"), LEX)
        assert s.is_zero()

    def test_self_pair_is_zero(self):
        f = p("x1^2 - y1*z1")
        assert s_polynomial(f, f, LEX).is_zero()

    def test_zero_input_rejected(self):
        with pytest.raises(ValueError):
            s_polynomial(R1.zero, p("x1"), LEX)

    @given(f=nonzero_polynomials(R1), g=nonzero_polynomials(R1))
    @settings(max_examples=80)
    def test_leading_terms_cancel(self, f, g):
        s = s_polynomial(f, g, LEX)
        if s.is_zero():
            return
        from tensorcert.poly import mono_lcm

        lcm = mono_lcm(leading_term(f, LEX)[0], leading_term(g, LEX)[0])
        key = LEX.key_for(R1)
        assert key(leading_term(s, LEX)[0]) < key(lcm)


class TestDivision:
    def test_remainder_survives_when_leads_do_not_divide(self):
        quotients, remainder = reduce_standard_form(p("y1 - z1"), pres(["x1 - y1", "x1 - z1"]))
        assert remainder == p("y1 - z1")
        assert all(q.is_zero() for q in quotients)

    def test_exact_division(self):
        _, remainder = reduce_standard_form(p("x1 - y1"), pres(["x1 - y1"]))
        assert remainder.is_zero()

    def test_hand_long_division(self):
        quotients, remainder = reduce_standard_form(p("x1^2"), pres(["x1 - y1"]))
        assert quotients == [p("x1 + y1")]
        assert remainder == p("y1^2")

    def test_divisor_list_order_matters(self):
        f = p("x1^2*y1")
        first = reduce_standard_form(f, pres(["x1^2", "x1 - z1"]))[1]
        second = reduce_standard_form(f, pres(["x1 - z1", "x1^2"]))[1]
        assert first.is_zero()
        assert second == p("y1*z1^2")

    @given(f=polynomials(R1, max_terms=6), g1=nonzero_polynomials(R1), g2=nonzero_polynomials(R1))
    @settings(max_examples=80)
    def test_reconstruction_identity(self, f, g1, g2):
        divisors = IdealPresentation((g1, g2), LEX)
        quotients, remainder = reduce_standard_form(f, divisors)
        rebuilt = quotients[0] * g1 + quotients[1] * g2 + remainder
        assert rebuilt == f
        lead1 = leading_term(g1, LEX)[0]
        lead2 = leading_term(g2, LEX)[0]
        for mono, _ in remainder.terms():
            assert not mono_divides(lead1, mono)
            assert not mono_divides(lead2, mono)


class TestBuchberger:
    def test_worked_example_gains_y_minus_z(self):
        basis = buchberger(pres(["x1 - y1", "x1 - z1"]))
        reduced = reduce_basis(basis)
        assert [str_poly(g) for g in reduced.elements] == ["y1 - z1", "x1 - z1"]

    def test_single_generator(self):
        basis = groebner_basis(pres(["x1"]))
        assert basis.elements == (p("x1"),)

    def test_criterion_holds_after_computation(self):
        basis = buchberger(pres(["x1^2 - y1", "x1*y1 - z1", "y1^2 - x1*z1"]))
        holds, witness = buchberger_criterion(basis.elements, LEX)
        assert holds and witness is None

    def test_criterion_detects_incomplete_basis(self):
        holds, witness = buchberger_criterion([p("x1 - y1"), p("x1 - z1")], LEX)
        assert not holds
        assert witness == p("z1 - y1") or witness == p("y1 - z1")

    def test_budget_exhaustion_is_distinct(self):
        tiny = StepBudget(2)
        with pytest.raises(BudgetExceededError):
            buchberger(pres(["x1^2 - y1", "x1*y1 - z1", "y1^2 - x1*z1"]), tiny)

    def test_optional_criteria_do_not_change_the_reduced_basis(self):
        presentation = pres(["x1^2 - y1*z1", "x1*y1 - z1^2", "x1*z1 - y1^2"])
        plain = reduce_basis(buchberger(presentation, skip_coprime_pairs=False))
        coprime = reduce_basis(buchberger(presentation, skip_coprime_pairs=True))
        chained = reduce_basis(buchberger(presentation, use_chain_criterion=True))
        assert plain.elements == coprime.elements == chained.elements


class TestReduceBasis:
    def test_interreduction(self):
        basis = GroebnerBasis(
            (p("x1 - y1"), p("x1 - z1"), p("y1 - z1")), LEX, reduced=False
        )
        reduced = reduce_basis(basis)
        assert [str_poly(g) for g in reduced.elements] == ["y1 - z1", "x1 - z1"]

    def test_idempotent(self):
        basis = reduce_basis(buchberger(pres(["x1 - y1", "x1 - z1"])))
        assert reduce_basis(basis) == basis

    def test_canonical_under_generator_permutation(self):
        rng = seeded("permute-generators")
        gens = [p("x1^2 - y1"), p("x1*y1 - z1"), p("z1^2 - x1")]
        reference = None
        for perm in itertools.permutations(gens):
            reduced = groebner_basis(IdealPresentation(perm, LEX))
            if reference is None:
                reference = reduced.elements
            assert reduced.elements == reference
        assert rng is not None

    def test_elements_are_monic(self):
        reduced = groebner_basis(pres(["-2*x1 + y1", "3*y1^2 - z1"]))
        for g in reduced.elements:
            assert leading_term(g, LEX)[1] == 1


class TestMembership:
    def test_membership_of_combination(self):
        basis = groebner_basis(pres(["x1 - y1", "x1 - z1"]))
        assert membership(p("y1 - z1"), basis)

    def test_zero_is_member(self):
        basis = groebner_basis(pres(["x1*y1"]))
        assert membership(R1.zero, basis)

    def test_degree_obstruction(self):
        basis = groebner_basis(pres(["x1*y1"]))
        assert not membership(p("x1"), basis)

    @given(
        c1=polynomials(R1, max_terms=2),
        c2=polynomials(R1, max_terms=2),
        g1=nonzero_polynomials(R1, max_terms=3),
        g2=nonzero_polynomials(R1, max_terms=3),
    )
    @settings(max_examples=40, deadline=None)
    def test_explicit_combinations_are_members(self, c1, c2, g1, g2):
        basis = groebner_basis(IdealPresentation((g1, g2), LEX))
        assert membership(c1 * g1 + c2 * g2, basis)


class TestElimination:
    def test_principal_coprime_lcm(self):
        order = elimination_order(1)
        plain = order.without("t")
        a = IdealPresentation((p("x1"),), plain)
        b = IdealPresentation((p("y1"),), plain)
        basis = intersect_pair(a, b, order)
        assert [str_poly(g) for g in basis.elements] == ["x1*y1"]

    def test_shared_factor_lcm(self):
        order = elimination_order(1)
        plain = order.without("t")
        a = IdealPresentation((p("x1*y1"),), plain)
        b = IdealPresentation((p("y1*z1"),), plain)
        basis = intersect_pair(a, b, order)
        assert len(basis.elements) == 1
        assert basis.elements[0] == p("x1*y1*z1")

    def test_linear_factor_products(self):
        rng = seeded("lcm-cases")
        order = elimination_order(1)
        plain = order.without("t")
        forms = [p("x1 + y1"), p("y1 + z1"), p("z1 + x1"), p("x1 - 2*z1")]
        for _ in range(6):
            take_a = sorted(rng.sample(range(4), rng.randint(1, 3)))
            take_b = sorted(rng.sample(range(4), rng.randint(1, 3)))
            fa = R1.one
            for i in take_a:
                fa = fa * forms[i]
            fb = R1.one
            for i in take_b:
                fb = fb * forms[i]
            lcm = R1.one
            for i in sorted(set(take_a) | set(take_b)):
                lcm = lcm * forms[i]
            basis = intersect_pair(
                IdealPresentation((fa,), plain), IdealPresentation((fb,), plain), order
            )
            assert len(basis.elements) == 1
            assert basis.elements[0] == monic(lcm, plain)

    def test_self_intersection(self):
        order = elimination_order(1)
        plain = order.without("t")
        ideal = IdealPresentation((p("x1 - y1"), p("y1^2 - z1")), plain)
        basis = intersect_pair(ideal, ideal, order)
        direct = groebner_basis(ideal)
        assert basis.elements == direct.elements

    def test_elimination_requires_t_order(self):
        plain = letter_block_order(1)
        ideal = IdealPresentation((p("x1"),), plain)
        with pytest.raises(ValueError):
            intersect_pair(ideal, ideal, plain)


class TestMonomialIdeals:
    def test_intersection_is_lcm(self):
        a = MonomialIdeal.from_monomials(R1, [mono({"x1": 1, "y1": 1})])
        b = MonomialIdeal.from_monomials(R1, [mono({"x1": 2})])
        assert a.intersect(b).equals(
            MonomialIdeal.from_monomials(R1, [mono({"x1": 2, "y1": 1})])
        )

    def test_self_intersection(self):
        a = MonomialIdeal.from_monomials(R1, [mono({"x1": 1}), mono({"y1": 2})])
        assert a.intersect(a).equals(a)

    def test_minimalization(self):
        a = MonomialIdeal.from_monomials(R1, [mono({"x1": 1}), mono({"x1": 2, "y1": 1})])
        assert a.minimal_generators == frozenset({mono({"x1": 1})})

    def test_squarefree(self):
        assert MonomialIdeal.from_monomials(
            R1, [mono({"x1": 1, "y1": 1, "z1": 1})]
        ).is_squarefree()
        assert not MonomialIdeal.from_monomials(R1, [mono({"x1": 2})]).is_squarefree()
        ring2 = xyz_ring(2)
        squarefree = MonomialIdeal.from_monomials(
            ring2, [mono({"x1": 1, "x2": 1, "y1": 1}, ring2)]
        )
        assert squarefree.is_squarefree()

    def test_initial_ideal_of_reduced_basis(self):
        basis = groebner_basis(pres(["x1 - z1", "y1 - z1"]))
        assert initial_ideal(basis).equals(
            MonomialIdeal.from_monomials(R1, [mono({"x1": 1}), mono({"y1": 1})])
        )

    def test_initial_ideal_principal(self):
        basis = groebner_basis(pres(["x1^2"]))
        assert initial_ideal(basis).equals(MonomialIdeal.from_monomials(R1, [mono({"x1": 2})]))


def mono(mapping, ring=R1):
    exps = [0] * ring.nvars
    for name, e in mapping.items():
        exps[ring.index(name)] = e
    return tuple(exps)


def str_poly(g):
    from tensorcert.parse import render_polynomial

    return render_polynomial(g, LEX)


def test_normal_form_is_unique_for_groebner_bases():
    basis = groebner_basis(pres(["x1^2 - y1", "x1*y1 - z1"]))
    f = p("x1^3 + x1*y1^2 - z1^2")
    shuffled = GroebnerBasis(tuple(reversed(basis.elements)), LEX, reduced=False)
    assert normal_form(f, basis) == normal_form(f, shuffled)
