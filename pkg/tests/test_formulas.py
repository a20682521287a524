from fractions import Fraction

import pytest

from tqeuler import cfrac, combinat
from tqeuler.exactalg import LaurentPoly, ONE, Q, T, ZeroDenominatorError, const, monomial
from tqeuler.formulas import (
    DEFAULT_ZENG_BRACKET,
    SpecializationKey,
    TkValue,
    ZENG_SAMPLE_POINTS,
    alpha_step_holds,
    beta_step_holds,
    dist_box_closed,
    dn_touchard_riordan,
    euler_hat_at_minus_inv_q,
    euler_hat_at_minus_q,
    euler_hat_ballot,
    euler_hat_josuat_verges,
    euler_hat_odd_pochhammer,
    secant_hat_closed,
    secant_hat_original,
    tangent_hat_closed,
    tangent_hat_original,
    tk_at_minus_inv_q,
    tk_at_minus_q,
    tk_closed,
    tk_functional_equation_holds,
    tk_prodinger,
    tk_recurrence,
    tk_special,
    zeng_bracket_additive,
    zeng_bracket_qint,
    zeng_value,
)
from tqeuler.qkit import a_k_poly, square_sum

ONE_MINUS_Q = ONE - Q
T1 = LaurentPoly({(0, 0): 1, (0, 1): -1, (1, 1): -1})
T2 = LaurentPoly(
    {(0, 0): 1, (0, 1): -1, (1, 1): -1, (0, 3): -1, (2, 3): 1, (0, 4): 1, (1, 4): 1}
)

# empirical degree spans of T_k: t-exponents cover [0, k], q-exponents [0, k^2]
TK_DEGREE_BOX = {k: (0, k, 0, k * k) for k in range(9)}


class TestTkFamily:
    def test_base_cases(self):
        assert tk_recurrence(0) == ONE
        assert tk_recurrence(1) == T1
        assert tk_recurrence(2) == T2

    def test_closed_small(self):
        assert tk_closed(0) == ONE
        assert tk_closed(1) == T1

    def test_closed_equals_recurrence(self):
        for k in range(9):
            assert tk_closed(k) == tk_recurrence(k)

    def test_invariants(self):
        for k in range(9):
            assert TkValue.compute(k).invariants_hold()

    def test_degree_table(self):
        for k, box in TK_DEGREE_BOX.items():
            assert tk_recurrence(k).degree_box() == box

    def test_functional_equation(self):
        lhs = (ONE - T * Q) * tk_recurrence(1).shift_t_by_q(1)
        expected = LaurentPoly({(0, 0): 1, (0, 1): -1, (1, 1): -1, (2, 3): 1})
        assert lhs == expected
        for k in range(1, 9):
            assert tk_functional_equation_holds(k)

    def test_functional_equation_detects_corruption(self):
        corrupted = tk_recurrence(1) + monomial(1, 1, 1)  # drop the -t*q term
        lhs = (ONE - T * Q) * corrupted.shift_t_by_q(1)
        rhs = corrupted + monomial(1, 2, 3) * tk_recurrence(0)
        assert lhs != rhs


class TestSpecializations:
    def test_plus_q(self):
        got = tk_special(SpecializationKey(1, 1), 1)
        assert got == LaurentPoly({(0, 0): 1, (0, 1): -1, (0, 2): -1})

    def test_minus_one_any_k(self):
        for k in range(7):
            assert tk_special(SpecializationKey(-1, 0), k) == ONE

    def test_inverse_q_collapses(self):
        assert tk_special(SpecializationKey(1, -1), 2) == monomial(1, 0, 4)

    def test_all_quadrants_match_substitution(self):
        for k in range(7):
            for eps in (1, -1):
                for b in range(0, 5):
                    key = SpecializationKey(eps, b)
                    assert tk_special(key, k) == tk_recurrence(k).substitute_t(eps, b)
                for b in range(1, 5):
                    key = SpecializationKey(eps, -b)
                    assert tk_special(key, k) == tk_recurrence(k).substitute_t(eps, -b)

    def test_b_zero_reductions(self):
        for k in range(1, 9):
            assert tk_special(SpecializationKey(1, 0), k) == square_sum(k)
            assert tk_special(SpecializationKey(1, 1), k) == a_k_poly(k).divide_exact(ONE_MINUS_Q)

    def test_range_error(self):
        with pytest.raises(ValueError):
            tk_special(SpecializationKey(1, 1), -1)
        with pytest.raises(ValueError):
            SpecializationKey(0, 1)

    def test_prodinger(self):
        assert tk_prodinger(1, 0) == ONE
        assert tk_prodinger(1, 1) == LaurentPoly({(0, 0): 1, (0, 1): -1, (0, 2): -1})
        for b in range(1, 5):
            for k in range(7):
                assert tk_prodinger(b, k) == tk_recurrence(k).substitute_t(1, b)
        with pytest.raises(ValueError):
            tk_prodinger(0, 1)

    def test_minus_q_closed(self):
        assert tk_at_minus_q(0) == ONE
        assert tk_at_minus_q(1) == LaurentPoly({(0, 0): 1, (0, 1): -1, (0, 2): 1})
        for k in range(9):
            assert tk_at_minus_q(k) == tk_recurrence(k).substitute_t(-1, 1)

    def test_minus_inv_q_closed(self):
        assert tk_at_minus_inv_q(1) == LaurentPoly({(0, 0): 2, (0, 1): -1})
        for k in range(9):
            assert tk_at_minus_inv_q(k) == tk_recurrence(k).substitute_t(-1, -1)

    def test_alpha_beta_steps(self):
        for eps in (1, -1):
            for b in range(1, 6):
                for k in range(1, 6):
                    assert alpha_step_holds(eps, b, k)
                    assert beta_step_holds(eps, b, k)


class TestEulerFormulas:
    def test_ballot_form_small(self):
        assert euler_hat_ballot(0) == ONE
        assert euler_hat_ballot(1) == ONE_MINUS_Q * (ONE - T * Q)

    def test_ballot_form(self):
        for n in range(9):
            assert euler_hat_ballot(n) == cfrac.euler_hat(n)

    def test_odd_poch_sum(self):
        assert euler_hat_odd_pochhammer(1) == ONE_MINUS_Q * (ONE - T * Q)
        for n in range(9):
            assert euler_hat_odd_pochhammer(n) == cfrac.euler_hat(n)

    def test_josuat_verges(self):
        assert euler_hat_josuat_verges(1) == ONE_MINUS_Q * (ONE - T * Q)
        for n in range(7):
            assert euler_hat_josuat_verges(n) == cfrac.euler_hat(n)

    def test_secant_tangent_closed(self):
        assert secant_hat_closed(0) == ONE
        assert secant_hat_closed(2).divide_exact(ONE_MINUS_Q**4) == LaurentPoly(
            {(0, 0): 2, (0, 1): 2, (0, 2): 1}
        )
        assert tangent_hat_closed(1).divide_exact(ONE_MINUS_Q**2) == ONE + Q
        for n in range(7):
            eh = cfrac.euler_hat(n)
            assert secant_hat_closed(n) == eh.substitute_t(1, 0)
            assert tangent_hat_closed(n) == eh.substitute_t(1, 1)

    def test_original_forms(self):
        for n in range(7):
            assert secant_hat_original(n) == secant_hat_closed(n)
            assert tangent_hat_original(n) == ONE_MINUS_Q * tangent_hat_closed(n)

    def test_touchard_riordan(self):
        assert dn_touchard_riordan(0) == ONE
        assert dn_touchard_riordan(2) == LaurentPoly({(0, 0): 2, (0, 1): -3, (0, 3): 1})
        assert dn_touchard_riordan(2) == ONE_MINUS_Q**2 * (const(2) + Q)
        for n in range(11):
            assert dn_touchard_riordan(n) == cfrac.dn_hat(n)

    def test_minus_q_forms(self):
        assert euler_hat_at_minus_q(0) == ONE
        assert euler_hat_at_minus_q(1) == ONE_MINUS_Q * (ONE + monomial(1, 0, 2))
        for n in range(9):
            eh = cfrac.euler_hat(n)
            assert euler_hat_at_minus_q(n) == eh.substitute_t(-1, 1)
            assert euler_hat_at_minus_inv_q(n) == eh.substitute_t(-1, -1)


class TestDistBoxClosed:
    def test_one_one(self):
        assert dist_box_closed(1, 1) == LaurentPoly({(0, 0): 1, (1, 1): 1})

    def test_zero_rows(self):
        for n in range(4):
            assert dist_box_closed(0, n) == ONE

    def test_matches_enumeration(self):
        for m in range(7):
            for n in range(7):
                assert dist_box_closed(m, n) == combinat.dist_box_polynomial(m, n)


class TestZeng:
    @staticmethod
    def euler_value(n, t0, q0):
        return cfrac.euler_hat(n).evaluate(t0, q0) / (1 - Fraction(q0)) ** (2 * n)

    def test_n0(self):
        assert zeng_value(0, Fraction(1, 3), Fraction(1, 2)) == 1

    def test_vanishing_numerator_point(self):
        # (t, q) = (2, 1/2) zeroes the factor 1 - t*q of the first moment
        assert zeng_value(1, 2, Fraction(1, 2)) == 0

    def test_matches_rational_evaluation(self):
        for n in range(5):
            for t0, q0 in ZENG_SAMPLE_POINTS[:5]:
                assert zeng_value(n, t0, q0) == self.euler_value(n, t0, q0)

    def test_bracket_reading_resolution(self):
        # the quotient reading reproduces the moments everywhere; the additive
        # reading fails at every sample point with n >= 1
        assert DEFAULT_ZENG_BRACKET is zeng_bracket_qint
        for n in range(1, 3):
            for t0, q0 in ZENG_SAMPLE_POINTS:
                ref = self.euler_value(n, t0, q0)
                assert zeng_value(n, t0, q0, zeng_bracket_qint) == ref
                assert zeng_value(n, t0, q0, zeng_bracket_additive) != ref

    def test_rejects_bad_points(self):
        with pytest.raises(ZeroDenominatorError):
            zeng_value(1, 0, Fraction(1, 2))
        with pytest.raises(ZeroDenominatorError):
            zeng_value(1, 2, 1)
        with pytest.raises(ValueError):
            zeng_value(6, 2, Fraction(1, 2))
