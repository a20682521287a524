import json

import pytest

from tqeuler import cfrac
from tqeuler.combinat import (
    CutoffExceededError,
    InvalidEndpointError,
    Overpartition,
    Partition,
    alt_statistic_polynomial,
    box_size_polynomial,
    count_13_2_patterns,
    delta_prime_weight_sum,
    dist_box_polynomial,
    dump_debug_json,
    dyck_paths,
    dyck_weight_sum,
    enum_alternating,
    enum_delta_prime,
    enum_md_star,
    enum_partitions_in_box,
    enum_sop,
    l_path_weight_sum,
    lprime_path_weight_sum,
    m_path_weight_sum,
    md_star_weight_sum,
    md_star_weight_sum_general,
    sop_weight_sum,
    to_debug_json,
)
from tqeuler.exactalg import LaurentPoly, ONE, Q, T, ZERO, const, monomial
from tqeuler.formulas import tk_recurrence
from tqeuler.qkit import ballot, gauss_binom, q_int

ONE_MINUS_Q = ONE - Q


def euler_up(h):
    return LaurentPoly({(0, 0): 1, (0, h): -1})


def euler_down(h):
    return LaurentPoly({(0, 0): 1, (1, h): -1})


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition([1, 2])
        with pytest.raises(ValueError):
            Partition([0])

    def test_conjugate_involution(self):
        lam = Partition([4, 2, 1])
        assert lam.conjugate() == Partition([3, 2, 1, 1])
        assert lam.conjugate().conjugate() == lam
        assert lam.conjugate().size == lam.size

    def test_corners_and_dist(self):
        lam = Partition([3, 3, 1])
        assert lam.inner_corners() == [(2, 3), (3, 1)]
        assert lam.distinct_count() == 2

    def test_fits(self):
        assert Partition([2, 1]).fits_staircase(2)
        assert not Partition([2, 2]).fits_staircase(2)
        assert Partition([2, 2]).fits_box(2, 2)


class TestBoxEnumeration:
    def test_empty_box(self):
        assert list(enum_partitions_in_box(0, 5)) == [Partition()]

    def test_unit_box(self):
        assert sorted(p.parts for p in enum_partitions_in_box(1, 1)) == [(), (1,)]

    def test_two_by_two(self):
        parts = list(enum_partitions_in_box(2, 2))
        assert len(parts) == 6
        assert box_size_polynomial(2, 2) == gauss_binom(4, 2)


class TestDistBox:
    def test_one_one(self):
        assert dist_box_polynomial(1, 1) == LaurentPoly({(0, 0): 1, (1, 1): 1})

    def test_zero_rows(self):
        for n in range(4):
            assert dist_box_polynomial(0, n) == ONE

    def test_two_one(self):
        assert dist_box_polynomial(2, 1) == LaurentPoly({(0, 0): 1, (1, 1): 1, (1, 2): 1})

    def test_cutoff(self):
        with pytest.raises(CutoffExceededError):
            dist_box_polynomial(9, 1)


class TestDyck:
    def test_counts(self):
        assert len(list(dyck_paths(3))) == 5

    def test_unweighted(self):
        assert dyck_weight_sum(2, lambda h: ONE, lambda h: ONE) == const(2)

    def test_q_int_up(self):
        assert dyck_weight_sum(2, q_int, lambda h: ONE) == const(2) + Q

    def test_matches_euler_hat(self):
        for n in range(5):
            assert dyck_weight_sum(n, euler_up, euler_down) == cfrac.euler_hat(n)

    def test_cutoff(self):
        with pytest.raises(CutoffExceededError):
            dyck_weight_sum(9, lambda h: ONE, lambda h: ONE)


class TestMarkedDyck:
    def test_k0(self):
        assert md_star_weight_sum(0) == ONE

    def test_k1(self):
        # three admissible markings of the single peak path
        assert md_star_weight_sum(1) == LaurentPoly({(1, 2): 1, (1, 1): -1, (0, 1): -1})

    def test_no_marked_peaks(self):
        for p in enum_md_star(2):
            assert not p.has_marked_peak()
            assert p.is_valid_dyck()

    def test_transfer_to_tk(self):
        for k in range(6):
            lhs = md_star_weight_sum(k)
            rhs = monomial(1, k, k * (k + 1)) * tk_recurrence(k).invert_variables()
            assert lhs == rhs

    def test_ballot_reduction(self):
        # Dyck weight sums reduce to ballot-weighted sums over marked paths
        # with both weight rules decremented by one.
        pairs = [(euler_up, euler_down), (q_int, q_int)]
        for n in range(6):
            for up, down in pairs:
                lhs = dyck_weight_sum(n, up, down)
                rhs = ZERO
                for k in range(n + 1):
                    rhs = rhs + ballot(n, k) * md_star_weight_sum_general(
                        k, lambda h: up(h) - ONE, lambda h: down(h) - ONE
                    )
                assert lhs == rhs


class TestDeltaConfigs:
    def test_k0(self):
        assert delta_prime_weight_sum(0) == ONE

    def test_k1(self):
        configs = enum_delta_prime(1)
        assert len(configs) == 3  # both-arrows case is a forbidden corner
        assert delta_prime_weight_sum(1) == LaurentPoly({(0, 0): 1, (0, 1): -1, (1, 1): -1})

    def test_matches_recurrence(self):
        for k in range(6):
            assert delta_prime_weight_sum(k) == tk_recurrence(k)

    def test_weight_sign_is_arrow_parity(self):
        for k in range(5):
            for cfg in enum_delta_prime(k):
                arrows = len(cfg.row_arrows) + len(cfg.col_arrows)
                assert cfg.weight().evaluate(1, 1) == (-1) ** arrows

    def test_arrow_lengths_positive(self):
        for cfg in enum_delta_prime(4):
            assert all(length >= 1 for length in cfg.arrow_lengths())


class TestOverpartitions:
    def test_k0(self):
        assert sop_weight_sum(0) == ONE

    def test_k1(self):
        assert sop_weight_sum(1) == LaurentPoly({(0, 0): 1, (0, 1): -1, (1, 1): -1})

    def test_matches_recurrence(self):
        for k in range(6):
            assert sop_weight_sum(k) == tk_recurrence(k)

    def test_conjugation_involution(self):
        for nu in enum_sop(3):
            conj = nu.conjugate()
            assert conj.conjugate() == nu
            assert conj.size == nu.size
            assert conj.mark_count() == nu.mark_count()
            assert nu.is_self_conjugate()

    def test_marks_must_sit_on_corners(self):
        with pytest.raises(ValueError):
            Overpartition(Partition([2, 2]), frozenset({(1, 1)}))


class TestMPaths:
    def test_k0(self):
        assert m_path_weight_sum(0) == ONE

    def test_k1(self):
        assert m_path_weight_sum(1) == ONE - Q * (ONE + T)

    def test_matches_recurrence(self):
        for k in range(7):
            assert m_path_weight_sum(k) == tk_recurrence(k)


class TestAxisPaths:
    def test_endpoint_validation(self):
        with pytest.raises(InvalidEndpointError):
            l_path_weight_sum(2, 2, 1, 1, 1)

    def test_empty_family_is_zero(self):
        assert l_path_weight_sum(1, 3, 0, 1, 1) == ZERO  # needs more descents than steps

    def test_l_trivial_endpoint(self):
        # (b, k) -> (0, k): the all-west path, cleared weight 1 times q powers
        assert l_path_weight_sum(2, 2, 0, 2, 1) == ONE

    def test_lprime_empty_path(self):
        assert lprime_path_weight_sum(0, 1, 0, 1, 1) == ONE
        assert lprime_path_weight_sum(2, 0, 2, 0, -1) == ONE


class TestAlternating:
    def test_counts(self):
        assert [len(enum_alternating(n)) for n in range(7)] == [1, 1, 1, 2, 5, 16, 61]

    def test_n0_polynomial(self):
        assert alt_statistic_polynomial(0) == ONE

    def test_n4_distribution(self):
        assert alt_statistic_polynomial(4) == LaurentPoly({(0, 0): 2, (0, 1): 2, (0, 2): 1})

    def test_statistic_example(self):
        assert count_13_2_patterns((1, 4, 2, 3)) == 2
        assert count_13_2_patterns((2, 3, 1, 4)) == 0

    def test_statistic_matches_q_euler(self):
        # resolves the statistic question: the 13-2 pattern count on up-down
        # alternating permutations reproduces both classical families
        for n in range(9):
            ref = cfrac.en_even_q(n // 2) if n % 2 == 0 else cfrac.en_odd_q(n // 2)
            assert alt_statistic_polynomial(n) == ref

    def test_cutoff(self):
        with pytest.raises(CutoffExceededError):
            enum_alternating(10)


class TestDebugDump:
    def test_shapes(self):
        assert to_debug_json(Partition([2, 1])) == {"type": "partition", "parts": [2, 1]}
        nu = Overpartition(Partition([1]), frozenset({(1, 1)}))
        assert to_debug_json(nu)["marks"] == [[1, 1]]
        cfg = enum_delta_prime(1)[0]
        assert to_debug_json(cfg)["k"] == 1
        path = enum_md_star(1)[0]
        assert to_debug_json(path)["type"] == "marked-dyck-path"

    def test_dump_parses(self):
        text = dump_debug_json(enum_sop(2))
        assert isinstance(json.loads(text), list)

    def test_unknown_type(self):
        with pytest.raises(TypeError):
            to_debug_json(42)


def test_env_cutoff_raises_cap(monkeypatch):
    monkeypatch.setenv("TQEULER_MAX_CUTOFF", "10")
    assert dist_box_polynomial(9, 0) == ONE
