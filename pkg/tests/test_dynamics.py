"""Codes, kneading slopes, Perron roots, and the folded square."""

from fractions import Fraction

import pytest

from braidkit.braids import Permutation
from braidkit.dynamics import (
    INF_CLASS,
    DynamicsError,
    OrbitPattern,
    boundary_ident,
    check_F_respects_ident,
    dilatation_q,
    dilatation_table,
    horseshoe_F,
    kneading_sequence,
    pattern_q,
    perron_root,
    symbol_code,
    t_of_q,
    tent,
    tent_itinerary,
    transition_matrix,
)

PHI = (1 + 5**0.5) / 2


class TestPatterns:
    def test_non_cycle_rejected(self):
        with pytest.raises(DynamicsError):
            OrbitPattern(Permutation((2, 1, 4, 3)), 2)

    def test_non_unimodal_rejected(self):
        with pytest.raises(DynamicsError):
            OrbitPattern(Permutation((1, 3, 4, 2)), 3)

    def test_known_codes(self):
        assert symbol_code(pattern_q(1, 3)) == "10011"
        assert symbol_code(pattern_q(1, 4)) == "100011"
        assert symbol_code(pattern_q(2, 7)) == "100110011"

    def test_code_is_rotation_from_other_start(self):
        code = symbol_code(pattern_q(1, 3))
        other = symbol_code(pattern_q(1, 3), start=1)
        assert sorted(code) == sorted(other)
        assert other in code + code


class TestTent:
    def test_fixed_turning_value(self):
        t = 1.5
        turn = 1 - 1 / t
        assert tent(t, turn) == pytest.approx(t * (1 - turn))

    def test_itinerary_marks_turning_point(self):
        t = 2.0
        assert tent_itinerary(t, 0.5, 3)[0] == 2

    def test_slope_range_enforced(self):
        with pytest.raises(DynamicsError):
            tent_itinerary(1.0, 0.3, 5)

    def test_kneading_starts_at_critical_value(self):
        seq = kneading_sequence(1.8, 10)
        assert seq[0] == 1  # the critical value 1 lies right of the turn

    def test_t_of_q_reproduces_code(self):
        params = t_of_q(1, 3)
        assert 2**0.5 < params.t < 2.0
        # the critical orbit is periodic of length 5, so symbols at steps
        # 4, 9, ... sit on the turning point itself and are not robust;
        # check the stable prefix and the near-return instead
        code = [int(c) for c in symbol_code(pattern_q(1, 3))]
        knead = kneading_sequence(params.t, 4)
        assert knead == code[:4]
        x = 1.0
        for _ in range(4):
            x = tent(params.t, x)
        assert abs(x - (1 - 1 / params.t)) < 1e-6


class TestPerron:
    def test_one_by_one(self):
        assert perron_root([[1]]) == pytest.approx(1.0)

    def test_fibonacci_matrix(self):
        assert perron_root([[1, 1], [1, 0]]) == pytest.approx(PHI, abs=1e-9)

    def test_nilpotent_matrix(self):
        assert perron_root([[0, 1], [0, 0]]) == pytest.approx(0.0)

    def test_non_square_rejected(self):
        with pytest.raises(DynamicsError):
            perron_root([[1, 0]])

    def test_q_third_matrix(self):
        assert transition_matrix(pattern_q(1, 3)) == [
            [0, 1, 1, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 1],
            [1, 1, 0, 0],
        ]

    def test_oracles_agree(self):
        params = t_of_q(1, 3)
        lam = dilatation_q(1, 3)
        assert abs(params.t - lam) < 1e-6
        assert lam == pytest.approx(1.7220838, abs=1e-6)

    def test_table_has_diffs(self):
        rows = dilatation_table([(1, 3), (1, 4)])
        assert all(row["diff"] < 1e-6 for row in rows)


class TestHorseshoe:
    def test_fixed_points(self):
        assert horseshoe_F((0, 0)) == (0, 0)
        p = (Fraction(2, 3), Fraction(2, 3))
        assert horseshoe_F(p) == p

    def test_outside_square_rejected(self):
        with pytest.raises(DynamicsError):
            horseshoe_F((2, 0))

    def test_top_fold(self):
        assert boundary_ident((Fraction(1, 4), 1)) == (Fraction(3, 4), 1)

    def test_bottom_ladder(self):
        assert boundary_ident((Fraction(3, 5), 0)) == (Fraction(9, 10), 0)

    def test_left_ladder(self):
        assert boundary_ident((0, Fraction(5, 8))) == (0, Fraction(7, 8))

    def test_ident_is_an_involution(self):
        p = (Fraction(3, 5), Fraction(0))
        q = boundary_ident(p)
        assert boundary_ident(q) == p

    def test_corners_collapse(self):
        assert boundary_ident((0, 0)) == INF_CLASS
        assert boundary_ident((1, 1)) == INF_CLASS

    def test_interior_point_rejected(self):
        with pytest.raises(DynamicsError):
            boundary_ident((Fraction(1, 3), Fraction(1, 3)))

    def test_map_respects_identifications(self):
        assert check_F_respects_ident(samples=2000, seed=3)
