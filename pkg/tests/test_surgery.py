"""Surgered links: coefficients, twist moves, templates, JSON round trip."""

import pytest

from braidkit.braids import BraidWord, compose, full_twist, words_equal
from braidkit.families import gamma, loop_block
from braidkit.surgery import (
    Component,
    ExtendedRational,
    SurgeredLink,
    SurgeryError,
    _unwind_once,
    _wind_once,
    conjugate_link,
    detect_loop_side,
    detect_loop_width,
    erase_component,
    link_from_json,
    link_to_json,
    linking_number,
    mirror_link,
    mirror_word,
    offset_update,
    twist_axis,
    twist_fixed,
    twist_update,
)

INF = ExtendedRational.make(1, 0)


def r(b, a):
    return ExtendedRational.make(b, a)


class TestExtendedRational:
    def test_normalisation(self):
        assert r(2, 4) == r(1, 2)
        assert r(-3, -6) == r(1, 2)
        assert str(r(1, 0)) == "inf"

    def test_parse_round_trip(self):
        for text in ("1/3", "-7/2", "inf", "4"):
            assert str(ExtendedRational.parse(text)) == text

    def test_rejects_zero_over_zero(self):
        with pytest.raises(SurgeryError):
            ExtendedRational.make(0, 0)


class TestCoefficientUpdates:
    def test_twist_update_is_one_over_t_plus_one_over_r(self):
        assert twist_update(r(1, 2), -2) == INF
        assert twist_update(INF, 3) == r(1, 3)
        assert twist_update(r(1, 3), -3) == INF

    def test_twist_update_inverts(self):
        for coeff in (r(1, 3), r(-7, 2), r(5, 4)):
            assert twist_update(twist_update(coeff, 4), -4) == coeff

    def test_offset_update_adds_t_lk_squared(self):
        assert offset_update(r(-7, 2), 3, 1) == r(-1, 2)
        assert offset_update(r(1, 3), 1, 2) == r(13, 3)
        assert offset_update(INF, 5, 3) == INF


def gamma_link(l, m, filling=None):
    fam = gamma(l, m)
    return SurgeredLink(
        braid=fam.word,
        axis=True,
        components=(
            Component("fixed", fam.roles["fixed"], filling),
            Component("closure", fam.roles["closure"]),
        ),
    )


class TestSurgeredLink:
    def test_components_must_partition(self):
        fam = gamma(0, 1)
        with pytest.raises(SurgeryError):
            SurgeredLink(
                braid=fam.word,
                components=(Component("fixed", (1,)),),
            )

    def test_components_must_respect_cycles(self):
        fam = gamma(0, 1)
        with pytest.raises(SurgeryError):
            SurgeredLink(
                braid=fam.word,
                components=(
                    Component("a", (1, 2)),
                    Component("b", (3, 4, 5, 6)),
                ),
            )

    def test_linking_number_symmetry(self):
        link = gamma_link(1, 2)
        assert linking_number(link, "fixed", "closure") == linking_number(
            link, "closure", "fixed"
        )


class TestWindTemplates:
    def test_wind_then_unwind_round_trip(self):
        base = compose(BraidWord(4, (2, 3, 2)), loop_block(4, 1, 2))
        wound = _wind_once(base, 1, 2)
        assert wound.strands == 6
        assert words_equal(_unwind_once(wound, 1, 2), base)

    def test_unwind_needs_the_twisted_template(self):
        flat = compose(BraidWord(4, (2, 3, 2)), loop_block(4, 1, 2))
        with pytest.raises(SurgeryError):
            _unwind_once(flat, 1, 2)

    def test_wind_refuses_a_braided_fixed_strand(self):
        bad = compose(BraidWord(4, (1, 2, 3)), loop_block(4, 1, 2))
        with pytest.raises(SurgeryError):
            _wind_once(bad, 1, 2)

    def test_mirror_is_an_involution(self):
        w = BraidWord(5, (1, -3, 4, 2, 2))
        assert mirror_word(mirror_word(w)).letters == w.letters


class TestTwistFixed:
    @pytest.mark.parametrize("l,m", [(0, 1), (1, 2), (1, 3)])
    def test_detects_width_and_side(self, l, m):
        link = gamma_link(l, m)
        assert detect_loop_side(link, "fixed") == (m, "R")
        assert detect_loop_width(link, "fixed") == m

    def test_negative_twist_inserts_width_strands(self):
        link = gamma_link(1, 2, filling=r(1, 2))
        out = twist_fixed(link, "fixed", -2)
        assert out.braid.strands == link.braid.strands + 2 * 2
        assert out.component("fixed").filling == INF

    def test_twist_round_trip(self):
        link = gamma_link(1, 2, filling=r(1, 1))
        down = twist_fixed(link, "fixed", -1)
        back = twist_fixed(down, "fixed", 1)
        assert words_equal(back.braid, link.braid)
        assert back.component("fixed").filling == r(1, 1)

    def test_axis_twist_updates_by_strand_count(self):
        link = gamma_link(1, 2, filling=r(1, 3))
        out = twist_axis(link, 1)
        # the fixed string passes the axis once: offset by 1 * 1^2
        assert out.component("fixed").filling == r(4, 3)
        assert words_equal(
            out.braid, compose(link.braid, full_twist(link.braid.strands).inverse())
        )

    def test_mirror_link_swaps_side(self):
        link = gamma_link(0, 1)
        assert detect_loop_side(mirror_link(link), "fixed")[1] == "L"


class TestEraseAndJson:
    def test_erase_requires_infinite_filling(self):
        link = gamma_link(0, 1, filling=r(1, 2))
        with pytest.raises(SurgeryError):
            erase_component(link, "fixed")

    def test_erase_renumbers_components(self):
        link = gamma_link(0, 1, filling=INF)
        out = erase_component(link, "fixed")
        assert out.braid.strands == link.braid.strands - 1
        assert out.component("closure").strands == (1, 2, 3, 4, 5)

    def test_conjugate_link_tracks_components(self):
        link = gamma_link(0, 1)
        out = conjugate_link(link, BraidWord(6, (1,)))
        assert out.component("fixed").strands == (2,)

    def test_json_round_trip(self):
        link = gamma_link(1, 2, filling=r(1, 2))
        link = twist_fixed(link, "fixed", -2)
        data = link_to_json(link)
        back = link_from_json(data)
        assert words_equal(back.braid, link.braid)
        assert back.components == link.components
