"""Regenerate src/braidkit/_zeta_data.py from first principles.

Builds the 11-strand family word zeta by winding a fixed string three
times around the single black string of an 8-strand core, then certifies
the whole untwisting chain down to gamma(kappa, kappa+1) for
kappa in {1, 2, 3}.  Every conjugator written into the data module is
re-checked here through normal forms before being frozen.
"""

from __future__ import annotations

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from braidkit.braids import (
    BraidWord,
    compose,
    conjugate,
    cycle_components,
    erase_strand,
    full_twist,
    words_equal,
)
from braidkit.families import delta_word, gamma, loop_block
from braidkit.surgery import _wind_once, mirror_word
from braidkit.verifier import conjugacy_search

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "braidkit" / "_zeta_data.py"


def left_wind(word: BraidWord, f: int, m: int) -> BraidWord:
    n = word.strands
    return mirror_word(_wind_once(mirror_word(word), n + 1 - f, m))


def linking(word: BraidWord, comp_a: tuple[int, ...], comp_b: tuple[int, ...]) -> int:
    sa, sb = set(comp_a), set(comp_b)
    pos = list(range(1, word.strands + 1))
    total = 0
    for x in word.letters:
        i = abs(x)
        u, v = pos[i - 1], pos[i]
        if (u in sa and v in sb) or (u in sb and v in sa):
            total += 1 if x > 0 else -1
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    if total % 2:
        raise AssertionError("odd crossing count between components")
    return total // 2


def must_find(x: BraidWord, y: BraidWord, what: str, budget: int = 200_000) -> BraidWord:
    t0 = time.time()
    cert = conjugacy_search(x, y, budget=budget)
    if cert is None:
        raise AssertionError(f"no conjugator found for {what}")
    assert cert.check()
    print(f"  {what}: {len(cert.conjugator.letters)} letters "
          f"({time.time() - t0:.1f}s)")
    return cert.conjugator


def build_core() -> BraidWord:
    """8-strand core: blue 5-cycle, green 6, black 7, red 8 (red loops black)."""

    def dip(w: int) -> BraidWord:
        return mirror_word(loop_block(8, 2, w))

    u = compose(dip(6), BraidWord(8, (3, 2, 5)), dip(1), BraidWord(8, (5, 4, 3, 2, 1)))
    core = compose(u, mirror_word(loop_block(8, 1, 1)))
    cycles = {tuple(sorted(c)) for c in cycle_components(core)}
    assert cycles == {(1, 2, 3, 4, 5), (6,), (7,), (8,)}
    return core


def main() -> None:
    core = build_core()  # W1: the already-untwisted 8-strand state

    # Wind red (rightmost strand) around black three times: the three new
    # strands cable up with black, giving zeta's 4-string black component.
    wound = core
    for f in (8, 9, 10):
        wound = left_wind(wound, f, 1)
    zeta = conjugate(wound, BraidWord(11, (10,))).free_reduce()

    roles = {"blue": (1, 2, 3, 4, 5), "green": (6,), "black": (7, 8, 9, 11), "red": (10,)}
    cycles = {tuple(sorted(c)) for c in cycle_components(zeta)}
    assert cycles == {(1, 2, 3, 4, 5), (6,), (7, 8, 9, 11), (10,)}
    assert linking(zeta, roles["red"], roles["black"]) == 1
    assert linking(zeta, roles["red"], roles["blue"]) == 0
    assert linking(zeta, roles["red"], roles["green"]) == 0
    print(f"zeta: {len(zeta.letters)} letters on 11 strands")

    # Erasing red must leave a conjugate of delta.
    print("anchoring against delta:")
    anchor = must_find(erase_strand(zeta, 10), delta_word().word, "delta anchor")

    # After +1 axis twist the black string needs straightening before it can
    # be wound: rebuild the target template from the black-erased sublink.
    s3 = compose(core, full_twist(8).inverse()).free_reduce()
    y = conjugate(erase_strand(s3, 7), BraidWord(7, (5, 6)))
    t4 = compose(BraidWord(8, y.letters), BraidWord(8, (7, 7)))
    print("straightening black after the axis twist:")
    straighten = must_find(s3, t4, "straighten")

    chain: dict[int, dict[str, tuple[int, ...]]] = {}
    for kappa in (1, 2, 3):
        print(f"kappa = {kappa}:")
        t5, f = t4, 8
        for _ in range(kappa):  # -kappa twist on black, width 1
            t5 = left_wind(t5, f, 1)
            f += 1
        s6 = erase_strand(t5, f)  # black filled trivially: drop it
        n6 = s6.strands
        s7 = compose(s6, full_twist(n6)).free_reduce()  # -1 axis twist

        # Pull red back to the edge: rebuild the template from the
        # red-erased sublink plus a width-kappa loop at the left edge.
        y9 = erase_strand(s7, 6)
        t8 = compose(BraidWord(n6, y9.letters), mirror_word(loop_block(n6, 1, kappa)))
        pull = must_find(s7, t8, f"pull red (kappa={kappa})")

        s9, fr = t8, n6
        for _ in range(3):  # -3 twist on red, width kappa
            s9 = left_wind(s9, fr, kappa)
            fr += kappa
        final_braid = erase_strand(s9, fr)
        target = gamma(kappa, kappa + 1).word
        assert final_braid.strands == target.strands == 4 * kappa + 6
        final = must_find(final_braid, target, f"final (kappa={kappa})")
        chain[kappa] = {"pull": pull.letters, "final": final.letters}

    # Wound form of gamma(0,1) for the magic-manifold replay: a 3-strand
    # seed wound three times around its fixed strand.
    print("magic-manifold prep:")
    seed = compose(BraidWord(3, (2, 2, 2)), loop_block(3, 1, 1))
    wound = seed
    for _ in range(3):
        wound = _wind_once(wound, 1, 1)
    magic = must_find(gamma(0, 1).word, wound, "magic prep")

    # Round-trip the anchor once more before freezing.
    assert words_equal(conjugate(erase_strand(zeta, 10), anchor), delta_word().word)

    lines = [
        '"""Frozen braid data for the zeta family and its untwisting chain.',
        "",
        "Regenerated by tools/gen_zeta_data.py; every tuple below is a braid",
        "word (letters i / -i for the i-th Artin generator and its inverse).",
        '"""',
        "",
        f"ZETA = {zeta.letters!r}",
        "",
        f"ROLES = {roles!r}",
        "",
        "# Conjugate zeta by PREP to move red to the edge before untwisting.",
        "PREP = (-10,)",
        "",
        "# Erasing red from zeta gives delta up to this conjugator.",
        f"DELTA_ANCHOR = {anchor.letters!r}",
        "",
        "# After the +3 red twist and +1 axis twist, this conjugator puts the",
        "# black string back into winding position (8 strands).",
        f"STRAIGHTEN = {straighten.letters!r}",
        "",
        "# Per-kappa conjugators: 'pull' returns red to winding position after",
        "# the black surgery, 'final' identifies the end state with",
        "# gamma(kappa, kappa + 1).",
        f"CHAIN = {chain!r}",
        "",
        "# Conjugating gamma(0, 1) by MAGIC_PREP exposes its three removable",
        "# twists (a 3-strand seed wound three times around the fixed strand).",
        f"MAGIC_PREP = {magic.letters!r}",
        "",
        "",
        "def zeta():",
        "    from .braids import BraidWord",
        "    from .families import FamilyBraid",
        "",
        "    return FamilyBraid(BraidWord(11, ZETA), ROLES)",
        "",
    ]
    OUT.write_text("\n".join(lines))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
