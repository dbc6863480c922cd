"""The parametrized braid families and their ribbon structure.

Constructs pi_q, beta'_q, beta_q (for q = m/n in (0, 1/3]), gamma_nu
(nu = l/m in [0,1)), the fixed 10-strand braid delta and its red-strand
extension zeta, together with a small ribbon-braid representation used to
expand block diagrams into words.

A braid of the gamma type is kept in "loop template" form: the fixed
strand sits at position 1 and the word ends with a loop block in which a
width-m ribbon passes once around the fixed strand.  The twist rewrites
in :mod:`braidkit.surgery` operate on exactly this form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .braids import (
    BraidError,
    BraidWord,
    Permutation,
    compose,
    conjugate,
    delta_braid,
    half_twist_range,
    permutation_of,
    positive_permutation_braid,
    words_equal,
)

# Sign of the half-twist conjugation relating beta' and beta, resolved
# empirically against the ribbon construction: beta = H . beta' . H^-1
# where H is the half twist of the final m strings.
BETA_CONJUGATION_SIGN = +1


def check_q(m: int, n: int) -> None:
    if m < 1 or n < 1 or gcd(m, n) != 1:
        raise BraidError(f"q = {m}/{n} must be a reduced positive fraction")
    if n < 3 * m:
        raise BraidError(f"q = {m}/{n} out of range (need q <= 1/3)")


def check_nu(l: int, m: int) -> None:
    if m < 1 or l < 0 or l >= m or gcd(l, m) != 1:
        raise BraidError(f"nu = {l}/{m} must be a reduced fraction in [0,1)")


@dataclass(frozen=True)
class FamilyBraid:
    """A braid word with named strand roles (ribbons, rogue, colors)."""

    word: BraidWord
    roles: dict[str, tuple[int, ...]] = field(default_factory=dict)

    @property
    def strands(self) -> int:
        return self.word.strands


@dataclass(frozen=True)
class RibbonBraid:
    """Ribbons (label, width, internal half twists) plus block crossings.

    ``events`` is a sequence of ("cross", slot, sign) entries: the ribbons
    currently at slots ``slot`` and ``slot+1`` cross as blocks, parallel
    strands staying parallel.  Internal half twists of each ribbon are
    emitted on its starting strands before any crossing.
    """

    ribbons: tuple[tuple[str, int, int], ...]
    events: tuple[tuple[str, int, int], ...] = ()

    @property
    def strands(self) -> int:
        return sum(w for _, w, _ in self.ribbons)


def block_transposition_braid(n: int, lo: int, a: int, b: int, sign: int) -> BraidWord:
    """Blocks of widths a and b at positions lo.. swap, strands parallel."""
    images = list(range(1, lo))
    images += [lo + b + i for i in range(a)]
    images += [lo + i for i in range(b)]
    images += list(range(lo + a + b, n + 1))
    w = positive_permutation_braid(Permutation(tuple(images)))
    return w if sign > 0 else w.inverse()


def ribbon_expand(rb: RibbonBraid) -> BraidWord:
    n = rb.strands
    widths = [w for _, w, _ in rb.ribbons]
    twists = [t for _, _, t in rb.ribbons]
    starts = []
    pos = 1
    for w in widths:
        starts.append(pos)
        pos += w
    word = BraidWord(n)
    for s, w, t in zip(starts, widths, twists):
        if t and w >= 2:
            word = compose(word, half_twist_range(n, s, s + w - 1) ** t)
    order = list(range(len(rb.ribbons)))
    for kind, slot, sign in rb.events:
        if kind != "cross":
            raise BraidError(f"unknown ribbon event {kind!r}")
        j = slot - 1
        if not 0 <= j < len(order) - 1:
            raise BraidError(f"bad crossing slot {slot}")
        lo = 1 + sum(widths[order[i]] for i in range(j))
        a, b = widths[order[j]], widths[order[j + 1]]
        word = compose(word, block_transposition_braid(n, lo, a, b, sign))
        order[j], order[j + 1] = order[j + 1], order[j]
    return word


def pi_q(m: int, n: int) -> Permutation:
    """The unimodal (n+2)-cycle driving the family (five-case formula)."""
    check_q(m, n)
    images = []
    for r in range(1, n + 3):
        if r <= n - 3 * m + 1:
            images.append(r + m)
        elif r <= n - 2 * m + 1:
            images.append(r + m + 1)
        elif r <= n - m + 1:
            images.append(2 * n - 2 * m + 4 - r)
        elif r == n - m + 2:
            images.append(n - 2 * m + 2)
        else:
            images.append(n + 3 - r)
    return Permutation(tuple(images))


def _ribbon_roles(m: int, n: int) -> dict[str, tuple[int, ...]]:
    return {
        "first-ribbon": tuple(range(1, n - 3 * m + 2)),
        "mid-ribbon": tuple(range(n - 3 * m + 2, n - 2 * m + 2)),
        "penultimate-ribbon": tuple(range(n - 2 * m + 2, n - m + 2)),
        "rogue": (n - m + 2,),
        "final-ribbon": tuple(range(n - m + 3, n + 3)),
    }


def beta_prime(m: int, n: int) -> FamilyBraid:
    """beta'_q: the positive permutation braid of pi_q on n+2 strands."""
    return FamilyBraid(positive_permutation_braid(pi_q(m, n)), _ribbon_roles(m, n))


def beta_ribbon(m: int, n: int) -> RibbonBraid:
    """beta_q as a ribbon braid: full twist on the final ribbon, then the
    final ribbon travels to the far left and the rogue string drops level."""
    check_q(m, n)
    ribbons = (
        ("first-ribbon", n - 3 * m + 1, 0),
        ("mid-ribbon", m, 0),
        ("penultimate-ribbon", m, 0),
        ("rogue", 1, 0),
        ("final-ribbon", m, 2),
    )
    events = (
        ("cross", 4, +1),
        ("cross", 3, +1),
        ("cross", 2, +1),
        ("cross", 1, +1),
        ("cross", 4, +1),
        ("cross", 3, +1),
    )
    return RibbonBraid(ribbons, events)


def beta(m: int, n: int) -> FamilyBraid:
    """beta_q: the half-twist conjugate of beta'_q, built from its ribbon
    picture (validated against the conjugate in the test suite)."""
    return FamilyBraid(ribbon_expand(beta_ribbon(m, n)), _ribbon_roles(m, n))


def beta_from_conjugation(m: int, n: int, sign: int = BETA_CONJUGATION_SIGN) -> BraidWord:
    """H^sign . beta'_q . H^-sign with H the half twist of the final m strings."""
    check_q(m, n)
    h = half_twist_range(n + 2, n - m + 3, n + 2)
    return conjugate(beta_prime(m, n).word, h ** (-sign))


def loop_block(n: int, f: int, m: int) -> BraidWord:
    """The loop in which the width-m block at positions f+1..f+m passes
    once (positively) around the strand at position f."""
    if not 1 <= f <= n - m:
        raise BraidError(f"loop block out of range: f={f}, m={m}, n={n}")
    first = block_transposition_braid(n, f, 1, m, +1)
    second = block_transposition_braid(n, f, m, 1, +1)
    return compose(first, second)


def gamma(l: int, m: int) -> FamilyBraid:
    """gamma_nu: beta_{m/(3m+l)} plus a fixed strand on the left which
    links the final width-m ribbon once."""
    check_nu(l, m)
    n = 3 * m + l
    base = beta(m, n).word
    word = compose(base.shift(1), loop_block(n + 3, 1, m))
    big = tuple(range(2, n + 4))
    return FamilyBraid(word, {"fixed": (1,), "closure": big})


DELTA_LETTERS = (6, 5, 4, 3, 9, 8, 8, 9, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 8, 6)


def delta_word() -> FamilyBraid:
    """The fixed 10-strand braid whose closure plus axis is the 4-cusped
    manifold at the end of the twisting chain."""
    word = BraidWord(10, DELTA_LETTERS)
    return FamilyBraid(
        word,
        {
            "blue": (1, 3, 5, 7, 9),
            "black": (2, 4, 6, 8),
            "green": (10,),
        },
    )


def zeta_word() -> FamilyBraid:
    """delta with an extra fixed red strand linking the black component.

    The word is repository data reconstructed from the validation
    constraints (erasing red gives a conjugate of delta; red links black
    once and nothing else); see families data notes in the test suite.
    """
    from . import _zeta_data

    return _zeta_data.zeta()
