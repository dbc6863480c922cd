"""Braid words, permutations and the Garside word-problem engine.

This is the algebraic core: immutable braid words in Artin generators,
permutations in one-line notation, positive permutation braids, left
normal forms (via the compiled or pure-Python kernel), conjugation,
strand erasure and closure components.

Conventions: the leftmost letter of a word acts first (diagrams are read
top to bottom), and a positive crossing takes the left string over the
right one.  ``permutation_of`` sends the strand starting at position s to
position pi(s); positions are 1-based throughout the public API.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from ._kernel import left_normal_form_raw


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: images[s-1] = pi(s)."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise BraidError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, s: int) -> int:
        return self.images[s - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self then other.
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for s, t in enumerate(self.images, start=1):
            inv[t - 1] = s
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, each cycle starting at its smallest element."""
        seen = set()
        out = []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            t = self(s)
            while t != s:
                cyc.append(t)
                seen.add(t)
                t = self(t)
            out.append(tuple(cyc))
        return out

    def inversions(self) -> int:
        return sum(
            1
            for i, j in itertools.combinations(range(self.n), 2)
            if self.images[i] > self.images[j]
        )

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, i: int) -> "Permutation":
        """The adjacent transposition (i, i+1) in S_n."""
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return Permutation(tuple(im))


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_n (letter i > 0 is sigma_i)."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError("strand count must be positive")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidError(
                    f"letter {x} invalid in B_{self.strands}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def shift(self, k: int, strands: int | None = None) -> "BraidWord":
        """Embed into a larger group, moving every letter up by k."""
        strands = self.strands + k if strands is None else strands
        return BraidWord(strands, tuple(x + k if x > 0 else x - k for x in self.letters))

    def __pow__(self, e: int) -> "BraidWord":
        if e < 0:
            return self.inverse() ** (-e)
        return BraidWord(self.strands, self.letters * e)

    def free_reduce(self) -> "BraidWord":
        out: list[int] = []
        for x in self.letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return BraidWord(self.strands, tuple(out))


@dataclass(frozen=True)
class CanonicalFactor:
    """A positive permutation braid, recorded by the permutation it induces."""

    perm: Permutation

    def word(self) -> "BraidWord":
        return positive_permutation_braid(self.perm)


@dataclass(frozen=True)
class NormalForm:
    """Left normal form Delta^infimum . factors, with left-greedy factors."""

    strands: int
    infimum: int
    factors: tuple[CanonicalFactor, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def word(self) -> BraidWord:
        w = delta_braid(self.strands) ** self.infimum
        for f in self.factors:
            w = compose(w, f.word())
        return w


def compose(u: BraidWord, v: BraidWord, *more: BraidWord) -> BraidWord:
    words = (u, v) + more
    n = words[0].strands
    for w in words:
        if w.strands != n:
            raise BraidError(f"strand mismatch: {w.strands} != {n}")
    return BraidWord(n, tuple(x for w in words for x in w.letters))


def permutation_of(u: BraidWord) -> Permutation:
    cur = list(range(1, u.strands + 1))  # cur[pos-1] = strand at this position
    for x in u.letters:
        i = abs(x)
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    images = [0] * u.strands
    for pos, s in enumerate(cur, start=1):
        images[s - 1] = pos
    return Permutation(tuple(images))


def positive_permutation_braid(p: Permutation) -> BraidWord:
    """The unique positive braid inducing p with each pair crossing <= once.

    Emitted greedily from the leftmost descent; the letter count equals the
    inversion count of p.
    """
    im = list(p.images)
    n = p.n
    letters = []
    done = False
    while not done:
        done = True
        for i in range(n - 1):
            if im[i] > im[i + 1]:
                letters.append(i + 1)
                im[i], im[i + 1] = im[i + 1], im[i]
                done = False
                break
    return BraidWord(n, tuple(letters))


def delta_braid(n: int) -> BraidWord:
    """Garside half twist Delta_n = (s1)(s2 s1)...(s_{n-1}...s1)."""
    if n < 1:
        raise BraidError("n must be at least 1")
    letters = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return BraidWord(n, tuple(letters))


def full_twist(n: int) -> BraidWord:
    """The central full twist theta_n = Delta_n^2."""
    d = delta_braid(n)
    return compose(d, d) if n > 1 else d


def half_twist_range(n: int, lo: int, hi: int) -> BraidWord:
    """Delta of the sub-braid on strands lo..hi, embedded in B_n."""
    if not 1 <= lo <= hi <= n:
        raise BraidError(f"bad strand range {lo}..{hi} in B_{n}")
    return delta_braid(hi - lo + 1).shift(lo - 1, strands=n)


def left_normal_form(u: BraidWord) -> NormalForm:
    inf, raw = left_normal_form_raw(u.strands, u.letters)
    factors = tuple(
        CanonicalFactor(Permutation(tuple(x + 1 for x in f))) for f in raw
    )
    return NormalForm(u.strands, inf, factors)


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise BraidError("strand mismatch")
    return left_normal_form_raw(u.strands, u.letters) == left_normal_form_raw(
        v.strands, v.letters
    )


def is_identity(u: BraidWord) -> bool:
    inf, factors = left_normal_form_raw(u.strands, u.letters)
    return inf == 0 and not factors


def conjugate(u: BraidWord, c: BraidWord) -> BraidWord:
    """c^-1 . u . c."""
    return compose(c.inverse(), u, c)


def erase_strand(u: BraidWord, s: int) -> BraidWord:
    """Delete the strand starting at position s, renumbering the rest.

    The strand is tracked geometrically through the word: crossings it
    participates in are dropped, and the remaining letters renumbered.
    """
    if not 1 <= s <= u.strands:
        raise BraidError(f"strand {s} out of range")
    pos = s
    letters = []
    for x in u.letters:
        i = abs(x)
        if pos == i:
            pos = i + 1
        elif pos == i + 1:
            pos = i
        elif i > pos:
            letters.append(x - 1 if x > 0 else x + 1)
        else:
            letters.append(x)
    return BraidWord(u.strands - 1, tuple(letters))


def cycle_components(u: BraidWord) -> list[tuple[int, ...]]:
    """Closure components of u, as cycles of its induced permutation."""
    return permutation_of(u).cycles()


def parse_braid(text: str) -> BraidWord:
    """Parse the `Bn: i1 i2 ... ik` text format."""
    head, _, rest = text.partition(":")
    head = head.strip()
    if not head.startswith("B"):
        raise BraidError(f"malformed braid header: {text!r}")
    try:
        n = int(head[1:])
    except ValueError as exc:
        raise BraidError(f"malformed strand count in {head!r}") from exc
    letters = tuple(int(tok) for tok in rest.split())
    return BraidWord(n, letters)


def format_braid(u: BraidWord) -> str:
    return f"B{u.strands}: " + " ".join(str(x) for x in u.letters)
