"""Surgered links: braid closure + axis with surgery coefficients, the
coefficient update formulae, linking numbers, and the twist moves.

A twist on the braid axis multiplies the braid by a power of the central
full twist.  A twist on a fixed (single-strand, unknotted) component is a
template rewrite: the braid must end with a loop block in which a
width-m ribbon passes once around the fixed strand, and the rest of the
word must not touch the fixed strand.  Negative twists insert wind
strands next to the fixed strand (m per turn); positive twists remove
them.  Both directions are verified group-theoretically (parabolic
subgroup membership via normal forms), never by trusting the literal
letters of the word.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd

from .braids import (
    BraidError,
    BraidWord,
    compose,
    delta_braid,
    erase_strand,
    full_twist,
    left_normal_form,
    permutation_of,
)
from .families import block_transposition_braid, loop_block


class SurgeryError(ValueError):
    pass


@dataclass(frozen=True)
class ExtendedRational:
    """A reduced fraction b/a with a >= 0, including infinity = 1/0."""

    b: int
    a: int

    def __post_init__(self):
        if self.a == 0 and self.b != 1:
            raise SurgeryError("infinity must be normalized to 1/0")
        if self.a < 0:
            raise SurgeryError("denominator must be nonnegative")
        if self.a and gcd(abs(self.b), self.a) != 1:
            raise SurgeryError(f"{self.b}/{self.a} not in lowest terms")

    @staticmethod
    def make(b: int, a: int) -> "ExtendedRational":
        if a == 0:
            if b == 0:
                raise SurgeryError("0/0 is not a surgery coefficient")
            return ExtendedRational(1, 0)
        if a < 0:
            b, a = -b, -a
        g = gcd(abs(b), a)
        return ExtendedRational(b // g, a // g)

    @property
    def is_infinite(self) -> bool:
        return self.a == 0

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.a == 1:
            return str(self.b)
        return f"{self.b}/{self.a}"

    @staticmethod
    def parse(text: str) -> "ExtendedRational":
        text = text.strip()
        if text in ("inf", "infinity", "oo"):
            return INFINITY
        b, _, a = text.partition("/")
        return ExtendedRational.make(int(b), int(a) if a else 1)


INFINITY = ExtendedRational(1, 0)


def twist_update(r: ExtendedRational, t: int) -> ExtendedRational:
    """Coefficient of the twisted component: r -> 1/(t + 1/r)."""
    return ExtendedRational.make(r.b, t * r.b + r.a)


def offset_update(r: ExtendedRational, t: int, lk: int) -> ExtendedRational:
    """Coefficient of another component: r -> r + t * lk^2."""
    if r.is_infinite:
        return r
    return ExtendedRational.make(r.b + t * lk * lk * r.a, r.a)


@dataclass(frozen=True)
class Component:
    name: str
    strands: tuple[int, ...]
    filling: ExtendedRational | None = None


@dataclass(frozen=True)
class LedgerEntry:
    operation: str
    coefficients: tuple[tuple[str, str], ...]  # (component name, coefficient)


@dataclass(frozen=True)
class SurgeredLink:
    """A braid closure, optionally with axis, components and coefficients."""

    braid: BraidWord
    axis: bool = True
    components: tuple[Component, ...] = ()
    axis_filling: ExtendedRational | None = None
    ledger: tuple[LedgerEntry, ...] = ()

    def __post_init__(self):
        cycles = permutation_of(self.braid).cycles()
        cycle_of = {}
        for cyc in cycles:
            for s in cyc:
                cycle_of[s] = frozenset(cyc)
        names = [c.name for c in self.components]
        if len(set(names)) != len(names):
            raise SurgeryError("component names must be unique")
        covered: set[int] = set()
        for c in self.components:
            strands = set(c.strands)
            if covered & strands:
                raise SurgeryError(f"component {c.name} overlaps another")
            covered |= strands
            for s in c.strands:
                if not cycle_of.get(s, frozenset()) <= strands:
                    raise SurgeryError(
                        f"component {c.name} does not respect closure cycles"
                    )
        if covered != set(range(1, self.braid.strands + 1)):
            raise SurgeryError("components must partition the strands")

    def component(self, name: str) -> Component:
        for c in self.components:
            if c.name == name:
                return c
        raise SurgeryError(f"unknown component {name!r}")

    def with_ledger(self, operation: str) -> "SurgeredLink":
        coeffs = tuple(
            (c.name, str(c.filling)) for c in self.components if c.filling is not None
        )
        if self.axis_filling is not None:
            coeffs = (("axis", str(self.axis_filling)),) + coeffs
        entry = LedgerEntry(operation, coeffs)
        return replace(self, ledger=self.ledger + (entry,))


def linking_number(link: SurgeredLink, c1: str, c2: str) -> int:
    """Linking number of two closure components (or one of them the axis)."""
    if c1 == c2:
        raise SurgeryError("components must differ")
    if "axis" in (c1, c2):
        if not link.axis:
            raise SurgeryError("link has no axis")
        other = c2 if c1 == "axis" else c1
        return len(link.component(other).strands)
    s1 = set(link.component(c1).strands)
    s2 = set(link.component(c2).strands)
    cur = list(range(1, link.braid.strands + 1))
    total = 0
    for x in link.braid.letters:
        i = abs(x)
        a, b = cur[i - 1], cur[i]
        if (a in s1 and b in s2) or (a in s2 and b in s1):
            total += 1 if x > 0 else -1
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    if total % 2:
        raise SurgeryError("odd crossing sum between closed components")
    return total // 2


def twist_axis(link: SurgeredLink, t: int) -> SurgeredLink:
    """A t twist on the braid axis: braid -> braid . theta^-t."""
    if not link.axis:
        raise SurgeryError("link has no axis")
    if t == 0:
        return link
    braid = compose(link.braid, full_twist(link.braid.strands) ** (-t))
    comps = tuple(
        replace(
            c,
            filling=None
            if c.filling is None
            else offset_update(c.filling, t, len(c.strands)),
        )
        for c in link.components
    )
    axis_filling = (
        None if link.axis_filling is None else twist_update(link.axis_filling, t)
    )
    out = replace(link, braid=braid, components=comps, axis_filling=axis_filling)
    return out.with_ledger(f"twist axis t={t:+d}")


# ---------------------------------------------------------------------------
# Fixed-string twists (template rewrites)


def _parabolic_decompose(word: BraidWord, lo: int, hi: int) -> BraidWord | None:
    """If the element of ``word`` lies in the parabolic subgroup avoiding
    generators lo-1..hi (so strands lo..hi are free), return a literal word
    for it in the remaining generators; else None."""
    n = word.strands
    p = permutation_of(word)
    for s in range(lo, hi + 1):
        if p(s) != s:
            return None
    for s in range(1, lo):
        if not 1 <= p(s) < lo:
            return None
    # Positivize by a large power of the block half twists, then inspect
    # the canonical factors: the element is parabolic iff they all are.
    blocks = [(1, lo - 1), (hi + 1, n)]
    d_p = BraidWord(n)
    for a, b in blocks:
        if b > a:
            d_p = compose(d_p, delta_braid(b - a + 1).shift(a - 1, strands=n))
    neg = sum(1 for x in word.letters if x < 0)
    for power in (neg + 2, len(word.letters) + 2):
        nf = left_normal_form(compose(d_p ** power, word))
        if nf.infimum < 0:
            continue
        if nf.infimum > 0:
            return None  # divisible by the full half twist: not parabolic
        letters: list[int] = []
        ok = True
        for f in nf.factors:
            perm = f.perm
            for s in range(lo, hi + 1):
                ok = ok and perm(s) == s
            for s in range(1, lo):
                ok = ok and 1 <= perm(s) < lo
            letters.extend(f.word().letters)
        if not ok:
            return None
        witness = compose(d_p ** (-power), BraidWord(n, tuple(letters)))
        return _shorten_block_word(witness, lo, hi)
    return None


def _block_normal_word(letters: list[int], size: int) -> list[int]:
    if size < 2 or not letters:
        return letters
    nf = left_normal_form(BraidWord(size, tuple(letters)))
    return list(nf.word().letters)


def _shorten_block_word(word: BraidWord, lo: int, hi: int) -> BraidWord:
    """Renormalize a word supported on positions 1..lo-1 and hi+1..n so its
    length stays bounded by the canonical length of the element."""
    n = word.strands
    left = [x for x in word.letters if abs(x) < lo - 1]
    right = [
        (abs(x) - hi) * (1 if x > 0 else -1) for x in word.letters if abs(x) > hi
    ]
    out = _block_normal_word(left, lo - 1)
    out += [
        (abs(x) + hi) * (1 if x > 0 else -1)
        for x in _block_normal_word(right, n - hi)
    ]
    return BraidWord(n, tuple(out))


def _renumber_down(word: BraidWord, above: int, by: int, strands: int) -> BraidWord:
    out = []
    for x in word.letters:
        i, s = abs(x), (1 if x > 0 else -1)
        out.append(s * (i - by) if i > above else s * i)
    return BraidWord(strands, tuple(out))


def _renumber_up(word: BraidWord, above: int, by: int, strands: int) -> BraidWord:
    out = []
    for x in word.letters:
        i, s = abs(x), (1 if x > 0 else -1)
        out.append(s * (i + by) if i > above else s * i)
    return BraidWord(strands, tuple(out))


def mirror_word(word: BraidWord) -> BraidWord:
    """The mirror automorphism sigma_i -> sigma_{n-i}."""
    n = word.strands
    return BraidWord(
        n, tuple((n - abs(x)) * (1 if x > 0 else -1) for x in word.letters)
    )


def mirror_link(link: SurgeredLink) -> SurgeredLink:
    """Reflect the whole link left-to-right (strand s -> n+1-s)."""
    n = link.braid.strands
    comps = tuple(
        replace(c, strands=tuple(sorted(n + 1 - s for s in c.strands)))
        for c in link.components
    )
    return replace(link, braid=mirror_word(link.braid), components=comps)


def detect_loop_side(link: SurgeredLink, name: str) -> tuple[int, str] | None:
    """Find (width, side) of the ribbon looping the fixed component, if any."""
    comp = link.component(name)
    if len(comp.strands) != 1:
        raise SurgeryError(f"{name} is not a single-strand component")
    f = comp.strands[0]
    n = link.braid.strands
    for m in range(1, n - f + 1):
        v = compose(link.braid, loop_block(n, f, m).inverse())
        if _parabolic_decompose(v, f, f) is not None:
            return m, "R"
    mirrored = mirror_word(link.braid)
    fm = n + 1 - f
    for m in range(1, n - fm + 1):
        v = compose(mirrored, loop_block(n, fm, m).inverse())
        if _parabolic_decompose(v, fm, fm) is not None:
            return m, "L"
    return None


def detect_loop_width(link: SurgeredLink, name: str) -> int:
    """Width of the ribbon passing around the fixed component ``name``."""
    found = detect_loop_side(link, name)
    if found is None:
        raise SurgeryError(f"component {name} does not match the loop template")
    return found[0]


def _wind_once(word: BraidWord, f: int, m: int) -> BraidWord:
    """One -1 twist: insert m wind strands after position f."""
    n = word.strands
    v = compose(word, loop_block(n, f, m).inverse())
    core = _parabolic_decompose(v, f, f)
    if core is None:
        raise SurgeryError("braid does not match the loop template")
    shifted = _renumber_up(core, f, m, n + m)
    x = block_transposition_braid(n + m, f + 1, m, m, +1)
    return compose(shifted, x, loop_block(n + m, f, m))


def _unwind_once(word: BraidWord, f: int, m: int) -> BraidWord:
    """One +1 twist: remove the innermost m wind strands after position f."""
    n = word.strands
    if n < f + 2 * m:
        raise SurgeryError("too few strands to remove a twist")
    x = block_transposition_braid(n, f + 1, m, m, +1)
    v = compose(word, loop_block(n, f, m).inverse(), x.inverse())
    core = _parabolic_decompose(v, f, f + m)
    if core is None:
        raise SurgeryError(
            "braid is not in twisted template form (no removable twist)"
        )
    shrunk = _renumber_down(core, f + m, m, n - m)
    return compose(shrunk, loop_block(n - m, f, m))


def twist_fixed(
    link: SurgeredLink,
    name: str,
    t: int,
    width: int | None = None,
    side: str | None = None,
) -> SurgeredLink:
    """A t twist on the fixed single-strand component ``name``.

    Negative t inserts |t|*m strands (m the width of the looped ribbon),
    positive t removes t*m; the ribbon component absorbs or loses the wind
    strands.  Coefficients are updated by the twist formulae.  The looped
    ribbon may sit on either side of the fixed strand; ``side`` ("L"/"R")
    and ``width`` are detected when not given.
    """
    if t == 0:
        return link
    comp = link.component(name)
    if len(comp.strands) != 1:
        raise SurgeryError(f"{name} is not a single-strand component")
    if side is None or width is None:
        found = detect_loop_side(link, name)
        if found is None:
            raise SurgeryError(f"component {name} does not match the loop template")
        width, side = found if width is None else (width, found[1])
    if side == "L":
        return mirror_link(twist_fixed(mirror_link(link), name, t, width, side="R"))
    f = comp.strands[0]
    m = width
    # linking numbers with the fixed component, before the rewrite
    lks = {
        c.name: linking_number(link, name, c.name)
        for c in link.components
        if c.name != name
    }
    n = link.braid.strands
    word = link.braid
    steps = abs(t)
    for _ in range(steps):
        if t < 0:
            word = _wind_once(word, f, m)
        else:
            word = _unwind_once(word, f, m)
    shed = steps * m  # strands inserted (t<0) or removed (t>0) at f+1..f+shed

    # Old strands keep their identity under position renumbering; inserted
    # wind strands join whichever closure cycle absorbs them, and removed
    # winds simply drop out of their component.
    if t < 0:
        remap = {s: s + shed if s > f else s for s in range(1, n + 1)}
    else:
        remap = {
            s: s - shed if s > f + shed else s
            for s in range(1, n + 1)
            if not f < s <= f + shed
        }
    cycle_of = {}
    for cyc in permutation_of(word).cycles():
        for s in cyc:
            cycle_of[s] = frozenset(cyc)
    comps = []
    claimed: set[int] = set()
    for c in link.components:
        strands: set[int] = set()
        for s in c.strands:
            if s in remap:
                strands |= cycle_of[remap[s]]
        if strands & claimed:
            raise SurgeryError("twist would merge distinct components")
        claimed |= strands
        comps.append(replace(c, strands=tuple(sorted(strands))))
    if claimed != set(range(1, word.strands + 1)):
        raise SurgeryError("wind strands not absorbed by any component")
    new_comps = []
    for c in comps:
        filling = c.filling
        if filling is not None:
            if c.name == name:
                filling = twist_update(filling, t)
            else:
                filling = offset_update(filling, t, lks[c.name])
        new_comps.append(replace(c, filling=filling))
    axis_filling = link.axis_filling
    if axis_filling is not None:
        axis_filling = offset_update(axis_filling, t, 1 if link.axis else 0)
    out = replace(
        link, braid=word, components=tuple(new_comps), axis_filling=axis_filling
    )
    return out.with_ledger(f"twist {name} t={t:+d}")


def erase_component(link: SurgeredLink, name: str) -> SurgeredLink:
    """Remove a component whose coefficient is infinity (= erase strands)."""
    comp = link.component(name)
    if comp.filling is None or not comp.filling.is_infinite:
        raise SurgeryError(
            f"component {name} has coefficient {comp.filling}, not infinity"
        )
    word = link.braid
    doomed = sorted(comp.strands, reverse=True)
    for s in doomed:
        word = erase_strand(word, s)
    erased = set(comp.strands)

    def remap(s: int) -> int:
        return s - sum(1 for e in erased if e < s)

    comps = tuple(
        replace(c, strands=tuple(remap(s) for s in c.strands))
        for c in link.components
        if c.name != name
    )
    out = replace(link, braid=word, components=comps)
    return out.with_ledger(f"erase {name}")


def conjugate_link(link: SurgeredLink, c: BraidWord) -> SurgeredLink:
    """Conjugate the braid; components follow the conjugator's permutation."""
    from .braids import conjugate

    braid = conjugate(link.braid, c)
    p = permutation_of(c)
    comps = tuple(
        replace(comp, strands=tuple(sorted(p(s) for s in comp.strands)))
        for comp in link.components
    )
    out = replace(link, braid=braid, components=comps)
    return out.with_ledger(f"conjugate by {' '.join(map(str, c.letters))}")


def axis_augmented_braid(braid: BraidWord) -> BraidWord:
    """Encode closure + axis as an (n+1)-strand closed braid: the extra
    strand encircles all others once."""
    n = braid.strands
    wide = BraidWord(n + 1, braid.letters)
    loop = tuple(range(n, 0, -1)) + tuple(range(1, n + 1))
    return compose(wide, BraidWord(n + 1, loop))


def link_to_json(link: SurgeredLink) -> dict:
    def pair(r: ExtendedRational | None):
        return None if r is None else [r.b, r.a]

    return {
        "braid": {"strands": link.braid.strands, "word": list(link.braid.letters)},
        "axis": link.axis,
        "components": [
            {
                "name": c.name,
                "strands": list(c.strands),
                "filling": pair(c.filling),
            }
            for c in link.components
        ]
        + (
            [{"name": "axis", "strands": [], "filling": pair(link.axis_filling)}]
            if link.axis
            else []
        ),
        "ledger": [
            {"operation": e.operation, "coefficients": dict(e.coefficients)}
            for e in link.ledger
        ],
    }


def link_from_json(data: dict) -> SurgeredLink:
    braid = BraidWord(data["braid"]["strands"], tuple(data["braid"]["word"]))
    comps = []
    axis_filling = None
    for c in data["components"]:
        filling = (
            None
            if c.get("filling") is None
            else ExtendedRational.make(c["filling"][0], c["filling"][1])
        )
        if c["name"] == "axis":
            axis_filling = filling
            continue
        comps.append(Component(c["name"], tuple(c["strands"]), filling))
    return SurgeredLink(
        braid, data.get("axis", True), tuple(comps), axis_filling=axis_filling
    )
