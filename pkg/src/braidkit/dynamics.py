"""Horseshoe codes, tent-map kneading, and transition-matrix dilatations.

Each cyclic orbit pattern yields a 0/1 code (its itinerary relative to the
fold), a tent slope t located by kneading bisection, and a train-track
transition matrix whose Perron root is the dilatation.  The two numbers are
cross-checked against each other rather than against any convention.  The
tight horseshoe lives on the unit square with fold identifications along
the boundary; all square dynamics use exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .braids import BraidError, Permutation
from .families import check_q, pi_q

SQRT2 = math.sqrt(2.0)


class DynamicsError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Orbit patterns and symbol codes


@dataclass(frozen=True)
class OrbitPattern:
    """A cyclic permutation of N points on a line, unimodal about ``fold``:
    increasing for positions <= fold, decreasing above."""

    perm: Permutation
    fold: int

    def __post_init__(self):
        n = self.perm.n
        if n < 2:
            raise DynamicsError("pattern needs at least 2 points")
        if not 1 <= self.fold <= n:
            raise DynamicsError("fold out of range")
        if len(self.perm.cycles()) != 1:
            raise DynamicsError("pattern is not a single cycle")
        for i in range(1, self.fold):
            if self.perm(i) >= self.perm(i + 1):
                raise DynamicsError(f"not increasing at {i}")
        for i in range(self.fold + 1, n):
            if self.perm(i) <= self.perm(i + 1):
                raise DynamicsError(f"not decreasing at {i}")

    @property
    def points(self) -> int:
        return self.perm.n


def pattern_q(m: int, n: int) -> OrbitPattern:
    """The orbit pattern of pi_q with its fold at n - 2m + 1."""
    check_q(m, n)
    return OrbitPattern(pi_q(m, n), n - 2 * m + 1)


def symbol_code(pattern: OrbitPattern, start: int | None = None) -> str:
    """Itinerary of one orbit point: 0 while the position is at or left of
    the fold, 1 to its right.  Default start is the rightmost point."""
    n = pattern.points
    if start is None:
        start = n
    if not 1 <= start <= n:
        raise DynamicsError("invalid start point")
    out = []
    pos = start
    for _ in range(n):
        out.append("0" if pos <= pattern.fold else "1")
        pos = pattern.perm(pos)
    return "".join(out)


# ---------------------------------------------------------------------------
# Tent maps and kneading


def tent(t: float, x: float) -> float:
    """The slope-t tent map min(2 + t(x-1), t(1-x)) on [0, 1]."""
    return min(2.0 + t * (x - 1.0), t * (1.0 - x))


def tent_itinerary(t: float, x0: float, length: int) -> list[int]:
    """Symbols of the orbit of x0: 0 left of the turning point 1 - 1/t,
    1 right of it, 2 when the point lands on the turning point exactly."""
    if not 1.0 < t <= 2.0:
        raise DynamicsError("slope must be in (1, 2]")
    turn = 1.0 - 1.0 / t
    out = []
    x = x0
    for _ in range(length):
        if x == turn:
            out.append(2)
        else:
            out.append(0 if x < turn else 1)
        x = tent(t, x)
    return out


def _unimodal_less(a: list[int], b: list[int]) -> bool:
    """Parity-lexicographic (unimodal) order on itineraries; a symbol 2
    (turning point) compares between 0 and 1."""
    half = {0: 0.0, 2: 0.5, 1: 1.0}
    flip = 1
    for x, y in zip(a, b):
        if x != y:
            return (half[x] < half[y]) if flip > 0 else (half[x] > half[y])
        if x == 1:
            flip = -flip
    return False


def kneading_sequence(t: float, length: int) -> list[int]:
    """Itinerary of the critical value (the image of the turning point)."""
    return tent_itinerary(t, 1.0, length)


@dataclass(frozen=True)
class TentParams:
    t: float
    eps: float


def t_of_q(m: int, n: int, eps: float = 1e-9) -> TentParams:
    """Tent slope whose kneading sequence matches the pattern code of pi_q,
    located by bisection on (sqrt 2, 2) in the unimodal order."""
    if eps <= 0:
        raise DynamicsError("eps must be positive")
    code = symbol_code(pattern_q(m, n))
    period = len(code)
    length = 4 * period + 32
    target = [int(c) for c in (code * (length // period + 1))][:length]
    lo, hi = SQRT2, 2.0
    if not _unimodal_less(kneading_sequence(lo, length), target):
        raise DynamicsError("pattern code below the bracket")
    while hi - lo > eps:
        mid = (lo + hi) / 2.0
        if _unimodal_less(kneading_sequence(mid, length), target):
            lo = mid
        else:
            hi = mid
    t = (lo + hi) / 2.0
    if not SQRT2 < t < 2.0:
        raise DynamicsError("no admissible slope in the bracket")
    return TentParams(t, eps)


# ---------------------------------------------------------------------------
# Transition matrices and dilatations


def transition_matrix(pattern: OrbitPattern) -> list[list[int]]:
    """0/1 matrix on the N-1 gaps between orbit points: entry (i, j) is 1
    iff the image of gap i covers gap j."""
    n = pattern.points
    rows = []
    for i in range(1, n):
        a, b = pattern.perm(i), pattern.perm(i + 1)
        lo, hi = min(a, b), max(a, b)
        rows.append([1 if lo <= j and j + 1 <= hi else 0 for j in range(1, n)])
    return rows


def perron_root(matrix: list[list[int]], eps: float = 1e-12) -> float:
    """Spectral radius by power iteration with renormalisation."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DynamicsError("matrix must be square")
    if n == 0:
        raise DynamicsError("empty matrix")
    vec = [1.0] * n
    value = 0.0
    for _ in range(200_000):
        new = [sum(row[j] * vec[j] for j in range(n)) for row in matrix]
        norm = sum(new)
        if norm == 0.0:
            return 0.0
        new = [x / norm for x in new]
        # Rayleigh-style estimate on the normalised vector
        est = sum(
            sum(matrix[i][j] * new[j] for j in range(n)) for i in range(n)
        ) / sum(new)
        if abs(est - value) < eps:
            return est
        value, vec = est, new
    raise DynamicsError("power iteration did not converge")


def dilatation_q(m: int, n: int, eps: float = 1e-12) -> float:
    """Perron root of the transition matrix of pi_q."""
    return perron_root(transition_matrix(pattern_q(m, n)), eps)


# ---------------------------------------------------------------------------
# The tight horseshoe on the square


Point = tuple[Fraction, Fraction]

INF_CLASS = "infinity"

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def _frac_point(p) -> Point:
    x, y = p
    return (Fraction(x), Fraction(y))


def horseshoe_F(p) -> Point:
    """The horseshoe map: stretch by 2 horizontally, halve vertically, and
    fold the right half on top."""
    x, y = _frac_point(p)
    if not (ZERO <= x <= ONE and ZERO <= y <= ONE):
        raise DynamicsError("point outside the square")
    if x <= HALF:
        return (2 * x, y / 2)
    return (2 - 2 * x, 1 - y / 2)


def _side_of(p: Point) -> str | None:
    x, y = p
    if y == ONE:
        return "top"
    if x == ONE:
        return "right"
    if x == ZERO:
        return "left"
    if y == ZERO:
        return "bottom"
    return None


def _fold_partner(c: Fraction) -> Fraction | None:
    """Partner of coordinate c under the dyadic fold ladder: segment i >= 1
    spans [2^-i, 2^-i+1] and folds about its midpoint 3/2^(i+1)."""
    if c == ZERO:
        return None
    i = 0
    upper = ONE
    while c < upper / 2:
        upper /= 2
        i += 1
    return 3 * upper / 2 - c


def boundary_ident(p) -> Point | str:
    """Fold partner of a boundary point; fold endpoints, the corners and
    (0,0) all collapse to the infinity class."""
    x, y = _frac_point(p)
    side = _side_of((x, y))
    if side is None:
        raise DynamicsError("point not on the boundary")
    if x in (ZERO, ONE) and y in (ZERO, ONE):
        return INF_CLASS  # corners are shared fold endpoints
    if side == "top":
        return (ONE - x, ONE) if x != HALF else (HALF, ONE)
    if side == "right":
        return (ONE, ONE - y) if y != HALF else (ONE, HALF)
    c = y if side == "left" else x
    partner = _fold_partner(c)
    if partner is None or partner == c:
        return INF_CLASS
    # fold endpoints are shared by two segments: they pinch together
    i = 0
    upper = ONE
    while c < upper / 2:
        upper /= 2
        i += 1
    if c in (upper / 2, upper):
        return INF_CLASS
    return (ZERO, partner) if side == "left" else (partner, ZERO)


def _ident_class(p: Point) -> frozenset | str:
    partner = boundary_ident(p)
    if partner == INF_CLASS:
        return INF_CLASS
    return frozenset((p, partner))


def check_F_respects_ident(samples: int = 10_000, seed: int = 0) -> bool:
    """F maps identified boundary pairs to identified pairs (exact check on
    random dyadic samples), and the two one-sided images along x = 1/2 are
    identified.  Returns False on the first counterexample."""
    import random

    if samples < 1:
        raise DynamicsError("need at least one sample")
    rng = random.Random(seed)

    def random_boundary() -> Point:
        side = rng.choice(("top", "right", "left", "bottom"))
        c = Fraction(rng.randrange(1, 1 << 12), 1 << 12)
        if side == "top":
            return (c, ONE)
        if side == "right":
            return (ONE, c)
        if side == "left":
            return (ZERO, c)
        return (c, ZERO)

    for _ in range(samples):
        p = random_boundary()
        q = boundary_ident(p)
        if q == INF_CLASS:
            continue
        fp, fq = horseshoe_F(p), horseshoe_F(q)
        if fp == fq:
            continue
        if _side_of(fp) is None or _side_of(fq) is None:
            return False
        if _ident_class(fp) != _ident_class(fq):
            return False
    # continuity across the vertical midline: (1/2, y) maps to (1, y/2)
    # from the left and to (1, 1 - y/2) from the right
    for k in range(64):
        y = Fraction(k, 64)
        left = (ONE, y / 2)
        right = (ONE, 1 - y / 2)
        if left != right and _ident_class(left) != _ident_class(right):
            return False
    return True


# ---------------------------------------------------------------------------
# Tables


def dilatation_table(qs: list[tuple[int, int]], eps: float = 1e-9) -> list[dict]:
    """Rows (q, t(q), perron, |difference|) for the cross-oracle sweep."""
    rows = []
    for m, n in qs:
        t = t_of_q(m, n, eps).t
        lam = dilatation_q(m, n)
        rows.append(
            {"q": f"{m}/{n}", "t": t, "perron": lam, "diff": abs(t - lam)}
        )
    return rows
