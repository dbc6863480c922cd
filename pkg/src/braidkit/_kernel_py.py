"""Pure-Python Garside kernel: left normal forms of braid words.

Braids in B_n are words in the Artin generators, encoded as sequences of
nonzero integers (i for sigma_i, -i for its inverse).  The left normal form
Delta^p x_1 ... x_k is computed over permutation-braid canonical factors.

Conventions (fixed once, everything downstream depends on them):
  * words act left-to-right: the leftmost letter is the topmost crossing;
  * permutations are tuples p of length n, 0-based, with p[s] = end
    position of the strand that starts at position s;
  * composition ``a then b`` is (a*b)[s] = b[a[s]].

Under these conventions sigma_i left-divides the permutation braid of p
iff p[i-1] > p[i], and right-divides it iff p^-1[i-1] > p^-1[i].

This module is the fallback twin of the Cython kernel ``_kernel_c``; both
expose ``left_normal_form(n, letters)`` with identical output.
"""

from __future__ import annotations


def _identity(n):
    return tuple(range(n))


def _w0(n):
    return tuple(range(n - 1, -1, -1))


def _inverse(p):
    inv = [0] * len(p)
    for s, t in enumerate(p):
        inv[t] = s
    return tuple(inv)


def _tau(p, w0):
    # Delta-conjugate: tau(p) = w0 . p . w0 (w0 is an involution).
    n = len(p)
    return tuple(n - 1 - p[n - 1 - s] for s in range(n))


def _slide(f, g, n):
    """Make the pair (f, g) left-weighted by transferring generators."""
    f = list(f)
    g = list(g)
    finv = list(_inverse(f))
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if g[i] > g[i + 1] and finv[i] < finv[i + 1]:
                # sigma_{i+1} starts g but does not finish f: move it left.
                a, b = finv[i], finv[i + 1]
                f[a], f[b] = i + 1, i
                finv[i], finv[i + 1] = b, a
                g[i], g[i + 1] = g[i + 1], g[i]
                changed = True
    return tuple(f), tuple(g)


def left_normal_form(n, letters):
    """Return (inf, factors) with factors a tuple of permutation tuples.

    Each factor is neither the identity nor Delta, and consecutive factors
    are left-weighted; this normal form is a complete invariant of the
    braid-group element.
    """
    idp = _identity(n)
    w0 = _w0(n)
    inf = 0
    factors = []
    for letter in letters:
        i = abs(letter) - 1
        if not 0 <= i < n - 1:
            raise ValueError(f"letter {letter} out of range for {n} strands")
        t = list(idp)
        t[i], t[i + 1] = i + 1, i
        if letter > 0:
            factors.append(tuple(t))
        else:
            # sigma_i^-1 = Delta^-1 . (Delta sigma_i^-1); push the Delta^-1
            # through the factors accumulated so far.
            inf -= 1
            factors = [_tau(f, w0) for f in factors]
            r = tuple(t[w0[s]] for s in range(n))
            factors.append(r)
    inf2, factors = _normalize(factors, n, idp, w0)
    return inf + inf2, tuple(factors)


def _normalize(factors, n, idp, w0):
    inf = 0
    factors = [f for f in factors if f != idp]
    while True:
        changed = False
        for j in range(len(factors) - 1):
            f, g = _slide(factors[j], factors[j + 1], n)
            if f != factors[j]:
                changed = True
                factors[j], factors[j + 1] = f, g
        k = 0
        while k < len(factors):
            if factors[k] == idp:
                del factors[k]
                changed = True
            elif factors[k] == w0:
                inf += 1
                factors = [_tau(x, w0) for x in factors[:k]] + factors[k + 1:]
                changed = True
            else:
                k += 1
        if not changed:
            return inf, factors
