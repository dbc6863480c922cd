"""Frozen braid data for the zeta family and its untwisting chain.

Regenerated by tools/gen_zeta_data.py; every tuple below is a braid
word (letters i / -i for the i-th Artin generator and its inverse).
"""

ZETA = (-10, 6, 5, 6, 4, 3, 4, 2, 3, 1, 1, 2, 3, 4, 5, 6, 6, 6, 7, 8, 5, 4, 3, 2, 1, 9, 10, 10, 10)

ROLES = {'blue': (1, 2, 3, 4, 5), 'green': (6,), 'black': (7, 8, 9, 11), 'red': (10,)}

# Conjugate zeta by PREP to move red to the edge before untwisting.
PREP = (-10,)

# Erasing red from zeta gives delta up to this conjugator.
DELTA_ANCHOR = (3, 2, 5, 6, 5, 4, 3, 2, 1, 1, 2, 3, 2, 4, 5, 4, 6, 7, 6, 5, 4, 3, 2, 1, 1, 2, 3, 4, 3, 5, 7, 8, 7, 6, 5, 4, 3, 2, 1, 1, 2, 1, 3, 4, 6, 8, 7, 6, 5, 4, 3, 2, 1, 9, 8, 7, 6, 5, 4, 3, 2, 1, 9, 8, 7, 6, 5, 4, 3, 1, 2, 3, 8, 7, 6, 5, 4, 3, 9, 8, 7, 6, 5, 4, 2, 1, 3, 2, 9, 1, 3, 6, 7, -2, -3, -4, -5, -6, -7, -1, -2, -3, -4, -5, -6, -5, -4, -8, -9, -7, -8, -6, -7, -1, -8, -9, -8, -3, -4, -5, -6, -5, -3)

# After the +3 red twist and +1 axis twist, this conjugator puts the
# black string back into winding position (8 strands).
STRAIGHTEN = (3, 2, 5, 6, 5, 4, 3, 2, 1, 3, 2, 5, 4, 1, 2, 1, 3, 2, 4, 5, 6, -1, -2, -3, -4, -5, -6, -7, -1, -2, -3, -4, -5, -6, -1, -2, -3, -4, -5, -1, -2, -3, -4, -1, -2, -3, -2, -1, -6, -7, -7, -5, -6, -6, -4, -5, -3, -4, -5, -6, -7, -2, -3, -4, -5, -6, -1, -2, -3, -4, -5, -1, -2, -3, -4, -1, -2, -3, -1, -2, -1)

# Per-kappa conjugators: 'pull' returns red to winding position after
# the black surgery, 'final' identifies the end state with
# gamma(kappa, kappa + 1).
CHAIN = {1: {'pull': (1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3, 5, 4, 6, 6, 5, 7, 7, 6, 1, 2, 3, 2, 4, 3, 2, 5, 4, 3, 2, 6, 5, 4, 3, 7, 6, 5, 4, 3, -4, -2, -3, -5, -3, -4, -1, -2, -3, -4, -5, -6, -1, -2, -3, -4, -5, -4, -2, -3), 'final': (3, 2, 4, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 1, 2, 3, 4, 3, 2, 5, 4, 6, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 2, 3, 4, 5, 6, 9, 8, 7, 6, 5, 4, 3, 1, 2, 3, 8, 7, 6, 5, 4, 3, 9, 8, 7, 6, 5, 4, 3, 1, 2, 1, 3, 2, 9, 1, 6, 7, 8, 9, 3, 4, 5, 6, 7, 6, 5, 4, 3, 2, 1, 8, 9, 8, 7, 6, 5, 4, 3, 2, 1, 1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 9, 8, 7, 6, 5, 4, 3, 2, 1, -9, -8, -7, -6, -5, -4, -3, -2, -1, -2, -3, -4, -5, -6, -8, -9, -8, -7, -6, -5, -4, -3, -8, -9, -7, -8, -6, -7, -1, -2, -3, -4, -5, -6, -4, -5, -1, -7, -8, -9, -7, -8, -7, -1, -2, -3, -4, -5, -6, -7, -8, -9, -1, -2, -3, -4, -5, -6, -7, -8, -4, -5, -6, -7)}, 2: {'pull': (1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 4, 5, 6, 5, 4, 7, 6, 8, 1, 6, 5, 7, 2, 3, 4, 5, 6, 7, 6, 5, 8, 1, 2, 3, 4, 5, 6, 7, 6, 1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, -7, -1, -2, -3, -4, -5, -6, -8, -7, -2, -1, -6, -5, -3, -4, -1, -2, -3, -2, -1, -7, -5, -6, -3, -4, -5, -4, -3, -2, -1, -2, -3, -4, -5, -6, -7, -1, -2, -3, -4, -5, -6, -1, -2, -3, -4, -5, -4, -2, -3), 'final': (3, 2, 4, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 1, 2, 1, 3, 2, 4, 3, 5, 4, 3, 2, 6, 5, 4, 7, 6, 8, 7, 6, 5, 4, 3, 2, 1, 9, 8, 7, 6, 5, 4, 3, 2, 1, 10, 11, 12, 13, 9, 8, 7, 6, 5, 4, 3, 2, 1, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 3, 4, 3, 5, 4, 6, 5, 7, 6, 8, 7, 9, 10, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12, 11, 10, 9, 8, 7, 6, 5, 13, 3, 2, 4, 3, 5, 4, 6, 7, 10, 9, 8, 7, 6, 5, 4, 11, 10, 9, 8, 7, 6, 5, 4, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 2, 3, 2, 4, 3, 2, 5, 4, 3, 11, 12, 11, 10, 9, 8, 7, 6, 5, 4, 13, 12, 2, 1, 3, 2, 1, 7, 8, 9, 8, 10, 9, 11, 10, 12, 11, 13, 12, 5, 6, 7, 8, 9, 8, 7, 6, 5, 4, 3, 2, 1, 10, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12, 13, 5, 6, 7, 8, 9, 10, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12, 13, 3, 4, 5, 6, 7, 8, 9, 10, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 9, 8, 7, 6, 5, 4, 3, 2, 1, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, -13, -12, -11, -10, -9, -8, -7, -6, -5, -4, -3, -2, -13, -12, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -10, -9, -8, -7, -6, -5, -4, -3, -12, -13, -11, -12, -10, -11, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -8, -9, -7, -8, -6, -7, -5, -6, -4, -5, -3, -4, -3, -13, -1, -2, -3, -4, -5, -6, -7, -8, -1, -2, -3, -4, -5, -6, -7, -10, -11, -12, -13, -10, -11, -12, -10, -11, -9, -10, -8, -9, -7, -8, -6, -7, -5, -6, -4, -5, -1, -10, -11, -12, -13, -10, -11, -12, -9, -10, -11, -8, -9, -10, -2, -3, -4, -5, -6, -7, -8, -9, -1, -2, -3, -4, -5, -6, -7, -8, -5, -6, -7, -1, -2, -1, -9, -10, -11, -12, -13, -9, -10, -11, -12, -9, -10, -11, -9, -10, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -13, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -5, -6, -7, -8, -9, -10)}, 3: {'pull': (1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 9, 8, 7, 6, 5, 2, 3, 4, 3, 2, 5, 4, 6, 5, 7, 6, 5, 4, 8, 7, 6, 9, 8, 1, 2, 1, 3, 2, 4, 3, 5, 4, 6, 5, 4, 3, 7, 6, 5, 8, 7, 5, 4, 6, 8, 9, 8, 7, 6, 5, 4, 3, 2, 8, 7, 6, 5, 4, 3, 2, 1, 3, 2, 4, 5, 6, 7, 8, 7, 6, 9, 8, 7, 6, 5, 4, 3, 2, 1, 2, 1, 2, 3, 2, 4, 3, 5, 4, 6, 5, 7, 6, 8, 7, 9, 8, 1, 2, 3, 4, 5, 6, 7, 6, 8, 7, 6, 5, 4, 3, 2, 7, 6, 8, 7, 6, 5, 4, 3, 9, 8, 7, 6, 5, 4, 3, 2, 1, 3, 2, 1, 2, 3, 4, 3, 2, 5, 4, 6, 5, 7, 6, 8, 7, 9, 8, 1, 2, 1, 3, 2, 4, 3, 5, 4, 6, 5, 7, 6, 8, 7, 6, 1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, -3, -2, -7, -8, -1, -2, -3, -4, -5, -6, -7, -6, -5, -3, -4, -1, -2, -3, -2, -1, -9, -7, -8, -5, -6, -7, -3, -4, -5, -6, -4, -5, -3, -4, -2, -3, -2, -1, -2, -3, -4, -5, -6, -7, -8, -1, -2, -3, -4, -5, -6, -7, -1, -2, -3, -4, -5, -6, -1, -2, -3, -4, -5, -4, -2, -3), 'final': (3, 2, 4, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 1, 2, 1, 3, 2, 1, 4, 3, 2, 5, 4, 3, 6, 5, 4, 3, 2, 7, 6, 5, 4, 8, 7, 6, 9, 8, 7, 6, 5, 4, 3, 2, 1, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12, 11, 13, 12, 14, 13, 15, 14, 16, 15, 17, 16, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 4, 5, 4, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7, 10, 9, 8, 11, 10, 12, 11, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 15, 14, 13, 12, 11, 10, 9, 8, 7, 16, 15, 17, 16, 4, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 9, 8, 10, 11, 12, 11, 10, 9, 8, 7, 6, 5, 13, 12, 11, 10, 9, 8, 7, 6, 5, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 16, 17, 3, 4, 3, 5, 4, 3, 6, 5, 4, 3, 7, 6, 5, 4, 8, 9, 10, 11, 12, 13, 12, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 16, 15, 14, 17, 3, 4, 3, 2, 5, 4, 3, 2, 9, 10, 11, 10, 12, 11, 13, 12, 14, 13, 15, 14, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 2, 7, 8, 7, 9, 8, 10, 9, 11, 10, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 13, 12, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 15, 14, 16, 15, 17, 16, 5, 6, 7, 6, 8, 7, 9, 8, 10, 9, 11, 10, 12, 11, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 15, 14, 16, 15, 17, 16, 5, 6, 7, 8, 9, 10, 11, 12, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 14, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 16, 17, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 16, 17, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 16, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 9, 8, 7, 6, 5, 4, 3, 2, 1, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, -17, -16, -15, -14, -13, -12, -11, -10, -9, -8, -7, -6, -5, -4, -3, -2, -17, -16, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -13, -14, -15, -14, -13, -12, -11, -10, -9, -8, -7, -6, -5, -4, -3, -16, -17, -15, -16, -14, -15, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -13, -14, -12, -13, -11, -12, -10, -11, -9, -10, -8, -9, -7, -8, -6, -7, -5, -6, -4, -5, -3, -4, -3, -16, -17, -15, -16, -14, -15, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -13, -14, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -13, -11, -12, -10, -11, -9, -10, -8, -9, -7, -8, -6, -7, -5, -6, -4, -5, -4, -15, -16, -17, -14, -15, -16, -13, -14, -15, -12, -13, -14, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -13, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -9, -10, -11, -8, -9, -10, -7, -8, -9, -6, -7, -8, -5, -6, -7, -4, -5, -6, -4, -5, -4, -16, -17, -16, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -1, -2, -3, -4, -5, -6, -7, -8, -9, -1, -2, -3, -4, -5, -6, -7, -8, -12, -13, -14, -15, -16, -17, -12, -13, -14, -15, -16, -12, -13, -14, -15, -12, -13, -14, -11, -12, -13, -10, -11, -12, -9, -10, -11, -8, -9, -10, -7, -8, -9, -6, -7, -8, -5, -6, -7, -1, -2, -1, -12, -13, -14, -15, -16, -17, -12, -13, -14, -15, -16, -12, -13, -14, -15, -11, -12, -13, -14, -10, -11, -12, -13, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -6, -7, -8, -9, -1, -2, -3, -1, -2, -1, -11, -12, -13, -14, -15, -16, -17, -11, -12, -13, -14, -15, -16, -11, -12, -13, -14, -15, -11, -12, -13, -14, -11, -12, -13, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -13, -14, -15, -16, -17, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -13, -14, -15, -16, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -13, -14, -15, -1, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12, -13, -14, -6, -7, -8, -9, -10, -11, -12, -13)}}

# Conjugating gamma(0, 1) by MAGIC_PREP exposes its three removable
# twists (a 3-strand seed wound three times around the fixed strand).
MAGIC_PREP = (4, 3, 5, 4, 3, 2, 1, 5, -4, -5, -1, -2, -3, -4, -3, -4, -5, -4, -5)


def zeta():
    from .braids import BraidWord
    from .families import FamilyBraid

    return FamilyBraid(BraidWord(11, ZETA), ROLES)
