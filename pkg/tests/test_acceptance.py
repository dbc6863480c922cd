"""Acceptance gate.

Each criterion states its tolerance and wall-clock budget inline.  These
tests are the release bar: a failure here means the package does not meet
its contract, and the right fix is in the library, not in the thresholds.
"""

import random
import time
from math import gcd

import pytest

from braidkit.braids import (
    BraidWord,
    compose,
    conjugate,
    full_twist,
    permutation_of,
    words_equal,
)
from braidkit.dynamics import (
    check_F_respects_ident,
    dilatation_q,
    horseshoe_F,
    pattern_q,
    symbol_code,
    t_of_q,
)
from braidkit.families import beta, beta_prime, pi_q
from braidkit.surgery import ExtendedRational
from braidkit.verifier import (
    hdst_check,
    verify_magic,
    verify_thm42,
    verify_thm53,
)


def all_q(max_den: int):
    for n in range(3, max_den + 1):
        for m in range(1, n // 3 + 1):
            if 3 * m <= n and gcd(m, n) == 1:
                yield m, n


class TestCriterion1Families:
    """Every admissible q with denominator <= 60: the permutation is a
    unimodal cycle with the correct fold, and beta' is a positive word
    whose closure permutation matches.  Budget: 10 s."""

    def test_families_for_all_small_q(self):
        start = time.monotonic()
        count = 0
        for m, n in all_q(60):
            perm = pi_q(m, n)
            assert perm.n == n + 2
            assert len(perm.cycles()) == 1
            fold = n - 2 * m + 1
            for i in range(1, fold):
                assert perm(i) < perm(i + 1)
            for i in range(fold + 1, perm.n):
                assert perm(i) > perm(i + 1)
            fam = beta_prime(m, n)
            assert all(letter > 0 for letter in fam.word.letters)
            assert permutation_of(fam.word) == perm
            # positive permutation braid: word length equals the inversion
            # count, so every pair of strands crosses at most once
            inversions = sum(
                1
                for i in range(1, perm.n)
                for j in range(i + 1, perm.n + 1)
                if perm(i) > perm(j)
            )
            assert len(fam.word.letters) == inversions
            b = beta(m, n)
            assert b.word.strands == fam.word.strands
            count += 1
        assert count > 300  # the grid is dense, not a token sample
        assert time.monotonic() - start < 10.0


class TestCriterion2NormalFormFuzz:
    """10^5 random relator/cancellation insertions leave the normal form
    unchanged (n <= 10), and the full twist is central (n <= 12).
    Budget: 60 s."""

    def test_relator_insertions_preserve_normal_form(self):
        start = time.monotonic()
        rng = random.Random(2024)
        checks = 0
        while checks < 100_000:
            n = rng.randint(3, 10)
            alphabet = [i for i in range(-(n - 1), n) if i]
            base = BraidWord(n, tuple(rng.choice(alphabet) for _ in range(25)))
            for _ in range(50):
                pos = rng.randrange(len(base.letters) + 1)
                kind = rng.randrange(3)
                if kind == 0:  # braid relator at adjacent indices
                    i = rng.randint(1, n - 2)
                    ins = (i, i + 1, i, -(i + 1), -i, -(i + 1))
                elif kind == 1 and n >= 4:  # commutator of distant letters
                    i = rng.randint(1, n - 3)
                    j = rng.randint(i + 2, n - 1)
                    ins = (i, j, -i, -j)
                else:  # free cancellation pair
                    i = rng.choice(alphabet)
                    ins = (i, -i)
                mutated = BraidWord(
                    n, base.letters[:pos] + ins + base.letters[pos:]
                )
                assert words_equal(mutated, base)
                checks += 1
        assert checks == 100_000
        assert time.monotonic() - start < 60.0

    def test_full_twist_is_central(self):
        rng = random.Random(7)
        for n in range(3, 13):
            theta = full_twist(n)
            alphabet = [i for i in range(-(n - 1), n) if i]
            for _ in range(10):
                w = BraidWord(n, tuple(rng.choice(alphabet) for _ in range(30)))
                assert words_equal(compose(theta, w), compose(w, theta))


class TestCriterion3WidthChain:
    """The width-increase chain replays for nu in {0/1, 1/2, 1/3, 2/3, 3/4}
    and k in {1, 2, 3}, certificates re-checked.  Budget: 120 s."""

    def test_all_combinations(self):
        start = time.monotonic()
        for l, m in [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)]:
            for k in (1, 2, 3):
                report = verify_thm42(l, m, k)
                assert report.passed, report.text()
        assert time.monotonic() - start < 120.0


class TestCriterion4UntwistingChain:
    """The untwisting chain replays for kappa in {1, 2, 3} with the exact
    coefficient ledger, and any single-letter change to a stored
    conjugator breaks the kappa = 1 replay.  Budget: 600 s."""

    def test_chain_for_each_kappa(self):
        start = time.monotonic()
        for kappa in (1, 2, 3):
            report = verify_thm53(kappa)
            assert report.passed, report.text()
            assert all(step.passed for step in report.steps)
        assert time.monotonic() - start < 600.0

    @pytest.mark.parametrize("key", ["prep", "straighten", "pull", "final"])
    def test_single_letter_mutation_fails(self, key):
        from braidkit import _zeta_data

        sources = {
            "prep": BraidWord(11, _zeta_data.PREP),
            "straighten": BraidWord(8, _zeta_data.STRAIGHTEN),
            "pull": BraidWord(8, _zeta_data.CHAIN[1]["pull"]),
            "final": BraidWord(10, _zeta_data.CHAIN[1]["final"]),
        }
        word = sources[key]
        mutated = BraidWord(
            word.strands, word.letters[:-1] + (-word.letters[-1],)
        )
        report = verify_thm53(1, conjugators={key: mutated})
        assert not report.passed


class TestCriterion5MagicChain:
    """The magic-manifold chain replays and ends on a 3-component link.
    Budget: 1 s."""

    def test_magic(self):
        start = time.monotonic()
        report = verify_magic()
        assert report.passed, report.text()
        assert report.link is not None and report.link.braid.strands == 3
        assert time.monotonic() - start < 1.0


class TestCriterion6CrossOracle:
    """Kneading slope and Perron root agree to 1e-6 on the sample grid,
    t(1/k) increases with k, and t(1/30) is within 0.01 of 2.
    Budget: 30 s."""

    def test_oracles_agree(self):
        start = time.monotonic()
        for m, n in [(1, 3), (1, 4), (1, 5), (2, 7), (3, 10), (1, 10)]:
            t = t_of_q(m, n).t
            lam = dilatation_q(m, n)
            assert abs(t - lam) < 1e-6, f"q={m}/{n}: {t} vs {lam}"
        ts = [t_of_q(1, k).t for k in range(3, 21)]
        assert all(a < b for a, b in zip(ts, ts[1:]))
        assert 0 < 2.0 - t_of_q(1, 30).t < 0.01
        assert time.monotonic() - start < 30.0


class TestCriterion7Horseshoe:
    """The square map fixes (0,0) and (2/3,2/3) and respects the boundary
    identifications on 10^4 random dyadic samples.  Budget: 5 s."""

    def test_horseshoe(self):
        from fractions import Fraction

        start = time.monotonic()
        assert horseshoe_F((0, 0)) == (Fraction(0), Fraction(0))
        p = (Fraction(2, 3), Fraction(2, 3))
        assert horseshoe_F(p) == p
        assert check_F_respects_ident(samples=10_000, seed=0)
        assert time.monotonic() - start < 5.0


class TestCriterion8SurgeryHypothesis:
    """The convergence hypothesis accepts the two model coefficient chains
    and rejects a repeated coefficient."""

    def test_examples(self):
        assert hdst_check([ExtendedRational.make(1, k) for k in range(1, 5)])
        assert hdst_check(
            [ExtendedRational.make(1 - 4 * k, k) for k in range(1, 4)]
        )
        assert not hdst_check(
            [ExtendedRational.make(1, 1), ExtendedRational.make(1, 1)]
        )
