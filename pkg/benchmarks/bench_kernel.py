"""Benchmark the compiled normal-form kernel against the pure-Python twin.

Run as a script; it times left normal forms of random words at several
strand counts and word lengths and prints the speedup.  Both kernels are
checked to agree on every sampled word before timing.
"""

from __future__ import annotations

import random
import time

from braidkit._kernel_py import left_normal_form as py_nf

try:
    from braidkit._kernel_c import left_normal_form as c_nf
except ImportError:
    c_nf = None

CASES = [(6, 50), (6, 400), (12, 200), (12, 800), (20, 400)]
REPEAT = 10


def random_word(rng: random.Random, n: int, length: int) -> tuple[int, ...]:
    alphabet = [i for i in range(-(n - 1), n) if i]
    return tuple(rng.choice(alphabet) for _ in range(length))


def timed(fn, words) -> float:
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        for n, letters in words:
            fn(n, letters)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    rng = random.Random(42)
    print(f"{'case':>12} {'python':>10} {'cython':>10} {'speedup':>8}")
    for n, length in CASES:
        words = [(n, random_word(rng, n, length)) for _ in range(REPEAT)]
        if c_nf is not None:
            for case in words:
                assert py_nf(*case) == c_nf(*case), "kernel twins disagree"
        t_py = timed(py_nf, words)
        if c_nf is None:
            print(f"B_{n} len {length:>5} {t_py:>9.4f}s   (no compiled kernel)")
            continue
        t_c = timed(c_nf, words)
        print(
            f"B_{n} len {length:>4} {t_py:>9.4f}s {t_c:>9.4f}s {t_py / t_c:>7.1f}x"
        )


if __name__ == "__main__":
    main()
