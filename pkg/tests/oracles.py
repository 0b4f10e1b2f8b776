"""Independent reference computations used by the tests.

Nothing here goes through the package's polynomial division or path
generators; each function counts or evaluates things the slow, obvious way.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations, product

from supercatalan.qpoly import QPoly


def evaluate(p: QPoly, x: Fraction) -> Fraction:
    x = Fraction(x)
    return sum((Fraction(c) * x ** (p.min_deg + i) for i, c in enumerate(p.coeffs)), Fraction(0))


def q_int_value(r: int, x: Fraction) -> Fraction:
    return sum((Fraction(x) ** i for i in range(r)), Fraction(0))


def q_factorial_value(n: int, x: Fraction) -> Fraction:
    out = Fraction(1)
    for r in range(1, n + 1):
        out *= q_int_value(r, x)
    return out


def super_catalan_value(m: int, n: int, x: Fraction) -> Fraction:
    f = q_factorial_value
    return f(2 * m, x) * f(2 * n, x) / (f(m, x) * f(n, x) * f(m + n, x))


def q_factorial_by_inversions(n: int) -> QPoly:
    """[n]!_q as the inversion generating function of the symmetric group."""
    counts = Counter()
    for perm in permutations(range(n)):
        inv = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        counts[inv] += 1
    return QPoly.from_terms(dict(counts))


def gaussian_by_word_inversions(n: int, k: int) -> QPoly:
    """[n choose k]_q as the inversion generating function of 0/1 words with k ones."""
    if k < 0 or k > n:
        return QPoly()
    counts = Counter()
    for ones in combinations(range(n), k):
        word = [0] * n
        for i in ones:
            word[i] = 1
        inv = sum(1 for i, j in combinations(range(n), 2) if word[i] > word[j])
        counts[inv] += 1
    return QPoly.from_terms(dict(counts))


def all_words(length: int):
    """Every 0/1 word of the given length, lexicographically."""
    return [tuple(w) for w in product((0, 1), repeat=length)]


def word_levels(word) -> list[int]:
    lv = [0]
    for s in word:
        lv.append(lv[-1] + (1 if s == 0 else -1))
    return lv


def word_maj_des(word) -> tuple[int, int]:
    """Descents straight from the definition: i with word[i] > word[i+1] (1-indexed)."""
    d = [i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]]
    return sum(d), len(d)


def catalan_number(n: int) -> int:
    from math import comb
    return comb(2 * n, n) // (n + 1)
