"""Finite multiplicity sequences and their combinatorics.

A tangency profile is a finite sequence of nonnegative integers indexed
from 1: entry k records how many contacts of order k occur.  Sequences
are stored as plain tuples in canonical form, meaning no trailing zeros;
the empty tuple is the zero sequence.  All arithmetic is exact (Python
ints, which are arbitrary precision).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb, factorial


def canon(entries) -> tuple[int, ...]:
    """Canonical form: tuple with trailing zeros removed, entries >= 0."""
    t = tuple(int(e) for e in entries)
    if any(e < 0 for e in t):
        raise ValueError("multiplicity entries must be nonnegative: %r" % (t,))
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def size(s) -> int:
    """|s| = total number of contacts, sum of the entries."""
    return sum(s)


def weight(s) -> int:
    """Total contact order, sum of k * s_k."""
    return sum(k * e for k, e in enumerate(s, start=1))


def _padded(a, b):
    n = max(len(a), len(b))
    return tuple(a) + (0,) * (n - len(a)), tuple(b) + (0,) * (n - len(b))


def leq(a, b) -> bool:
    """Entrywise a_k <= b_k."""
    a, b = _padded(a, b)
    return all(x <= y for x, y in zip(a, b))


def add(a, b) -> tuple[int, ...]:
    a, b = _padded(a, b)
    return canon(x + y for x, y in zip(a, b))


def sub(a, b) -> tuple[int, ...]:
    """Entrywise difference a - b; requires b <= a."""
    a, b = _padded(a, b)
    if any(x < y for x, y in zip(a, b)):
        raise ValueError("difference would be negative")
    return canon(x - y for x, y in zip(a, b))


def unit(k: int) -> tuple[int, ...]:
    """The sequence e_k with a single entry 1 at index k (1-based)."""
    if k < 1:
        raise ValueError("index must be >= 1")
    return (0,) * (k - 1) + (1,)


def binomial(top, bot) -> int:
    """Entrywise product of binomials, prod_k C(top_k, bot_k).

    Zero whenever some bot_k exceeds top_k, so the value doubles as the
    indicator of bot <= top.
    """
    top, bot = _padded(top, bot)
    result = 1
    for t, b in zip(top, bot):
        result *= comb(t, b) if b <= t else 0
        if result == 0:
            return 0
    return result


def nat_power(c) -> int:
    """prod_k k^(c_k); the empty product is 1."""
    result = 1
    for k, e in enumerate(c, start=1):
        result *= k ** e
    return result


def fact(s) -> int:
    """prod_k (s_k)!, the symmetry factor of the profile."""
    result = 1
    for e in s:
        result *= factorial(e)
    return result


@lru_cache(maxsize=None)
def partitions(w: int) -> tuple[tuple[int, ...], ...]:
    """All canonical sequences of weight w.

    Each is the multiplicity vector of a partition of w.  Ordered by the
    underlying part lists ascending, so the all-ones partition comes
    first and the single part w last:

        partitions(2) -> ((2,), (0, 1))
        partitions(3) -> ((3,), (1, 1), (0, 0, 1))
    """
    if w < 0:
        raise ValueError("weight must be nonnegative")

    out = []

    def grow(remaining: int, min_part: int, parts: list[int]) -> None:
        if remaining == 0:
            vec = [0] * (parts[-1] if parts else 0)
            for p in parts:
                vec[p - 1] += 1
            out.append(canon(vec))
            return
        for p in range(min_part, remaining + 1):
            parts.append(p)
            grow(remaining - p, p, parts)
            parts.pop()

    grow(w, 1, [])
    return tuple(out)


def subsequences(a) -> list[tuple[int, ...]]:
    """All canonical b with b <= a, sorted lexicographically."""
    return sorted(canon(t) for t in product(*(range(e + 1) for e in a)))
