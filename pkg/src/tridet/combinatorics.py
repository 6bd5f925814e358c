"""Exact binomial and multinomial coefficients, integer partitions, compositions.

Partitions are produced in multiplicity form: a vector (s_1, ..., s_n) with
s_1 + 2*s_2 + ... + n*s_n = n.  Compositions are ordered tuples of positive
parts.  Both are generated lazily in a fixed deterministic order.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence, Tuple


def binomial(n: int, k: int) -> int:
    """C(n, k), with value 0 whenever k < 0, k > n, or n < 0.

    The zero convention makes truncated sums with negative or overshooting
    limits evaluate cleanly, so callers never need range guards.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(parts_i!) as an exact integer.

    >>> multinomial([2, 1, 0, 0])
    3
    """
    total = 0
    result = 1
    for p in parts:
        if p < 0:
            raise ValueError("multinomial parts must be nonnegative, got %r" % (p,))
        total += p
        result *= math.comb(total, p)
    return result


def partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """Yield every multiplicity vector s of length n with sum i*s_i = n.

    Vectors appear exactly once, in ascending lexicographic order of s.
    For n = 4 that is (0,0,0,1), (0,2,0,0), (1,0,1,0), (2,1,0,0), (4,0,0,0).
    """
    if n <= 0:
        raise ValueError("partitions requires n >= 1, got %d" % n)
    s = [0] * n

    def rec(i: int, w: int) -> Iterator[Tuple[int, ...]]:
        # invariant: s[j] == 0 for every position j >= i
        if w == 0:
            yield tuple(s)
            return
        if i > n:
            return
        for v in range(w // i + 1):
            rem = w - i * v
            # remaining weight must be 0 or reachable with a part > i
            if rem == 0 or rem > i:
                s[i - 1] = v
                yield from rec(i + 1, rem)
        s[i - 1] = 0

    return rec(1, n)


def compositions(n: int) -> Iterator[Tuple[int, ...]]:
    """Yield every composition of n as a tuple of positive parts.

    n = 0 yields the single empty composition; n >= 1 yields 2**(n-1)
    tuples in ascending lexicographic order: (1,1,1) < (1,2) < (2,1) < (3).
    """
    if n < 0:
        raise ValueError("compositions requires n >= 0, got %d" % n)
    if n == 0:
        yield ()
        return

    def rec(w: int) -> Iterator[Tuple[int, ...]]:
        for first in range(1, w + 1):
            if first == w:
                yield (first,)
            else:
                for rest in rec(w - first):
                    yield (first,) + rest

    yield from rec(n)
