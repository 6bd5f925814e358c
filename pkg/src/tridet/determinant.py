"""Exact evaluators for Toeplitz-Hessenberg determinants.

The matrix is lower Hessenberg with constant diagonals: superdiagonal a0,
first column a1..an, entry (i, j) = a_(i-j+1) for j <= i.  Four independent
evaluation routes are provided so results can cross-certify each other:
a first-row expansion recurrence, two combinatorial expansions (over
partitions and over compositions), and fraction-free dense elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .combinatorics import compositions, multinomial, partitions
from .sequences import SequenceKind, seq_range

TRUDI_PARTITION_CAP = 45
COMPOSITION_CAP = 20
DENSE_CAP = 64


@dataclass(frozen=True)
class HessenbergSpec:
    """Superdiagonal constant a0 plus the entry vector a1..an.

    n = 0 (empty entry vector) denotes the empty matrix, determinant 1.
    """

    a0: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.a0 == 0:
            raise ValueError("superdiagonal constant a0 must be nonzero")

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class EntryRule:
    """Entry vector template: a_i = term(start + (i-1)*stride) of a family."""

    kind: SequenceKind
    start: int
    stride: int
    a0: int

    def __post_init__(self) -> None:
        if isinstance(self.kind, str):
            # convenience for fixed families; parameterized names still need r
            object.__setattr__(self, "kind", SequenceKind(self.kind))
        elif not isinstance(self.kind, SequenceKind):
            raise TypeError("kind must be a SequenceKind or a family name string")
        if self.start < 0:
            raise ValueError("start index must be nonnegative")
        if self.stride < 1:
            raise ValueError("stride must be positive")
        if self.a0 == 0:
            raise ValueError("superdiagonal constant a0 must be nonzero")


def make_entries(rule: EntryRule, n: int) -> HessenbergSpec:
    """Materialize the first n entries of a rule as a HessenbergSpec."""
    if n < 1:
        raise ValueError("entry vector needs n >= 1, got %d" % n)
    top = rule.start + (n - 1) * rule.stride
    terms = seq_range(rule.kind, 0, top)
    entries = tuple(terms[rule.start + i * rule.stride] for i in range(n))
    return HessenbergSpec(rule.a0, entries)


def det_prefixes(spec: HessenbergSpec) -> List[int]:
    """Determinants of all leading sections: [det(M_0), ..., det(M_n)].

    det(M_m) = sum_{k=1..m} (-a0)^(k-1) * a_k * det(M_(m-k)), det(M_0) = 1.
    One O(n^2) pass serves every prefix size at once.
    """
    a0, a = spec.a0, spec.entries
    dets = [1]
    for m in range(1, len(a) + 1):
        acc = 0
        sign = 1
        for k in range(1, m + 1):
            acc += sign * a[k - 1] * dets[m - k]
            sign *= -a0
        dets.append(acc)
    return dets


def det_recurrence(spec: HessenbergSpec) -> int:
    """Determinant by repeated first-row expansion."""
    return det_prefixes(spec)[spec.n]


def det_trudi_partitions(spec: HessenbergSpec) -> int:
    """Determinant as a signed multinomial sum over partition multiplicity vectors."""
    n = spec.n
    if n == 0:
        return 1
    if n > TRUDI_PARTITION_CAP:
        raise ValueError("partition expansion capped at n = %d, got %d" % (TRUDI_PARTITION_CAP, n))
    a0, a = spec.a0, spec.entries
    total = 0
    for s in partitions(n):
        sigma = sum(s)
        term = (-a0) ** (n - sigma) * multinomial(s)
        for i, mult in enumerate(s):
            if mult:
                term *= a[i] ** mult
        total += term
    return total


def det_trudi_compositions(spec: HessenbergSpec) -> int:
    """Determinant as a signed weight sum over compositions; needs a0 in {1, -1}.

    For a0 = 1 each composition with m parts carries sign (-1)^(n-m); for
    a0 = -1 every weight is positive.
    """
    n = spec.n
    if n == 0:
        return 1
    if n > COMPOSITION_CAP:
        raise ValueError("composition expansion capped at n = %d, got %d" % (COMPOSITION_CAP, n))
    if spec.a0 not in (1, -1):
        raise ValueError("composition expansion requires a0 in {1, -1}, got %d" % spec.a0)
    a = spec.entries
    total = 0
    for parts in compositions(n):
        weight = 1
        for x in parts:
            weight *= a[x - 1]
        if spec.a0 == 1 and (n - len(parts)) % 2 == 1:
            weight = -weight
        total += weight
    return total


def _dense_matrix(spec: HessenbergSpec) -> List[List[int]]:
    n = spec.n
    a0, a = spec.a0, spec.entries
    rows = []
    for i in range(n):
        row = [0] * n
        for j in range(i + 1):
            row[j] = a[i - j]
        if i + 1 < n:
            row[i + 1] = a0
        rows.append(row)
    return rows


def det_dense(spec: HessenbergSpec) -> int:
    """Determinant of the materialized matrix by fraction-free elimination.

    Bareiss updates keep every intermediate an integer; row swaps only flip
    the tracked sign.
    """
    n = spec.n
    if n == 0:
        return 1
    if n > DENSE_CAP:
        raise ValueError("dense evaluation capped at n = %d, got %d" % (DENSE_CAP, n))
    m = _dense_matrix(spec)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by the Bareiss identity
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
