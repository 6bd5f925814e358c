"""Counting and brute-force enumeration of linear tilings by colored pieces.

A piece set is a list of (length, colors) pairs with distinct lengths.
Counting uses the obvious linear recurrence; enumeration is exhaustive and
capped, so it can serve as an independent oracle for the counts and for the
sequence families that have a tiling interpretation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .sequences import SequenceKind

ENUMERATION_CAP = 18


@dataclass(frozen=True)
class PieceSet:
    """Pieces as (length, colors) pairs; lengths distinct, both positive."""

    pieces: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        lengths = [length for length, _ in self.pieces]
        if any(length < 1 for length in lengths):
            raise ValueError("piece lengths must be >= 1")
        if any(colors < 1 for _, colors in self.pieces):
            raise ValueError("piece color counts must be >= 1")
        if len(set(lengths)) != len(lengths):
            raise ValueError("piece lengths must be distinct")


def uncolored(*lengths: int) -> PieceSet:
    """Piece set with one color per length."""
    return PieceSet(tuple((length, 1) for length in lengths))


def count_tilings(length: int, pieces: PieceSet) -> int:
    """Number of ordered tilings of a 1 x length strip; the empty strip has 1."""
    if length < 0:
        raise ValueError("length must be nonnegative, got %d" % length)
    counts = [1] + [0] * length
    for cell in range(1, length + 1):
        total = 0
        for plen, colors in pieces.pieces:
            if plen <= cell:
                total += colors * counts[cell - plen]
        counts[cell] = total
    return counts[length]


def enumerate_tilings(length: int, pieces: PieceSet) -> List[Tuple[Tuple[int, int], ...]]:
    """All tilings as tuples of (piece length, color index) pairs, colors 1-based.

    Exhaustive search, so the strip length is capped at ENUMERATION_CAP.
    """
    if length < 0:
        raise ValueError("length must be nonnegative, got %d" % length)
    if length > ENUMERATION_CAP:
        raise ValueError(
            "enumeration capped at length %d, got %d" % (ENUMERATION_CAP, length)
        )
    ordered = sorted(pieces.pieces)
    out: List[Tuple[Tuple[int, int], ...]] = []
    stack: List[Tuple[int, int]] = []

    def rec(remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(stack))
            return
        for plen, colors in ordered:
            if plen <= remaining:
                for color in range(1, colors + 1):
                    stack.append((plen, color))
                    rec(remaining - plen)
                    stack.pop()

    rec(length)
    return out


def pieces_for(kind: SequenceKind) -> PieceSet:
    """The piece set whose tiling counts reproduce the family, all one color."""
    fam, r = kind.family, kind.r
    if fam == "fibonacci":
        return uncolored(1, 2)
    if fam == "tribonacci":
        return uncolored(1, 2, 3)
    if fam == "padovan":
        return uncolored(2, 3)
    assert r is not None
    if fam == "gen-tribonacci":
        return uncolored(1, 2, r)
    if fam == "gen-padovan":
        return uncolored(2, r)
    if fam == "square-rmino":
        return uncolored(1, r)
    if fam == "skip-tribonacci":
        return uncolored(1, (r + 1) // 2, r)
    if fam == "k-step-fibonacci":
        return uncolored(*range(1, r + 1))
    if fam == "q-sequence":
        return uncolored(*range(2, r + 1))
    raise ValueError("no tiling interpretation for family %r" % (fam,))
