"""Sequence families: frozen values, recurrences, closed forms, validation."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tridet import (
    SequenceKind,
    seq_range,
    seq_term,
    square_rmino_closed,
    tribonacci_explicit,
)

# hand-unrolled from the defining recurrences
FROZEN = {
    ("fibonacci", None): [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55],
    ("tribonacci", None): [0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149],
    ("padovan", None): [1, 0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5],
    ("gen-tribonacci", 4): [0, 0, 0, 1, 1, 2, 3, 6, 10, 18, 31, 55, 96, 169],
    ("gen-tribonacci", 5): [0, 0, 0, 0, 1, 1, 2, 3, 5, 9, 15, 26, 44, 75, 128, 218],
    ("gen-tribonacci", 6): [0, 0, 0, 0, 0, 1, 1, 2, 3, 5, 8, 14, 23, 39, 65, 109],
    ("gen-padovan", 4): [1, 0, 0, 0, 1, 0, 1, 0, 2, 0, 3, 0, 5],
    ("square-rmino", 2): [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89],
    ("square-rmino", 3): [1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28],
    ("skip-tribonacci", 5): [0, 0, 0, 0, 1, 1, 1, 2, 3, 5, 8, 12, 19],
    ("k-step-fibonacci", 4): [0, 0, 0, 1, 1, 2, 4, 8, 15, 29, 56, 108, 208],
    ("q-sequence", 2): [1, 0, 1, 0, 1, 0, 1, 0, 1],
    ("q-sequence", 4): [1, 0, 0, 0, 1, 0, 1, 1, 2, 2, 4, 5, 8],
}

# lag sets restated independently of the implementation table
LAGS = {
    ("fibonacci", None): (1, 2),
    ("tribonacci", None): (1, 2, 3),
    ("padovan", None): (2, 3),
    ("gen-tribonacci", 5): (1, 2, 5),
    ("gen-padovan", 5): (2, 5),
    ("square-rmino", 4): (1, 4),
    ("skip-tribonacci", 7): (1, 4, 7),
    ("k-step-fibonacci", 5): (1, 2, 3, 4, 5),
    ("q-sequence", 5): (2, 3, 4, 5),
}


@pytest.mark.parametrize("family,r", sorted(FROZEN, key=str))
def test_frozen_prefixes(family, r):
    expected = FROZEN[(family, r)]
    assert seq_range(SequenceKind(family, r), 0, len(expected) - 1) == expected


@pytest.mark.parametrize("family,r", sorted(LAGS, key=str))
def test_recurrence_holds_beyond_the_seeds(family, r):
    kind = SequenceKind(family, r)
    lags = LAGS[(family, r)]
    for n in range(max(lags), 60):
        assert seq_term(kind, n) == sum(seq_term(kind, n - lag) for lag in lags)


def test_specializations_collapse_to_fixed_families():
    trib = seq_range(SequenceKind("tribonacci"), 0, 30)
    assert seq_range(SequenceKind("gen-tribonacci", 3), 0, 30) == trib
    assert seq_range(SequenceKind("k-step-fibonacci", 3), 0, 30) == trib
    assert seq_range(SequenceKind("skip-tribonacci", 3), 0, 30) == trib
    assert seq_range(SequenceKind("k-step-fibonacci", 2), 0, 30) == seq_range(
        SequenceKind("fibonacci"), 0, 30
    )
    assert seq_range(SequenceKind("gen-padovan", 3), 0, 30) == seq_range(
        SequenceKind("padovan"), 0, 30
    )


def test_two_step_alternator():
    # the r = 2 member of the two-step family alternates 1, 0
    kind = SequenceKind("q-sequence", 2)
    for m in range(0, 40):
        assert seq_term(kind, m) == (1 if m % 2 == 0 else 0)


def test_tribonacci_explicit_matches_recurrence():
    kind = SequenceKind("tribonacci")
    for n in range(2, 41):
        assert tribonacci_explicit(n) == seq_term(kind, n)


def test_tribonacci_explicit_rejects_small_index():
    with pytest.raises(ValueError):
        tribonacci_explicit(1)


def test_square_rmino_closed_matches_recurrence():
    for r in range(2, 9):
        kind = SequenceKind("square-rmino", r)
        for m in range(0, 31):
            assert square_rmino_closed(r, m) == seq_term(kind, m)


def test_square_rmino_closed_rejects_bad_arguments():
    with pytest.raises(ValueError):
        square_rmino_closed(1, 5)
    with pytest.raises(ValueError):
        square_rmino_closed(3, -1)


@pytest.mark.parametrize(
    "family,r",
    [
        ("tribonacci", 3),  # fixed family takes no order
        ("gen-tribonacci", None),
        ("gen-tribonacci", 2),
        ("gen-padovan", 2),
        ("skip-tribonacci", 4),  # must be odd
        ("skip-tribonacci", 1),
        ("square-rmino", 1),
        ("k-step-fibonacci", 1),
        ("q-sequence", 1),
        ("nonesuch", None),
    ],
)
def test_kind_validation(family, r):
    with pytest.raises(ValueError):
        SequenceKind(family, r)


def test_seq_term_rejects_negative_index():
    with pytest.raises(ValueError):
        seq_term(SequenceKind("fibonacci"), -1)


def test_seq_range_rejects_bad_bounds():
    with pytest.raises(ValueError):
        seq_range(SequenceKind("fibonacci"), -1, 3)
    with pytest.raises(ValueError):
        seq_range(SequenceKind("fibonacci"), 5, 2)


def test_repeated_queries_are_consistent():
    # the memo grows on demand; later short reads must agree with earlier ones
    kind = SequenceKind("gen-tribonacci", 5)
    first = seq_range(kind, 0, 40)
    assert seq_term(kind, 12) == first[12]
    assert seq_range(kind, 10, 20) == first[10:21]


@given(st.integers(3, 8), st.integers(0, 80))
def test_gen_tribonacci_recurrence_property(r, n):
    kind = SequenceKind("gen-tribonacci", r)
    if n >= r:
        assert seq_term(kind, n) == (
            seq_term(kind, n - 1) + seq_term(kind, n - 2) + seq_term(kind, n - r)
        )
    elif n == r - 1:
        assert seq_term(kind, n) == 1
    else:
        assert seq_term(kind, n) == 0
