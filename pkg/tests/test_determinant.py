"""Determinant evaluators: worked values, mutual agreement, caps, validation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tridet import (
    EntryRule,
    HessenbergSpec,
    SequenceKind,
    det_dense,
    det_prefixes,
    det_recurrence,
    det_trudi_compositions,
    det_trudi_partitions,
    make_entries,
)
from tridet.determinant import COMPOSITION_CAP, DENSE_CAP, TRUDI_PARTITION_CAP

ALL_METHODS = (det_recurrence, det_trudi_partitions, det_trudi_compositions, det_dense)


def test_spec_validation():
    with pytest.raises(ValueError):
        HessenbergSpec(0, (1, 2))
    with pytest.raises(ValueError):
        EntryRule(SequenceKind("fibonacci"), -1, 1, 1)
    with pytest.raises(ValueError):
        EntryRule(SequenceKind("fibonacci"), 0, 0, 1)
    with pytest.raises(ValueError):
        EntryRule(SequenceKind("fibonacci"), 0, 1, 0)


def test_rule_kind_accepts_family_name_string():
    rule = EntryRule("tribonacci", 3, 2, 1)
    assert rule.kind == SequenceKind("tribonacci")
    assert make_entries(rule, 4).entries == (1, 4, 13, 44)
    with pytest.raises(ValueError):
        EntryRule("gen-tribonacci", 1, 1, 1)  # parameterized name needs r
    with pytest.raises(TypeError):
        EntryRule(7, 1, 1, 1)


def test_make_entries_strided():
    rule = EntryRule(SequenceKind("tribonacci"), 3, 2, 1)
    spec = make_entries(rule, 4)
    assert spec.a0 == 1
    assert spec.entries == (1, 4, 13, 44)
    with pytest.raises(ValueError):
        make_entries(rule, 0)


def test_worked_values():
    # unrolled by hand via the expansion recurrence
    assert det_recurrence(HessenbergSpec(1, (1, 2, 3, 4))) == 1
    assert det_recurrence(HessenbergSpec(1, (1, 2, 4))) == 1
    assert det_recurrence(HessenbergSpec(1, (1, 1))) == 0
    assert det_recurrence(HessenbergSpec(1, (0, 0, 1, 1))) == -1
    assert det_trudi_compositions(HessenbergSpec(-1, (1, 1, 1))) == 4
    assert det_trudi_compositions(HessenbergSpec(1, (1, 1, 1))) == 0


def test_empty_spec_has_determinant_one():
    empty = HessenbergSpec(1, ())
    for method in ALL_METHODS:
        assert method(empty) == 1


def test_prefixes_match_individual_evaluations():
    spec = make_entries(EntryRule(SequenceKind("tribonacci"), 0, 1, 1), 12)
    prefixes = det_prefixes(spec)
    assert prefixes[0] == 1
    for m in range(1, 13):
        assert prefixes[m] == det_recurrence(HessenbergSpec(1, spec.entries[:m]))


def test_dense_pivoting_paths():
    # leading zero entry forces a row swap inside the elimination
    assert det_dense(HessenbergSpec(1, (0, 0, 1, 1))) == -1
    # fully zero first column short-circuits to zero
    assert det_dense(HessenbergSpec(1, (0, 0))) == 0


def test_caps_are_enforced():
    big = HessenbergSpec(1, tuple(1 for _ in range(COMPOSITION_CAP + 1)))
    with pytest.raises(ValueError):
        det_trudi_compositions(big)
    bigger = HessenbergSpec(1, tuple(1 for _ in range(TRUDI_PARTITION_CAP + 1)))
    with pytest.raises(ValueError):
        det_trudi_partitions(bigger)
    huge = HessenbergSpec(1, tuple(1 for _ in range(DENSE_CAP + 1)))
    with pytest.raises(ValueError):
        det_dense(huge)


def test_composition_method_needs_unit_superdiagonal():
    with pytest.raises(ValueError):
        det_trudi_compositions(HessenbergSpec(2, (1, 1)))


@given(
    st.integers(-3, 3).filter(lambda a0: a0 != 0),
    st.lists(st.integers(-9, 9), min_size=1, max_size=8),
)
@settings(max_examples=80, deadline=None)
def test_recurrence_partitions_dense_agree(a0, entries):
    spec = HessenbergSpec(a0, tuple(entries))
    d = det_recurrence(spec)
    assert det_trudi_partitions(spec) == d
    assert det_dense(spec) == d


@given(
    st.sampled_from((1, -1)),
    st.lists(st.integers(-9, 9), min_size=1, max_size=8),
)
@settings(max_examples=80, deadline=None)
def test_composition_expansion_agrees_for_unit_a0(a0, entries):
    spec = HessenbergSpec(a0, tuple(entries))
    assert det_trudi_compositions(spec) == det_recurrence(spec)


@given(
    st.integers(-9, 9).filter(lambda a0: a0 != 0),
    st.tuples(
        st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)
    ),
)
@settings(max_examples=80, deadline=None)
def test_size_four_polynomial_expansion(a0, entries):
    a1, a2, a3, a4 = entries
    expected = (
        a1**4
        - 3 * a0 * a1**2 * a2
        + 2 * a0**2 * a1 * a3
        + a0**2 * a2**2
        - a0**3 * a4
    )
    assert det_recurrence(HessenbergSpec(a0, entries)) == expected
