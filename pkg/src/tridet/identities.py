"""Registry of determinant identities with exact pass/fail evaluation.

Each case pairs a determinant left side (an entry rule over a sequence
family, evaluated by the expansion recurrence) with an independently coded
right side: a closed form, an auxiliary recurrence, or a series
coefficient.  A report passes when the two integers are equal; failures
are data, never exceptions.  Checks outside a case's stated (r, n) domain
are refused rather than silently passed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .combinatorics import binomial
from .determinant import EntryRule, det_prefixes, det_recurrence, make_entries
from .sequences import SequenceKind, seq_term
from .series import expand_rational, gf_catalog

DEFAULT_R_SET = (2, 3, 4, 5, 6, 7, 8)
DEFAULT_N_MAX = 24

_FIB = SequenceKind("fibonacci")
_TRIB = SequenceKind("tribonacci")
_PAD = SequenceKind("padovan")

RhsFn = Callable[[Optional[int], int], int]
PairFn = Callable[[Optional[int], int], Tuple[int, int]]


@dataclass(frozen=True)
class IdentityCase:
    """One checkable identity over a stated (r, n) domain.

    Fixed cases (parameterized False) run once with r = None; the rest run
    per accepted r.  rule/rhs are present for plain determinant-vs-closed-
    form cases; evaluate covers every case uniformly invoking them.
    """

    id: str
    description: str
    parameterized: bool
    accepts_r: Callable[[int], bool]
    n_min: Callable[[Optional[int]], int]
    n_cap: Callable[[Optional[int]], Optional[int]]
    evaluate: PairFn
    rule: Optional[Callable[[Optional[int]], EntryRule]] = None
    rhs: Optional[RhsFn] = None


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one (identity, r, n) check; passed means lhs == rhs exactly."""

    id: str
    r: Optional[int]
    n: int
    lhs: int
    rhs: int
    passed: bool


@dataclass(frozen=True)
class VerificationSummary:
    checked: int
    passed: int
    failed: int


def _neg1(k: int) -> int:
    return -1 if k % 2 else 1


def _gf_coeff(family: str, r: int, n: int) -> int:
    return expand_rational(gf_catalog(family, r), n)[n - 1]


def _case(
    id: str,
    description: str,
    *,
    rule: Optional[Callable[[Optional[int]], EntryRule]] = None,
    rhs: Optional[RhsFn] = None,
    pair: Optional[PairFn] = None,
    r_ok: Optional[Callable[[int], bool]] = None,
    n_min=1,
    n_cap=None,
) -> IdentityCase:
    if pair is None:
        assert rule is not None and rhs is not None

        def pair(r: Optional[int], n: int, _rule=rule, _rhs=rhs) -> Tuple[int, int]:
            return det_recurrence(make_entries(_rule(r), n)), _rhs(r, n)

    n_min_fn = n_min if callable(n_min) else (lambda r, _v=n_min: _v)
    n_cap_fn = n_cap if callable(n_cap) else (lambda r, _v=n_cap: _v)
    return IdentityCase(
        id=id,
        description=description,
        parameterized=r_ok is not None,
        accepts_r=r_ok if r_ok is not None else (lambda r: False),
        n_min=n_min_fn,
        n_cap=n_cap_fn,
        evaluate=pair,
        rule=rule,
        rhs=rhs,
    )


def _trib_rule(start: int, stride: int, a0: int) -> Callable[[Optional[int]], EntryRule]:
    return lambda r: EntryRule(_TRIB, start, stride, a0)


def _gt_rule(start_of: Callable[[int], int], stride: int, a0: int) -> Callable[[Optional[int]], EntryRule]:
    return lambda r: EntryRule(SequenceKind("gen-tribonacci", r), start_of(r), stride, a0)


def _odd(r: int) -> bool:
    return r >= 3 and r % 2 == 1


def _even(r: int) -> bool:
    return r >= 4 and r % 2 == 0


def _any_r(r: int) -> bool:
    return r >= 3


# right sides, one helper per case where a lambda would be unreadable

def _rhs_i04(r: Optional[int], n: int) -> int:
    c2, c3 = 1, 2
    if n == 2:
        return c2
    prev2, prev1 = c2, c3
    for _ in range(4, n + 1):
        prev2, prev1 = prev1, 3 * prev1 + 2 * prev2
    return prev1


def _rhs_i09(r: Optional[int], n: int) -> int:
    total = 0
    for i in range(n):
        b = binomial(n - 1 - i, i // 2)
        if b == 0:
            continue
        e = n - 1 - i - i // 2
        assert e >= 0, "exponent went negative with a live binomial"
        total += 2**e * b
    return _neg1(n - 1) * total


def _rhs_i10(r: Optional[int], n: int) -> int:
    m = n % 3
    if m == 0:
        return _neg1(n)
    if m == 1:
        return _neg1(n + 1)
    return 0


def _rhs_i19(r: Optional[int], n: int) -> int:
    assert r is not None
    if r % 2 == 1:
        return 4 * _neg1(n - 1)
    total = sum(
        binomial(n - 1 - (r // 2 - 1) * i, i) for i in range(2 * (n - 1) // r + 1)
    )
    # boundary tilings not covered by the sum: all-dominoes (n = 1) and the
    # single long piece (2n = r)
    if n == 1:
        total += 1
    if 2 * n == r:
        total += 1
    return _neg1(n - 1) * total


def _aux_i20(r: int, n: int) -> int:
    h = (r + 1) // 2
    vals = [0] * (n + 1)
    for m in range(1, n + 1):
        if m < h:
            v = 0
        elif m < r:
            v = seq_term(_FIB, 2 * m - r + 1)
        elif m == r:
            v = 1 + seq_term(_FIB, r + 1)
        else:
            v = 3 * vals[m - 1] - vals[m - 2] + vals[m - h]
        vals[m] = v
    return vals[n]


def _aux_i21(r: int, n: int) -> int:
    h = r // 2
    vals = [0] * (n + 1)
    for m in range(1, n + 1):
        if m < h:
            v = 0
        elif m <= r:
            v = seq_term(_FIB, 2 * m - r + 1)
        else:
            v = 3 * vals[m - 1] - vals[m - 2] + vals[m - h] - vals[m - h - 1]
        vals[m] = v
    return vals[n]


def _rhs_i23(r: Optional[int], n: int) -> int:
    assert r is not None
    if r % 2 == 1:
        return _neg1(n - 1) * _gf_coeff("i23", r, n)
    half = SequenceKind("square-rmino", r // 2)
    conv = sum(seq_term(half, i) * seq_term(half, n - 1 - i) for i in range(n))
    return _neg1(n - 1) * conv


def _rhs_i25(r: Optional[int], n: int) -> int:
    assert r is not None
    m = (r - 1) // 2
    if n % m == 0:
        q = 2 * n // (r - 1)
        return _neg1(n - q)
    if (n - 1) % m == 0:
        q = 2 * (n - 1) // (r - 1)
        return 2 * _neg1(n - 1 - q)
    if (n - 2) % m == 0:
        q = 2 * (n - 2) // (r - 1)
        return _neg1(n - q)
    return 0


def _aux_i31(m: int) -> int:
    return sum(
        binomial(m - 2 * i, i) * 2**i * 3 ** (m - 3 * i) for i in range(m // 3 + 1)
    )


def _pair_i34(r: Optional[int], n: int) -> Tuple[int, int]:
    assert r is not None
    ksf = SequenceKind("k-step-fibonacci", r)
    pairs = []
    if n >= r - 1:
        lhs = det_recurrence(make_entries(EntryRule(ksf, 0, 1, 1), n))
        if r == 2:
            # one-step count: a single all-squares tiling for n >= 2,
            # no tiling of negative length at n = 1
            rhs = 0 if n == 1 else _neg1(n - 1)
        else:
            rhs = _neg1(n - 1) * seq_term(SequenceKind("k-step-fibonacci", r - 1), n - 2)
        pairs.append((lhs, rhs))
    lhs_b = det_recurrence(make_entries(EntryRule(ksf, r - 1, 1, 1), n))
    rhs_b = _neg1(n - 1) * seq_term(SequenceKind("q-sequence", r), n + r - 1)
    pairs.append((lhs_b, rhs_b))
    for lhs, rhs in pairs:
        if lhs != rhs:
            return lhs, rhs
    return pairs[0]


def _pair_i36(r: Optional[int], n: int) -> Tuple[int, int]:
    def t(k: int) -> int:
        return seq_term(_TRIB, k)

    if n == 1:
        lhs = t(2) ** 3 + 2 * t(2) * t(6) + t(4) ** 2 + t(10)
        rhs = 100
    elif n == 2:
        lhs = t(3) ** 4 - 3 * t(3) ** 2 * t(4) + 2 * t(3) * t(5) + t(4) ** 2 - t(6)
        rhs = 0
    else:
        lhs = (
            t(2) ** 5
            - 4 * t(2) ** 3 * t(3)
            + 3 * t(2) ** 2 * t(4)
            + 3 * t(2) * t(3) ** 2
            - 2 * t(2) * t(5)
            - 2 * t(3) * t(4)
            + t(6)
        )
        rhs = seq_term(_PAD, 7)
    return lhs, rhs


def registry() -> List[IdentityCase]:
    """All identity cases, in id order; 37 in total."""
    cases = [
        _case(
            "I-01",
            "tribonacci entries from index 0: signed Fibonacci value",
            rule=_trib_rule(0, 1, 1),
            rhs=lambda r, n: _neg1(n - 1) * seq_term(_FIB, n - 2),
            n_min=2,
        ),
        _case(
            "I-02",
            "tribonacci entries from index 2: signed Padovan value",
            rule=_trib_rule(2, 1, 1),
            rhs=lambda r, n: _neg1(n - 1) * seq_term(_PAD, n + 2),
        ),
        _case(
            "I-03",
            "tribonacci entries with a0 = -1: floor((2^n + 6) / 14)",
            rule=_trib_rule(0, 1, -1),
            rhs=lambda r, n: (2**n + 6) // 14,
        ),
        _case(
            "I-04",
            "even-indexed tribonacci entries with a0 = -1: closed form via c(n) = 3c(n-1) + 2c(n-2)",
            rule=_trib_rule(0, 2, -1),
            rhs=_rhs_i04,
            n_min=2,
        ),
        _case(
            "I-05",
            "tribonacci entries from index 1: signed sum of C(n-2-2i, i)",
            rule=_trib_rule(1, 1, 1),
            rhs=lambda r, n: _neg1(n - 1)
            * sum(binomial(n - 2 - 2 * i, i) for i in range((n - 2) // 3 + 1)),
        ),
        _case(
            "I-06",
            "tribonacci entries from index 1 with a0 = -1: sum of C(2n-4-2i, i)",
            rule=_trib_rule(1, 1, -1),
            rhs=lambda r, n: sum(
                binomial(2 * n - 4 - 2 * i, i) for i in range((2 * n - 4) // 3 + 1)
            ),
            n_min=2,
        ),
        _case(
            "I-07",
            "odd-indexed tribonacci entries from index 1: signed floor(4 * 3^(n-3))",
            rule=_trib_rule(1, 2, 1),
            rhs=lambda r, n: _neg1(n - 1)
            * (4 * 3 ** (n - 3) if n >= 3 else 4 // 3 ** (3 - n)),
        ),
        _case(
            "I-08",
            "tribonacci entries from index 3: identically zero from n = 4",
            rule=_trib_rule(3, 1, 1),
            rhs=lambda r, n: 0,
            n_min=4,
        ),
        _case(
            "I-09",
            "odd-indexed tribonacci entries from index 3: signed power-of-two binomial sum",
            rule=_trib_rule(3, 2, 1),
            rhs=_rhs_i09,
        ),
        _case(
            "I-10",
            "tribonacci entries from index 4: period-3 pattern of 0 and +-1",
            rule=_trib_rule(4, 1, 1),
            rhs=_rhs_i10,
            n_min=2,
        ),
        _case(
            "I-11",
            "even-indexed tribonacci entries from index 4: 4 up to alternating sign",
            rule=_trib_rule(4, 2, 1),
            rhs=lambda r, n: 4 * _neg1(n - 1),
            n_min=3,
        ),
        _case(
            "I-12",
            "tribonacci entries from index 5: sum of C(n+2+i, n+1-2i)",
            rule=_trib_rule(5, 1, 1),
            rhs=lambda r, n: sum(
                binomial(n + 2 + i, n + 1 - 2 * i) for i in range((n + 1) // 2 + 1)
            ),
        ),
        _case(
            "I-13",
            "odd-indexed tribonacci entries from index 5: constant 4",
            rule=_trib_rule(5, 2, 1),
            rhs=lambda r, n: 4,
            n_min=3,
        ),
        _case(
            "I-14",
            "order-r tribonacci entries from index 0: signed Fibonacci value",
            rule=_gt_rule(lambda r: 0, 1, 1),
            rhs=lambda r, n: _neg1(n - 1) * seq_term(_FIB, n - r + 1),
            r_ok=_any_r,
            n_min=lambda r: r - 1,
        ),
        _case(
            "I-15",
            "order-r tribonacci entries from index r-2: signed square-and-r-mino count",
            rule=_gt_rule(lambda r: r - 2, 1, 1),
            rhs=lambda r, n: _neg1(n - 1)
            * seq_term(SequenceKind("square-rmino", r), n - 2),
            r_ok=_any_r,
            n_min=2,
        ),
        _case(
            "I-16",
            "order-r tribonacci entries from index r-1: signed order-r Padovan value",
            rule=_gt_rule(lambda r: r - 1, 1, 1),
            rhs=lambda r, n: _neg1(n - 1)
            * seq_term(SequenceKind("gen-padovan", r), n + r - 1),
            r_ok=_any_r,
        ),
        _case(
            "I-17",
            "order-r tribonacci entries from index r: signed indicator of n = r",
            rule=_gt_rule(lambda r: r, 1, 1),
            rhs=lambda r, n: _neg1(n - 1) * (1 if n == r else 0),
            r_ok=_any_r,
            n_min=3,
        ),
        _case(
            "I-18",
            "order-r tribonacci entries from index r+1: alternating sum of C(n-(r-2)i, i)",
            rule=_gt_rule(lambda r: r + 1, 1, 1),
            rhs=lambda r, n: sum(
                _neg1(r * i) * binomial(n - (r - 2) * i, i)
                for i in range(n // (r - 1) + 1)
            ),
            r_ok=_any_r,
            n_min=2,
        ),
        _case(
            "I-19",
            "odd-indexed order-r entries from index r+1: 4 up to sign (odd r), binomial sum with boundary terms (even r)",
            rule=_gt_rule(lambda r: r + 1, 2, 1),
            rhs=_rhs_i19,
            r_ok=_any_r,
            n_min=lambda r: r if r % 2 == 1 else 1,
        ),
        _case(
            "I-19b",
            "odd-indexed order-r entries from index r+1, n below r: 1 or 3 up to sign",
            rule=_gt_rule(lambda r: r + 1, 2, 1),
            rhs=lambda r, n: (3 if n >= (r + 1) // 2 else 1) * _neg1(n - 1),
            r_ok=_odd,
            n_min=2,
            n_cap=lambda r: r - 1,
        ),
        _case(
            "I-20",
            "odd-indexed order-r entries from index 1, odd r: signed auxiliary three-term sequence",
            rule=_gt_rule(lambda r: 1, 2, 1),
            rhs=lambda r, n: _neg1(n - 1) * _aux_i20(r, n),
            r_ok=_odd,
        ),
        _case(
            "I-21",
            "odd-indexed order-r entries from index 1, even r: signed auxiliary four-term sequence",
            rule=_gt_rule(lambda r: 1, 2, 1),
            rhs=lambda r, n: _neg1(n - 1) * _aux_i21(r, n),
            r_ok=_even,
        ),
        _case(
            "I-22",
            "odd-indexed order-r entries from index 1: signed series coefficient",
            rule=_gt_rule(lambda r: 1, 2, 1),
            rhs=lambda r, n: _neg1(n - 1) * _gf_coeff("i22", r, n),
            r_ok=_any_r,
        ),
        _case(
            "I-23",
            "odd-indexed order-r entries from index r: signed series coefficient (odd r) or half-order convolution (even r)",
            rule=_gt_rule(lambda r: r, 2, 1),
            rhs=_rhs_i23,
            r_ok=_any_r,
        ),
        _case(
            "I-24",
            "odd-indexed tribonacci entries from index 3: series coefficient of (x - x^2) / (1 + 2x + x^3)",
            rule=_trib_rule(3, 2, 1),
            rhs=lambda r, n: _gf_coeff("i24", 3, n),
        ),
        _case(
            "I-25",
            "odd-indexed order-r entries from index r+2, odd r >= 7: residue-class sign pattern",
            rule=_gt_rule(lambda r: r + 2, 2, 1),
            rhs=_rhs_i25,
            r_ok=lambda r: r >= 7 and r % 2 == 1,
            n_min=lambda r: (r + 3) // 2,
        ),
        _case(
            "I-26",
            "odd-indexed order-5 entries from index 7: zero at even n, +-2 at odd n",
            rule=_gt_rule(lambda r: r + 2, 2, 1),
            rhs=lambda r, n: 0 if n % 2 == 0 else 2 * _neg1((n - 1) // 2),
            r_ok=lambda r: r == 5,
            n_min=4,
        ),
        _case(
            "I-27",
            "odd-indexed tribonacci entries from index 5: constant 4, order-3 route",
            rule=_trib_rule(5, 2, 1),
            rhs=lambda r, n: 4,
            n_min=3,
        ),
        _case(
            "I-28",
            "even-indexed order-r entries from index 0: series coefficient",
            rule=_gt_rule(lambda r: 0, 2, 1),
            rhs=lambda r, n: _gf_coeff("i28", r, n),
            r_ok=_any_r,
        ),
        _case(
            "I-29",
            "even-indexed order-r entries from index 0 with a0 = -1: series coefficient",
            rule=_gt_rule(lambda r: 0, 2, -1),
            rhs=lambda r, n: _gf_coeff("i29", r, n),
            r_ok=_any_r,
        ),
        _case(
            "I-30",
            "order-r entries from index r+2: series coefficient",
            rule=_gt_rule(lambda r: r + 2, 1, 1),
            rhs=lambda r, n: _gf_coeff("i30", r, n),
            r_ok=_any_r,
        ),
        _case(
            "I-31",
            "even-indexed tribonacci entries from index 0: signed difference of weighted binomial sums",
            rule=_trib_rule(0, 2, 1),
            rhs=lambda r, n: _neg1(n - 1) * (_aux_i31(n - 2) - _aux_i31(n - 3)),
            n_min=3,
        ),
        _case(
            "I-32",
            "skip-tribonacci entries with a0 = -1: sum of C(2n-r-1-(r-1)i, i)",
            rule=lambda r: EntryRule(
                SequenceKind("skip-tribonacci", r), (r - 1) // 2, 1, -1
            ),
            rhs=lambda r, n: sum(
                binomial(2 * n - r - 1 - (r - 1) * i, i)
                for i in range((2 * n - r - 1) // r + 1)
            ),
            r_ok=_odd,
            n_min=lambda r: (r + 1) // 2,
        ),
        _case(
            "I-33",
            "r-step Fibonacci entries with a0 = -1: floor((2^n + 2^r - 2) / (2^(r+1) - 2))",
            rule=lambda r: EntryRule(SequenceKind("k-step-fibonacci", r), 0, 1, -1),
            rhs=lambda r, n: (2**n + 2**r - 2) // (2 ** (r + 1) - 2),
            r_ok=lambda r: r >= 2,
        ),
        _case(
            "I-34",
            "r-step Fibonacci entries: signed (r-1)-step value and signed spaced-piece count, two clauses",
            pair=_pair_i34,
            r_ok=lambda r: r >= 2,
        ),
        _case(
            "I-35",
            "even-indexed tribonacci entries with a0 = -1: recurrence c(n) = 3c(n-1) + 2c(n-2)",
            rule=_trib_rule(0, 2, -1),
            rhs=_rhs_i04,
            n_min=2,
        ),
        _case(
            "I-36",
            "three fixed polynomial identities in tribonacci terms: 100, 0, and a Padovan value",
            pair=_pair_i36,
            n_cap=3,
        ),
    ]
    assert [c.id for c in cases] == sorted(c.id for c in cases)
    return cases


def _in_domain(case: IdentityCase, r: Optional[int], n: int) -> bool:
    if case.parameterized:
        if r is None or not case.accepts_r(r):
            return False
    elif r is not None:
        return False
    if n < case.n_min(r):
        return False
    cap = case.n_cap(r)
    return cap is None or n <= cap


def check_identity(case: IdentityCase, r: Optional[int], n: int) -> IdentityReport:
    """Evaluate one case at one point; out-of-domain points raise."""
    if not _in_domain(case, r, n):
        raise ValueError("(r=%r, n=%d) is outside the domain of %s" % (r, n, case.id))
    lhs, rhs = case.evaluate(r, n)
    return IdentityReport(case.id, r, n, lhs, rhs, lhs == rhs)


def check_all(
    r_set: Sequence[int] = DEFAULT_R_SET,
    n_max: int = DEFAULT_N_MAX,
    ids: Optional[Sequence[str]] = None,
    fail_fast: bool = False,
) -> Tuple[List[IdentityReport], VerificationSummary]:
    """Check every in-domain (case, r, n) with n <= n_max.

    Reports come back ordered by (id, r, n) with fixed cases first at
    r = None; fixed cases run once regardless of r_set.
    """
    cases = registry()
    if ids is not None:
        known = {c.id for c in cases}
        unknown = sorted(set(ids) - known)
        if unknown:
            raise ValueError("unknown identity ids: %s" % ", ".join(unknown))
        wanted = set(ids)
        cases = [c for c in cases if c.id in wanted]
    reports: List[IdentityReport] = []
    stop = False
    for case in cases:
        if case.parameterized:
            r_values: List[Optional[int]] = [
                r for r in sorted(set(r_set)) if case.accepts_r(r)
            ]
        else:
            r_values = [None]
        for r in r_values:
            lo = case.n_min(r)
            cap = case.n_cap(r)
            hi = n_max if cap is None else min(n_max, cap)
            if hi < lo:
                continue
            if case.rule is not None and case.rhs is not None:
                # one prefix pass serves every n for this (case, r)
                dets = det_prefixes(make_entries(case.rule(r), hi))
                points = ((dets[n], case.rhs(r, n)) for n in range(lo, hi + 1))
            else:
                points = (case.evaluate(r, n) for n in range(lo, hi + 1))
            for offset, (lhs, rhs) in enumerate(points):
                report = IdentityReport(case.id, r, lo + offset, lhs, rhs, lhs == rhs)
                reports.append(report)
                if fail_fast and not report.passed:
                    stop = True
                    break
            if stop:
                break
        if stop:
            break
    passed = sum(1 for report in reports if report.passed)
    summary = VerificationSummary(len(reports), passed, len(reports) - passed)
    return reports, summary
