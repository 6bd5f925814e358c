#!/usr/bin/env python3
"""Randomized cross-validation of the independent evaluation routes.

Four blocks: determinant evaluators against each other on random specs,
the size-4 polynomial expansion, tiling counts against sequence terms,
and series coefficients against determinant sequences.  One PASS/FAIL
line per block; exit 1 on any disagreement.
"""

import argparse
import random
import sys

from tridet import (
    EntryRule,
    HessenbergSpec,
    SequenceKind,
    count_tilings,
    det_dense,
    det_prefixes,
    det_recurrence,
    det_trudi_compositions,
    det_trudi_partitions,
    expand_rational,
    gf_catalog,
    make_entries,
    pieces_for,
    seq_term,
)


def report(label: str, ok: bool) -> bool:
    print("%s %s" % ("PASS" if ok else "FAIL", label))
    return ok


def methods_agree(rng: random.Random, trials: int) -> bool:
    ok = True
    for _ in range(trials):
        n = rng.randint(1, 10)
        spec = HessenbergSpec(
            rng.choice((1, -1)), tuple(rng.randint(-9, 9) for _ in range(n))
        )
        value = det_recurrence(spec)
        if not (
            det_trudi_partitions(spec)
            == det_trudi_compositions(spec)
            == det_dense(spec)
            == value
        ):
            print("  disagreement on %r" % (spec,))
            ok = False
    return ok


def polynomial_matches(rng: random.Random, trials: int) -> bool:
    ok = True
    for _ in range(trials):
        a0 = rng.choice([v for v in range(-9, 10) if v != 0])
        a1, a2, a3, a4 = (rng.randint(-9, 9) for _ in range(4))
        expected = (
            a1**4
            - 3 * a0 * a1**2 * a2
            + 2 * a0**2 * a1 * a3
            + a0**2 * a2**2
            - a0**3 * a4
        )
        if det_dense(HessenbergSpec(a0, (a1, a2, a3, a4))) != expected:
            print("  mismatch at a0=%d entries=%r" % (a0, (a1, a2, a3, a4)))
            ok = False
    return ok


def tilings_match(rng: random.Random, trials: int) -> bool:
    kinds = (
        [(SequenceKind("gen-tribonacci", r), r - 1) for r in range(3, 9)]
        + [(SequenceKind("skip-tribonacci", r), r - 1) for r in (3, 5, 7)]
        + [(SequenceKind("k-step-fibonacci", r), r - 1) for r in range(2, 9)]
        + [(SequenceKind("gen-padovan", r), r) for r in range(3, 9)]
        + [(SequenceKind("q-sequence", r), r) for r in range(2, 9)]
        + [(SequenceKind("square-rmino", r), 0) for r in range(2, 9)]
    )
    ok = True
    for _ in range(trials):
        kind, offset = rng.choice(kinds)
        length = rng.randint(0, 40)
        if count_tilings(length, pieces_for(kind)) != seq_term(kind, length + offset):
            print("  mismatch for %r at length %d" % (kind, length))
            ok = False
    return ok


def series_match() -> bool:
    rows = []
    for r in range(3, 9):
        gt = SequenceKind("gen-tribonacci", r)
        rows.append(("i22", r, EntryRule(gt, 1, 2, 1), True))
        if r % 2 == 1:
            rows.append(("i23", r, EntryRule(gt, r, 2, 1), True))
        rows.append(("i28", r, EntryRule(gt, 0, 2, 1), False))
        rows.append(("i29", r, EntryRule(gt, 0, 2, -1), False))
        rows.append(("i30", r, EntryRule(gt, r + 2, 1, 1), False))
    rows.append(("i24", 3, EntryRule(SequenceKind("tribonacci"), 3, 2, 1), False))
    ok = True
    for family, r, rule, alternating in rows:
        coeffs = expand_rational(gf_catalog(family, r), 24)
        dets = det_prefixes(make_entries(rule, 24))
        for n in range(1, 25):
            got = coeffs[n - 1]
            if alternating and n % 2 == 0:
                got = -got
            if got != dets[n]:
                print("  mismatch for %s r=%d at n=%d" % (family, r, n))
                ok = False
    return ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=20260822)
    parser.add_argument("--trials", type=int, default=300)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    ok = True
    ok &= report(
        "determinant evaluators agree on %d random specs" % args.trials,
        methods_agree(rng, args.trials),
    )
    ok &= report(
        "size-4 polynomial expansion on %d random tuples" % args.trials,
        polynomial_matches(rng, args.trials),
    )
    ok &= report(
        "tiling counts match sequence terms on %d random draws" % args.trials,
        tilings_match(rng, args.trials),
    )
    ok &= report("series coefficients match determinant sequences", series_match())
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
