#!/usr/bin/env python3
"""Sweep the identity registry and print a compact per-case scoreboard.

Exit status is 1 when any check fails, so the script doubles as a gate.
"""

import argparse
import sys
from collections import defaultdict

from tridet import DEFAULT_N_MAX, DEFAULT_R_SET, check_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax", type=int, default=DEFAULT_N_MAX)
    parser.add_argument(
        "--r-set",
        default=",".join(str(r) for r in DEFAULT_R_SET),
        help="comma list of orders to sweep",
    )
    parser.add_argument("--show-failures", action="store_true")
    args = parser.parse_args()

    r_set = tuple(int(tok) for tok in args.r_set.split(",") if tok.strip())
    reports, summary = check_all(r_set=r_set, n_max=args.nmax)

    per_case = defaultdict(lambda: [0, 0])
    for rep in reports:
        per_case[rep.id][0] += 1
        per_case[rep.id][1] += rep.passed
    print("%-7s %8s %8s" % ("id", "checked", "passed"))
    for case_id in sorted(per_case):
        checked, passed = per_case[case_id]
        marker = "" if checked == passed else "   <-- failures"
        print("%-7s %8d %8d%s" % (case_id, checked, passed, marker))

    if args.show_failures:
        for rep in reports:
            if not rep.passed:
                print(
                    "FAIL %s r=%s n=%d lhs=%d rhs=%d"
                    % (rep.id, rep.r, rep.n, rep.lhs, rep.rhs)
                )
    print(
        "total checked=%d passed=%d failed=%d"
        % (summary.checked, summary.passed, summary.failed)
    )
    return 1 if summary.failed else 0


if __name__ == "__main__":
    sys.exit(main())
