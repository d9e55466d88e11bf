"""Print the lower-bound triangle, the upper-bound schedule and the
maximal-twist verdicts for one (m, n).

    python scripts/reproduce_tables.py --m 4 --n 3
"""

import argparse

from tightsfs.cli import MAXTWIST_COLS, TRIANGLE_COLS, UPPER_COLS, table
from tightsfs.family import FamilyParams, Fiber, count_report, max_twist_report, target_manifold


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--m", type=int, default=3)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--kmax", type=int, default=4)
    args = parser.parse_args()

    for fiber in Fiber:
        p = FamilyParams(args.m, args.n, fiber)
        report = count_report(p)
        surgered, stated, eq = target_manifold(p)
        print(f"== surgery on {fiber.name}: {surgered} ~ {stated} ({'ok' if eq else 'MISMATCH'})")
        print(table(TRIANGLE_COLS, [[getattr(r, c) for c in TRIANGLE_COLS] for r in report.rows_lower]))
        print()
        print(table(UPPER_COLS, [[getattr(r, c) for c in UPPER_COLS] for r in report.rows_upper]))
        print(f"lower={report.lower_total} upper={report.upper_total} closed={report.closed_form}\n")

    print(f"== maximal twisting on M_{args.m}^{args.n} (F1)")
    rows = []
    for v in max_twist_report(args.m, args.n, args.kmax):
        d = v.to_dict()
        rows.append(["" if d[c] is None else d[c] for c in MAXTWIST_COLS])
    print(table(MAXTWIST_COLS, rows))


if __name__ == "__main__":
    main()
