"""Cross-validate the two Puiseux routes level by level and report timings.

    python scripts/run_census.py --max-level 14
"""

import argparse
import time

from goursat.census import cross_validate, transfer_matrix_counts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-level", type=int, default=14)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = cross_validate(args.max_level, jobs=args.jobs)
    print(report.summary())
    for k, st in sorted(report.levels.items()):
        valid, critical = transfer_matrix_counts(k)
        if (st.valid, st.critical) != (valid, critical):
            print(f"level {k}: enumeration {st.valid}/{st.critical} != transfer matrix {valid}/{critical}")
    print("checks:", ", ".join(f"{k}={n}" for k, n in sorted(report.checks.items())))
    print(f"wall time {time.perf_counter() - t0:.2f}s")
    raise SystemExit(0 if report.ok else 2)


if __name__ == "__main__":
    main()
