"""Tabulate critical codes by level and number of characteristic exponents g,
and list the codes with the largest lambda_g at each level."""

import argparse
from collections import Counter, defaultdict

from goursat.census import enumerate_codes
from goursat.codes import rvt_to_derived
from goursat.theorem import puiseux_from_derived


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-level", type=int, default=12)
    args = ap.parse_args()

    by_level = defaultdict(Counter)
    top = {}
    for code in enumerate_codes(args.max_level, only_critical=True):
        pc = puiseux_from_derived(rvt_to_derived(code), check_realizable=False)
        by_level[code.level][pc.g] += 1
        best = top.get(code.level)
        if best is None or pc.exponents[-1] > best[1].exponents[-1]:
            top[code.level] = (code.letters, pc)

    gs = sorted({g for c in by_level.values() for g in c})
    print("level " + " ".join(f"g={g:<6}" for g in gs) + "  largest lambda_g")
    for k in sorted(by_level):
        row = " ".join(f"{by_level[k][g]:<8}" for g in gs)
        code, pc = top[k]
        print(f"{k:>5} {row}  {code} {pc}")


if __name__ == "__main__":
    main()
