#!/usr/bin/env python3
"""Tabulate separation and almost-discreteness over all topologies on n points."""
import argparse
from collections import Counter

from localelab.oalgebra import is_oalgebra
from localelab.spaces import almost_discrete_report, enumerate_topologies, frame_of_opens, separation, verify_section2


def survey(n: int):
    rows = []
    for X in enumerate_topologies(n):
        s = separation(X)
        a = almost_discrete_report(X)
        rows.append({
            "name": X.name,
            "opens": len(X.opens),
            "T0": s.is_T0,
            "T1": s.is_T1,
            "discrete": s.is_discrete,
            "ici=i": a.ici_eq_i,
            "ci=i": a.ci_eq_i,
            "ic=c": a.ic_eq_c,
            "oalgebra": is_oalgebra(frame_of_opens(X)).is_oalgebra,
            "lemmas": verify_section2(X).all,
        })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=3)
    ap.add_argument("--rows", action="store_true", help="print every topology")
    args = ap.parse_args()
    rows = survey(args.n)
    keys = ["T0", "T1", "discrete", "ici=i", "ci=i", "ic=c", "oalgebra", "lemmas"]
    if args.rows:
        print("name     opens " + " ".join(f"{k:>8}" for k in keys))
        for r in rows:
            print(f"{r['name']:<8} {r['opens']:>5} " + " ".join(f"{'y' if r[k] else '.':>8}" for k in keys))
    print(f"{len(rows)} topologies on {args.n} points")
    profile = Counter(tuple(r[k] for k in keys) for r in rows)
    for prof, count in sorted(profile.items(), reverse=True):
        print(f"{count:4d}  " + " ".join(k for k, v in zip(keys, prof) if v))


if __name__ == "__main__":
    main()
