#!/usr/bin/env python3
"""Report values of the omega-valued two-point topology for each truth value p."""
import argparse

from localelab.corpus import B4, C3, C4, TWO
from localelab.lattice import powerset_frame
from localelab.spaces import brouwer_counterexample

BASES = {"TWO": TWO, "C3": C3, "C4": C4, "B4": B4, "B8": lambda: powerset_frame("stu", "B8")}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("bases", nargs="*", help=f"any of {sorted(BASES)}; default: TWO C3 C4 B4")
    args = ap.parse_args()
    args.bases = args.bases or ["TWO", "C3", "C4", "B4"]
    unknown = [b for b in args.bases if b not in BASES]
    if unknown:
        ap.error(f"unknown base(s) {unknown}")
    print(f"{'omega':<6} {'p':<8} {'axioms':<8} {'cl=id':<8} {'int=id':<8} {'p|-p':<8} ok")
    bad = 0
    for name in args.bases:
        f = BASES[name]()
        for p in f.elements:
            r = brouwer_counterexample(f, p)
            bad += not r.contracts_hold
            print(
                f"{name:<6} {p:<8} {r.topology_axioms_value:<8} {r.cl_eq_id_value:<8} "
                f"{r.int_eq_id_value:<8} {r.excluded_middle_value:<8} {'yes' if r.contracts_hold else 'NO'}"
            )
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
