#!/usr/bin/env python3
"""Write the named fixtures as JSON documents (default: ./data)."""
import argparse
from pathlib import Path

from localelab import corpus
from localelab.documents import dumps, lattice_to_doc, omega_frame_to_doc, space_to_doc
from localelab.omega import omega_frame


def fixtures() -> dict:
    docs = {
        "TWO": lattice_to_doc(corpus.TWO()),
        "C3": lattice_to_doc(corpus.C3()),
        "C4": lattice_to_doc(corpus.C4()),
        "B4": lattice_to_doc(corpus.B4()),
        "M3": lattice_to_doc(corpus.M3_poset()),
        "OC3": omega_frame_to_doc(corpus.OC3()),
        "CLC3": omega_frame_to_doc(corpus.CLC3()),
        "C3_OVER_TWO": omega_frame_to_doc(corpus.C3_OVER_TWO_CARRIER()),
        "SIERP": space_to_doc(corpus.SIERP()),
        "DISC2": space_to_doc(corpus.DISC2()),
        "IND2": space_to_doc(corpus.IND2()),
    }
    # OC3 with Pos deliberately withheld: the only way to present a
    # non-overt omega-frame over finite carriers
    X = corpus.OC3()
    docs["nonovert"] = omega_frame_to_doc(omega_frame(X.omega, X.carrier, X.e, "OC3-nopos", with_pos=False))
    return docs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, doc in fixtures().items():
        (out / f"{name}.json").write_text(dumps(doc) + "\n")
        print(out / f"{name}.json")


if __name__ == "__main__":
    main()
