"""JSON documents for lattices, omega-frames, nuclei, spaces and overlap
structures, plus the inverse serializers.

Lattice:      {"name": str, "elements": [str], "le": [[str, str]]}
Omega-frame:  {"omega": <lattice>, "carrier": <lattice>, "e": {str: str}}
              or {"carrier": <lattice>, "classical": true}
              optional "withhold_pos": true drops the positivity map
Nucleus:      {"fix": [str]} or {"table": {str: str}}
Space:        {"points": [str], "opens": [[str]]}
Overlap:      {"lattice": <lattice>, "rel": [[str, str]]}  (symmetrized)
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import DocumentError
from .lattice import (
    FinitePoset,
    Frame,
    frame_from_lattice,
    lattice_from_poset,
    poset_from_relation,
)
from .nuclei import Nucleus, nucleus_from_fixset
from .oalgebra import OverlapStructure, overlap_structure
from .omega import OmegaFrame, classical_omega_frame, omega_frame
from .spaces import FiniteSpace, space


def read_json(path) -> Any:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DocumentError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _field(doc, key, kind, where):
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected an object")
    if key not in doc:
        raise DocumentError(f"{where}: missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise DocumentError(f"{where}: field {key!r} must be {kind.__name__}")
    return value


def document_kind(doc) -> str:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if "carrier" in doc:
        return "omega"
    if "points" in doc:
        return "space"
    if "rel" in doc:
        return "overlap"
    if "elements" in doc:
        return "lattice"
    raise DocumentError("unrecognised document: expected one of elements/carrier/points/rel")


def poset_from_doc(doc, where: str = "lattice") -> FinitePoset:
    elements = _field(doc, "elements", list, where)
    if not all(isinstance(x, str) for x in elements):
        raise DocumentError(f"{where}: field 'elements' must list strings")
    le = doc.get("le", [])
    if not isinstance(le, list) or not all(isinstance(p, list) and len(p) == 2 for p in le):
        raise DocumentError(f"{where}: field 'le' must be a list of [str, str] pairs")
    name = doc.get("name", "")
    return poset_from_relation(elements, [tuple(p) for p in le], str(name))


def frame_from_doc(doc, where: str = "lattice") -> Frame:
    return frame_from_lattice(lattice_from_poset(poset_from_doc(doc, where)))


def omega_frame_from_doc(doc) -> OmegaFrame:
    carrier = frame_from_doc(_field(doc, "carrier", dict, "omega-frame"), "carrier")
    name = str(doc.get("name", ""))
    if doc.get("classical"):
        X = classical_omega_frame(carrier, name)
    else:
        omega = frame_from_doc(_field(doc, "omega", dict, "omega-frame"), "omega")
        e = _field(doc, "e", dict, "omega-frame")
        X = omega_frame(omega, carrier, e, name)
    if doc.get("withhold_pos"):
        X = omega_frame(X.omega, X.carrier, X.e, X.name, with_pos=False)
    return X


def load_omega_frame(doc) -> OmegaFrame:
    """Omega-frame document, or a bare lattice read over the classical base."""
    if document_kind(doc) == "lattice":
        return classical_omega_frame(frame_from_doc(doc), str(doc.get("name", "")))
    return omega_frame_from_doc(doc)


def nucleus_from_doc(f: Frame, doc) -> Nucleus:
    if "fix" in doc:
        return nucleus_from_fixset(f, _field(doc, "fix", list, "nucleus"))
    table = _field(doc, "table", dict, "nucleus")
    return Nucleus.of(f, table)


def space_from_doc(doc) -> FiniteSpace:
    points = _field(doc, "points", list, "space")
    opens = _field(doc, "opens", list, "space")
    if not all(isinstance(A, list) for A in opens):
        raise DocumentError("space: field 'opens' must be a list of point lists")
    return space(points, opens, str(doc.get("name", "")))


def overlap_from_doc(doc) -> OverlapStructure:
    lat = lattice_from_poset(poset_from_doc(_field(doc, "lattice", dict, "overlap"), "lattice"))
    rel = _field(doc, "rel", list, "overlap")
    if not all(isinstance(p, list) and len(p) == 2 for p in rel):
        raise DocumentError("overlap: field 'rel' must be a list of [str, str] pairs")
    return overlap_structure(lat, [tuple(p) for p in rel])


# -- serializers ----------------------------------------------------------------


def lattice_to_doc(f) -> dict:
    p = f.poset if hasattr(f, "poset") else f
    return {
        "name": p.name,
        "elements": list(p.elements),
        "le": [[p.elements[i], p.elements[j]] for i, j in p.covers()],
    }


def omega_frame_to_doc(X: OmegaFrame) -> dict:
    doc = {"name": X.name}
    if X.is_classical and X.omega.elements == ("0", "1") and X.e == (X.carrier.bottom, X.carrier.top):
        doc.update({"carrier": lattice_to_doc(X.carrier), "classical": True})
    else:
        doc.update({"omega": lattice_to_doc(X.omega), "carrier": lattice_to_doc(X.carrier), "e": X.e_map()})
    if not X.overt:
        doc["withhold_pos"] = True
    return doc


def nucleus_to_doc(j: Nucleus) -> dict:
    return {"fix": [j.frame.label(x) for x in j.fix], "table": j.as_dict()}


def space_to_doc(X: FiniteSpace) -> dict:
    return {
        "name": X.name,
        "points": list(X.points),
        "opens": [sorted(X.names(A), key=X.points.index) for A in X.opens],
    }


def overlap_to_doc(o: OverlapStructure) -> dict:
    return {"lattice": lattice_to_doc(o.lattice), "rel": [list(p) for p in o.pairs()]}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)
