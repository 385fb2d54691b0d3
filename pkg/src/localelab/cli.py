"""Command-line front end.

Exit codes: 0 when every selected property holds, 1 when one fails,
2 on unreadable or invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, replace

from . import config
from .documents import (
    document_kind,
    frame_from_doc,
    load_omega_frame,
    omega_frame_to_doc,
    overlap_from_doc,
    poset_from_doc,
    read_json,
    space_from_doc,
)
from .errors import InvariantViolation, LocaleLabError, NotOvert
from .lattice import frame_report_from_poset, hasse_dot, lattice_from_poset
from .nuclei import (
    double_negation,
    enumerate_nuclei,
    is_dense,
    is_strongly_dense,
    rx_nucleus,
)
from .oalgebra import is_oalgebra, oalgebra_from_overlap, overlap_axioms_check
from .omega import classical_omega_frame
from .search import search
from .spaces import (
    almost_discrete_report,
    brouwer_counterexample,
    frame_of_opens,
    point_embedding,
    points_of_frame,
    separation,
    verify_section2,
)

OK, FAIL, BAD_INPUT = 0, 1, 2

COMMANDS = ("check", "nuclei", "rx", "space", "brouwer", "search", "dot")


@dataclass(frozen=True)
class RunConfig:
    command: str
    paths: tuple = ()
    flags: frozenset = field(default_factory=frozenset)
    max_size: int | None = None
    where: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise LocaleLabError(f"unknown command {self.command!r}")
        if self.max_size is not None and self.max_size <= 0:
            raise LocaleLabError("--max-size must be positive")


def run_config(args) -> RunConfig:
    paths = tuple(str(getattr(args, k)) for k in ("file", "omega") if getattr(args, k, None))
    flags = frozenset(k for k, v in vars(args).items() if v is True)
    return RunConfig(args.command, paths, flags, getattr(args, "max_size", None), getattr(args, "where", None))


def _emit(report: dict, as_json: bool, out=None):
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(report, indent=2) + "\n")
        return
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        out.write(f"{key}: {value}\n")


# -- check --------------------------------------------------------------------


def cmd_check(args) -> int:
    doc = read_json(args.file)
    kind = document_kind(doc)
    if kind == "overlap":
        return _check_overlap(doc, args)
    if kind == "space":
        raise LocaleLabError("check expects a lattice, omega-frame or overlap document; use `space` for spaces")
    selected = [k for k in ("frame", "boolean", "overt", "oalgebra") if getattr(args, k)]
    if args.all or not selected:
        selected = ["frame", "boolean", "overt", "oalgebra"]

    if kind == "lattice":
        poset = poset_from_doc(doc)
        fr = frame_report_from_poset(poset)
        name = poset.name
        X = classical_omega_frame(fr.frame, name) if fr.frame is not None else None
        dot_source = poset
    else:
        X = load_omega_frame(doc)
        fr = frame_report_from_poset(X.carrier.poset)
        name = X.name
        dot_source = X.carrier

    report = {"name": name, "is_lattice": fr.is_lattice, "is_frame": fr.is_distributive}
    if fr.counterexample and not fr.is_distributive:
        report["counterexample"] = list(fr.counterexample)
        report["reason"] = fr.reason
    report["is_boolean"] = fr.is_distributive and fr.is_boolean
    if not fr.is_distributive:
        report.update({"overt": False, "is_oalgebra": False})
    else:
        oa = is_oalgebra(X)
        report["overt"] = oa.overt
        report["is_oalgebra"] = oa.is_oalgebra
        if X is not None and X.overt:
            report["pos"] = X.pos_map()
        if not oa.is_oalgebra:
            report["oalgebra_witness"] = list(oa.failing_pair) if oa.failing_pair else None
            report["oalgebra_reason"] = oa.reason
    values = {"frame": report["is_frame"], "boolean": report["is_boolean"],
              "overt": report["overt"], "oalgebra": report["is_oalgebra"]}
    report["selected"] = selected
    report["passed"] = all(values[k] for k in selected)
    if args.dot:
        sys.stdout.write(hasse_dot(dot_source))
    else:
        _emit(report, args.json)
    return OK if report["passed"] else FAIL


def _check_overlap(doc, args) -> int:
    o = overlap_from_doc(doc)
    r = overlap_axioms_check(o)
    report = {"name": o.lattice.name, **r.to_json()}
    if r.all:
        X = oalgebra_from_overlap(o)
        report["is_oalgebra"] = is_oalgebra(X).is_oalgebra
        report["pos"] = X.pos_map()
    report["passed"] = r.all
    if args.dot:
        sys.stdout.write(hasse_dot(o.lattice.poset))
    else:
        _emit(report, args.json)
    return OK if r.all else FAIL


# -- nuclei -------------------------------------------------------------------


def cmd_nuclei(args) -> int:
    doc = read_json(args.file)
    X = load_omega_frame(doc)
    if args.max_size is not None:
        config.set_caps(replace(config.caps(), max_nuclei=args.max_size))
    f = X.carrier
    L = enumerate_nuclei(f)
    nn = double_negation(f)
    rows = []
    for i, j in enumerate(L):
        dense = is_dense(j)
        strong = bool(is_strongly_dense(X, j))
        if args.dense and not dense:
            continue
        if args.strongly_dense and not strong:
            continue
        rows.append({
            "index": i,
            "fix": [f.label(x) for x in j.fix],
            "dense": dense,
            "strongly_dense": strong,
            "identity": j.is_identity,
            "double_negation": j == nn,
            "degenerate": j.is_degenerate,
        })
    report = {"name": X.name, "count": len(rows), "total": len(L), "nuclei": rows}
    if args.lattice:
        report["order"] = [[i, k] for i in range(len(L)) for k in range(len(L)) if i != k and L.leq[i][k]]
        try:
            L.as_frame()
            report["order_is_frame"] = True
        except LocaleLabError:
            report["order_is_frame"] = False
    if args.json:
        _emit(report, True)
    else:
        print(f"{X.name}: {len(rows)} of {len(L)} nuclei")
        for r in rows:
            tags = [k for k in ("dense", "strongly_dense", "identity", "double_negation", "degenerate") if r[k]]
            print(f"  [{r['index']}] Fix={{{','.join(r['fix'])}}}  {' '.join(tags)}")
        if args.lattice:
            print(f"  order (pointwise, i <= k): {report['order']}")
            print(f"  order is a frame: {report['order_is_frame']}")
    return OK


# -- rx -----------------------------------------------------------------------


def cmd_rx(args) -> int:
    X = load_omega_frame(read_json(args.file))
    try:
        R = rx_nucleus(X)
    except NotOvert as exc:
        _emit({"name": X.name, "overt": False, "reason": f"NotOvert: {exc}"}, args.json)
        return FAIL
    report = {
        "name": X.name,
        "overt": True,
        "table": R.as_dict(),
        "is_identity": R.is_identity,
        "equals_double_negation": R == double_negation(X.carrier),
    }
    if args.show_fix:
        report["fix"] = [X.carrier.label(x) for x in R.fix]
    _emit(report, args.json)
    return OK


# -- space --------------------------------------------------------------------


def cmd_space(args) -> int:
    X = space_from_doc(read_json(args.file))
    report = {"name": X.name}
    status = OK
    if args.report or not (args.lemmas or args.points):
        s = separation(X)
        report.update({"T0": s.is_T0, "T1": s.is_T1, "discrete": s.is_discrete})
        report.update(almost_discrete_report(X).to_json())
    if args.lemmas:
        v = verify_section2(X)
        report["lemmas"] = v.to_json()
        if not v.all:
            status = FAIL
    if args.points:
        s = separation(X)
        Y = frame_of_opens(X)
        spec = points_of_frame(Y.carrier)
        emb = point_embedding(X)
        report["points"] = {
            "frame_size": Y.carrier.size,
            "spatial": spec.spatial,
            "sober_points": list(spec.space.points),
            "homeomorphic": emb is not None,
            "embedding": emb,
        }
        if s.is_T0 and emb is None:
            status = FAIL
    _emit(report, args.json)
    return status


# -- brouwer ------------------------------------------------------------------


def cmd_brouwer(args) -> int:
    omega = frame_from_doc(read_json(args.omega), "omega")
    r = brouwer_counterexample(omega, args.p)
    _emit(r.to_json(), args.json)
    return OK if r.contracts_hold else FAIL


# -- search -------------------------------------------------------------------


def cmd_search(args) -> int:
    bases = tuple(args.base) if args.base else ("TWO", "C3")
    skipped = []
    for cand in search(args.family, args.max, args.where, bases, on_skip=skipped.append):
        doc = omega_frame_to_doc(cand.omega_frame)
        doc["index"] = cand.index
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    if skipped:
        sys.stderr.write(f"skipped {len(skipped)} candidates beyond the enumeration caps\n")
    return OK


# -- dot ----------------------------------------------------------------------


def cmd_dot(args) -> int:
    doc = read_json(args.file)
    kind = document_kind(doc)
    if kind == "omega":
        poset = load_omega_frame(doc).carrier.poset
    elif kind == "overlap":
        poset = overlap_from_doc(doc).lattice.poset
    elif kind == "space":
        poset = frame_of_opens(space_from_doc(doc)).carrier.poset
    else:
        poset = poset_from_doc(doc)
        lattice_from_poset(poset)
    sys.stdout.write(hasse_dot(poset))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="localelab", description="Finite frames, nuclei, overlap algebras and spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="frame / Boolean / overt / o-algebra predicates")
    c.add_argument("file")
    for flag in ("frame", "boolean", "overt", "oalgebra", "all", "json", "dot"):
        c.add_argument(f"--{flag}", action="store_true")
    c.set_defaults(func=cmd_check)

    n = sub.add_parser("nuclei", help="enumerate nuclei / sublocales")
    n.add_argument("file")
    for flag in ("enumerate", "dense", "strongly-dense", "lattice", "json"):
        n.add_argument(f"--{flag}", action="store_true")
    n.add_argument("--max-size", type=int, default=None)
    n.set_defaults(func=cmd_nuclei)

    r = sub.add_parser("rx", help="the nucleus of the smallest overt strongly dense sublocale")
    r.add_argument("file")
    r.add_argument("--show-fix", action="store_true")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_rx)

    s = sub.add_parser("space", help="separation and almost-discreteness of a finite space")
    s.add_argument("file")
    for flag in ("report", "lemmas", "points", "json"):
        s.add_argument(f"--{flag}", action="store_true")
    s.set_defaults(func=cmd_space)

    b = sub.add_parser("brouwer", help="omega-valued two-point counterexample")
    b.add_argument("--omega", required=True)
    b.add_argument("--p", required=True)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_brouwer)

    q = sub.add_parser("search", help="stream omega-frames satisfying a predicate expression")
    q.add_argument("--family", required=True, choices=["downsets", "powersets", "chains", "topologies"])
    q.add_argument("--max", type=int, required=True)
    q.add_argument("--where", required=True)
    q.add_argument("--base", action="append", choices=["TWO", "C3"])
    q.set_defaults(func=cmd_search)

    d = sub.add_parser("dot", help="Hasse diagram in DOT format")
    d.add_argument("file")
    d.set_defaults(func=cmd_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    saved = config.caps()
    try:
        run_config(args)
        return args.func(args)
    except LocaleLabError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return BAD_INPUT
    except InvariantViolation as exc:
        sys.stderr.write(f"internal cross-check failed: {exc}\n")
        return 3
    finally:
        config.set_caps(saved)


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
