"""Countermodel search: generate candidate omega-frames and filter them by a
boolean expression over named predicates.

Expression grammar::

    expr := term ('|' term)*
    term := factor ('&' factor)*
    factor := '!' factor | '(' expr ')' | NAME
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterator

from .config import caps
from .corpus import BASES, lattice_family, omega_frames_over
from .errors import DocumentError, SizeLimit
from .lattice import is_boolean
from .nuclei import double_negation, enumerate_nuclei, is_dense, is_strongly_dense, rx_nucleus
from .oalgebra import is_oalgebra
from .omega import OmegaFrame
from .spaces import enumerate_topologies, frame_of_opens, points_of_frame


def _dense_eq_strongly_dense(X: OmegaFrame) -> bool:
    return all(is_dense(j) == bool(is_strongly_dense(X, j)) for j in enumerate_nuclei(X.carrier))


PREDICATES: dict = {
    "frame": lambda X: True,  # every candidate carrier is built as a frame
    "boolean": lambda X: is_boolean(X.carrier).is_boolean,
    "overt": lambda X: X.overt,
    "oalgebra": lambda X: is_oalgebra(X).is_oalgebra,
    "classical": lambda X: X.is_classical,
    "dense_eq_strongly_dense": _dense_eq_strongly_dense,
    "rx_is_double_negation": lambda X: X.overt and rx_nucleus(X) == double_negation(X.carrier),
    "spatial": lambda X: points_of_frame(X.carrier).spatial,
}

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokens(text: str) -> list:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        name, sym = m.group(1), m.group(2)
        if name:
            out.append(("name", name))
        elif sym in "&|!()":
            out.append((sym, sym))
        elif not sym.isspace():
            raise DocumentError(f"unexpected character {sym!r} in expression")
        pos = m.end()
    return out


def parse(text: str) -> Callable[[OmegaFrame], bool]:
    toks = _tokens(text)
    if not toks:
        raise DocumentError("empty predicate expression")
    i = 0

    def peek():
        return toks[i][0] if i < len(toks) else None

    def take(kind):
        nonlocal i
        if peek() != kind:
            raise DocumentError(f"expected {kind!r} in expression {text!r}")
        tok = toks[i]
        i += 1
        return tok

    def expr():
        node = term()
        while peek() == "|":
            take("|")
            left, right = node, term()
            node = lambda X, a=left, b=right: a(X) or b(X)  # noqa: E731
        return node

    def term():
        node = factor()
        while peek() == "&":
            take("&")
            left, right = node, factor()
            node = lambda X, a=left, b=right: a(X) and b(X)  # noqa: E731
        return node

    def factor():
        kind = peek()
        if kind == "!":
            take("!")
            inner = factor()
            return lambda X: not inner(X)
        if kind == "(":
            take("(")
            node = expr()
            take(")")
            return node
        _, name = take("name")
        if name not in PREDICATES:
            raise DocumentError(f"unknown predicate {name!r}; known: {', '.join(sorted(PREDICATES))}")
        return PREDICATES[name]

    tree = expr()
    if i != len(toks):
        raise DocumentError(f"trailing tokens in expression {text!r}")
    return tree


@dataclass(frozen=True)
class Candidate:
    index: int
    omega_frame: OmegaFrame


def candidates(family: str, max_n: int, bases=("TWO", "C3")) -> Iterator[Candidate]:
    for b in bases:
        if b not in BASES:
            raise DocumentError(f"unknown base {b!r}; choose from {sorted(BASES)}")
    if family == "topologies":
        carriers = []
        for n in range(max_n + 1):
            carriers.extend(frame_of_opens(X).carrier for X in enumerate_topologies(n))
    else:
        try:
            carriers = lattice_family(family, max_n)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
    k = 0
    for f in carriers:
        if f.size > caps().max_carrier:
            continue
        for X in omega_frames_over(f, bases):
            yield Candidate(k, X)
            k += 1


def search(family: str, max_n: int, where: str, bases=("TWO", "C3"), on_skip=None) -> Iterator[Candidate]:
    """Matching candidates in generation order.  A candidate whose predicate
    needs an enumeration beyond the caps is skipped and passed to ``on_skip``."""
    pred = parse(where)
    for cand in candidates(family, max_n, bases):
        try:
            hit = pred(cand.omega_frame)
        except SizeLimit:
            if on_skip is not None:
                on_skip(cand)
            continue
        if hit:
            yield cand

