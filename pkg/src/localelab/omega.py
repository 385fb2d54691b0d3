"""Frames relative to a finite base of truth values.

An ``OmegaFrame`` is a carrier frame together with a base frame ``omega``
and a frame homomorphism ``e: omega -> carrier`` (the image of a truth value
``p`` is the open "everything, provided p holds").  When ``e`` has a left
adjoint ``pos`` the locale is overt and ``pos(x) == top`` is the positive
reading of "x is inhabited".

With ``omega`` the two-element frame this is the classical picture.  Larger
bases give external countermodels for the intuitionistic distinctions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Mapping, Optional

from .config import caps
from .errors import NotAHomomorphism, NotOvert, SizeLimit, UnknownElement
from .lattice import FiniteLattice, FinitePoset, Frame, chain


@dataclass(frozen=True, eq=False)
class OmegaFrame:
    omega: Frame
    carrier: Frame
    e: tuple
    pos: Optional[tuple] = None
    name: str = ""
    candidate_pos: tuple = field(default=(), repr=False)

    @property
    def overt(self) -> bool:
        return self.pos is not None

    @property
    def is_classical(self) -> bool:
        return self.omega.size == 2

    def require_pos(self) -> tuple:
        if self.pos is None:
            raise NotOvert(f"{self.name or 'omega-frame'} is not overt (no positivity map)")
        return self.pos

    def e_map(self) -> dict:
        return {self.omega.label(p): self.carrier.label(x) for p, x in enumerate(self.e)}

    def pos_map(self) -> Optional[dict]:
        if self.pos is None:
            return None
        return {self.carrier.label(x): self.omega.label(p) for x, p in enumerate(self.pos)}

    def __repr__(self):
        return f"OmegaFrame({self.name or '?'}: {self.carrier.name} over {self.omega.name})"


@dataclass(frozen=True)
class TruthValue:
    omega: Frame
    value: int

    def __post_init__(self):
        self.omega.idx(self.value)

    def __str__(self):
        return self.omega.label(self.value)


def homomorphism_witness(src: Frame, dst: Frame, h) -> Optional[tuple]:
    """First failure of ``h`` to preserve top, bottom, binary meets or joins.

    On finite frames these four conditions are the whole homomorphism
    requirement (finite meets, and every join is a finite one).
    """
    if h[src.top] != dst.top:
        return ("top", ())
    if h[src.bottom] != dst.bottom:
        return ("bottom", ())
    for p in range(src.size):
        for q in range(src.size):
            if h[src.meet(p, q)] != dst.meet(h[p], h[q]):
                return ("meet", (p, q))
            if h[src.join(p, q)] != dst.join(h[p], h[q]):
                return ("join", (p, q))
    return None


def compute_pos(omega: Frame, carrier: Frame, e) -> tuple:
    """Candidate left adjoint of ``e`` and whether it really is one.

    The candidate is pos(x) = meet {p | x <= e(p)}; it is the adjoint exactly
    when x <= e(pos(x)) for every x.
    """
    cand = []
    for x in range(carrier.size):
        cand.append(omega.meet_all(p for p in range(omega.size) if carrier.le(x, e[p])))
    cand = tuple(cand)
    overt = all(carrier.le(x, e[cand[x]]) for x in range(carrier.size))
    return cand, overt


def omega_frame(omega: Frame, carrier: Frame, e, name: str = "", with_pos: bool = True) -> OmegaFrame:
    """Validate ``e`` (mapping or sequence indexed by omega) and attach ``pos``.

    ``with_pos=False`` keeps the structure but withholds the positivity map,
    modelling a locale for which no left adjoint is available.
    """
    if isinstance(e, Mapping):
        table = [None] * omega.size
        for p, x in e.items():
            table[omega.idx(p)] = carrier.idx(x)
        missing = [omega.label(p) for p, x in enumerate(table) if x is None]
        if missing:
            raise UnknownElement(f"structure map undefined on {missing}", witness=missing[0])
        e = tuple(table)
    else:
        e = tuple(carrier.idx(x) for x in e)
        if len(e) != omega.size:
            raise UnknownElement("structure map must be total on omega", witness=len(e))
    w = homomorphism_witness(omega, carrier, e)
    if w is not None:
        op, args = w
        names = tuple(omega.label(a) for a in args)
        raise NotAHomomorphism(f"structure map does not preserve {op} at {names}", witness=(op, names))
    cand, overt = compute_pos(omega, carrier, e)
    pos = cand if (overt and with_pos) else None
    return OmegaFrame(omega, carrier, e, pos, name or f"{carrier.name}/{omega.name}", cand)


@lru_cache(maxsize=None)
def two() -> Frame:
    return chain(2, "TWO")


def classical_omega_frame(f: Frame, name: str = "") -> OmegaFrame:
    """``f`` over the two-element base with the forced map 0 -> bottom, 1 -> top."""
    base = two()
    return omega_frame(base, f, (f.bottom, f.top), name or f"classical {f.name}")


def is_positive(X: OmegaFrame, x) -> bool:
    pos = X.require_pos()
    return pos[X.carrier.idx(x)] == X.omega.top


def overlap(X: OmegaFrame, x, y) -> bool:
    pos = X.require_pos()
    c = X.carrier
    return pos[c.meet(c.idx(x), c.idx(y))] == X.omega.top


def adjunction_witness(X: OmegaFrame) -> Optional[tuple]:
    """First (x, p) breaking pos(x) <= p  <=>  x <= e(p), or None."""
    pos = X.require_pos()
    o, c = X.omega, X.carrier
    for x in range(c.size):
        for p in range(o.size):
            if o.le(pos[x], p) != c.le(x, X.e[p]):
                return (x, p)
    return None


def structure_maps(omega: Frame, carrier: Frame) -> list:
    """Every frame homomorphism omega -> carrier, in lexicographic order.

    Used by the search front end; brute force over |carrier|^|omega|
    candidate tables with the top and bottom already pinned.
    """
    free = [p for p in range(omega.size) if p not in (omega.top, omega.bottom)]
    out = []
    for values in product(range(carrier.size), repeat=len(free)):
        h = [0] * omega.size
        h[omega.top] = carrier.top
        h[omega.bottom] = carrier.bottom
        for p, v in zip(free, values):
            h[p] = v
        if homomorphism_witness(omega, carrier, h) is None:
            out.append(tuple(h))
    return out


def discrete_omega_frame(omega: Frame, points, name: str = "") -> OmegaFrame:
    """The discrete locale on ``points`` relative to ``omega``.

    Its frame is omega^points with pointwise operations (omega-valued
    subsets); the structure map sends p to the constant map at p.
    """
    points = tuple(points)
    k, m = len(points), omega.size
    if m ** k > caps().max_carrier:
        raise SizeLimit(f"{m}^{k} elements exceed max_carrier={caps().max_carrier}")
    maps = list(product(range(m), repeat=k))
    index = {v: i for i, v in enumerate(maps)}
    labels = ["(" + ",".join(omega.label(p) for p in v) + ")" for v in maps]

    def pointwise(op):
        return tuple(tuple(index[tuple(op(a, b) for a, b in zip(u, v))] for v in maps) for u in maps)

    down = tuple(
        sum(1 << i for i, u in enumerate(maps) if all(omega.le(a, b) for a, b in zip(u, v)))
        for v in maps
    )
    poset = FinitePoset(tuple(labels), down, name or f"DISC({omega.name},{{{','.join(points)}}})")
    lat = FiniteLattice(
        poset, pointwise(omega.meet), pointwise(omega.join),
        index[tuple([omega.top] * k)], index[tuple([omega.bottom] * k)],
    )
    carrier = Frame(lat, pointwise(omega.imp))
    e = tuple(index[tuple([p] * k)] for p in range(m))
    return omega_frame(omega, carrier, e, poset.name)
