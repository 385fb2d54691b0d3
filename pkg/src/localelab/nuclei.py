"""Closure operators, nuclei and sublocales of a finite frame.

A nucleus is determined by its fixed points, so nuclei are compared and
ordered through their fix-sets (bitmasks over the carrier).  Sublocale
inclusion is fix-set inclusion, which reverses the pointwise order of
nuclei.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .config import caps
from .errors import (
    FrameMismatch,
    InvariantViolation,
    NotAClosure,
    NotANucleus,
    NotASublocaleSet,
    SizeLimit,
    UnknownElement,
)
from .lattice import FiniteLattice, FinitePoset, Frame, bits, frame_from_lattice, lattice_from_poset
from .omega import OmegaFrame, omega_frame


@dataclass(frozen=True)
class LawCheck:
    ok: bool
    law: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def _as_table(f: Frame, table) -> tuple:
    if isinstance(table, Mapping):
        out = [None] * f.size
        for x, y in table.items():
            out[f.idx(x)] = f.idx(y)
        missing = [f.label(i) for i, v in enumerate(out) if v is None]
        if missing:
            raise UnknownElement(f"table undefined on {missing}", witness=missing[0])
        return tuple(out)
    out = tuple(f.idx(y) for y in table)
    if len(out) != f.size:
        raise UnknownElement("table must be total on the carrier", witness=len(out))
    return out


def _mask(xs: Iterable[int]) -> int:
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def _same_frame(f: Frame, g: Frame) -> bool:
    return f is g or (f.elements == g.elements and f.poset.down == g.poset.down)


def _closure_failure(f: Frame, t: tuple) -> Optional[tuple]:
    n = f.size
    for x in range(n):
        if not f.le(x, t[x]):
            return ("inflationary", (x,))
    for x in range(n):
        if t[t[x]] != t[x]:
            return ("idempotent", (x,))
    for x in range(n):
        for y in range(n):
            if f.le(x, y) and not f.le(t[x], t[y]):
                return ("monotone", (x, y))
    return None


def _meet_failure(f: Frame, t: tuple) -> Optional[tuple]:
    for x in range(f.size):
        for y in range(f.size):
            if t[f.meet(x, y)] != f.meet(t[x], t[y]):
                return ("preserves meets", (x, y))
    return None


def _check(f: Frame, failure) -> LawCheck:
    if failure is None:
        return LawCheck(True)
    law, args = failure
    return LawCheck(False, law, tuple(f.label(a) for a in args))


def is_closure_operator(f: Frame, table) -> LawCheck:
    return _check(f, _closure_failure(f, _as_table(f, table)))


def is_nucleus(f: Frame, table) -> LawCheck:
    t = _as_table(f, table)
    return _check(f, _closure_failure(f, t) or _meet_failure(f, t))


@dataclass(frozen=True, eq=False)
class ClosureOperator:
    frame: Frame
    table: tuple

    @classmethod
    def of(cls, f: Frame, table) -> "ClosureOperator":
        t = _as_table(f, table)
        failure = _closure_failure(f, t)
        if failure is not None:
            chk = _check(f, failure)
            raise NotAClosure(f"not a closure operator: {chk.law} fails at {chk.witness}", witness=chk.witness)
        return cls(f, t)

    @property
    def fix_mask(self) -> int:
        return _mask(x for x in range(self.frame.size) if self.table[x] == x)

    def __call__(self, x: int) -> int:
        return self.table[x]


@dataclass(frozen=True, eq=False)
class Nucleus:
    """A nucleus on ``frame``; equality is equality of fix-sets."""

    frame: Frame
    table: tuple
    fix_mask: int = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "fix_mask", _mask(x for x in range(self.frame.size) if self.table[x] == x))

    @classmethod
    def of(cls, f: Frame, table) -> "Nucleus":
        t = _as_table(f, table)
        chk = _check(f, _closure_failure(f, t) or _meet_failure(f, t))
        if not chk:
            raise NotANucleus(f"not a nucleus: {chk.law} fails at {chk.witness}", witness=chk.witness)
        return cls(f, t)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __eq__(self, other):
        if not isinstance(other, Nucleus):
            return NotImplemented
        return _same_frame(self.frame, other.frame) and self.table == other.table

    def __hash__(self):
        return hash((self.frame.elements, self.table))

    @property
    def fix(self) -> tuple:
        return tuple(bits(self.fix_mask))

    @property
    def fix_names(self) -> frozenset:
        return frozenset(self.frame.label(x) for x in self.fix)

    def fix_label(self) -> str:
        return "{" + ",".join(self.frame.label(x) for x in self.fix) + "}"

    def as_dict(self) -> dict:
        f = self.frame
        return {f.label(x): f.label(y) for x, y in enumerate(self.table)}

    @property
    def is_identity(self) -> bool:
        return all(self.table[x] == x for x in range(self.frame.size))

    @property
    def is_degenerate(self) -> bool:
        """True for the constant-top nucleus (the one-element sublocale)."""
        return self.fix_mask == 1 << self.frame.top

    def le(self, other: "Nucleus") -> bool:
        """Pointwise order of nuclei."""
        return all(self.frame.le(a, b) for a, b in zip(self.table, other.table))

    def __repr__(self):
        return f"Nucleus({self.frame.name}: Fix={self.fix_label()})"


def identity_nucleus(f: Frame) -> Nucleus:
    return Nucleus(f, tuple(range(f.size)))


def constant_top(f: Frame) -> Nucleus:
    return Nucleus(f, tuple(f.top for _ in range(f.size)))


def _fixset_failure(f: Frame, S: int) -> Optional[tuple]:
    if not (S >> f.top) & 1:
        return ("contains top", ())
    members = list(bits(S))
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if not (S >> f.meet(x, y)) & 1:
                return ("closed under meets", (x, y))
    for y in members:
        for x in range(f.size):
            if not (S >> f.imp(x, y)) & 1:
                return ("closed under implication", (x, y))
    return None


def nucleus_from_mask(f: Frame, S: int) -> Nucleus:
    # j(x) = meet of the members of S above x
    members = list(bits(S))
    table = tuple(f.meet_all(s for s in members if f.le(x, s)) for x in range(f.size))
    return Nucleus(f, table)


def nucleus_from_fixset(f: Frame, S: Iterable) -> Nucleus:
    mask = _mask(f.idx(s) for s in S)
    failure = _fixset_failure(f, mask)
    if failure is not None:
        cond, args = failure
        names = tuple(f.label(a) for a in args)
        raise NotASublocaleSet(f"set is not {cond}" + (f" (witness {names})" if names else ""), witness=(cond, names))
    j = nucleus_from_mask(f, mask)
    if j.fix_mask != mask:
        raise InvariantViolation("fix-set of the induced nucleus differs from the input set")
    return j


def double_negation(f: Frame) -> Nucleus:
    return Nucleus(f, tuple(f.neg(f.neg(x)) for x in range(f.size)))


def _generated_table(f: Frame, A: Sequence[int]) -> tuple:
    return tuple(f.meet_all(f.imp(f.imp(y, a), a) for a in A) for y in range(f.size))


def generated_by_set(f: Frame, A: Iterable) -> Nucleus:
    """Nucleus of the smallest sublocale whose frame contains every element of A:
    y |-> meet over a in A of (y -> a) -> a."""
    A = sorted({f.idx(a) for a in A})
    return Nucleus(f, _generated_table(f, A))


def generated_by_closure(f: Frame, c) -> Nucleus:
    """Best nuclear approximation of a closure operator c:
    y |-> meet over all a of a -> c(a /\\ y).

    Cross-checked on every call against the sublocale generated by Fix(c),
    and against j <= c pointwise.
    """
    if not isinstance(c, ClosureOperator):
        c = ClosureOperator.of(f, c)
    elif not _same_frame(c.frame, f):
        raise FrameMismatch("closure operator lives on a different frame")
    t = c.table
    n = f.size
    table = tuple(f.meet_all(f.imp(a, t[f.meet(a, y)]) for a in range(n)) for y in range(n))
    via_fix = _generated_table(f, list(bits(c.fix_mask)))
    if table != via_fix:
        y = next(i for i in range(n) if table[i] != via_fix[i])
        raise InvariantViolation(f"meet-form and Fix(c)-form disagree at {f.label(y)}")
    if not all(f.le(table[y], t[y]) for y in range(n)):
        raise InvariantViolation("generated nucleus is not below the closure operator")
    return Nucleus(f, table)


@dataclass(frozen=True, eq=False)
class Sublocale:
    nucleus: Nucleus
    frame: Frame  # the induced frame on Fix(j)

    @property
    def fix(self) -> tuple:
        return self.nucleus.fix

    @property
    def is_degenerate(self) -> bool:
        return self.frame.size == 1

    def embed(self, k: int) -> int:
        """Carrier index of the k-th element of the induced frame."""
        return self.fix[k]

    def restrict(self, x: int) -> int:
        """Induced-frame index of j(x)."""
        return self.fix.index(self.nucleus(x))


def sublocale(j: Nucleus, name: str = "") -> Sublocale:
    """Induced frame on Fix(j): meets and implications as in the carrier,
    joins closed up by j."""
    f = j.frame
    fix = j.fix
    pos = {x: k for k, x in enumerate(fix)}
    labels = tuple(f.label(x) for x in fix)
    down = tuple(_mask(pos[y] for y in fix if f.le(y, x)) for x in fix)
    poset = FinitePoset(labels, down, name or f"{f.name}|{j.fix_label()}")
    meet = tuple(tuple(pos[f.meet(x, y)] for y in fix) for x in fix)
    join = tuple(tuple(pos[j(f.join(x, y))] for y in fix) for x in fix)
    imp = tuple(tuple(pos[f.imp(x, y)] for y in fix) for x in fix)
    lat = FiniteLattice(poset, meet, join, pos[f.top], pos[j(f.bottom)])
    return Sublocale(j, Frame(lat, imp))


def boolean_sublocale(f: Frame, a) -> Sublocale:
    """The sublocale of y |-> (y -> a) -> a; its frame is always Boolean."""
    s = sublocale(generated_by_set(f, [a]))
    g = s.frame
    if any(g.join(x, g.neg(x)) != g.top for x in range(g.size)):
        raise InvariantViolation(f"sublocale generated by {a!r} is not Boolean")
    return s


@dataclass(frozen=True, eq=False)
class NucleusLattice:
    frame: Frame
    nuclei: tuple
    leq: tuple  # leq[i][k]: nuclei[i] <= nuclei[k] pointwise
    by_table: dict = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "by_table", {j.table: i for i, j in enumerate(self.nuclei)})

    def __len__(self):
        return len(self.nuclei)

    def __iter__(self):
        return iter(self.nuclei)

    def index(self, j: Nucleus) -> int:
        return self.by_table[j.table]

    def meet(self, i: int, k: int) -> int:
        """Index of the pointwise meet (the join of the two sublocales)."""
        f = self.frame
        a, b = self.nuclei[i].table, self.nuclei[k].table
        t = tuple(f.meet(x, y) for x, y in zip(a, b))
        if t not in self.by_table:
            raise InvariantViolation("pointwise meet of two nuclei is not a nucleus")
        return self.by_table[t]

    def poset(self) -> FinitePoset:
        labels = tuple(j.fix_label() for j in self.nuclei)
        n = len(self.nuclei)
        down = tuple(_mask(i for i in range(n) if self.leq[i][k]) for k in range(n))
        return FinitePoset(labels, down, f"N({self.frame.name})")

    def as_frame(self) -> Frame:
        """The nuclei under the pointwise order, as a frame (raises if the
        order fails to be a distributive lattice)."""
        return frame_from_lattice(lattice_from_poset(self.poset()))


def fixset_masks(f: Frame) -> list:
    """All sublocale sets (contain top, meet-closed, implication-closed)."""
    n = f.size
    top = f.top
    imp_col = [_mask(f.imp(x, y) for x in range(n)) for y in range(n)]
    out = []
    rest = [x for x in range(n) if x != top]
    for bitsel in range(1 << len(rest)):
        S = 1 << top
        for k, x in enumerate(rest):
            if (bitsel >> k) & 1:
                S |= 1 << x
        ok = True
        members = list(bits(S))
        for y in members:
            if imp_col[y] & ~S:
                ok = False
                break
        if ok:
            for i, x in enumerate(members):
                for y in members[i + 1:]:
                    if not (S >> f.meet(x, y)) & 1:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.append(S)
    return out


def enumerate_nuclei(f: Frame) -> NucleusLattice:
    cap = caps().max_nuclei
    if f.size > cap:
        raise SizeLimit(f"{f.size} elements exceed the nucleus enumeration cap {cap}")
    masks = sorted(fixset_masks(f), key=lambda m: tuple(bits(m)))
    nuclei = tuple(nucleus_from_mask(f, m) for m in masks)
    leq = tuple(tuple(a.le(b) for b in nuclei) for a in nuclei)
    return NucleusLattice(f, nuclei, leq)


def sublocale_leq(j1: Nucleus, j2: Nucleus) -> bool:
    """X_j1 is a sublocale of X_j2."""
    if not _same_frame(j1.frame, j2.frame):
        raise FrameMismatch("nuclei live on different frames")
    by_fix = j1.fix_mask & ~j2.fix_mask == 0
    by_order = j2.le(j1)
    if by_fix != by_order:
        raise InvariantViolation("fix-set inclusion and reversed pointwise order disagree")
    return by_fix


def is_dense(j: Nucleus) -> bool:
    return j(j.frame.bottom) == j.frame.bottom


@dataclass(frozen=True)
class StrongDensity:
    reflects: bool  # j(x) <= j(e p)  =>  x <= e p
    bounded: bool  # j(e p) <= e p
    fixes_image: bool  # j . e = e

    @property
    def verdict(self) -> bool:
        return self.fixes_image

    def __bool__(self):
        return self.verdict


def is_strongly_dense(X: OmegaFrame, j: Nucleus) -> StrongDensity:
    c = X.carrier
    if not _same_frame(c, j.frame):
        raise FrameMismatch("nucleus is not on the carrier of the omega-frame")
    e = X.e
    image = sorted(set(e))
    reflects = all(
        c.le(x, ep) or not c.le(j(x), j(ep)) for x in range(c.size) for ep in image
    )
    bounded = all(c.le(j(ep), ep) for ep in image)
    fixes = all(j(ep) == ep for ep in image)
    r = StrongDensity(reflects, bounded, fixes)
    if not (reflects == bounded == fixes):
        raise InvariantViolation(f"strong density conditions disagree: {r}")
    return r


def min_strongly_dense(X: OmegaFrame) -> Nucleus:
    """Nucleus of the sublocale generated by the image of the structure map."""
    return generated_by_set(X.carrier, set(X.e))


def rx_nucleus(X: OmegaFrame) -> Nucleus:
    """R(y) = join {x | pos(z /\\ x) <= pos(z /\\ y) for every z}.

    Cross-checked against the meet form  meet_z z -> e(pos(z /\\ y)),
    against the minimal strongly dense nucleus, and against R <= --.
    """
    pos = X.require_pos()
    c, o, e = X.carrier, X.omega, X.e
    n = c.size
    trace = [[pos[c.meet(z, x)] for z in range(n)] for x in range(n)]

    def dominated(x, y):
        tx, ty = trace[x], trace[y]
        return all(o.le(a, b) for a, b in zip(tx, ty))

    join_form = tuple(c.join_all(x for x in range(n) if dominated(x, y)) for y in range(n))
    meet_form = tuple(c.meet_all(c.imp(z, e[trace[y][z]]) for z in range(n)) for y in range(n))
    if join_form != meet_form:
        y = next(i for i in range(n) if join_form[i] != meet_form[i])
        raise InvariantViolation(f"join and meet forms of R disagree at {c.label(y)}")
    R = Nucleus(c, join_form)
    if R != min_strongly_dense(X):
        raise InvariantViolation("R differs from the minimal strongly dense nucleus")
    nn = double_negation(c)
    if not R.le(nn):
        raise InvariantViolation("R is not below double negation")
    return R


def sub_omega_frame(X: OmegaFrame, j: Nucleus) -> OmegaFrame:
    """The sublocale X_j with structure map p |-> j(e(p))."""
    if not _same_frame(X.carrier, j.frame):
        raise FrameMismatch("nucleus is not on the carrier of the omega-frame")
    s = sublocale(j)
    e_sub = tuple(s.restrict(ep) for ep in X.e)
    Y = omega_frame(X.omega, s.frame, e_sub, name=f"{X.name}|{j.fix_label()}")
    if X.overt and is_strongly_dense(X, j):
        restricted = tuple(X.pos[x] for x in s.fix)
        if Y.pos != restricted:
            raise InvariantViolation("positivity of a strongly dense sublocale is not the restriction")
        through = tuple(Y.pos[s.restrict(x)] for x in range(X.carrier.size))
        if through != X.pos:
            raise InvariantViolation("pos_X differs from pos_sub . j")
    return Y
