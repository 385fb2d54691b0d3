"""Weak regularity, overlap algebras and the overlap-relation axioms.

An element a of an overt omega-frame is weakly regular when every x whose
positivity trace z |-> pos(z /\\ x) is dominated by that of a lies below a.
An o-algebra is an overt omega-frame in which every element is weakly
regular, equivalently one whose R nucleus is the identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Optional

from .errors import AxiomsFailed, InvariantViolation, PreconditionFailed
from .lattice import FiniteLattice, Frame, is_frame
from .nuclei import rx_nucleus
from .omega import OmegaFrame, classical_omega_frame, discrete_omega_frame, overlap


def _traces(X: OmegaFrame) -> list:
    pos = X.require_pos()
    c = X.carrier
    return [[pos[c.meet(z, x)] for z in range(c.size)] for x in range(c.size)]


def _dominated(o: Frame, tx, ty) -> bool:
    return all(o.le(a, b) for a, b in zip(tx, ty))


def is_weakly_regular(X: OmegaFrame, a) -> bool:
    c, o = X.carrier, X.omega
    a = c.idx(a)
    tr = _traces(X)
    closure = c.join_all(x for x in range(c.size) if _dominated(o, tr[x], tr[a]))
    verdict = closure == a
    if verdict != (rx_nucleus(X)(a) == a):
        raise InvariantViolation(f"weak regularity of {c.label(a)} disagrees with R")
    return verdict


def weakly_regular_elements(X: OmegaFrame) -> tuple:
    R = rx_nucleus(X)
    return R.fix


@dataclass
class OAlgebraReport:
    overt: bool
    weakly_regular_all: bool
    is_oalgebra: bool
    is_boolean: bool
    failing_element: Optional[str] = None
    failing_pair: Optional[tuple] = None
    reason: str = ""

    def __bool__(self):
        return self.is_oalgebra

    def to_json(self) -> dict:
        return {
            "overt": self.overt,
            "weakly_regular_all": self.weakly_regular_all,
            "is_oalgebra": self.is_oalgebra,
            "is_boolean": self.is_boolean,
            "failing_element": self.failing_element,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
            "reason": self.reason or None,
        }


def _carrier_boolean(f: Frame) -> bool:
    return all(f.join(x, f.neg(x)) == f.top for x in range(f.size))


def is_oalgebra(X: OmegaFrame) -> OAlgebraReport:
    c, o = X.carrier, X.omega
    boolean = _carrier_boolean(c)
    if not X.overt:
        return OAlgebraReport(False, False, False, boolean, reason="NotOvert: no positivity map")
    tr = _traces(X)
    pair = None
    for x in range(c.size):
        for y in range(c.size):
            if not c.le(x, y) and _dominated(o, tr[x], tr[y]):
                pair = (c.label(x), c.label(y))
                break
        if pair:
            break
    R = rx_nucleus(X)
    if R.is_identity != (pair is None):
        raise InvariantViolation("o-algebra scan disagrees with R = identity")
    bad = next((a for a in range(c.size) if R(a) != a), None)
    return OAlgebraReport(
        True,
        bad is None,
        pair is None,
        boolean,
        failing_element=None if bad is None else c.label(bad),
        failing_pair=pair,
        reason="" if pair is None else "positivity traces dominated but x not below y",
    )


# -- overlap relations ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OverlapStructure:
    lattice: FiniteLattice
    rel: frozenset  # symmetric set of index pairs

    def holds(self, x: int, y: int) -> bool:
        return (x, y) in self.rel

    def pairs(self) -> list:
        names = self.lattice.elements
        return sorted((names[x], names[y]) for x, y in self.rel)


def _lattice_of(l) -> FiniteLattice:
    return l.lattice if isinstance(l, Frame) else l


def overlap_structure(lattice, pairs: Iterable, symmetrize: bool = True) -> OverlapStructure:
    lat = _lattice_of(lattice)
    p = lat.poset
    rel = set()
    for a, b in pairs:
        x = a if isinstance(a, int) else p.idx(a)
        y = b if isinstance(b, int) else p.idx(b)
        rel.add((x, y))
    if symmetrize:
        rel |= {(y, x) for x, y in rel}
    else:
        asym = sorted((x, y) for x, y in rel if (y, x) not in rel)
        if asym:
            x, y = asym[0]
            raise AxiomsFailed(
                "relation is not symmetric",
                witness=("symmetry", (lat.elements[x], lat.elements[y])),
            )
    return OverlapStructure(lat, frozenset(rel))


def meet_inhabited(f) -> OverlapStructure:
    """The classical overlap x >< y  <=>  x /\\ y != 0."""
    lat = _lattice_of(f)
    n = lat.size
    return OverlapStructure(
        lat, frozenset((x, y) for x in range(n) for y in range(n) if lat.meet[x][y] != lat.bottom)
    )


@dataclass
class OverlapReport:
    transfer: bool
    splitting: bool
    density: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def all(self) -> bool:
        return self.transfer and self.splitting and self.density

    def __bool__(self):
        return self.all

    def first_failure(self) -> Optional[tuple]:
        for axiom in ("transfer", "splitting", "density"):
            if not getattr(self, axiom):
                return axiom, self.witnesses[axiom]
        return None

    def to_json(self) -> dict:
        return {
            "transfer": self.transfer,
            "splitting": self.splitting,
            "density": self.density,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def overlap_axioms_check(o: OverlapStructure) -> OverlapReport:
    """Check transfer, splitting (binary and empty joins) and density.

    Each witness is the lexicographically least failing tuple of elements.
    """
    lat = o.lattice
    n = lat.size
    m, j = lat.meet, lat.join
    down = lat.poset.down
    R = o.holds
    triples = lambda: product(range(n), repeat=3)  # noqa: E731

    transfer = next(((x, z, y) for x, z, y in triples() if R(m[x][z], y) != R(x, m[z][y])), None)
    splitting = next(((x, lat.bottom) for x in range(n) if R(x, lat.bottom)), None)
    if splitting is None:
        splitting = next(
            ((x, a, b) for x, a, b in triples() if R(x, j[a][b]) != (R(x, a) or R(x, b))), None
        )
    density = next(
        (
            (x, y)
            for x, y in product(range(n), repeat=2)
            if all(R(z, y) for z in range(n) if R(z, x)) != bool((down[y] >> x) & 1)
        ),
        None,
    )
    wit = {}
    for axiom, w in (("transfer", transfer), ("splitting", splitting), ("density", density)):
        if w is not None:
            wit[axiom] = tuple(lat.elements[i] for i in w)
    return OverlapReport(transfer is None, splitting is None, density is None, wit)


def oalgebra_from_overlap(o: OverlapStructure) -> OmegaFrame:
    """Classical omega-frame presented by an overlap relation; pos(x) = 1 iff x >< x."""
    report = overlap_axioms_check(o)
    failure = report.first_failure()
    if failure is not None:
        axiom, w = failure
        raise AxiomsFailed(f"{axiom} fails at {w}", witness=(axiom, w))
    fr = is_frame(o.lattice)
    if fr.frame is None:
        raise InvariantViolation(f"overlap axioms hold but distributivity fails at {fr.counterexample}")
    X = classical_omega_frame(fr.frame, name=f"overlap {o.lattice.name}")
    top = X.omega.top
    n = o.lattice.size
    for x in range(n):
        if (X.pos[x] == top) != o.holds(x, x):
            raise InvariantViolation("pos(x) = 1 does not match x >< x")
        for y in range(n):
            if overlap(X, x, y) != o.holds(x, y):
                raise InvariantViolation("derived overlap does not round-trip")
    return X


# -- comparison with Boolean locales -------------------------------------------

def check_discrete_is_oalgebra(omega: Frame, points) -> bool:
    points = tuple(points)
    X = discrete_omega_frame(omega, points)
    # carrier index i enumerates omega^points in product order
    for i, values in enumerate(product(range(omega.size), repeat=len(points))):
        if X.pos[i] != omega.join_all(values):
            raise InvariantViolation(f"pos{X.carrier.label(i)} is not the join of its values")
    verdict = is_oalgebra(X).is_oalgebra
    if not verdict:
        raise InvariantViolation(f"{X.carrier.name} is discrete but not an o-algebra")
    return verdict


def check_overt_boolean_is_oalgebra(X: OmegaFrame) -> bool:
    if not X.overt:
        raise PreconditionFailed(f"{X.name} is not overt")
    if not _carrier_boolean(X.carrier):
        raise PreconditionFailed(f"carrier of {X.name} is not Boolean")
    verdict = is_oalgebra(X).is_oalgebra
    if not verdict:
        raise InvariantViolation(f"{X.name} is overt and Boolean but not an o-algebra")
    return verdict


def classical_coincidence(f: Frame) -> bool:
    """Over the two-element base: o-algebra iff Boolean.  Returns the common value."""
    oa = is_oalgebra(classical_omega_frame(f)).is_oalgebra
    b = _carrier_boolean(f)
    if oa != b:
        raise InvariantViolation(f"classical o-algebra ({oa}) and Boolean ({b}) disagree on {f.name}")
    return b


# -- excluded middle transfer ----------------------------------------------------

@dataclass
class LemProbe:
    omega_boolean: bool
    gap: bool
    lem_failures: tuple  # truth values p with p \/ -p != 1
    broken_step: Optional[dict] = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "omega_boolean": self.omega_boolean,
            "gap": self.gap,
            "lem_failures": list(self.lem_failures),
            "broken_step": self.broken_step,
            "note": self.note or None,
        }


def lem_transfer_probe(X: OmegaFrame, F) -> LemProbe:
    """Given a Boolean carrier and a join-preserving F: carrier -> omega with
    F(1) = 1, report whether omega satisfies excluded middle.

    A non-Boolean omega here is reported as a gap between the internal
    argument and this external model, not raised.
    """
    c, o = X.carrier, X.omega
    if isinstance(F, Mapping):
        table = [None] * c.size
        for x, p in F.items():
            table[c.idx(x)] = o.idx(p)
        if None in table:
            raise PreconditionFailed("F must be total on the carrier")
        F = tuple(table)
    else:
        F = tuple(o.idx(p) for p in F)
        if len(F) != c.size:
            raise PreconditionFailed("F must be total on the carrier")
    if not _carrier_boolean(c):
        raise PreconditionFailed(f"carrier of {X.name} is not Boolean")
    if F[c.top] != o.top:
        raise PreconditionFailed("F(1) != 1")
    if F[c.bottom] != o.bottom:
        raise PreconditionFailed("F does not preserve the empty join")
    for x in range(c.size):
        for y in range(c.size):
            if F[c.join(x, y)] != o.join(F[x], F[y]):
                raise PreconditionFailed(f"F does not preserve the join of {c.label(x)}, {c.label(y)}")

    failures = tuple(o.label(p) for p in range(o.size) if o.join(p, o.neg(p)) != o.top)
    broken = None
    for p in range(o.size):
        ep = X.e[p]
        lhs = o.join(F[ep], F[c.neg(ep)])
        if lhs != o.top:
            broken = {"p": o.label(p), "step": "F(e p) \\/ F(-e p) = 1", "value": o.label(lhs)}
            break
        if F[ep] == o.top and p != o.top:
            broken = {"p": o.label(p), "step": "F(e p) = 1 implies p = 1", "F(e p)": o.label(F[ep])}
            break
        if F[c.neg(ep)] == o.top and o.neg(p) != o.top:
            broken = {"p": o.label(p), "step": "F(-e p) = 1 implies -p = 1", "F(-e p)": o.label(F[c.neg(ep)])}
            break
    gap = bool(failures)
    note = ""
    if gap:
        note = "internal/external gap witness: hypotheses hold in this model but omega is not Boolean"
    return LemProbe(not gap, gap, failures, broken, note)
