"""Finite topological spaces and the omega-valued two-point counterexample.

Subsets of the point set are int bitmasks.  Two closures are kept apart:
the weak closure (adherent points: every open neighbourhood meets D) and
the strong closure (complement of the interior of the complement).  With
a classical metatheory they coincide on concrete finite spaces; the
intuitionistic difference only shows up in the omega-valued engine at the
bottom of this module.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from .config import caps
from .errors import InvariantViolation, NotATopology, SizeLimit, UnknownElement
from .lattice import Frame, bits, frame_of_sets, popcount, set_label
from .oalgebra import is_oalgebra
from .omega import OmegaFrame, classical_omega_frame, homomorphism_witness, two


@dataclass(frozen=True, eq=False)
class FiniteSpace:
    points: tuple
    opens: tuple  # sorted bitmasks
    name: str = ""
    index: dict = field(init=False, repr=False)
    open_set: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {x: i for i, x in enumerate(self.points)})
        object.__setattr__(self, "open_set", frozenset(self.opens))

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    def mask(self, D) -> int:
        if isinstance(D, int):
            if D & ~self.full:
                raise UnknownElement(f"mask {D:#b} has bits outside the point set", witness=D)
            return D
        m = 0
        for x in D:
            try:
                m |= 1 << self.index[x]
            except KeyError:
                raise UnknownElement(f"unknown point {x!r}", witness=x) from None
        return m

    def names(self, m: int) -> frozenset:
        return frozenset(self.points[i] for i in bits(m))

    def label(self, m: int) -> str:
        return set_label(m, self.points)

    # -- operators on masks --
    def int_(self, D: int) -> int:
        out = 0
        for A in self.opens:
            if A & ~D == 0:
                out |= A
        return out

    def cl(self, D: int) -> int:
        out = 0
        for i in range(len(self.points)):
            b = 1 << i
            if all(A & D for A in self.opens if A & b):
                out |= b
        return out

    def strong_cl(self, D: int) -> int:
        return self.full & ~self.int_(self.full & ~D)

    def is_open(self, D: int) -> bool:
        return D in self.open_set

    def __repr__(self):
        return f"FiniteSpace({self.name or '?'}: {len(self.points)} points, {len(self.opens)} opens)"


def _topology_failure(full: int, opens: set) -> Optional[tuple]:
    if 0 not in opens:
        return ("contains the empty set", ())
    if full not in opens:
        return ("contains the whole set", ())
    ordered = sorted(opens)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a & b not in opens:
                return ("closed under binary intersection", (a, b))
            if a | b not in opens:
                return ("closed under binary union", (a, b))
    return None


def space(points: Sequence[str], opens: Iterable, name: str = "") -> FiniteSpace:
    points = tuple(points)
    if len(set(points)) != len(points):
        raise UnknownElement("duplicate point identifiers", witness=points)
    proto = FiniteSpace(points, (), name)
    masks = {proto.mask(A) for A in opens}
    failure = _topology_failure(proto.full, masks)
    if failure is not None:
        axiom, args = failure
        labels = tuple(proto.label(a) for a in args)
        raise NotATopology(f"not {axiom}" + (f": {labels}" if labels else ""), witness=(axiom, labels))
    ordered = tuple(sorted(masks, key=lambda m: (popcount(m), list(bits(m)))))
    return FiniteSpace(points, ordered, name)


def interior(X: FiniteSpace, D) -> frozenset:
    return X.names(X.int_(X.mask(D)))


def weak_closure(X: FiniteSpace, D) -> frozenset:
    return X.names(X.cl(X.mask(D)))


def strong_closure(X: FiniteSpace, D) -> frozenset:
    m = X.mask(D)
    weak, strong = X.cl(m), X.strong_cl(m)
    if weak & ~strong:
        raise InvariantViolation("weak closure is not contained in the strong closure")
    if weak != strong:
        raise InvariantViolation("weak and strong closure differ on a finite classical space")
    return X.names(strong)


@dataclass(frozen=True)
class Separation:
    is_T0: bool
    is_T1: bool
    is_discrete: bool


def separation(X: FiniteSpace) -> Separation:
    n = len(X.points)
    cls = [X.cl(1 << i) for i in range(n)]
    t0 = len(set(cls)) == n
    t1 = all(c == 1 << i for i, c in enumerate(cls))
    discrete = all(X.is_open(1 << i) for i in range(n))
    return Separation(t0, t1, discrete)


def _check_cap(X: FiniteSpace):
    cap = caps().max_space_points
    if len(X.points) > cap:
        raise SizeLimit(f"{len(X.points)} points exceed max_space_points={cap}")


@dataclass
class AlmostDiscrete:
    ici_eq_i: bool  # int cl int = int
    ci_eq_i: bool  # cl int = int
    ic_eq_c: bool  # int cl = cl
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "int_cl_int_eq_int": self.ici_eq_i,
            "cl_int_eq_int": self.ci_eq_i,
            "int_cl_eq_cl": self.ic_eq_c,
            "witnesses": self.witnesses,
        }


def almost_discrete_report(X: FiniteSpace) -> AlmostDiscrete:
    _check_cap(X)
    I, C = X.int_, X.cl
    subsets = sorted(range(X.full + 1), key=lambda m: (popcount(m), list(bits(m))))
    tests = {
        "int_cl_int_eq_int": lambda D: I(C(I(D))) == I(D),
        "cl_int_eq_int": lambda D: C(I(D)) == I(D),
        "int_cl_eq_cl": lambda D: I(C(D)) == C(D),
    }
    verdicts, wit = {}, {}
    for key, test in tests.items():
        bad = next((D for D in subsets if not test(D)), None)
        verdicts[key] = bad is None
        if bad is not None:
            wit[key] = sorted(X.names(bad))
    r = AlmostDiscrete(verdicts["int_cl_int_eq_int"], verdicts["cl_int_eq_int"], verdicts["int_cl_eq_cl"], wit)
    if (r.ic_eq_c and not r.ci_eq_i) or (r.ci_eq_i and not r.ici_eq_i):
        raise InvariantViolation(f"implication chain of almost-discreteness forms broken: {r}")
    return r


@dataclass
class LemmaReport:
    """Each lemma item as an implication evaluated on one space."""

    ic_eq_c_implies_ci_eq_i: bool
    ci_eq_i_and_T0_implies_T1: bool
    ic_eq_c_and_T1_implies_discrete: bool
    discrete_iff_T0_and_ic_eq_c: bool
    separation: Separation
    identities: AlmostDiscrete

    @property
    def all(self) -> bool:
        return (
            self.ic_eq_c_implies_ci_eq_i
            and self.ci_eq_i_and_T0_implies_T1
            and self.ic_eq_c_and_T1_implies_discrete
            and self.discrete_iff_T0_and_ic_eq_c
        )

    def to_json(self) -> dict:
        return {
            "lemma_1": self.ic_eq_c_implies_ci_eq_i,
            "lemma_2": self.ci_eq_i_and_T0_implies_T1,
            "lemma_3": self.ic_eq_c_and_T1_implies_discrete,
            "discrete_iff_T0_and_int_cl_eq_cl": self.discrete_iff_T0_and_ic_eq_c,
            "all_hold": self.all,
        }


def verify_section2(X: FiniteSpace) -> LemmaReport:
    s = separation(X)
    a = almost_discrete_report(X)
    return LemmaReport(
        (not a.ic_eq_c) or a.ci_eq_i,
        (not (a.ci_eq_i and s.is_T0)) or s.is_T1,
        (not (a.ic_eq_c and s.is_T1)) or s.is_discrete,
        s.is_discrete == (s.is_T0 and a.ic_eq_c),
        s,
        a,
    )


# -- bridges between spaces and frames ----------------------------------------

def frame_of_opens(X: FiniteSpace) -> OmegaFrame:
    f = frame_of_sets(X.opens, [X.label(A) for A in X.opens], name=f"O({X.name or 'X'})")
    Y = classical_omega_frame(f, name=f"opens of {X.name or 'X'}")
    for k, A in enumerate(X.opens):
        if (Y.pos[k] == Y.omega.top) != (A != 0):
            raise InvariantViolation("positivity of an open is not inhabitedness")
    return Y


@dataclass(frozen=True, eq=False)
class Spectrum:
    space: FiniteSpace
    spatial: bool
    primes: tuple  # meet-prime element behind each point
    hats: tuple  # hats[x] = mask of points at which x holds


def _meet_primes(f: Frame) -> list:
    out = []
    for m in range(f.size):
        if m == f.top:
            continue
        if all(
            f.le(a, m) or f.le(b, m)
            for a in range(f.size)
            for b in range(f.size)
            if f.le(f.meet(a, b), m)
        ):
            out.append(m)
    return out


def points_of_frame(f: Frame) -> Spectrum:
    """Points are frame maps f -> {0,1}; on a finite frame each is x |-> [x not <= m]
    for a meet-prime m."""
    if f.size > caps().max_carrier:
        raise SizeLimit(f"{f.size} elements exceed max_carrier")
    base = two()
    primes = _meet_primes(f)
    homs = []
    for m in primes:
        h = tuple(base.bottom if f.le(x, m) else base.top for x in range(f.size))
        if homomorphism_witness(f, base, h) is not None:
            raise InvariantViolation(f"meet-prime {f.label(m)} does not give a frame map")
        homs.append(h)
    points = tuple(f"pt{f.label(m)}" for m in primes)
    hats = tuple(sum(1 << k for k, h in enumerate(homs) if h[x] == base.top) for x in range(f.size))
    spatial = len(set(hats)) == f.size
    X = space(points, set(hats), name=f"pt({f.name})")
    if spatial and is_oalgebra(classical_omega_frame(f)).is_oalgebra and not separation(X).is_discrete:
        raise InvariantViolation(f"spatial classical o-algebra {f.name} has a non-discrete space of points")
    return Spectrum(X, spatial, tuple(primes), hats)


def point_embedding(X: FiniteSpace) -> Optional[dict]:
    """For a T0 space, the homeomorphism X -> pt(O(X)) as a point-name map,
    or None when the canonical map is not a homeomorphism."""
    Y = frame_of_opens(X)
    spec = points_of_frame(Y.carrier)
    opens = list(X.opens)
    mapping = {}
    for i, x in enumerate(X.points):
        # the point x is the frame map A |-> [x in A]; its prime is the largest open missing x
        largest = 0
        for A in opens:
            if not (A >> i) & 1:
                largest |= A
        m = opens.index(largest)
        if m not in spec.primes:
            return None
        mapping[x] = spec.space.points[spec.primes.index(m)]
    if len(set(mapping.values())) != len(mapping) or len(mapping) != len(spec.space.points):
        return None
    for k, A in enumerate(opens):
        image = {mapping[x] for x in X.names(A)}
        if image != set(spec.space.names(spec.hats[k])):
            return None
    return mapping


def enumerate_topologies(n: int) -> list:
    cap = caps().max_topology_points
    if n > cap:
        raise SizeLimit(f"topology enumeration is capped at {cap} points")
    points = tuple("xyzw"[:n]) if n <= 4 else tuple(f"x{i}" for i in range(n))
    full = (1 << n) - 1
    middle = [m for m in range(1, full)]
    out = []
    for sel in range(1 << len(middle)):
        fam = {0, full}
        for k, m in enumerate(middle):
            if (sel >> k) & 1:
                fam.add(m)
        if _topology_failure(full, fam) is None:
            ordered = tuple(sorted(fam, key=lambda m: (popcount(m), list(bits(m)))))
            out.append(FiniteSpace(points, ordered, f"T{n}.{len(out)}"))
    return out


# -- omega-valued Brouwerian counterexample -------------------------------------

@dataclass
class BrouwerReport:
    p: str
    topology_axioms_value: str
    cl_eq_id_value: str
    int_eq_id_value: str
    excluded_middle_value: str
    contracts_hold: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


class BrouwerModel:
    """The family of topologies on {0,1} indexed by a truth value p, read in
    omega: an omega-valued subset D is a pair (D(0), D(1)) and every
    connective/quantifier is the corresponding Heyting operation/meet/join."""

    def __init__(self, omega: Frame, p):
        self.o = omega
        self.p = omega.idx(p)
        self.subsets = list(product(range(omega.size), repeat=2))

    def q(self, D) -> int:
        o = self.o
        return o.meet_all(o.imp(self.p, d) for d in D)

    def open(self, D) -> int:
        o = self.o
        bound = o.join(self.p, self.q(D))
        return o.meet_all(o.imp(d, bound) for d in D)

    def incl(self, D, E) -> int:
        o = self.o
        return o.meet_all(o.imp(a, b) for a, b in zip(D, E))

    def meets(self, D, E) -> int:
        o = self.o
        return o.join_all(o.meet(a, b) for a, b in zip(D, E))

    def cl(self, D, x: int) -> int:
        o = self.o
        return o.meet_all(o.imp(o.meet(self.open(E), E[x]), self.meets(E, D)) for E in self.subsets)

    def int_(self, D, x: int) -> int:
        o = self.o
        return o.join_all(o.meet(o.meet(self.open(E), E[x]), self.incl(E, D)) for E in self.subsets)

    def topology_axioms(self) -> int:
        o = self.o
        subs = self.subsets
        empty = (o.bottom, o.bottom)
        whole = (o.top, o.top)
        opens = {D: self.open(D) for D in subs}
        vals = [opens[empty], opens[whole]]
        for D, E in product(subs, repeat=2):
            both = o.meet(opens[D], opens[E])
            cap_ = tuple(o.meet(a, b) for a, b in zip(D, E))
            cup = tuple(o.join(a, b) for a, b in zip(D, E))
            vals.append(o.imp(both, opens[cap_]))
            vals.append(o.imp(both, opens[cup]))
        return o.meet_all(vals)

    def report(self) -> BrouwerReport:
        o = self.o
        axioms = self.topology_axioms()
        cl_id = o.meet_all(o.iff(self.cl(D, x), D[x]) for D in self.subsets for x in (0, 1))
        int_id = o.meet_all(o.iff(self.int_(D, x), D[x]) for D in self.subsets for x in (0, 1))
        lem = o.join(self.p, o.neg(self.p))
        ok = axioms == o.top and cl_id == o.top and o.le(int_id, lem)
        L = o.label
        return BrouwerReport(L(self.p), L(axioms), L(cl_id), L(int_id), L(lem), ok)


def brouwer_counterexample(omega: Frame, p) -> BrouwerReport:
    return BrouwerModel(omega, p).report()
