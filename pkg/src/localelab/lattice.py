"""Finite posets, lattices and frames (complete Heyting algebras).

Elements are opaque string names at the boundary; internally everything is a
dense integer index and every operation is a precomputed table.  Down-sets
and up-sets of single elements are kept as int bitmasks, which makes the
order test, lower/upper bound sets and Hasse covers cheap.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from .config import caps
from .errors import (
    CycleError,
    NotALattice,
    NotAFrame,
    SizeLimit,
    UnknownElement,
)


def bits(mask: int):
    """Indices of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, eq=False)
class FinitePoset:
    elements: tuple
    down: tuple  # down[j] = bitmask of {i | i <= j}
    name: str = ""
    index: dict = field(init=False, repr=False)
    up: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {x: i for i, x in enumerate(self.elements)})
        n = len(self.elements)
        up = [0] * n
        for j in range(n):
            for i in bits(self.down[j]):
                up[i] |= 1 << j
        object.__setattr__(self, "up", tuple(up))

    @property
    def size(self) -> int:
        return len(self.elements)

    def le(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def idx(self, x) -> int:
        try:
            return self.index[x]
        except (KeyError, TypeError):
            raise UnknownElement(f"unknown element {x!r}", witness=x) from None

    def covers(self) -> list:
        """Hasse diagram edges (i, j) with i < j and nothing strictly between."""
        out = []
        for j in range(self.size):
            for i in bits(self.down[j]):
                if i != j and self.up[i] & self.down[j] == (1 << i) | (1 << j):
                    out.append((i, j))
        return sorted(out)

    def leq_pairs(self) -> list:
        return [(i, j) for j in range(self.size) for i in bits(self.down[j])]

    def same_order(self, other: "FinitePoset") -> bool:
        return self.elements == other.elements and self.down == other.down


def _close(n: int, down: list) -> list:
    # transitive closure on bitmask rows (Warshall)
    down = list(down)
    for k in range(n):
        bk = 1 << k
        dk = down[k]
        for j in range(n):
            if down[j] & bk:
                down[j] |= dk
    return down


def _check_antisymmetric(elements, down):
    n = len(elements)
    for j in range(n):
        for i in bits(down[j]):
            if i != j and (down[i] >> j) & 1:
                a, b = sorted((i, j))
                raise CycleError(
                    f"order is not antisymmetric: {elements[a]!r} <= {elements[b]!r} <= {elements[a]!r}",
                    witness=(elements[a], elements[b]),
                )


def poset_from_relation(elements: Sequence[str], pairs: Iterable, name: str = "") -> FinitePoset:
    """Reflexive-transitive closure of ``pairs`` as a partial order."""
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        dupes = sorted({x for x in elements if elements.count(x) > 1})
        raise UnknownElement(f"duplicate element identifiers: {dupes}", witness=dupes[0])
    if len(elements) > caps().max_carrier:
        raise SizeLimit(f"{len(elements)} elements exceed max_carrier={caps().max_carrier}")
    index = {x: i for i, x in enumerate(elements)}
    down = [1 << i for i in range(len(elements))]
    for pair in pairs:
        a, b = pair
        for x in (a, b):
            if x not in index:
                raise UnknownElement(f"pair ({a!r}, {b!r}) references undeclared element {x!r}", witness=x)
        down[index[b]] |= 1 << index[a]
    down = _close(len(elements), down)
    _check_antisymmetric(elements, down)
    return FinitePoset(elements, tuple(down), name)


def poset_from_masks(elements: Sequence[str], down: Sequence[int], name: str = "") -> FinitePoset:
    """Poset from already-closed down-set masks (validated)."""
    elements = tuple(elements)
    n = len(elements)
    down = [d | (1 << i) for i, d in enumerate(down)]
    if _close(n, down) != down:
        raise CycleError("down-set masks are not transitively closed")
    _check_antisymmetric(elements, down)
    return FinitePoset(elements, tuple(down), name)


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    poset: FinitePoset
    meet: tuple
    join: tuple
    top: int
    bottom: int

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def elements(self) -> tuple:
        return self.poset.elements

    @property
    def name(self) -> str:
        return self.poset.name


def lattice_from_poset(p: FinitePoset) -> FiniteLattice:
    n = p.size
    if n == 0:
        raise NotALattice("empty poset has no top or bottom", witness=None)
    by_down = {d: i for i, d in enumerate(p.down)}
    by_up = {u: i for i, u in enumerate(p.up)}
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            g = by_down.get(p.down[x] & p.down[y])
            if g is None:
                raise NotALattice(
                    f"{p.elements[x]!r} and {p.elements[y]!r} have no greatest lower bound",
                    witness=(p.elements[x], p.elements[y]),
                )
            l = by_up.get(p.up[x] & p.up[y])
            if l is None:
                raise NotALattice(
                    f"{p.elements[x]!r} and {p.elements[y]!r} have no least upper bound",
                    witness=(p.elements[x], p.elements[y]),
                )
            meet[x][y] = meet[y][x] = g
            join[x][y] = join[y][x] = l
    full = (1 << n) - 1
    top = by_down.get(full)
    bottom = by_up.get(full)
    if top is None or bottom is None:
        # unreachable for n >= 1 once all binary bounds exist; kept for clarity
        raise NotALattice("missing top or bottom", witness=None)
    return FiniteLattice(p, tuple(map(tuple, meet)), tuple(map(tuple, join)), top, bottom)


@dataclass(frozen=True, eq=False)
class Frame:
    """A finite distributive lattice with its Heyting implication table."""

    lattice: FiniteLattice
    imp_table: tuple

    # -- element access ----------------------------------------------------
    @property
    def name(self) -> str:
        return self.lattice.name

    @property
    def elements(self) -> tuple:
        return self.lattice.elements

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def poset(self) -> FinitePoset:
        return self.lattice.poset

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    def idx(self, x) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            if 0 <= x < self.size:
                return x
            raise UnknownElement(f"index {x} out of range for {self.name or 'frame'}", witness=x)
        return self.lattice.poset.idx(x)

    def label(self, i: int) -> str:
        return self.elements[i]

    # -- operations on indices ---------------------------------------------
    def le(self, x: int, y: int) -> bool:
        return bool((self.lattice.poset.down[y] >> x) & 1)

    def meet(self, x: int, y: int) -> int:
        return self.lattice.meet[x][y]

    def join(self, x: int, y: int) -> int:
        return self.lattice.join[x][y]

    def imp(self, x: int, y: int) -> int:
        return self.imp_table[x][y]

    def neg(self, x: int) -> int:
        return self.imp_table[x][self.bottom]

    def iff(self, x: int, y: int) -> int:
        return self.meet(self.imp(x, y), self.imp(y, x))

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        m = self.lattice.meet
        for x in xs:
            acc = m[acc][x]
        return acc

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        j = self.lattice.join
        for x in xs:
            acc = j[acc][x]
        return acc

    def __iter__(self):
        return iter(range(self.size))

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"Frame({self.name or '?'}, {self.size} elements)"


@dataclass
class FrameReport:
    is_lattice: bool
    is_distributive: bool
    is_boolean: bool
    counterexample: Optional[tuple] = None
    reason: str = ""
    frame: Optional[Frame] = field(default=None, repr=False)

    def to_json(self) -> dict:
        out = {
            "is_lattice": self.is_lattice,
            "is_distributive": self.is_distributive,
            "is_boolean": self.is_boolean,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }
        if self.reason:
            out["reason"] = self.reason
        return out


def _distributivity_witness(l: FiniteLattice) -> Optional[tuple]:
    m, j = l.meet, l.join
    n = l.size
    for x, y, z in product(range(n), repeat=3):
        if m[x][j[y][z]] != j[m[x][y]][m[x][z]]:
            return (x, y, z)
    return None


def _implication_table(l: FiniteLattice) -> tuple:
    # x -> y is the largest z with z /\ x <= y; on a distributive lattice the
    # set of such z is a principal down-set, so its join is a member
    n = l.size
    down = l.poset.down
    m, jn = l.meet, l.join
    table = []
    for x in range(n):
        row = []
        for y in range(n):
            acc = l.bottom
            for z in range(n):
                if (down[y] >> m[z][x]) & 1:
                    acc = jn[acc][z]
            row.append(acc)
        table.append(tuple(row))
    return tuple(table)


def _boolean_witness(f: Frame) -> Optional[int]:
    for x in range(f.size):
        if f.join(x, f.neg(x)) != f.top:
            return x
    return None


def is_frame(l: FiniteLattice) -> FrameReport:
    """Check binary distributivity over every triple; on success fill in
    the implication table and attach the resulting ``Frame``."""
    cap = caps().max_triple
    if l.size > cap:
        raise SizeLimit(f"{l.size} elements exceed max_triple={cap} for the distributivity scan")
    w = _distributivity_witness(l)
    if w is not None:
        names = tuple(l.elements[i] for i in w)
        return FrameReport(
            True, False, False, names,
            reason="x /\\ (y \\/ z) != (x /\\ y) \\/ (x /\\ z)",
        )
    f = Frame(l, _implication_table(l))
    b = _boolean_witness(f)
    return FrameReport(
        True, True, b is None,
        None if b is None else (f.label(b),),
        reason="" if b is None else "x \\/ -x != 1",
        frame=f,
    )


def frame_report_from_poset(p: FinitePoset) -> FrameReport:
    try:
        l = lattice_from_poset(p)
    except NotALattice as exc:
        w = exc.witness
        return FrameReport(False, False, False, tuple(w) if w else None, reason=str(exc))
    return is_frame(l)


def frame_from_lattice(l: FiniteLattice) -> Frame:
    report = is_frame(l)
    if report.frame is None:
        raise NotAFrame(
            f"{l.name or 'lattice'} is not distributive: witness {report.counterexample}",
            witness=report.counterexample,
        )
    return report.frame


def frame_from_relation(elements, pairs, name: str = "") -> Frame:
    return frame_from_lattice(lattice_from_poset(poset_from_relation(elements, pairs, name)))


def implication(f: Frame, x: str, y: str) -> str:
    return f.label(f.imp(f.idx(x), f.idx(y)))


def is_boolean(f: Frame) -> FrameReport:
    b = _boolean_witness(f)
    return FrameReport(
        True, True, b is None,
        None if b is None else (f.label(b),),
        reason="" if b is None else "x \\/ -x != 1",
        frame=f,
    )


# -- frames of sets -----------------------------------------------------------

def set_label(mask: int, points: Sequence[str]) -> str:
    return "{" + ",".join(points[i] for i in bits(mask)) + "}"


def frame_of_sets(masks: Sequence[int], labels: Sequence[str], name: str = "", imp=None) -> Frame:
    """Frame of a family of sets closed under binary union and intersection.

    Such a family is a distributive lattice under inclusion, so only the
    closure conditions need checking.  ``imp`` may supply a closed-form
    implication ``(a, b) -> mask``; otherwise x -> y is the union of the
    members whose intersection with x lies inside y.
    """
    masks = list(masks)
    n = len(masks)
    if n == 0:
        raise NotALattice("empty family of sets", witness=None)
    if n > caps().max_carrier:
        raise SizeLimit(f"{n} sets exceed max_carrier={caps().max_carrier}")
    pos = {m: i for i, m in enumerate(masks)}
    if len(pos) != n:
        raise NotALattice("duplicate sets in family", witness=None)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i, a in enumerate(masks):
        for k in range(i, n):
            b = masks[k]
            mi, jo = pos.get(a & b), pos.get(a | b)
            if mi is None or jo is None:
                raise NotALattice(
                    f"family not closed under {'intersection' if mi is None else 'union'}",
                    witness=(labels[i], labels[k]),
                )
            meet[i][k] = meet[k][i] = mi
            join[i][k] = join[k][i] = jo
    down = []
    for i, a in enumerate(masks):
        d = 0
        for k, b in enumerate(masks):
            if b & ~a == 0:
                d |= 1 << k
        down.append(d)
    poset = FinitePoset(tuple(labels), tuple(down), name)
    full = (1 << n) - 1
    top = next(i for i in range(n) if down[i] == full)
    bottom = next(i for i in range(n) if poset.up[i] == full)
    lat = FiniteLattice(poset, tuple(map(tuple, meet)), tuple(map(tuple, join)), top, bottom)
    if imp is None:
        table = []
        for a in masks:
            row = []
            for b in masks:
                u = 0
                for c in masks:
                    if c & a & ~b == 0:
                        u |= c
                row.append(pos[u])
            table.append(tuple(row))
    else:
        table = [tuple(pos[imp(a, b)] for b in masks) for a in masks]
    return Frame(lat, tuple(table))


def powerset_frame(points: Sequence[str], name: str = "") -> Frame:
    points = tuple(points)
    k = len(points)
    if k > caps().max_powerset or (1 << k) > caps().max_carrier:
        raise SizeLimit(f"powerset of {k} points exceeds the configured cap")
    full = (1 << k) - 1
    masks = sorted(range(1 << k), key=lambda m: (popcount(m), list(bits(m))))
    labels = [set_label(m, points) for m in masks]
    return frame_of_sets(masks, labels, name or f"P({','.join(points)})", imp=lambda a, b: (~a | b) & full)


def downsets(p: FinitePoset) -> list:
    """All down-closed subsets of ``p`` as bitmasks, smallest first."""
    cap = caps().max_carrier
    strict = [p.down[i] & ~(1 << i) for i in range(p.size)]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(p.size):
                if not (d >> i) & 1 and strict[i] & ~d == 0:
                    e = d | (1 << i)
                    if e not in seen:
                        seen.add(e)
                        nxt.append(e)
                        if len(seen) > cap:
                            raise SizeLimit(f"more than {cap} down-sets")
        frontier = nxt
    return sorted(seen, key=lambda m: (popcount(m), list(bits(m))))


def downset_frame(p: FinitePoset, name: str = "") -> Frame:
    masks = downsets(p)
    labels = [set_label(m, p.elements) for m in masks]
    down = p.down

    def imp(a, b):
        # {x | every y <= x in a is in b}
        return sum(1 << x for x in range(p.size) if down[x] & a & ~b == 0)

    return frame_of_sets(masks, labels, name or f"Down({p.name or p.size})", imp=imp)


def chain(n: int, name: str = "") -> Frame:
    """The n-element chain; C3 is ``chain(3)`` with elements 0 < a < 1."""
    if n < 1:
        raise ValueError("a chain needs at least one element")
    if n == 1:
        labels = ["*"]
    else:
        inner = [chr(ord("a") + i) for i in range(n - 2)] if n - 2 <= 26 else [f"c{i}" for i in range(n - 2)]
        labels = ["0", *inner, "1"]
    pairs = list(zip(labels, labels[1:]))
    return frame_from_relation(labels, pairs, name or f"C{n}")


def rename(f: Frame, labels: Sequence[str], name: Optional[str] = None) -> Frame:
    labels = tuple(labels)
    if len(labels) != f.size or len(set(labels)) != f.size:
        raise ValueError("rename needs one distinct label per element")
    p = FinitePoset(labels, f.poset.down, f.name if name is None else name)
    l = FiniteLattice(p, f.lattice.meet, f.lattice.join, f.top, f.bottom)
    return Frame(l, f.imp_table)


def hasse_dot(f, title: Optional[str] = None) -> str:
    """DOT source of the Hasse diagram (bottom at the bottom)."""
    p = f.poset if hasattr(f, "poset") else f
    title = title or p.name or "lattice"
    lines = [f'digraph "{title}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, x in enumerate(p.elements):
        lines.append(f'  n{i} [label="{x}"];')
    for i, j in p.covers():
        lines.append(f"  n{i} -> n{j} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
