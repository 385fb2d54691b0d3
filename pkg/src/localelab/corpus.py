"""Named fixtures and generated families of small frames and omega-frames."""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .lattice import (
    FiniteLattice,
    FinitePoset,
    Frame,
    bits,
    chain,
    downset_frame,
    downsets,
    lattice_from_poset,
    poset_from_relation,
    powerset_frame,
)
from .omega import (
    OmegaFrame,
    classical_omega_frame,
    discrete_omega_frame,
    omega_frame,
    structure_maps,
    two,
)
from .spaces import FiniteSpace, space

# -- fixtures -------------------------------------------------------------------


@lru_cache(maxsize=None)
def C3() -> Frame:
    return chain(3, "C3")


@lru_cache(maxsize=None)
def C4() -> Frame:
    return chain(4, "C4")


@lru_cache(maxsize=None)
def B4() -> Frame:
    return powerset_frame(["s", "t"], "B4")


@lru_cache(maxsize=None)
def ONE() -> Frame:
    return powerset_frame([], "ONE")


def TWO() -> Frame:
    return two()


@lru_cache(maxsize=None)
def M3_poset() -> FinitePoset:
    return poset_from_relation(
        ["0", "p", "q", "r", "1"],
        [("0", "p"), ("0", "q"), ("0", "r"), ("p", "1"), ("q", "1"), ("r", "1")],
        "M3",
    )


@lru_cache(maxsize=None)
def M3() -> FiniteLattice:
    return lattice_from_poset(M3_poset())


@lru_cache(maxsize=None)
def OC3() -> OmegaFrame:
    return omega_frame(C3(), C3(), {"0": "0", "a": "a", "1": "1"}, "OC3")


@lru_cache(maxsize=None)
def CLC3() -> OmegaFrame:
    return omega_frame(TWO(), C3(), {"0": "0", "1": "1"}, "CLC3")


@lru_cache(maxsize=None)
def C3_OVER_TWO_CARRIER() -> OmegaFrame:
    """Base C3, carrier TWO, e(a) = 1: overt and Boolean with pos(1) = a."""
    return omega_frame(C3(), TWO(), {"0": "0", "a": "1", "1": "1"}, "C3->TWO")


def DISC(omega: Frame, points) -> OmegaFrame:
    return discrete_omega_frame(omega, points)


@lru_cache(maxsize=None)
def SIERP() -> FiniteSpace:
    return space(["x", "y"], [[], ["x"], ["x", "y"]], "SIERP")


@lru_cache(maxsize=None)
def DISC2() -> FiniteSpace:
    return space(["x", "y"], [[], ["x"], ["y"], ["x", "y"]], "DISC2")


@lru_cache(maxsize=None)
def IND2() -> FiniteSpace:
    return space(["x", "y"], [[], ["x", "y"]], "IND2")


# -- posets up to isomorphism ------------------------------------------------------


def _canonical(n: int, down: tuple) -> tuple:
    best = None
    for perm in permutations(range(n)):
        # perm[i] = new position of old element i
        new = [0] * n
        for j in range(n):
            m = 0
            for i in bits(down[j]):
                m |= 1 << perm[i]
            new[perm[j]] = m
        key = tuple(new)
        if best is None or key < best:
            best = key
    return best if best is not None else ()


@lru_cache(maxsize=None)
def posets(n: int) -> tuple:
    """All posets with exactly n elements up to isomorphism, as canonical
    down-mask tuples.  Each one arises from a smaller one by adding a new
    maximal element above a down-set."""
    if n == 0:
        return ((),)
    seen = set()
    for smaller in posets(n - 1):
        k = n - 1
        p = FinitePoset(tuple(str(i) for i in range(k)), smaller)
        for d in downsets(p):
            down = tuple(smaller) + (d | (1 << k),)
            seen.add(_canonical(n, down))
    return tuple(sorted(seen))


def poset_family(max_n: int) -> list:
    out = []
    for n in range(max_n + 1):
        for k, down in enumerate(posets(n)):
            names = tuple(f"p{i}" for i in range(n))
            out.append(FinitePoset(names, down, f"P{n}.{k}"))
    return out


# -- frame families ---------------------------------------------------------------


def chain_frames(max_n: int) -> list:
    return [chain(n) for n in range(1, max_n + 1)]


def powerset_frames(max_n: int) -> list:
    names = "stuvwxyz"
    return [powerset_frame(list(names[:k]), f"P{k}") for k in range(max_n + 1)]


def downset_frames(max_n: int) -> list:
    return [downset_frame(p, f"Down({p.name})") for p in poset_family(max_n)]


def join_irreducible_key(f: Frame) -> tuple:
    """Canonical form of the poset of join-irreducibles; for finite distributive
    lattices this determines the lattice up to isomorphism."""
    irr = []
    for x in range(f.size):
        if x == f.bottom:
            continue
        below = [y for y in range(f.size) if f.le(y, x) and y != x]
        if f.join_all(below) != x:
            irr.append(x)
    pos = {x: i for i, x in enumerate(irr)}
    down = tuple(sum(1 << pos[y] for y in irr if f.le(y, x)) for x in irr)
    return (len(irr), _canonical(len(irr), down))


def corpus_frames(max_poset: int = 5, max_powerset: int = 3, max_chain: int = 6, max_size=None) -> list:
    """Chains, powersets and down-set frames, deduplicated up to isomorphism."""
    out, seen = [], set()
    for f in chain_frames(max_chain) + powerset_frames(max_powerset) + downset_frames(max_poset):
        if max_size is not None and f.size > max_size:
            continue
        key = join_irreducible_key(f)
        if key in seen:
            continue
        seen.add(key)
        out.append(f)
    return out


BASES = {"TWO": TWO, "C3": C3}


def omega_frames_over(f: Frame, bases=("TWO", "C3")) -> list:
    """Every omega-frame on carrier ``f`` over the named bases (all valid
    structure maps, in lexicographic order)."""
    out = []
    for b in bases:
        base = BASES[b]() if isinstance(b, str) else b
        for e in structure_maps(base, f):
            if base.size == 2:
                out.append(classical_omega_frame(f))
            else:
                tag = ",".join(f"{base.label(p)}>{f.label(x)}" for p, x in enumerate(e))
                out.append(omega_frame(base, f, e, f"{f.name}/{base.name}[{tag}]"))
    return out


def corpus_omega_frames(max_size: int = 8, bases=("TWO", "C3"), with_discrete: bool = True) -> list:
    out = []
    for f in corpus_frames(max_size=max_size):
        out.extend(omega_frames_over(f, bases))
    if with_discrete:
        for b in bases:
            base = BASES[b]()
            for k in range(3):
                out.append(discrete_omega_frame(base, "st"[:k]))
    return out


def lattice_family(name: str, max_n: int) -> list:
    """Carrier frames for the search front end."""
    if name == "chains":
        return chain_frames(max_n)
    if name == "powersets":
        return powerset_frames(max_n)
    if name == "downsets":
        return downset_frames(max_n)
    raise ValueError(f"unknown family {name!r}")

