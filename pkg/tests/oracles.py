"""Brute-force reference computations used as test oracles.

Everything here works from the order relation alone (``le(i, j)`` on
``range(n)``) and recomputes meets, joins and implications by search, so it
shares no code path with the package tables.
"""
from itertools import product


class Order:
    def __init__(self, n, le):
        self.n = n
        self.leq = [[bool(le(i, j)) for j in range(n)] for i in range(n)]

    @classmethod
    def of(cls, f):
        return cls(f.size, f.le)

    def le(self, i, j):
        return self.leq[i][j]

    def meet(self, x, y):
        lower = [z for z in range(self.n) if self.le(z, x) and self.le(z, y)]
        best = [z for z in lower if all(self.le(w, z) for w in lower)]
        return best[0] if best else None

    def join(self, x, y):
        upper = [z for z in range(self.n) if self.le(x, z) and self.le(y, z)]
        best = [z for z in upper if all(self.le(z, w) for w in upper)]
        return best[0] if best else None

    @property
    def top(self):
        return next(z for z in range(self.n) if all(self.le(w, z) for w in range(self.n)))

    @property
    def bottom(self):
        return next(z for z in range(self.n) if all(self.le(z, w) for w in range(self.n)))

    def imp(self, x, y):
        cands = [z for z in range(self.n) if self.le(self.meet(z, x), y)]
        return next(z for z in cands if all(self.le(w, z) for w in cands))

    def meet_all(self, xs):
        acc = self.top
        for x in xs:
            acc = self.meet(acc, x)
        return acc

    def join_all(self, xs):
        acc = self.bottom
        for x in xs:
            acc = self.join(acc, x)
        return acc


def is_nucleus_table(o: Order, t) -> bool:
    n = o.n
    for x in range(n):
        if not o.le(x, t[x]) or t[t[x]] != t[x]:
            return False
        for y in range(n):
            if t[o.meet(x, y)] != o.meet(t[x], t[y]):
                return False
    return True


def all_nuclei(o: Order) -> set:
    """Every nucleus as a table, by scanning all self-maps.  Only for n <= 6."""
    return {t for t in product(range(o.n), repeat=o.n) if is_nucleus_table(o, t)}


def fixset(t) -> frozenset:
    return frozenset(x for x, y in enumerate(t) if x == y)


def homs_to_two(o: Order) -> list:
    """Frame homomorphisms onto {0,1} by scanning all 0/1 labellings."""
    out = []
    for h in product((0, 1), repeat=o.n):
        if h[o.top] != 1 or h[o.bottom] != 0:
            continue
        if all(
            h[o.meet(x, y)] == (h[x] & h[y]) and h[o.join(x, y)] == (h[x] | h[y])
            for x in range(o.n)
            for y in range(o.n)
        ):
            out.append(h)
    return out


def homs(src: Order, dst: Order) -> list:
    out = []
    for h in product(range(dst.n), repeat=src.n):
        if h[src.top] != dst.top or h[src.bottom] != dst.bottom:
            continue
        if all(
            h[src.meet(x, y)] == dst.meet(h[x], h[y]) and h[src.join(x, y)] == dst.join(h[x], h[y])
            for x in range(src.n)
            for y in range(src.n)
        ):
            out.append(h)
    return out


def left_adjoint(omega: Order, carrier: Order, e):
    """pos with pos(x) <= p  iff  x <= e(p), found by search; None if absent."""
    pos = []
    for x in range(carrier.n):
        cands = [p for p in range(omega.n) if all(omega.le(p, q) == carrier.le(x, e[q]) for q in range(omega.n))]
        if not cands:
            return None
        pos.append(cands[0])
    return tuple(pos)


def topologies(n: int) -> list:
    """All topologies on n points as sets of bitmasks, from all subset families."""
    full = (1 << n) - 1
    subsets = list(range(1 << n))
    out = []
    for sel in range(1 << len(subsets)):
        fam = {s for k, s in enumerate(subsets) if (sel >> k) & 1}
        if 0 not in fam or full not in fam:
            continue
        if all((a & b) in fam and (a | b) in fam for a in fam for b in fam):
            out.append(frozenset(fam))
    return out


def poset_count(n: int) -> int:
    """Number of partial orders on n labelled points up to isomorphism,
    by brute force over relations (n <= 4)."""
    from itertools import permutations

    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    seen = set()
    for sel in range(1 << len(pairs)):
        rel = {p for k, p in enumerate(pairs) if (sel >> k) & 1}
        if any((j, i) in rel for i, j in rel):
            continue
        if any((i, k) not in rel for i, j in rel for j2, k in rel if j == j2 and i != k):
            continue
        key = min(tuple(sorted((perm[i], perm[j]) for i, j in rel)) for perm in permutations(range(n)))
        seen.add(key)
    return len(seen)


def random_closure(o: Order, rng) -> tuple:
    """A random closure operator: close a random top-containing subset under
    meets and send x to the least member above it."""
    S = {o.top} | {x for x in range(o.n) if rng.random() < 0.5}
    changed = True
    while changed:
        changed = False
        for a in list(S):
            for b in list(S):
                m = o.meet(a, b)
                if m not in S:
                    S.add(m)
                    changed = True
    return tuple(o.meet_all(s for s in S if o.le(x, s)) for x in range(o.n))
