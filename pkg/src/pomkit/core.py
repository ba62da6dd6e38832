"""Finite monoids given by Cayley tables, and the unordered machinery on them.

Elements are the dense indices ``0..n-1``.  The identity is an index and is
not forced to be 0.  All objects are immutable; constructors validate.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from . import kernels
from .errors import (
    AssociativityViolation,
    IdentityLawViolation,
    IllFormedCongruence,
    NotAHom,
    NotASubmonoid,
    OutOfRangeEntry,
    SizeGuardExceeded,
    TypeMismatch,
)

EXHAUSTIVE_GUARD = 64
END_GUARD = 6


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: ``ok`` plus the least witness when it fails."""

    ok: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


@dataclass(frozen=True)
class FiniteMonoid:
    size: int
    identity: int
    table: tuple = field(repr=False)

    def __post_init__(self):
        n = self.size
        if n < 1:
            raise ValueError("a monoid needs at least one element")
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"table must be {n}x{n}")
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise OutOfRangeEntry(i, j, v)
        e = self.identity
        if not 0 <= e < n:
            raise OutOfRangeEntry(e, e, e)
        for a in range(n):
            if rows[e][a] != a or rows[a][e] != a:
                raise IdentityLawViolation(a)
        bad = kernels.assoc_violation(self.flat, n)
        if bad is not None:
            raise AssociativityViolation(*bad)

    @cached_property
    def flat(self):
        return tuple(v for row in self.table for v in row)

    def add(self, a, b):
        return self.table[a][b]

    def sum(self, elements):
        acc = self.identity
        for x in elements:
            acc = self.table[acc][x]
        return acc

    @property
    def elements(self):
        return range(self.size)


def validate_monoid(table, identity):
    """Build a monoid from a raw table, raising the first violated law."""
    return FiniteMonoid(len(table), identity, tuple(tuple(r) for r in table))


def trivial_monoid():
    return FiniteMonoid(1, 0, ((0,),))


def is_commutative(M):
    t = M.table
    return all(t[a][b] == t[b][a] for a in M.elements for b in range(a + 1, M.size))


def mask_of(members):
    m = 0
    for x in members:
        m |= 1 << x
    return m


def members_of(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Submonoid:
    parent: FiniteMonoid
    members: frozenset

    def __post_init__(self):
        M = self.parent
        mem = frozenset(int(x) for x in self.members)
        object.__setattr__(self, "members", mem)
        if any(not 0 <= x < M.size for x in mem):
            raise NotASubmonoid(("out of range",))
        if M.identity not in mem:
            raise NotASubmonoid(("identity", M.identity))
        for a in sorted(mem):
            for b in sorted(mem):
                if M.table[a][b] not in mem:
                    raise NotASubmonoid((a, b))

    @cached_property
    def mask(self):
        return mask_of(self.members)

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)


def is_closed(M, members):
    return M.identity in members and all(
        M.table[a][b] in members for a in members for b in members)


def submonoid_closure(M, seed):
    s = set(seed) | {M.identity}
    frontier = list(s)
    while frontier:
        new = []
        for a in frontier:
            for b in list(s):
                for c in (M.table[a][b], M.table[b][a]):
                    if c not in s:
                        s.add(c)
                        new.append(c)
        frontier = new
    return Submonoid(M, frozenset(s))


def whole(M):
    return Submonoid(M, frozenset(M.elements))


def trivial_submonoid(M):
    return Submonoid(M, frozenset((M.identity,)))


@dataclass(frozen=True)
class MonoidHom:
    dom: FiniteMonoid
    cod: FiniteMonoid
    map: tuple

    def __post_init__(self):
        f = tuple(int(v) for v in self.map)
        object.__setattr__(self, "map", f)
        if len(f) != self.dom.size:
            raise NotAHom(("length", len(f)), "map length differs from domain size")
        if any(not 0 <= v < self.cod.size for v in f):
            raise NotAHom(("range",), "image out of range")
        bad = hom_violation(self.dom, self.cod, f)
        if bad is not None:
            raise NotAHom(*bad)

    def __call__(self, a):
        return self.map[a]

    def image(self, elements):
        return frozenset(self.map[a] for a in elements)


def hom_violation(M, N, f):
    """Return ``(witness, reason)`` for the first failure, else None."""
    if f[M.identity] != N.identity:
        return (M.identity,), "identity not preserved"
    tm, tn = M.table, N.table
    for a in M.elements:
        for b in M.elements:
            if f[tm[a][b]] != tn[f[a]][f[b]]:
                return (a, b), "operation not preserved"
    return None


def validate_hom(dom, cod, mapping):
    return MonoidHom(dom, cod, tuple(mapping))


def identity_hom(M):
    return MonoidHom(M, M, tuple(M.elements))


def constant_hom(M, N):
    """The hom sending everything to the identity of N."""
    return MonoidHom(M, N, (N.identity,) * M.size)


def compose_hom(f, g):
    """``g after f``."""
    if f.cod != g.dom:
        raise TypeMismatch("cod(f) != dom(g)")
    return MonoidHom(f.dom, g.cod, tuple(g.map[x] for x in f.map))


def iter_homs(M, N):
    """All homs M -> N by backtracking in lexicographic map order."""
    n, m = M.size, N.size
    tm, tn = M.table, N.table
    f = [-1] * n
    f[M.identity] = N.identity
    order = [a for a in M.elements if a != M.identity]

    def ok(upto):
        for a in M.elements:
            if f[a] < 0:
                continue
            for b in M.elements:
                if f[b] < 0:
                    continue
                c = tm[a][b]
                if f[c] >= 0 and f[c] != tn[f[a]][f[b]]:
                    return False
        return True

    def go(k):
        if k == len(order):
            yield tuple(f)
            return
        a = order[k]
        for v in range(m):
            f[a] = v
            if ok(k):
                yield from go(k + 1)
        f[a] = -1

    # lexicographic order requires trying indices in increasing position
    for mp in go(0):
        yield MonoidHom(M, N, mp)


def kernel(p):
    return Submonoid(p.dom, frozenset(a for a in p.dom.elements if p.map[a] == p.cod.identity))


def submonoid_as_monoid(S):
    """The submonoid as a stand-alone monoid plus its inclusion hom."""
    M = S.parent
    elems = sorted(S.members)
    pos = {x: i for i, x in enumerate(elems)}
    table = tuple(tuple(pos[M.table[a][b]] for b in elems) for a in elems)
    X = FiniteMonoid(len(elems), pos[M.identity], table)
    return X, MonoidHom(X, M, tuple(elems))


def direct_product(M, N):
    """M x N with pair index ``x * |N| + y``, plus both projections."""
    n, m = M.size, N.size
    table = tuple(
        tuple(M.table[x][x2] * m + N.table[y][y2] for x2 in range(n) for y2 in range(m))
        for x in range(n) for y in range(m))
    P = FiniteMonoid(n * m, M.identity * m + N.identity, table)
    p1 = MonoidHom(P, M, tuple(i // m for i in range(n * m)))
    p2 = MonoidHom(P, N, tuple(i % m for i in range(n * m)))
    return P, p1, p2


@dataclass(frozen=True)
class Congruence:
    parent: FiniteMonoid
    partition: tuple

    def __post_init__(self):
        # normalize class labels to first-appearance order
        relabel = {}
        norm = []
        for c in self.partition:
            if c not in relabel:
                relabel[c] = len(relabel)
            norm.append(relabel[c])
        if len(norm) != self.parent.size:
            raise ValueError("partition length differs from monoid size")
        object.__setattr__(self, "partition", tuple(norm))

    @property
    def num_classes(self):
        return max(self.partition) + 1

    def classes(self):
        out = [[] for _ in range(self.num_classes)]
        for a, c in enumerate(self.partition):
            out[c].append(a)
        return out

    def same(self, a, b):
        return self.partition[a] == self.partition[b]


def congruence_closure(M, pairs):
    n = M.size
    if n > EXHAUSTIVE_GUARD:
        raise SizeGuardExceeded("congruence_closure", n, EXHAUSTIVE_GUARD)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    t = M.table
    work = list(pairs)
    while work:
        a, b = work.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[max(ra, rb)] = min(ra, rb)
        for c in range(n):
            work.append((t[c][a], t[c][b]))
            work.append((t[a][c], t[b][c]))
    return Congruence(M, tuple(find(a) for a in range(n)))


def congruence_violation(M, c):
    t = M.table
    p = c.partition
    # single translations generate the two-sided compatibility
    for a in M.elements:
        for b in M.elements:
            if p[a] != p[b]:
                continue
            for x in M.elements:
                if p[t[x][a]] != p[t[x][b]]:
                    return (x, a, b, "left")
                if p[t[a][x]] != p[t[b][x]]:
                    return (a, b, x, "right")
    return None


def quotient(M, c):
    if c.parent != M:
        raise TypeMismatch("congruence lives on another monoid")
    bad = congruence_violation(M, c)
    if bad is not None:
        raise IllFormedCongruence(bad)
    reps = [cls[0] for cls in c.classes()]
    p = c.partition
    table = tuple(tuple(p[M.table[a][b]] for b in reps) for a in reps)
    Q = FiniteMonoid(len(reps), p[M.identity], table)
    return Q, MonoidHom(M, Q, p)


def coequalizer_mon(f, g):
    if f.dom != g.dom or f.cod != g.cod:
        raise TypeMismatch("coequalizer needs a parallel pair")
    pairs = [(f.map[a], g.map[a]) for a in f.dom.elements]
    return quotient(f.cod, congruence_closure(f.cod, pairs))


def endomorphism_monoid(X):
    """End(X) under composition, ``f + g = f after g``; returns (monoid, maps)."""
    if X.size > END_GUARD:
        raise SizeGuardExceeded("endomorphism_monoid", X.size, END_GUARD)
    maps = [h.map for h in iter_homs(X, X)]
    idx = {m: i for i, m in enumerate(maps)}
    table = tuple(tuple(idx[tuple(f[x] for x in g)] for g in maps) for f in maps)
    return FiniteMonoid(len(maps), idx[tuple(X.elements)], table), maps

