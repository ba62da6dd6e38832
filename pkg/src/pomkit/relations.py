"""Preorders on ``{0..n-1}`` stored as row bitmasks.

Bit ``b`` of ``rows[a]`` means ``a <= b``.  Counterexamples are always the
lexicographically least.
"""
from dataclasses import dataclass

from . import kernels
from .core import Verdict, PASS, members_of
from .errors import (
    IncompatiblePreorder,
    NotAPreorder,
    NotMonotone,
    NotSurjective,
    SizeMismatch,
)


@dataclass(frozen=True)
class Preorder:
    size: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = self.size
        if len(rows) != n:
            raise SizeMismatch(len(rows), n)
        full = (1 << n) - 1
        for a, r in enumerate(rows):
            if r & ~full:
                raise NotAPreorder(("range", a))
            if not (r >> a) & 1:
                raise NotAPreorder(("reflexive", a))
        for a in range(n):
            for b in members_of(rows[a]):
                if rows[b] & ~rows[a]:
                    c = members_of(rows[b] & ~rows[a])[0]
                    raise NotAPreorder(("transitive", a, b, c))

    def leq(self, a, b):
        return (self.rows[a] >> b) & 1 == 1

    def up(self, a):
        return members_of(self.rows[a])

    def pairs(self):
        return [(a, b) for a in range(self.size) for b in members_of(self.rows[a])]

    def edges(self):
        """Non-reflexive pairs."""
        return [(a, b) for a, b in self.pairs() if a != b]

    def matrix(self):
        return [[int(self.leq(a, b)) for b in range(self.size)] for a in range(self.size)]

    @classmethod
    def from_matrix(cls, matrix):
        rows = []
        for a, row in enumerate(matrix):
            r = 0
            for b, v in enumerate(row):
                if v:
                    r |= 1 << b
            rows.append(r)
        return cls(len(rows), tuple(rows))


def closure_from_edges(n, edges):
    rows = [0] * n
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge ({a},{b}) out of range for size {n}")
        rows[a] |= 1 << b
    return Preorder(n, tuple(kernels.closure(rows, n)))


def discrete(n):
    return Preorder(n, tuple(1 << a for a in range(n)))


def total(n):
    full = (1 << n) - 1
    return Preorder(n, (full,) * n)


def opposite(R):
    rows = [0] * R.size
    for a, b in R.pairs():
        rows[b] |= 1 << a
    return Preorder(R.size, tuple(rows))


def is_contained(R1, R2):
    if R1.size != R2.size:
        raise SizeMismatch(R1.size, R2.size)
    for a in range(R1.size):
        extra = R1.rows[a] & ~R2.rows[a]
        if extra:
            return Verdict(False, (a, members_of(extra)[0]))
    return PASS


def is_compatible(M, R):
    if M.size != R.size:
        raise SizeMismatch(M.size, R.size)
    bad = kernels.compat_violation(M.flat, R.rows, M.size)
    return PASS if bad is None else Verdict(False, bad)


def is_compatible_translations(M, R):
    """``a<=b`` implies ``c+a<=c+b`` and ``a+c<=b+c`` for every c."""
    t = M.table
    for a, b in R.pairs():
        for c in M.elements:
            if not R.leq(t[c][a], t[c][b]):
                return Verdict(False, (a, b, c), "left translation")
            if not R.leq(t[a][c], t[b][c]):
                return Verdict(False, (a, b, c), "right translation")
    return PASS


def is_monotone(mapping, R_dom, R_cod):
    for a, b in R_dom.pairs():
        if not R_cod.leq(mapping[a], mapping[b]):
            return Verdict(False, (a, b))
    return PASS


def check_monotone(mapping, R_dom, R_cod):
    v = is_monotone(mapping, R_dom, R_cod)
    if not v:
        raise NotMonotone(v.witness)


def initial_lift(X, family):
    """Coarsest preorder on X making every ``hom`` in the family monotone.

    ``family`` is a list of ``(hom, preorder on hom.cod)``.
    """
    n = X.size
    rows = [(1 << n) - 1] * n
    for f, R in family:
        for a in range(n):
            r = 0
            for b in range(n):
                if R.leq(f.map[a], f.map[b]):
                    r |= 1 << b
            rows[a] &= r
    L = Preorder(n, tuple(rows))
    v = is_compatible(X, L)
    if not v:
        raise IncompatiblePreorder(v.witness)
    return L


def image_preorder_closure(R, q, m):
    """Push R along the surjection ``q: {0..n-1} -> {0..m-1}`` and close."""
    hit = set(q)
    for c in range(m):
        if c not in hit:
            raise NotSurjective(c)
    rows = [0] * m
    for a, b in R.pairs():
        rows[q[a]] |= 1 << q[b]
    return Preorder(m, tuple(kernels.closure(rows, m)))
