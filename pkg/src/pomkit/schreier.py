"""Schreier split extensions of finite monoids and the actions they carry.

An action of B on X is stored as a table ``act[b][x] = b.x`` and composes as
``(b + b').x = b.(b'.x)``, the convention under which the semidirect
operation ``(x,b) + (x',b') = (x + b.x', b + b')`` is associative.

Pairs ``(x, b)`` of ``X x B`` are encoded as the index ``x * |B| + b``.
"""
from dataclasses import dataclass, replace
from typing import Optional

from .core import (
    PASS,
    FiniteMonoid,
    MonoidHom,
    Verdict,
    coequalizer_mon,
    constant_hom,
    hom_violation,
    kernel,
)
from .errors import InvalidAction, InvalidExtension, NotSchreier, TypeMismatch


def encode(x, b, nb):
    return x * nb + b


def decode(i, nb):
    return divmod(i, nb)


@dataclass(frozen=True)
class SplitExtension:
    """``k: X -> A``, ``p: A -> B``, section ``s: B -> A`` and an optional
    set map ``q: A -> X`` (a plain tuple, not required to be a hom).
    """

    X: FiniteMonoid
    A: FiniteMonoid
    B: FiniteMonoid
    k: MonoidHom
    p: MonoidHom
    s: MonoidHom
    q: Optional[tuple] = None

    def __post_init__(self):
        X, A, B, k, p, s = self.X, self.A, self.B, self.k, self.p, self.s
        if (k.dom, k.cod) != (X, A) or (p.dom, p.cod) != (A, B) or (s.dom, s.cod) != (B, A):
            raise TypeMismatch("k: X->A, p: A->B, s: B->A expected")
        for b in B.elements:
            if p.map[s.map[b]] != b:
                raise InvalidExtension("p s != 1_B", (b,))
        if len(set(k.map)) != X.size:
            x1 = next(x for x in X.elements if k.map.index(k.map[x]) != x)
            raise InvalidExtension("k not injective", (k.map.index(k.map[x1]), x1))
        ker = kernel(p).members
        img = frozenset(k.map)
        if img != ker:
            a = min(img ^ ker)
            raise InvalidExtension("image(k) != kernel(p)", (a,))
        if self.q is not None:
            q = tuple(int(v) for v in self.q)
            if len(q) != A.size or any(not 0 <= v < X.size for v in q):
                raise InvalidExtension("q has the wrong shape")
            object.__setattr__(self, "q", q)

    def with_q(self, q):
        return replace(self, q=tuple(q))


def decompositions(ext, a):
    """All x with ``a = k(x) + s(p(a))``."""
    A, k, p, s = ext.A, ext.k, ext.p, ext.s
    sp = s.map[p.map[a]]
    return [x for x in ext.X.elements if A.table[k.map[x]][sp] == a]


def find_retraction(ext):
    """The Schreier retraction, defined iff every element decomposes uniquely."""
    q = []
    for a in ext.A.elements:
        xs = decompositions(ext, a)
        if len(xs) != 1:
            raise NotSchreier(a, len(xs))
        q.append(xs[0])
    return tuple(q)


def is_schreier(ext):
    try:
        find_retraction(ext)
    except NotSchreier as exc:
        return Verdict(False, exc.witness)
    return PASS


@dataclass
class SchreierReport:
    S1: Verdict
    S2: Verdict

    @property
    def ok(self):
        return self.S1.ok and self.S2.ok


def check_S1_S2(ext):
    if ext.q is None:
        raise InvalidExtension("no retraction q given")
    A, k, p, s, q = ext.A, ext.k.map, ext.p.map, ext.s.map, ext.q
    s1 = PASS
    for a in A.elements:
        if A.table[k[q[a]]][s[p[a]]] != a:
            s1 = Verdict(False, (a,))
            break
    s2 = PASS
    for x in ext.X.elements:
        for b in ext.B.elements:
            if q[A.table[k[x]][s[b]]] != x:
                s2 = Verdict(False, (x, b))
                break
        if not s2:
            break
    return SchreierReport(s1, s2)


@dataclass(frozen=True)
class ActionTable:
    X: FiniteMonoid
    B: FiniteMonoid
    act: tuple

    def __post_init__(self):
        act = tuple(tuple(int(v) for v in row) for row in self.act)
        if len(act) != self.B.size or any(len(r) != self.X.size for r in act):
            raise InvalidAction("shape", (len(act),))
        if any(not 0 <= v < self.X.size for r in act for v in r):
            raise InvalidAction("range", ())
        object.__setattr__(self, "act", act)

    def __call__(self, b, x):
        return self.act[b][x]


def trivial_action(X, B):
    return ActionTable(X, B, tuple(tuple(X.elements) for _ in B.elements))


def validate_action_map(X, B, act):
    """Each row an endomorphism of X, identity row trivial, composition law."""
    rows = act.act if isinstance(act, ActionTable) else act
    X_t, B_t = X.table, B.table
    ex, eb = X.identity, B.identity
    for x in X.elements:
        if rows[eb][x] != x:
            return Verdict(False, (eb, x), "identity row")
    for b in B.elements:
        if rows[b][ex] != ex:
            return Verdict(False, (b,), "row does not fix the identity")
        for x in X.elements:
            for y in X.elements:
                if rows[b][X_t[x][y]] != X_t[rows[b][x]][rows[b][y]]:
                    return Verdict(False, (b, x, y), "row not additive")
    for b in B.elements:
        for c in B.elements:
            for x in X.elements:
                if rows[B_t[b][c]][x] != rows[b][rows[c][x]]:
                    return Verdict(False, (b, c, x), "composition law")
    return PASS


def semidirect_table(X, B, rows):
    """Raw semidirect table; no law is checked here."""
    nb = B.size
    X_t, B_t = X.table, B.table
    return tuple(
        tuple(encode(X_t[x][rows[b][x2]], B_t[b][b2], nb)
              for x2 in X.elements for b2 in B.elements)
        for x in X.elements for b in B.elements)


def semidirect(X, B, phi):
    """``X x| B`` as a split extension with its canonical k, p, s and q."""
    v = validate_action_map(X, B, phi)
    if not v:
        raise InvalidAction(v.detail, v.witness)
    nb = B.size
    A = FiniteMonoid(X.size * nb, encode(X.identity, B.identity, nb),
                     semidirect_table(X, B, phi.act))
    k = MonoidHom(X, A, tuple(encode(x, B.identity, nb) for x in X.elements))
    p = MonoidHom(A, B, tuple(i % nb for i in A.elements))
    s = MonoidHom(B, A, tuple(encode(X.identity, b, nb) for b in B.elements))
    q = tuple(i // nb for i in A.elements)
    return SplitExtension(X, A, B, k, p, s, q)


def action_from_ext(ext):
    """``b.x = q(s(b) + k(x))``."""
    q = ext.q if ext.q is not None else find_retraction(ext)
    A, k, s = ext.A, ext.k.map, ext.s.map
    act = ActionTable(ext.X, ext.B, tuple(
        tuple(q[A.table[s[b]][k[x]]] for x in ext.X.elements) for b in ext.B.elements))
    v = validate_action_map(ext.X, ext.B, act)
    assert v, f"extracted action breaks {v.detail} at {v.witness}"
    return act


@dataclass
class ConsequenceReport:
    C1: Verdict
    C2: Verdict
    C3: Verdict
    C4: Verdict

    @property
    def ok(self):
        return all(v.ok for v in (self.C1, self.C2, self.C3, self.C4))


def _check_C3(ext, phi, q):
    X, A, B = ext.X, ext.A, ext.B
    k, p, s = ext.k.map, ext.p.map, ext.s.map
    nb = B.size
    sd = semidirect(X, B, phi).A
    alpha = tuple(encode(q[a], p[a], nb) for a in A.elements)
    beta = tuple(A.table[k[x]][s[b]] for x in X.elements for b in B.elements)
    bad = hom_violation(A, sd, alpha)
    if bad is not None:
        return Verdict(False, bad[0], "alpha not a hom")
    bad = hom_violation(sd, A, beta)
    if bad is not None:
        return Verdict(False, bad[0], "beta not a hom")
    for a in A.elements:
        if beta[alpha[a]] != a:
            return Verdict(False, (a,), "beta alpha != 1")
    for i in sd.elements:
        if alpha[beta[i]] != i:
            return Verdict(False, decode(i, nb), "alpha beta != 1")
    return PASS


def _check_C4(ext):
    C, c = coequalizer_mon(ext.k, constant_hom(ext.X, ext.A))
    t = [None] * C.size
    for a in ext.A.elements:
        cls, b = c.map[a], ext.p.map[a]
        if t[cls] is None:
            t[cls] = b
        elif t[cls] != b:
            return Verdict(False, (a,), "p does not factor through the cokernel")
    if sorted(t) != list(ext.B.elements):
        return Verdict(False, tuple(t), "comparison map not bijective")
    bad = hom_violation(C, ext.B, tuple(t))
    if bad is not None:
        return Verdict(False, bad[0], "comparison map not a hom")
    return PASS


def check_consequences(ext):
    q = ext.q if ext.q is not None else find_retraction(ext)
    X, A, B = ext.X, ext.A, ext.B
    k, p, s = ext.k.map, ext.p.map, ext.s.map
    phi = action_from_ext(ext.with_q(q))
    act = phi.act
    c1 = PASS
    for b in B.elements:
        for x in X.elements:
            if A.table[k[act[b][x]]][s[b]] != A.table[s[b]][k[x]]:
                c1 = Verdict(False, (b, x))
                break
        if not c1:
            break
    c2 = PASS
    for a1 in A.elements:
        for a2 in A.elements:
            if q[A.table[a1][a2]] != X.table[q[a1]][act[p[a1]][q[a2]]]:
                c2 = Verdict(False, (a1, a2))
                break
        if not c2:
            break
    return ConsequenceReport(c1, c2, _check_C3(ext, phi, q), _check_C4(ext))
