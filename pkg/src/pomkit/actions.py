"""Preordered actions and Schreier split extensions with right-normal cones.

A preordered action is ``(X, B, P_X, P_B, phi, xi)`` with ``xi: X x P_B -> X``.
Only its fixed-point set ``{(u, v) : xi(u, v) = u}`` is seen by morphisms, so
round trips compare actions through ``phi`` and that set; ``canonicalize_xi``
rewrites ``xi`` to ``u`` on fixed points and the identity elsewhere.

``extract_action`` and ``build_extension`` are the two directions of the
correspondence (extension -> action and action -> extension); ``G_extract``
and ``H_build`` are aliases.
"""
from dataclasses import dataclass, field
from typing import Optional

from .core import PASS, Submonoid, Verdict, hom_violation
from .errors import ActionInvalid, ConeNotRightNormal, InvalidExtension, TypeMismatch
from .pom import is_right_normal
from .schreier import (
    ActionTable,
    SplitExtension,
    check_S1_S2,
    decode,
    encode,
    find_retraction,
    semidirect,
    action_from_ext,
)


def _require_right_normal(S, label):
    v = is_right_normal(S.parent, S)
    if not v:
        raise ConeNotRightNormal(*v.witness)


@dataclass(frozen=True)
class ConedSplitExtension:
    ext: SplitExtension
    P_X: Submonoid
    P_A: Submonoid
    P_B: Submonoid

    def __post_init__(self):
        ext = self.ext
        if ext.q is None:
            object.__setattr__(self, "ext", ext.with_q(find_retraction(ext)))
            ext = self.ext
        rep = check_S1_S2(ext)
        if not rep.ok:
            bad = rep.S1 if not rep.S1 else rep.S2
            raise InvalidExtension("q is not a Schreier retraction", bad.witness)
        for S, M, label in ((self.P_X, ext.X, "P_X"), (self.P_A, ext.A, "P_A"),
                            (self.P_B, ext.B, "P_B")):
            if S.parent != M:
                raise TypeMismatch(f"{label} is not a submonoid of the right monoid")
            _require_right_normal(S, label)
        for name, h, src, dst in (("k", ext.k, self.P_X, self.P_A),
                                  ("s", ext.s, self.P_B, self.P_A),
                                  ("p", ext.p, self.P_A, self.P_B)):
            for a in sorted(src.members):
                if h.map[a] not in dst.members:
                    raise InvalidExtension(f"{name} does not restrict to the cones", (a,))


@dataclass(frozen=True)
class PreorderedAction:
    X: object
    B: object
    P_X: Submonoid
    P_B: Submonoid
    phi: ActionTable
    xi: tuple

    def __post_init__(self):
        if self.P_X.parent != self.X or self.P_B.parent != self.B:
            raise TypeMismatch("cones must be submonoids of X and B")
        if self.phi.X != self.X or self.phi.B != self.B:
            raise TypeMismatch("phi must act by B on X")
        xi = tuple(tuple(int(v) for v in row) for row in self.xi)
        if len(xi) != self.X.size or any(len(r) != len(self.P_B) for r in xi):
            raise TypeMismatch(f"xi must be {self.X.size} rows of {len(self.P_B)} entries")
        if any(not 0 <= v < self.X.size for r in xi for v in r):
            raise TypeMismatch("xi entries out of range")
        object.__setattr__(self, "xi", xi)
        _require_right_normal(self.P_X, "P_X")
        _require_right_normal(self.P_B, "P_B")

    @property
    def pb(self):
        """Elements of P_B in ascending order; column j of xi is pb[j]."""
        return tuple(sorted(self.P_B.members))

    def xi_at(self, u, v):
        return self.xi[u][self.pb.index(v)]


def xi_from_fixed(X, pb, fixed):
    """Canonical xi table with the given fixed-point set."""
    return tuple(tuple(u if (u, v) in fixed else X.identity for v in pb)
                 for u in X.elements)


def fixed_point_set(act):
    pb = act.pb
    return frozenset((u, v) for u in act.X.elements for j, v in enumerate(pb)
                     if act.xi[u][j] == u)


@dataclass
class ActionReport:
    A1: Verdict
    A2: Verdict
    A3: Verdict
    A4: Verdict

    @property
    def ok(self):
        return all(v.ok for v in (self.A1, self.A2, self.A3, self.A4))

    def first_failure(self):
        for name in ("A1", "A2", "A3", "A4"):
            v = getattr(self, name)
            if not v:
                return name, v.witness
        return None


def check_axioms(X, B, P_X, P_B, rows, xi_fn, fixed, stop_early=False):
    """Axioms A1-A4 for ``xi_fn`` with fixed-point set ``fixed``.

    A4 is read as a joint existential: some ``v'`` in P_B with
    ``b + v = v' + b`` and some ``u'`` fixed with it, where
    ``x + b.u = u' + v'.x``.
    """
    Xt, Bt = X.table, B.table
    ex, eb = X.identity, B.identity
    pb = sorted(P_B.members)
    a1 = PASS
    for v in pb:
        if xi_fn(ex, v) != ex:
            a1 = Verdict(False, (v,))
            break
    a2 = PASS
    for x in sorted(P_X.members):
        if xi_fn(x, eb) != x:
            a2 = Verdict(False, (x,))
            break
    if stop_early and not (a1 and a2):
        return ActionReport(a1, a2, Verdict(False, None, "skipped"), Verdict(False, None, "skipped"))
    fx = sorted(fixed)
    a3 = PASS
    for (x, b) in fx:
        for (x2, b2) in fx:
            y = Xt[x][rows[b][x2]]
            if xi_fn(y, Bt[b][b2]) != y:
                a3 = Verdict(False, ((x, b), (x2, b2)))
                break
        if not a3:
            break
    if stop_early and not a3:
        return ActionReport(a1, a2, a3, Verdict(False, None, "skipped"))
    # v' candidates depend only on (b, v)
    vprime = {(b, v): [w for w in pb if Bt[b][v] == Bt[w][b]] for b in B.elements for v in pb}
    fixed_by_v = {}
    for (u2, w) in fx:
        fixed_by_v.setdefault(w, []).append(u2)
    a4 = PASS
    for (u, v) in fx:
        for x in X.elements:
            for b in B.elements:
                lhs = Xt[x][rows[b][u]]
                if not any(Xt[u2][rows[w][x]] == lhs
                           for w in vprime[(b, v)] for u2 in fixed_by_v.get(w, ())):
                    a4 = Verdict(False, (u, v, x, b))
                    break
            if not a4:
                break
        if not a4:
            break
    return ActionReport(a1, a2, a3, a4)


def validate_action(act):
    fixed = fixed_point_set(act)
    return check_axioms(act.X, act.B, act.P_X, act.P_B, act.phi.act, act.xi_at, fixed)


def canonicalize_xi(act):
    fixed = fixed_point_set(act)
    out = PreorderedAction(act.X, act.B, act.P_X, act.P_B, act.phi,
                           xi_from_fixed(act.X, act.pb, fixed))
    assert fixed_point_set(out) == fixed
    return out


def extract_action(cext):
    """Action of a coned extension: ``b.x = q(s(b)+k(x))`` and the canonical
    xi fixing ``(u, v)`` iff ``k(u) + s(v)`` is in P_A."""
    ext = cext.ext
    A, k, s = ext.A, ext.k.map, ext.s.map
    phi = action_from_ext(ext)
    pb = tuple(sorted(cext.P_B.members))
    fixed = frozenset((u, v) for u in ext.X.elements for v in pb
                      if A.table[k[u]][s[v]] in cext.P_A.members)
    act = PreorderedAction(ext.X, ext.B, cext.P_X, cext.P_B, phi,
                           xi_from_fixed(ext.X, pb, fixed))
    rep = validate_action(act)
    assert rep.ok, f"extracted action fails {rep.first_failure()}"
    return act


def build_extension(act):
    """Semidirect product with cone ``{(x, b) : b in P_B, xi(x, b) = x}``."""
    rep = validate_action(act)
    if not rep.ok:
        raise ActionInvalid(*rep.first_failure())
    ext = semidirect(act.X, act.B, act.phi)
    nb = act.B.size
    P_A = Submonoid(ext.A, frozenset(encode(u, v, nb) for u, v in fixed_point_set(act)))
    return ConedSplitExtension(ext, act.P_X, P_A, act.P_B)


G_extract = extract_action
H_build = build_extension


@dataclass
class RoundTripReport:
    checks: dict = field(default_factory=dict)
    beta: Optional[tuple] = None

    @property
    def ok(self):
        return all(v.ok for v in self.checks.values())


def roundtrip_HG(cext):
    """Compare ``cext`` with the extension rebuilt from its action via
    ``beta(x, b) = k(x) + s(b)``."""
    ext = cext.ext
    rebuilt = build_extension(extract_action(cext))
    e2 = rebuilt.ext
    nb = ext.B.size
    A, k, s, p = ext.A, ext.k.map, ext.s.map, ext.p.map
    beta = tuple(A.table[k[x]][s[b]] for x, b in (decode(i, nb) for i in e2.A.elements))
    checks = {}
    bad = hom_violation(e2.A, A, beta)
    checks["beta_hom"] = PASS if bad is None else Verdict(False, bad[0])
    checks["beta_bijective"] = (PASS if sorted(beta) == list(A.elements)
                                else Verdict(False, beta))
    checks["k_square"] = _first_mismatch(
        [(x, beta[e2.k.map[x]], k[x]) for x in ext.X.elements])
    checks["p_square"] = _first_mismatch(
        [(i, p[beta[i]], e2.p.map[i]) for i in e2.A.elements])
    checks["s_square"] = _first_mismatch(
        [(b, beta[e2.s.map[b]], s[b]) for b in ext.B.elements])
    checks["q_square"] = _first_mismatch(
        [(i, ext.q[beta[i]], e2.q[i]) for i in e2.A.elements])
    image = frozenset(beta[i] for i in rebuilt.P_A.members)
    checks["cone_bijection"] = (PASS if image == cext.P_A.members
                                and len(image) == len(rebuilt.P_A)
                                else Verdict(False, tuple(sorted(image ^ cext.P_A.members))))
    return RoundTripReport(checks, beta)


def _first_mismatch(triples):
    for w, lhs, rhs in triples:
        if lhs != rhs:
            return Verdict(False, (w,))
    return PASS


def roundtrip_GH(act):
    """Rebuild the action from its extension and compare with the canonical form."""
    back = extract_action(build_extension(act))
    canon = canonicalize_xi(act)
    checks = {
        "carriers": PASS if (back.X, back.B) == (act.X, act.B) else Verdict(False),
        "cones": PASS if (back.P_X, back.P_B) == (act.P_X, act.P_B) else Verdict(False),
        "phi": _first_mismatch(
            [((b, x), back.phi.act[b][x], act.phi.act[b][x])
             for b in act.B.elements for x in act.X.elements]),
        "fixed_points": (PASS if fixed_point_set(back) == fixed_point_set(act)
                         else Verdict(False, tuple(sorted(
                             fixed_point_set(back) ^ fixed_point_set(act))))),
        "xi_canonical": PASS if back.xi == canon.xi else Verdict(False),
    }
    return RoundTripReport(checks)


def _check_typed(h, dom, cod, name):
    if h.dom != dom or h.cod != cod:
        raise TypeMismatch(f"{name} has the wrong domain or codomain")


def check_ext_morphism(f0, f1, f2, src, dst):
    """Squares with k, p, s commute and each f restricts to the cones.

    Compatibility with q is not demanded.
    """
    e, d = src.ext, dst.ext
    _check_typed(f0, e.X, d.X, "f0")
    _check_typed(f1, e.A, d.A, "f1")
    _check_typed(f2, e.B, d.B, "f2")
    squares = (
        ("k", [(x, d.k.map[f0.map[x]], f1.map[e.k.map[x]]) for x in e.X.elements]),
        ("p", [(a, d.p.map[f1.map[a]], f2.map[e.p.map[a]]) for a in e.A.elements]),
        ("s", [(b, d.s.map[f2.map[b]], f1.map[e.s.map[b]]) for b in e.B.elements]),
    )
    for name, triples in squares:
        v = _first_mismatch(triples)
        if not v:
            return Verdict(False, v.witness, f"{name} square")
    for name, f, S, T in (("P_X", f0, src.P_X, dst.P_X), ("P_A", f1, src.P_A, dst.P_A),
                          ("P_B", f2, src.P_B, dst.P_B)):
        for a in sorted(S.members):
            if f.map[a] not in T.members:
                return Verdict(False, (a,), f"{name} restriction")
    return PASS


@dataclass
class ActionMorphismResult:
    verdict: Verdict
    g: Optional[dict] = None

    def __bool__(self):
        return self.verdict.ok


def check_action_morphism(f0, f2, src, dst):
    _check_typed(f0, src.X, dst.X, "f0")
    _check_typed(f2, src.B, dst.B, "f2")
    for name, f, S, T in (("P_X", f0, src.P_X, dst.P_X), ("P_B", f2, src.P_B, dst.P_B)):
        for a in sorted(S.members):
            if f.map[a] not in T.members:
                return ActionMorphismResult(Verdict(False, (a,), f"{name} restriction"))
    for b in src.B.elements:
        for x in src.X.elements:
            if f0.map[src.phi.act[b][x]] != dst.phi.act[f2.map[b]][f0.map[x]]:
                return ActionMorphismResult(Verdict(False, (b, x), "equivariance"))
    target = fixed_point_set(dst)
    g = {}
    for (u, v) in sorted(fixed_point_set(src)):
        img = (f0.map[u], f2.map[v])
        if img not in target:
            return ActionMorphismResult(Verdict(False, (u, v), "fixed points"))
        g[(u, v)] = img
    return ActionMorphismResult(PASS, g)


# -- the integer example: Z acting trivially on Z with a non-trivial xi -----

def zz_xi(u, v):
    return u if 0 <= u <= v else 0


def zz_demo(window):
    """Check the Z x Z example on ``|u|, |x| <= window``, ``0 <= v, b <= window``.

    Arithmetic is exact on Python integers; sums may leave the window.
    """
    if window < 1:
        raise ValueError("window must be at least 1")
    N = window
    X = range(-N, N + 1)
    PB = range(0, N + 1)
    Z = range(-N, N + 1)
    report = {"window": N}

    report["A1"] = all(zz_xi(0, b) == 0 for b in PB)
    report["A2"] = zz_xi(0, 0) == 0  # P_X = {0}
    fixed = [(u, v) for u in X for v in PB if zz_xi(u, v) == u]
    report["A3"] = all(zz_xi(x + x2, b + b2) == x + x2
                       for x, b in fixed for x2, b2 in fixed)
    # phi trivial and Z commutative, so u' = u, v' = v witnesses A4
    report["A4"] = all(
        b + v == v + b and x + u == u + x and zz_xi(u, v) == u
        for u, v in fixed for x in Z for b in Z)
    nonneg = [(u, v) for u in range(0, N + 1) for v in PB]
    neg = [(u, v) for u in range(-N, 0) for v in PB]
    report["fixed_points_match"] = all(
        (zz_xi(u, v) == u) == (0 <= u <= v) for u, v in nonneg + neg)
    report["nonnegative_pairs_checked"] = len(nonneg)
    report["negative_pairs_checked"] = len(neg)
    report["fixed_points_in_window"] = sum(1 for u, v in nonneg if zz_xi(u, v) == u)

    # the two presentations of the same extension
    def k2(x):
        return (x, -x)

    def p2(a):
        return a[0] + a[1]

    def s2(b):
        return (0, b)

    def add(a, c):
        return (a[0] + c[0], a[1] + c[1])

    def q(a):
        return a[0]

    grid = [(a1, a2) for a1 in Z for a2 in Z]
    report["S1_plus"] = all(add(k2(q(a)), s2(p2(a))) == a for a in grid)
    report["S2_plus"] = all(q(add(k2(x), s2(b))) == x for x in Z for b in Z)
    report["phi_trivial"] = all(q(add(s2(b), k2(x))) == x for x in Z for b in Z)
    report["S1_proj"] = all(add((a[0], 0), (0, a[1])) == a for a in grid)
    report["S2_proj"] = all(q(add((x, 0), (0, b))) == x for x in Z for b in Z)
    # beta(u, v) = k(u) + s(v) carries the fixed points onto N x N
    beta_img = {add(k2(u), s2(v)) for u, v in fixed if v <= N}
    nn = {(a, b) for a in range(0, N + 1) for b in range(0, N + 1) if a + b <= N}
    report["cone_is_NxN"] = beta_img == nn
    report["ok"] = all(report[key] for key in (
        "A1", "A2", "A3", "A4", "fixed_points_match", "S1_plus", "S2_plus",
        "phi_trivial", "S1_proj", "S2_proj", "cone_is_NxN"))
    return report
