"""Preordered monoids and their positive cones.

The induced preorder is always read on the right: ``a <=_S b`` iff
``b in S + a``.  The left version ``b in a + S`` is exposed separately.
"""
from dataclasses import dataclass, field
from functools import cached_property

from . import kernels
from .core import PASS, Submonoid, Verdict, identity_hom, is_commutative, iter_homs, members_of
from .errors import ConeNotRightNormal, IncompatiblePreorder, NotMonotone, SizeMismatch
from .relations import Preorder, is_compatible, is_contained, is_monotone

RIGHT, LEFT = 0, 1


@dataclass(frozen=True)
class PreorderedMonoid:
    monoid: object
    order: Preorder

    def __post_init__(self):
        if self.monoid.size != self.order.size:
            raise SizeMismatch(self.monoid.size, self.order.size)
        v = is_compatible(self.monoid, self.order)
        if not v:
            raise IncompatiblePreorder(v.witness)

    @cached_property
    def cone(self):
        return positive_cone(self)

    @property
    def size(self):
        return self.monoid.size


def positive_cone(pm):
    M = pm.monoid
    up = frozenset(members_of(pm.order.rows[M.identity]))
    # closedness is a theorem; Submonoid re-checks it
    return Submonoid(M, up)


def _induced(M, S, side):
    masks = kernels.coset_masks(M.flat, M.size, S.mask, side)
    return Preorder(M.size, tuple(masks))


def induced_right(M, S):
    """``a <= b`` iff ``b in S + a``."""
    return _induced(M, S, RIGHT)


def induced_left(M, S):
    """``a <= b`` iff ``b in a + S``."""
    return _induced(M, S, LEFT)


def _normal_check(M, S, side):
    right = kernels.coset_masks(M.flat, M.size, S.mask, RIGHT)
    left = kernels.coset_masks(M.flat, M.size, S.mask, LEFT)
    for a in M.elements:
        small, big = (left[a], right[a]) if side == RIGHT else (right[a], left[a])
        extra = small & ~big
        if extra:
            return Verdict(False, (a, members_of(extra)[0]))
    return PASS


def is_right_normal(M, S):
    """``a + S`` contained in ``S + a`` for every a.  Witness ``(a, x)``."""
    return _normal_check(M, S, RIGHT)


def is_left_normal(M, S):
    return _normal_check(M, S, LEFT)


def is_normal(M, S):
    v = is_right_normal(M, S)
    return v if not v else is_left_normal(M, S)


def greens_l_preorder(M, S):
    """``a <=_L b`` iff ``S + a`` is contained in ``S + b``."""
    right = kernels.coset_masks(M.flat, M.size, S.mask, RIGHT)
    return Preorder(M.size, tuple(
        sum(1 << b for b in M.elements if right[a] & ~right[b] == 0) for a in M.elements))


def greens_r_preorder(M, S):
    """``a <=_R b`` iff ``a + S`` is contained in ``b + S``."""
    left = kernels.coset_masks(M.flat, M.size, S.mask, LEFT)
    return Preorder(M.size, tuple(
        sum(1 << b for b in M.elements if left[a] & ~left[b] == 0) for a in M.elements))


def coset_table(M, S):
    """Rows ``(a, a+S, S+a)`` as sorted tuples."""
    right = kernels.coset_masks(M.flat, M.size, S.mask, RIGHT)
    left = kernels.coset_masks(M.flat, M.size, S.mask, LEFT)
    return [(a, tuple(members_of(left[a])), tuple(members_of(right[a]))) for a in M.elements]


@dataclass
class ClassificationReport:
    compatible: bool
    cone: tuple
    induced_right: Preorder
    induced_left: Preorder
    in_ordmon_star: bool
    cone_right_normal: bool
    cone_left_normal: bool
    induced_right_compatible: bool
    induced_left_compatible: bool
    commutative: bool
    witnesses: dict = field(default_factory=dict)


def _first_difference(R1, R2):
    v = is_contained(R1, R2)
    if not v:
        return v.witness
    v = is_contained(R2, R1)
    return None if v else v.witness


def classify(pm):
    M, R = pm.monoid, pm.order
    P = pm.cone
    ir, il = induced_right(M, P), induced_left(M, P)
    rn, ln = is_right_normal(M, P), is_left_normal(M, P)
    rc, lc = is_compatible(M, ir), is_compatible(M, il)
    comm = is_commutative(M)
    witnesses = {}
    diff = _first_difference(R, ir)
    if diff is not None:
        # induced order always sits inside the order, so this pair is in <= only
        witnesses["in_ordmon_star"] = {"a": diff[0], "b": diff[1]}
    if not rn:
        witnesses["cone_right_normal"] = {"a": rn.witness[0], "missing": rn.witness[1]}
    if not ln:
        witnesses["cone_left_normal"] = {"a": ln.witness[0], "missing": ln.witness[1]}
    for key, v in (("induced_right_compatible", rc), ("induced_left_compatible", lc)):
        if not v:
            witnesses[key] = dict(zip("abcd", v.witness))
    if not comm:
        a, b = next((a, b) for a in M.elements for b in M.elements
                    if M.table[a][b] != M.table[b][a])
        witnesses["commutative"] = {"a": a, "b": b}
    report = ClassificationReport(
        compatible=True,
        cone=tuple(sorted(P.members)),
        induced_right=ir,
        induced_left=il,
        in_ordmon_star=diff is None,
        cone_right_normal=rn.ok,
        cone_left_normal=ln.ok,
        induced_right_compatible=rc.ok,
        induced_left_compatible=lc.ok,
        commutative=comm,
        witnesses=witnesses,
    )
    assert (not report.cone_right_normal) or report.induced_right_compatible
    return report


def in_ordmon_star(pm):
    return pm.order == induced_right(pm.monoid, pm.cone)


def coreflect(pm):
    """``(A, <=_P)`` with the identity-carried arrow into ``(A, <=)``."""
    M = pm.monoid
    v = is_right_normal(M, pm.cone)
    if not v:
        raise ConeNotRightNormal(*v.witness)
    star = PreorderedMonoid(M, induced_right(M, pm.cone))
    assert in_ordmon_star(star)
    return star, identity_hom(M)


def check_coreflection_universal(pm, src, f):
    """Check that a monotone hom ``f: src -> pm`` from an OrdMon* object
    factors, uniquely and monotonically, through the coreflection of ``pm``.
    """
    if f.dom != src.monoid or f.cod != pm.monoid:
        raise SizeMismatch(f.dom.size, src.monoid.size)
    if not in_ordmon_star(src):
        return Verdict(False, None, "source is not in OrdMon*")
    v = is_monotone(f.map, src.order, pm.order)
    if not v:
        raise NotMonotone(v.witness)
    star, c = coreflect(pm)
    candidates = [g for g in iter_homs(src.monoid, star.monoid)
                  if tuple(c.map[x] for x in g.map) == f.map]
    if len(candidates) != 1:
        return Verdict(False, None, "no unique factorization")
    w = is_monotone(candidates[0].map, src.order, star.order)
    if not w:
        return Verdict(False, w.witness, "factor not monotone into (A, <=_P)")
    return PASS
