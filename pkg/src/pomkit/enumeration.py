"""Exhaustive generators of small instances.

Every stream is duplicate-free and deterministic:

* monoids: identity at 0, lexicographic in the row-major table;
* preorders: ascending in the tuple of row bitmasks;
* submonoids: ascending in the member bitmask;
* homs: lexicographic in the map tuple;
* actions: phi in hom order, then fixed-point sets ascending in their bitmask
  over the pairs ``(u, v)`` listed lexicographically.

Counts are raw; nothing is reduced up to isomorphism.
"""
from . import kernels
from .actions import PreorderedAction, check_axioms, xi_from_fixed
from .core import (
    FiniteMonoid,
    Submonoid,
    endomorphism_monoid,
    is_closed,
    iter_homs,
    members_of,
)
from .errors import SizeGuardExceeded
from .pom import is_left_normal, is_normal, is_right_normal
from .relations import Preorder, is_compatible
from .schreier import ActionTable

MONOID_GUARD = 4
PREORDER_GUARD = 5
SUBMONOID_GUARD = 6
HOM_GUARD = 10 ** 6
ACTION_GUARD = 3


def enumerate_monoids(n):
    if n > MONOID_GUARD:
        raise SizeGuardExceeded("enumerate_monoids", n, MONOID_GUARD)
    if n < 1:
        return
    for flat in kernels.enum_monoid_tables(n):
        yield FiniteMonoid(n, 0, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def enumerate_preorders(n):
    if n > PREORDER_GUARD:
        raise SizeGuardExceeded("enumerate_preorders", n, PREORDER_GUARD)
    for rows in kernels.enum_preorders(n):
        yield Preorder(n, rows)


def enumerate_compatible_preorders(M):
    if M.size > PREORDER_GUARD:
        raise SizeGuardExceeded("enumerate_compatible_preorders", M.size, PREORDER_GUARD)
    for R in enumerate_preorders(M.size):
        if is_compatible(M, R):
            yield R


_FILTERS = {
    "none": None,
    "right_normal": is_right_normal,
    "left_normal": is_left_normal,
    "normal": is_normal,
}


def enumerate_submonoids(M, filter="none"):
    if M.size > SUBMONOID_GUARD:
        raise SizeGuardExceeded("enumerate_submonoids", M.size, SUBMONOID_GUARD)
    pred = _FILTERS[filter]
    e_bit = 1 << M.identity
    for mask in range(1 << M.size):
        if not mask & e_bit:
            continue
        members = members_of(mask)
        if not is_closed(M, set(members)):
            continue
        S = Submonoid(M, frozenset(members))
        if pred is None or pred(M, S):
            yield S


def enumerate_homs(M, N):
    if N.size ** M.size > HOM_GUARD:
        raise SizeGuardExceeded("enumerate_homs", N.size ** M.size, HOM_GUARD)
    yield from iter_homs(M, N)


def enumerate_actions(X, B, P_X, P_B):
    """All canonical preordered actions of (B, P_B) on (X, P_X)."""
    for M in (X, B):
        if M.size > ACTION_GUARD:
            raise SizeGuardExceeded("enumerate_actions", M.size, ACTION_GUARD)
    End, maps = endomorphism_monoid(X)
    pb = tuple(sorted(P_B.members))
    ex = X.identity
    # (e, v) is always fixed by a canonical xi
    free_pairs = [(u, v) for u in X.elements if u != ex for v in pb]
    base = frozenset((ex, v) for v in pb)
    for h in enumerate_homs(B, End):
        phi = ActionTable(X, B, tuple(maps[h.map[b]] for b in B.elements))
        rows = phi.act
        for mask in range(1 << len(free_pairs)):
            fixed = base | {free_pairs[i] for i in members_of(mask)}

            def xi_fn(u, v, fixed=fixed):
                return u if (u, v) in fixed else ex

            rep = check_axioms(X, B, P_X, P_B, rows, xi_fn, fixed, stop_early=True)
            if rep.ok:
                yield PreorderedAction(X, B, P_X, P_B, phi, xi_from_fixed(X, pb, fixed))
