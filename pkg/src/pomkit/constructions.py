"""Free preordered monoids on a preordered set, discrete/total lifts, and
coequalizers of preordered monoids.

The free object is infinite, so it is materialized as a fragment of all words
up to a fixed length.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .core import coequalizer_mon
from .errors import NotMonotone, SizeGuardExceeded, TypeMismatch
from .pom import PreorderedMonoid
from .relations import Preorder, discrete, image_preorder_closure, is_monotone, total

WORD_GUARD = 10 ** 5


@dataclass(frozen=True)
class PreorderedSet:
    order: Preorder

    @property
    def size(self):
        return self.order.size


@dataclass(frozen=True)
class FreeFragment:
    """Words of length <= depth over ``base``, ordered componentwise.

    Words are tuples of letters.  Two words compare only when they have the
    same length.
    """

    base: PreorderedSet
    depth: int
    words: tuple

    @cached_property
    def index(self):
        return {w: i for i, w in enumerate(self.words)}

    def leq(self, u, v):
        R = self.base.order
        return len(u) == len(v) and all(R.leq(x, y) for x, y in zip(u, v))

    def concat(self, u, v):
        """Concatenation, or None when it leaves the fragment."""
        return u + v if len(u) + len(v) <= self.depth else None

    @cached_property
    def order(self):
        rows = []
        for u in self.words:
            r = 0
            for j, v in enumerate(self.words):
                if self.leq(u, v):
                    r |= 1 << j
            rows.append(r)
        return Preorder(len(self.words), tuple(rows))

    @property
    def identity(self):
        return ()


def free_fragment(X, depth):
    if depth < 0:
        raise ValueError("depth must be non-negative")
    n = X.size
    count = sum(n ** k for k in range(depth + 1))
    if count > WORD_GUARD:
        raise SizeGuardExceeded("free_fragment", count, WORD_GUARD)
    words = tuple(w for k in range(depth + 1) for w in product(range(n), repeat=k))
    return FreeFragment(X, depth, words)


def universal_extend(X, target, f, w):
    """Image of the word ``w`` under the monoid extension of ``f``."""
    v = is_monotone(f, X.order, target.order)
    if not v:
        raise NotMonotone(v.witness)
    return target.monoid.sum(f[x] for x in w)


def lift_discrete(M):
    return PreorderedMonoid(M, discrete(M.size))


def lift_total(M):
    return PreorderedMonoid(M, total(M.size))


def coequalizer_ordmon(f, g, src, dst):
    """Coequalizer of monotone homs ``f, g: src -> dst``.

    The carrier is the monoid coequalizer; the order is the closure of the
    image of ``dst``'s order.
    """
    for h in (f, g):
        if h.dom != src.monoid or h.cod != dst.monoid:
            raise TypeMismatch("hom endpoints differ from the given preordered monoids")
        v = is_monotone(h.map, src.order, dst.order)
        if not v:
            raise NotMonotone(v.witness)
    C, q = coequalizer_mon(f, g)
    order = image_preorder_closure(dst.order, q.map, C.size)
    return PreorderedMonoid(C, order), q
