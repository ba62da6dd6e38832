"""Backend selection for the hot loops.

The compiled extension ``pomkit._ckernels`` is used when it imports and the
input fits its 64-element cap; otherwise the pure-Python twin runs.  Setting
``POMKIT_PURE_PYTHON=1`` forces the fallback for the whole process.
"""
import os

from . import _purekernels as pure

try:
    if os.environ.get("POMKIT_PURE_PYTHON"):
        raise ImportError("pure python forced")
    from . import _ckernels as compiled
except ImportError:
    compiled = None

BACKEND = compiled.BACKEND if compiled is not None else pure.BACKEND
_CAP = 64


def _pick(n):
    if compiled is not None and n <= _CAP:
        return compiled
    return pure


def closure(rows, n):
    return _pick(n).closure(rows, n)


def assoc_violation(table, n):
    return _pick(n).assoc_violation(table, n)


def compat_violation(table, rows, n):
    return _pick(n).compat_violation(table, rows, n)


def coset_masks(table, n, members, side):
    return _pick(n).coset_masks(table, n, members, side)


def enum_monoid_tables(n):
    return _pick(n).enum_monoid_tables(n)


def enum_preorders(n):
    return _pick(n).enum_preorders(n)
