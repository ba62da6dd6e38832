# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in ``_purekernels``.

Same signatures, same results, same witness order.  Sizes are capped at 64 so
a relation row fits one ``uint64``; callers dispatch larger inputs to the
pure-Python module.
"""
from libc.stdint cimport uint64_t

BACKEND = "cython"
MAX_N = 64

DEF CAP = 64


cdef inline bint _bit(uint64_t row, int b):
    return (row >> b) & 1


def closure(rows, int n):
    cdef uint64_t r[CAP]
    cdef uint64_t rk, bit
    cdef int i, k
    for i in range(n):
        r[i] = <uint64_t>rows[i] | ((<uint64_t>1) << i)
    for k in range(n):
        bit = (<uint64_t>1) << k
        rk = r[k]
        for i in range(n):
            if r[i] & bit:
                r[i] |= rk
    return [r[i] for i in range(n)]


cdef void _load_table(table, int n, int* t):
    cdef int i
    for i in range(n * n):
        t[i] = table[i]


def assoc_violation(table, int n):
    cdef int t[CAP * CAP]
    cdef int a, b, c, ab
    _load_table(table, n, t)
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            for c in range(n):
                if t[ab * n + c] != t[a * n + t[b * n + c]]:
                    return (a, b, c)
    return None


def compat_violation(table, rows, int n):
    cdef int t[CAP * CAP]
    cdef uint64_t r[CAP]
    cdef int a, b, c, d, ac
    cdef uint64_t row_ac
    _load_table(table, n, t)
    for a in range(n):
        r[a] = <uint64_t>rows[a]
    for a in range(n):
        for b in range(n):
            if not _bit(r[a], b):
                continue
            for c in range(n):
                ac = t[a * n + c]
                row_ac = r[ac]
                for d in range(n):
                    if _bit(r[c], d) and not _bit(row_ac, t[b * n + d]):
                        return (a, b, c, d)
    return None


def coset_masks(table, int n, members, int side):
    cdef int t[CAP * CAP]
    cdef uint64_t mem = <uint64_t>members
    cdef uint64_t m
    cdef int a, x
    _load_table(table, n, t)
    out = []
    for a in range(n):
        m = 0
        for x in range(n):
            if not _bit(mem, x):
                continue
            if side == 0:
                m |= (<uint64_t>1) << t[x * n + a]
            else:
                m |= (<uint64_t>1) << t[a * n + x]
        out.append(m)
    return out


cdef bint _consistent(int* t, int n):
    cdef int a, b, c, ab, bc, lhs, rhs
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            if ab < 0:
                continue
            for c in range(n):
                bc = t[b * n + c]
                if bc < 0:
                    continue
                lhs = t[ab * n + c]
                rhs = t[a * n + bc]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
    return True


def enum_monoid_tables(int n):
    cdef int t[CAP * CAP]
    cdef int ci[CAP * CAP]
    cdef int cj[CAP * CAP]
    cdef int ncells = 0
    cdef int a, i, j, k, v
    if n < 1:
        return []
    for a in range(n * n):
        t[a] = -1
    for a in range(n):
        t[a] = a
        t[a * n] = a
    for i in range(1, n):
        for j in range(1, n):
            ci[ncells] = i
            cj[ncells] = j
            ncells += 1
    out = []
    if ncells == 0:
        out.append(tuple([t[a] for a in range(n * n)]))
        return out
    # iterative backtracking; t[cell] holds the value under trial
    k = 0
    while k >= 0:
        i = ci[k]
        j = cj[k]
        v = t[i * n + j] + 1
        t[i * n + j] = -1
        while v < n:
            t[i * n + j] = v
            if _consistent(t, n):
                break
            v += 1
        if v >= n:
            t[i * n + j] = -1
            k -= 1
            continue
        if k == ncells - 1:
            out.append(tuple([t[a] for a in range(n * n)]))
        else:
            k += 1
    return out


def enum_preorders(int n):
    cdef uint64_t rows[CAP]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t m, own, ra
    cdef int i, a, b
    cdef bint ok
    if n == 0:
        return [()]
    out = []
    for i in range(n):
        rows[i] = 0
    i = 0
    while i >= 0:
        own = (<uint64_t>1) << i
        # resume after the current mask of row i (0 means fresh)
        m = rows[i] + 1 if rows[i] else 0
        found = False
        while m <= full:
            if m & own:
                rows[i] = m
                ok = True
                for a in range(i + 1):
                    ra = rows[a]
                    for b in range(i + 1):
                        if _bit(ra, b) and (rows[b] & ~ra):
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    found = True
                    break
            m += 1
        if not found:
            rows[i] = 0
            i -= 1
            continue
        if i == n - 1:
            out.append(tuple([rows[a] for a in range(n)]))
        else:
            i += 1
    return out
