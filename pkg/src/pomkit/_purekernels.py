"""Pure-Python implementations of the hot loops.

Conventions shared with the compiled ``_ckernels`` module:

* a Cayley table is passed flat, ``table[a * n + b] == a + b``;
* a relation is a list of row bitmasks, bit ``b`` of ``rows[a]`` meaning
  ``a <= b``;
* witnesses are lexicographically least and returned as tuples, ``None`` when
  the property holds.
"""

BACKEND = "python"


def closure(rows, n):
    """Reflexive-transitive closure (Warshall on bit rows)."""
    r = [rows[i] | (1 << i) for i in range(n)]
    for k in range(n):
        bit = 1 << k
        rk = r[k]
        for i in range(n):
            if r[i] & bit:
                r[i] |= rk
    return r


def assoc_violation(table, n):
    for a in range(n):
        for b in range(n):
            ab = table[a * n + b]
            for c in range(n):
                if table[ab * n + c] != table[a * n + table[b * n + c]]:
                    return (a, b, c)
    return None


def compat_violation(table, rows, n):
    """Least (a, b, c, d) with a<=b, c<=d and not a+c <= b+d."""
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            if not (ra >> b) & 1:
                continue
            for c in range(n):
                rc = rows[c]
                ac = table[a * n + c]
                row_ac = rows[ac]
                for d in range(n):
                    if (rc >> d) & 1 and not (row_ac >> table[b * n + d]) & 1:
                        return (a, b, c, d)
    return None


def coset_masks(table, n, members, side):
    """Bitmask of S+a (side 0) or a+S (side 1) for every a."""
    elems = [x for x in range(n) if (members >> x) & 1]
    out = []
    for a in range(n):
        m = 0
        if side == 0:
            for x in elems:
                m |= 1 << table[x * n + a]
        else:
            for x in elems:
                m |= 1 << table[a * n + x]
        out.append(m)
    return out


def enum_monoid_tables(n):
    """Associative tables with identity 0, lexicographic in row-major order."""
    if n < 1:
        return []
    t = [-1] * (n * n)
    for a in range(n):
        t[a] = a
        t[a * n] = a
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    out = []

    def consistent():
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

    def go(k):
        if k == len(cells):
            out.append(tuple(t))
            return
        i, j = cells[k]
        for v in range(n):
            t[i * n + j] = v
            if consistent():
                go(k + 1)
        t[i * n + j] = -1

    go(0)
    return out


def enum_preorders(n):
    """All preorders as row-mask tuples, ascending in the row tuple order."""
    full = (1 << n) - 1
    rows = [0] * n
    out = []

    def go(i):
        if i == n:
            out.append(tuple(rows))
            return
        own = 1 << i
        for m in range(full + 1):
            if not m & own:
                continue
            rows[i] = m
            ok = True
            # rel(a, b) with both rows fixed forces rows[b] subset of rows[a]
            for a in range(i + 1):
                ra = rows[a]
                for b in range(i + 1):
                    if (ra >> b) & 1 and rows[b] & ~ra:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                go(i + 1)
        rows[i] = 0

    go(0)
    return out
