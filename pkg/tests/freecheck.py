"""Independent search for monotone partial homs on a free fragment.

A partial hom ``g`` on the words of length <= d sends the empty word to the
identity and satisfies ``g(u v) = g(u) + g(v)`` whenever ``|u| + |v| <= d``.
``fragment_homs`` finds every such monotone ``g`` with ``g([x]) = f(x)`` by
plain backtracking over all target values, word by word, so uniqueness of the
free extension is checked by search rather than assumed.
"""


def _leq_words(R, u, v):
    return len(u) == len(v) and all(R.leq(a, b) for a, b in zip(u, v))


def fragment_homs(X, depth, target, f, limit=2):
    words = [()]
    frontier = [()]
    for _ in range(depth):
        frontier = [w + (x,) for w in frontier for x in range(X.size)]
        words += frontier
    M, R, T = target.monoid, target.order, X.order
    g = {}
    by_len = [[] for _ in range(depth + 1)]
    found = []

    def ok(w, val):
        if len(w) == 0 and val != M.identity:
            return False
        if len(w) == 1 and val != f[w[0]]:
            return False
        for i in range(1, len(w)):
            u, v = w[:i], w[i:]
            if u in g and v in g and M.table[g[u]][g[v]] != val:
                return False
        for u in by_len[len(w)]:
            gu = g[u]
            if _leq_words(T, u, w) and not R.leq(gu, val):
                return False
            if _leq_words(T, w, u) and not R.leq(val, gu):
                return False
        return True

    def go(i):
        if len(found) >= limit:
            return
        if i == len(words):
            found.append(dict(g))
            return
        w = words[i]
        for val in M.elements:
            if ok(w, val):
                g[w] = val
                by_len[len(w)].append(w)
                go(i + 1)
                by_len[len(w)].pop()
                del g[w]

    go(0)
    return found
