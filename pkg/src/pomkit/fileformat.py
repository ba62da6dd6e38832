"""The plain-text algebra format.

A document is a sequence of named blocks::

    monoid A                      pom P
    size 3                        use A
    identity 0                    preorder edges
    table                         0 1
    0 1 2                         1 2
    1 1 1                         end
    2 1 1
    end

Block kinds and their body lines:

``monoid``     ``size n``, ``identity e``, ``table`` + n rows of n indices.
``pom``        ``use <monoid>``, then ``preorder edges`` + lines ``a b``
               (a <= b; the reflexive-transitive closure is taken) or
               ``preorder matrix`` + n rows of 0/1 (must already be closed).
``poset``      ``size n``, ``edges`` + lines ``a b``.
``hom``        ``from <name> to <name>``, ``map`` + one row.
``extension``  ``x <m> a <m> b <m>``, ``k <hom> p <hom> s <hom>``,
               optional ``q`` + one row, ``cones`` then ``px``/``pa``/``pb``
               element lists.
``action``     ``x <m> b <m>``, ``px`` and ``pb`` element lists, ``phi`` + |B|
               rows of |X| entries (row b is ``b.x``), ``xi`` + |X| rows over
               the P_B elements in ascending order.

Every block closes with ``end``; ``#`` starts a comment.  Pairs in a
semidirect carrier are encoded as ``x * |B| + b``.
"""
from dataclasses import dataclass, field

from .actions import ConedSplitExtension, PreorderedAction
from .constructions import PreorderedSet
from .core import FiniteMonoid, MonoidHom, Submonoid
from .errors import FormatSyntaxError, PomError, UnknownReference, ValidationError
from .pom import PreorderedMonoid
from .relations import Preorder, closure_from_edges
from .schreier import ActionTable, SplitExtension

KINDS = ("monoid", "pom", "poset", "hom", "extension", "action")
PAIR_ENCODING_NOTE = "# pair encoding for semidirect carriers: index = x * |B| + b"


@dataclass
class Block:
    kind: str
    name: str
    obj: object
    refs: dict = field(default_factory=dict)


@dataclass
class Document:
    blocks: dict = field(default_factory=dict)
    # names of examples that have no finite block (run through a demo)
    demos: dict = field(default_factory=dict)

    def __getitem__(self, name):
        return self.blocks[name].obj

    def __contains__(self, name):
        return name in self.blocks

    def kind(self, name):
        return self.blocks[name].kind

    def names(self, kind=None):
        return [n for n, b in self.blocks.items() if kind is None or b.kind == kind]

    def monoid(self, name):
        """The underlying monoid of a monoid or pom block."""
        b = self.blocks[name]
        if b.kind == "monoid":
            return b.obj
        if b.kind == "pom":
            return b.obj.monoid
        raise KeyError(f"{name!r} is a {b.kind}, not a monoid")

    def add(self, block):
        if block.name in self.blocks:
            raise ValueError(f"duplicate block name {block.name!r}")
        self.blocks[block.name] = block

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return ([(b.kind, n, b.obj, b.refs) for n, b in self.blocks.items()]
                == [(b.kind, n, b.obj, b.refs) for n, b in other.blocks.items()])


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatSyntaxError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


class _Body:
    """Cursor over the (lineno, tokens) lines of one block."""

    def __init__(self, lines, start):
        self.lines = lines
        self.pos = 0
        self.start = start

    def done(self):
        return self.pos >= len(self.lines)

    def peek(self):
        return self.lines[self.pos] if not self.done() else (self.start, [])

    def next(self, what):
        if self.done():
            raise FormatSyntaxError(self.start, f"block ended while reading {what}")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def keyword(self, *words):
        lineno, toks = self.next(" ".join(words))
        if toks[:len(words)] != list(words):
            raise FormatSyntaxError(lineno, f"expected {' '.join(words)!r}, got {' '.join(toks)!r}")
        return lineno, toks[len(words):]

    def rows(self, count, what):
        return [_ints(self.next(what)[1], self.lines[self.pos - 1][0]) for _ in range(count)]

    def rest(self):
        out = self.lines[self.pos:]
        self.pos = len(self.lines)
        return out

    def finish(self):
        if not self.done():
            lineno, toks = self.lines[self.pos]
            raise FormatSyntaxError(lineno, f"unexpected {' '.join(toks)!r}")


def _one_int(body, word):
    lineno, rest = body.keyword(word)
    vals = _ints(rest, lineno)
    if len(vals) != 1:
        raise FormatSyntaxError(lineno, f"{word} takes one integer")
    return vals[0]


def _row_after(body, word):
    """Row given inline after ``word`` or on the next line."""
    lineno, rest = body.keyword(word)
    if rest:
        return _ints(rest, lineno)
    lineno, toks = body.next(f"{word} row")
    return _ints(toks, lineno)


def _ref(doc, name, lineno, kinds):
    if name not in doc.blocks or doc.blocks[name].kind not in kinds:
        raise UnknownReference(name, lineno)
    return doc.blocks[name]


def _edges(body):
    edges = []
    for ln, toks in body.rest():
        e = _ints(toks, ln)
        if len(e) != 2:
            raise FormatSyntaxError(ln, "edge lines hold two indices")
        edges.append(tuple(e))
    return edges


def _parse_monoid(doc, name, body):
    n = _one_int(body, "size")
    e = _one_int(body, "identity")
    body.keyword("table")
    table = body.rows(n, "table row")
    body.finish()
    return Block("monoid", name, FiniteMonoid(n, e, tuple(map(tuple, table))))


def _parse_pom(doc, name, body):
    lineno, rest = body.keyword("use")
    if len(rest) != 1:
        raise FormatSyntaxError(lineno, "use takes one name")
    use = _ref(doc, rest[0], lineno, ("monoid",)).name
    M = doc.monoid(use)
    lineno, rest = body.keyword("preorder")
    if rest == ["edges"]:
        R = closure_from_edges(M.size, _edges(body))
    elif rest == ["matrix"]:
        R = Preorder.from_matrix(body.rows(M.size, "matrix row"))
        body.finish()
    else:
        raise FormatSyntaxError(lineno, "expected 'preorder edges' or 'preorder matrix'")
    return Block("pom", name, PreorderedMonoid(M, R), {"use": use})


def _parse_poset(doc, name, body):
    n = _one_int(body, "size")
    body.keyword("edges")
    return Block("poset", name, PreorderedSet(closure_from_edges(n, _edges(body))))


def _parse_hom(doc, name, body):
    lineno, toks = body.next("from/to")
    if len(toks) != 4 or toks[0] != "from" or toks[2] != "to":
        raise FormatSyntaxError(lineno, "expected 'from <name> to <name>'")
    src = _ref(doc, toks[1], lineno, ("monoid", "pom"))
    dst = _ref(doc, toks[3], lineno, ("monoid", "pom"))
    mp = _row_after(body, "map")
    body.finish()
    h = MonoidHom(doc.monoid(src.name), doc.monoid(dst.name), tuple(mp))
    return Block("hom", name, h, {"from": src.name, "to": dst.name})


def _named_triple(body, keys):
    lineno, toks = body.next(" ".join(keys))
    if len(toks) != 2 * len(keys) or toks[0::2] != list(keys):
        raise FormatSyntaxError(lineno, f"expected '{' <name> '.join(keys)} <name>'")
    return lineno, dict(zip(keys, toks[1::2]))


def _parse_extension(doc, name, body):
    ln, mons = _named_triple(body, ("x", "a", "b"))
    for v in mons.values():
        _ref(doc, v, ln, ("monoid", "pom"))
    X, A, B = (doc.monoid(mons[k]) for k in ("x", "a", "b"))
    ln, homs = _named_triple(body, ("k", "p", "s"))
    for v in homs.values():
        _ref(doc, v, ln, ("hom",))
    k, p, s = (doc[homs[key]] for key in ("k", "p", "s"))
    q = None
    if body.peek()[1][:1] == ["q"]:
        q = tuple(_row_after(body, "q"))
    body.keyword("cones")
    cones = {}
    for key in ("px", "pa", "pb"):
        lineno, rest = body.keyword(key)
        cones[key] = frozenset(_ints(rest, lineno))
    body.finish()
    ext = SplitExtension(X, A, B, k, p, s, q)
    cext = ConedSplitExtension(ext, Submonoid(X, cones["px"]), Submonoid(A, cones["pa"]),
                               Submonoid(B, cones["pb"]))
    return Block("extension", name, cext, {**mons, **homs})


def _parse_action(doc, name, body):
    lineno, toks = body.next("x/b")
    if len(toks) != 4 or toks[0] != "x" or toks[2] != "b":
        raise FormatSyntaxError(lineno, "expected 'x <name> b <name>'")
    for v in (toks[1], toks[3]):
        _ref(doc, v, lineno, ("monoid", "pom"))
    X, B = doc.monoid(toks[1]), doc.monoid(toks[3])
    ln, rest = body.keyword("px")
    px = frozenset(_ints(rest, ln))
    ln, rest = body.keyword("pb")
    pb = frozenset(_ints(rest, ln))
    body.keyword("phi")
    phi = body.rows(B.size, "phi row")
    body.keyword("xi")
    xi = body.rows(X.size, "xi row")
    body.finish()
    act = PreorderedAction(X, B, Submonoid(X, px), Submonoid(B, pb),
                           ActionTable(X, B, tuple(map(tuple, phi))), tuple(map(tuple, xi)))
    return Block("action", name, act, {"x": toks[1], "b": toks[3]})


_PARSERS = {
    "monoid": _parse_monoid,
    "pom": _parse_pom,
    "poset": _parse_poset,
    "hom": _parse_hom,
    "extension": _parse_extension,
    "action": _parse_action,
}


def parse(text):
    doc = Document()
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        if current is None:
            if len(toks) != 2 or toks[0] not in KINDS:
                raise FormatSyntaxError(lineno, f"expected '<kind> <name>', got {raw.strip()!r}")
            if toks[1] in doc.blocks:
                raise FormatSyntaxError(lineno, f"duplicate block name {toks[1]!r}")
            current = (toks[0], toks[1], lineno, [])
            continue
        if toks == ["end"]:
            kind, name, start, lines = current
            body = _Body(lines, start)
            try:
                block = _PARSERS[kind](doc, name, body)
            except (FormatSyntaxError, UnknownReference):
                raise
            except PomError as exc:
                raise ValidationError(name, exc) from exc
            except ValueError as exc:
                raise ValidationError(name, exc) from exc
            doc.add(block)
            current = None
            continue
        current[3].append((lineno, toks))
    if current is not None:
        raise FormatSyntaxError(current[2], f"block {current[1]!r} is missing 'end'")
    return doc


def _row(vals):
    return " ".join(str(v) for v in vals)


def serialize_block(block):
    kind, name, obj, refs = block.kind, block.name, block.obj, block.refs
    out = [f"{kind} {name}"]
    if kind == "monoid":
        out += [f"size {obj.size}", f"identity {obj.identity}", "table"]
        out += [_row(r) for r in obj.table]
    elif kind == "pom":
        out += [f"use {refs['use']}", "preorder edges"]
        out += [f"{a} {b}" for a, b in obj.order.edges()]
    elif kind == "poset":
        out += [f"size {obj.size}", "edges"]
        out += [f"{a} {b}" for a, b in obj.order.edges()]
    elif kind == "hom":
        out += [f"from {refs['from']} to {refs['to']}", "map", _row(obj.map)]
    elif kind == "extension":
        out += [f"x {refs['x']} a {refs['a']} b {refs['b']}",
                f"k {refs['k']} p {refs['p']} s {refs['s']}",
                "q", _row(obj.ext.q), "cones",
                "px " + _row(sorted(obj.P_X.members)),
                "pa " + _row(sorted(obj.P_A.members)),
                "pb " + _row(sorted(obj.P_B.members))]
    elif kind == "action":
        out += [f"x {refs['x']} b {refs['b']}",
                "px " + _row(sorted(obj.P_X.members)),
                "pb " + _row(sorted(obj.P_B.members)), "phi"]
        out += [_row(r) for r in obj.phi.act]
        out.append("xi")
        out += [_row(r) for r in obj.xi]
    else:
        raise ValueError(f"unknown block kind {kind!r}")
    out.append("end")
    return "\n".join(out) + "\n"


def serialize(doc, header=None):
    parts = [header + "\n"] if header else []
    parts += [serialize_block(b) for b in doc.blocks.values()]
    return "\n".join(parts)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
