"""Command-line interface.

Exit status: 0 when every checked property holds, 1 when one fails (the
report is still printed), 2 on parse, validation or usage errors.

``FILE`` may also be the name of a bundled example (``ex2_2``, ...); the
object then defaults to that name.  ``--machine`` and ``--seedless`` may
appear anywhere on the command line.  Every computation is deterministic, so
``--seedless`` changes nothing and exists for scripts that always pass it.
"""
import argparse
import os
import sys
from dataclasses import fields

from . import __version__
from .actions import (
    build_extension,
    extract_action,
    roundtrip_GH,
    roundtrip_HG,
    validate_action,
    zz_demo,
)
from .builtin import DEMOS, EXAMPLES, FILES, builtin_examples, example_text
from .constructions import PreorderedSet, coequalizer_ordmon, free_fragment
from .core import Submonoid
from .enumeration import (
    enumerate_actions,
    enumerate_compatible_preorders,
    enumerate_homs,
    enumerate_monoids,
    enumerate_preorders,
    enumerate_submonoids,
)
from .errors import PomError
from .fileformat import PAIR_ENCODING_NOTE, Block, Document, load, serialize
from .pom import (
    PreorderedMonoid,
    classify,
    coreflect,
    coset_table,
    induced_left,
    induced_right,
    is_left_normal,
    is_right_normal,
)
from .relations import discrete, is_compatible
from .render import CosetReport, render_report
from .schreier import check_S1_S2, check_consequences

GLOBAL_FLAGS = ("--machine", "--seedless")


class UsageError(Exception):
    pass


def _elements(text):
    try:
        return frozenset(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"expected a list of element indices, got {text!r}") from None


def _load(path):
    if not os.path.exists(path) and path in EXAMPLES:
        return builtin_examples(), path
    if not os.path.exists(path):
        raise UsageError(f"no such file or bundled example: {path}")
    return load(path), None


def _object(args, kinds):
    doc, default = _load(args.file)
    name = args.object or default
    if name is None:
        candidates = [n for n in doc.names() if doc.kind(n) in kinds]
        if len(candidates) != 1:
            raise UsageError("--object is required")
        name = candidates[0]
    if name not in doc:
        raise UsageError(f"no block named {name!r}")
    if doc.kind(name) not in kinds:
        raise UsageError(f"{name!r} is a {doc.kind(name)}, expected {' or '.join(kinds)}")
    return doc, name


def _pom(args):
    """The named pom, or a monoid block with its discrete order."""
    doc, name = _object(args, ("pom", "monoid"))
    obj = doc[name]
    if doc.kind(name) == "monoid":
        obj = PreorderedMonoid(obj, discrete(obj.size))
    return name, obj


def _submonoid(M, text, default):
    return default if text is None else Submonoid(M, _elements(text))


# -- verbs -------------------------------------------------------------------

def cmd_validate(args):
    doc, _ = _load(args.file)
    blocks = {}
    for name in doc.names():
        kind = doc.kind(name)
        entry = {"kind": kind}
        if kind in ("monoid", "pom"):
            entry["size"] = doc.monoid(name).size
        blocks[name] = entry
    return {"valid": True, "blocks": blocks}, 0


def cmd_classify(args):
    name, pm = _pom(args)
    report = classify(pm)
    tree = {f.name: getattr(report, f.name) for f in fields(report)}
    tree["cone"] = frozenset(report.cone)
    return {"object": name, **tree}, 0


def cmd_cone(args):
    name, pm = _pom(args)
    return {"object": name, "cone": pm.cone.members}, 0


def cmd_cosets(args):
    name, pm = _pom(args)
    M = pm.monoid
    S = _submonoid(M, args.submonoid, pm.cone)
    rows = coset_table(M, S)
    return {"object": name, "cosets": CosetReport(M.size, tuple(sorted(S.members)), rows)}, 0


def cmd_induced(args):
    name, pm = _pom(args)
    M = pm.monoid
    S = _submonoid(M, args.submonoid, pm.cone)
    R = (induced_right if args.side == "right" else induced_left)(M, S)
    return {"object": name, "side": args.side, "submonoid": S.members,
            "order": R, "compatible": is_compatible(M, R)}, 0


def cmd_normality(args):
    name, pm = _pom(args)
    M = pm.monoid
    S = Submonoid(M, _elements(args.submonoid))
    rn, ln = is_right_normal(M, S), is_left_normal(M, S)
    report = {"object": name, "submonoid": S.members,
              "right_normal": rn, "left_normal": ln, "normal": rn.ok and ln.ok}
    want = {"right": rn.ok, "left": ln.ok, "both": rn.ok and ln.ok}[args.side]
    return report, 0 if want else 1


def cmd_coreflect(args):
    name, pm = _pom(args)
    v = is_right_normal(pm.monoid, pm.cone)
    if not v:
        return {"object": name, "coreflection": None,
                "cone_right_normal": v}, 1
    star, _ = coreflect(pm)
    return {"object": name, "cone_right_normal": v, "order": star.order,
            "unit": list(range(pm.size))}, 0


def cmd_free(args):
    doc, name = _object(args, ("poset", "pom"))
    obj = doc[name]
    X = obj if isinstance(obj, PreorderedSet) else PreorderedSet(obj.order)
    F = free_fragment(X, args.depth)
    by_len = {}
    for w in F.words:
        by_len[len(w)] = by_len.get(len(w), 0) + 1
    report = {"object": name, "depth": args.depth, "words": len(F.words),
              "words_by_length": by_len}
    if args.list:
        report["order"] = [f"{_word(u)} <= {_word(v)}"
                           for u in F.words for v in F.words if u != v and F.leq(u, v)]
    return report, 0


def _word(w):
    return ".".join(map(str, w)) or "()"


def _hom_with_orders(doc, name):
    if name not in doc or doc.kind(name) != "hom":
        raise UsageError(f"{name!r} is not a hom block")
    refs = doc.blocks[name].refs

    def pm(ref):
        if doc.kind(ref) == "pom":
            return doc[ref]
        M = doc[ref]
        return PreorderedMonoid(M, discrete(M.size))
    return doc[name], pm(refs["from"]), pm(refs["to"])


def cmd_coeq(args):
    doc, _ = _load(args.file)
    f, src, dst = _hom_with_orders(doc, args.f)
    g, src2, dst2 = _hom_with_orders(doc, args.g)
    if (src, dst) != (src2, dst2):
        raise UsageError("f and g must be parallel")
    C, q = coequalizer_ordmon(f, g, src, dst)
    return {"size": C.size, "q": list(q.map), "table": [list(r) for r in C.monoid.table],
            "identity": C.monoid.identity, "order": C.order}, 0


def _ext_doc(cext, prefix):
    """Document holding ``cext`` with its monoids and homs named after ``prefix``."""
    e = cext.ext
    doc = Document()
    names = {"x": f"{prefix}_X", "a": f"{prefix}_A", "b": f"{prefix}_B"}
    for key, M in (("x", e.X), ("a", e.A), ("b", e.B)):
        doc.add(Block("monoid", names[key], M))
    homs = {"k": (e.k, "x", "a"), "p": (e.p, "a", "b"), "s": (e.s, "b", "a")}
    for key, (h, src, dst) in homs.items():
        hn = f"{prefix}_{key}"
        names[key] = hn
        doc.add(Block("hom", hn, h, {"from": names[src], "to": names[dst]}))
    doc.add(Block("extension", prefix, cext, dict(names)))
    return doc


def _act_doc(act, prefix):
    doc = Document()
    xn, bn = f"{prefix}_X", f"{prefix}_B"
    doc.add(Block("monoid", xn, act.X))
    doc.add(Block("monoid", bn, act.B))
    doc.add(Block("action", prefix, act, {"x": xn, "b": bn}))
    return doc


def cmd_schreier(args):
    doc, name = _object(args, ("extension", "action"))
    obj = doc[name]
    kind = doc.kind(name)
    mode = args.mode
    if mode == "check":
        if kind != "extension":
            raise UsageError("schreier check needs an extension block")
        s = check_S1_S2(obj.ext)
        c = check_consequences(obj.ext)
        report = {"object": name, "S1": s.S1, "S2": s.S2,
                  "C1": c.C1, "C2": c.C2, "C3": c.C3, "C4": c.C4,
                  "q": list(obj.ext.q)}
        return report, 0 if s.ok and c.ok else 1
    if mode == "extract":
        if kind != "extension":
            raise UsageError("schreier extract needs an extension block")
        act = extract_action(obj)
        return _act_doc(act, f"{name}_action"), 0
    if mode == "build":
        if kind != "action":
            raise UsageError("schreier build needs an action block")
        rep = validate_action(obj)
        if not rep.ok:
            return {"object": name, "axioms": rep}, 1
        return _ext_doc(build_extension(obj), f"{name}_ext"), 0
    if kind == "extension":
        rt = roundtrip_HG(obj)
        report = {"object": name, "direction": "HG", "checks": rt.checks,
                  "beta": list(rt.beta), "ok": rt.ok}
    else:
        rt = roundtrip_GH(obj)
        report = {"object": name, "direction": "GH", "checks": rt.checks, "ok": rt.ok}
    return report, 0 if rt.ok else 1


def cmd_demo(args):
    if args.window < 1:
        raise UsageError("--window must be at least 1")
    report = zz_demo(args.window)
    return report, 0 if report["ok"] else 1


def _listing(items, show, render_item):
    report = {"count": len(items)}
    if show:
        report["items"] = [render_item(x) for x in items]
    return report


def cmd_enumerate(args):
    what = args.what
    if what == "monoids":
        items = list(enumerate_monoids(args.n))
        return _listing(items, args.list, lambda M: [list(r) for r in M.table]), 0
    if what == "preorders":
        items = list(enumerate_preorders(args.n))
        return _listing(items, args.list, lambda R: R), 0
    if what == "compatible":
        _, pm = _pom(args)
        items = list(enumerate_compatible_preorders(pm.monoid))
        return _listing(items, args.list, lambda R: R), 0
    if what == "submonoids":
        _, pm = _pom(args)
        items = list(enumerate_submonoids(pm.monoid, args.filter))
        return _listing(items, args.list, lambda S: S.members), 0
    doc, _ = _load(args.file)
    if what == "homs":
        M, N = doc.monoid(args.src), doc.monoid(args.dst)
        items = list(enumerate_homs(M, N))
        return _listing(items, args.list, lambda h: list(h.map)), 0
    X, B = doc.monoid(args.x), doc.monoid(args.b)
    P_X = Submonoid(X, _elements(args.px)) if args.px else Submonoid(X, {X.identity})
    P_B = Submonoid(B, _elements(args.pb)) if args.pb else Submonoid(B, {B.identity})
    items = list(enumerate_actions(X, B, P_X, P_B))
    return _listing(items, args.list, lambda a: {
        "phi": [list(r) for r in a.phi.act], "xi": [list(r) for r in a.xi]}), 0


def cmd_examples(args):
    if args.mode == "list":
        return {"examples": list(EXAMPLES)}, 0
    name = args.name
    if name in DEMOS:
        return {"name": name, "demo": DEMOS[name]}, 0
    fn = f"{name}.pom"
    if fn not in FILES:
        raise UsageError(f"unknown example {name!r}")
    return example_text(fn), 0


# -- parser --------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="pomkit", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help, obj=True):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        if obj:
            p.add_argument("file")
            p.add_argument("--object")
        return p

    verb("validate", cmd_validate, "parse and validate a file", obj=False).add_argument("file")
    verb("classify", cmd_classify, "full classification of a preordered monoid")
    verb("cone", cmd_cone, "positive cone")
    verb("cosets", cmd_cosets, "left/right coset table").add_argument("--submonoid")
    p = verb("induced", cmd_induced, "preorder induced by a submonoid")
    p.add_argument("--side", choices=("right", "left"), default="right")
    p.add_argument("--submonoid")
    p = verb("normality", cmd_normality, "normality of a submonoid")
    p.add_argument("--submonoid", required=True)
    p.add_argument("--side", choices=("right", "left", "both"), default="both")
    verb("coreflect", cmd_coreflect, "coreflection into OrdMon*")
    p = verb("free", cmd_free, "free preordered monoid fragment")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p = verb("coeq", cmd_coeq, "coequalizer of two homs", obj=False)
    p.add_argument("file")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p = sub.add_parser("schreier", help="split extensions and actions")
    p.set_defaults(fn=cmd_schreier)
    p.add_argument("mode", choices=("check", "extract", "build", "roundtrip"))
    p.add_argument("file")
    p.add_argument("--object")
    p = sub.add_parser("demo", help="windowed check of the integer example")
    p.set_defaults(fn=cmd_demo)
    p.add_argument("which", choices=("zz",))
    p.add_argument("--window", type=int, default=10)

    p = sub.add_parser("enumerate", help="exhaustive small instances")
    p.set_defaults(fn=cmd_enumerate)
    esub = p.add_subparsers(dest="what", required=True)
    for what in ("monoids", "preorders"):
        e = esub.add_parser(what)
        e.add_argument("n", type=int)
        e.add_argument("--list", action="store_true")
    for what in ("compatible", "submonoids"):
        e = esub.add_parser(what)
        e.add_argument("file")
        e.add_argument("--object")
        e.add_argument("--list", action="store_true")
        if what == "submonoids":
            e.add_argument("--filter", default="none",
                           choices=("none", "right_normal", "left_normal", "normal"))
    e = esub.add_parser("homs")
    e.add_argument("file")
    e.add_argument("--from", dest="src", required=True)
    e.add_argument("--to", dest="dst", required=True)
    e.add_argument("--list", action="store_true")
    e = esub.add_parser("actions")
    e.add_argument("file")
    e.add_argument("--x", required=True)
    e.add_argument("--b", required=True)
    e.add_argument("--px")
    e.add_argument("--pb")
    e.add_argument("--list", action="store_true")

    p = sub.add_parser("examples", help="bundled examples")
    p.set_defaults(fn=cmd_examples)
    p.add_argument("mode", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    return ap


def _emit(result, machine, out):
    if isinstance(result, str):
        out.write(result)
    elif isinstance(result, Document):
        header = PAIR_ENCODING_NOTE if "extension" in {b.kind for b in result.blocks.values()} else None
        out.write(serialize(result, header))
    else:
        out.write(render_report(result, "machine" if machine else "human"))


def main(argv=None, out=None, err=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    machine = "--machine" in argv
    argv = [a for a in argv if a not in GLOBAL_FLAGS]
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if getattr(args, "mode", None) == "show" and not args.name:
        err.write("examples show needs a NAME\n")
        return 2
    try:
        result, code = args.fn(args)
    except (PomError, UsageError, OSError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    _emit(result, machine, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
