"""Report rendering.

Every report is first turned into a plain tree of dicts, lists, ints, strings
and booleans by ``to_tree``.  The machine format is that tree dumped as YAML
with sorted keys, so identical inputs give identical bytes; an empty report
is ``{}``.  Conventions of the tree:

* a preorder is ``{"edges": [[a, b], ...]}`` listing the non-reflexive pairs;
* a check is ``{"ok": bool}`` plus ``witness`` and ``detail`` when it fails;
* sets are sorted lists.

The human format prints the same tree as indented ``key: value`` lines, with
``yes``/``no`` for booleans, ``{..}`` for sets, space-separated sequences,
one line per matrix row, ``a->b`` edge lists and ``(..)`` witnesses.
Coset tables get their own layout, one ``a | a+S | S+a`` row per element.
"""
import dataclasses
from dataclasses import dataclass

import yaml

from .core import Verdict
from .relations import Preorder


@dataclass
class CosetReport:
    """Left and right cosets of ``members`` in a monoid of ``size`` elements."""

    size: int
    members: tuple
    rows: list  # (a, a+S, S+a)

    @property
    def label(self):
        return "A" if len(self.members) == self.size else "S"


class _Set(tuple):
    """Marks a set inside a human-format tree."""


def to_tree(obj, _human=False):
    def rec(v):
        return to_tree(v, _human)

    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Verdict):
        out = {"ok": obj.ok}
        if not obj.ok:
            if obj.witness is not None:
                out["witness"] = rec(obj.witness)
            if obj.detail:
                out["detail"] = obj.detail
        return out
    if isinstance(obj, Preorder):
        return {"edges": [list(e) for e in obj.edges()]}
    if isinstance(obj, CosetReport):
        S = obj.label
        return {"submonoid": rec(frozenset(obj.members)),
                "rows": [{"a": a, f"a+{S}": rec(frozenset(l)), f"{S}+a": rec(frozenset(r))}
                         for a, l, r in obj.rows]}
    if isinstance(obj, dict):
        return {str(k): rec(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        items = [rec(v) for v in sorted(obj)]
        return _Set(items) if _human else items
    if isinstance(obj, (list, tuple)):
        return [rec(v) for v in obj]
    if dataclasses.is_dataclass(obj):
        out = {f.name: rec(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        ok = getattr(type(obj), "ok", None)
        if isinstance(ok, property):
            out["ok"] = obj.ok
        return out
    raise TypeError(f"cannot render {type(obj).__name__}")


class _Dumper(yaml.SafeDumper):
    """Block mappings; lists of scalars stay on one line."""


def _represent_list(dumper, data):
    flat = all(not isinstance(v, (list, dict)) for v in data)
    return dumper.represent_sequence("tag:yaml.org,2002:seq", data, flow_style=flat)


_Dumper.add_representer(list, _represent_list)


def render_machine(report):
    tree = to_tree(report)
    if tree in ({}, None):
        return "{}\n"
    return yaml.dump(tree, Dumper=_Dumper, sort_keys=True, default_flow_style=False, width=1000)


def _set(vals, size=None):
    if size is not None and len(vals) == size:
        return "A"
    return "{" + ",".join(str(v) for v in vals) + "}"


def _coset_lines(rep):
    S = rep.label
    lines = [f"a | a+{S} | {S}+a"]
    for a, left, right in rep.rows:
        lines.append(f"{a} | {_set(left, rep.size)} | {_set(right, rep.size)}")
    return lines


def _scalar(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, _Set):
        return "{" + ",".join(_scalar(x) for x in v) + "}"
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_scalar(x) for x in v) + ")"
    if v is None:
        return "-"
    return str(v)


def _edges(edges):
    return " ".join(f"{a}->{b}" for a, b in edges) or "(reflexive only)"


def _human_lines(tree, indent=0):
    pad = "  " * indent
    lines = []
    for key, v in tree.items():
        if isinstance(v, dict) and set(v) == {"edges"}:
            lines.append(f"{pad}{key}: {_edges(v['edges'])}")
        elif isinstance(v, dict) and set(v) >= {"ok"} and set(v) <= {"ok", "witness", "detail"}:
            text = "pass" if v["ok"] else "FAIL"
            if "witness" in v:
                text += f" at {_scalar(v['witness'])}"
            if "detail" in v:
                text += f" ({v['detail']})"
            lines.append(f"{pad}{key}: {text}")
        elif isinstance(v, dict):
            lines.append(f"{pad}{key}:")
            lines += _human_lines(v, indent + 1) if v else [f"{pad}  (none)"]
        elif isinstance(v, list) and v and not isinstance(v, _Set) and all(
                isinstance(x, list) and not isinstance(x, _Set) for x in v):
            # matrices: one row per line
            lines.append(f"{pad}{key}:")
            lines += [f"{pad}  " + " ".join(_scalar(x) for x in row) for row in v]
        elif isinstance(v, list) and any(isinstance(x, dict) for x in v):
            lines.append(f"{pad}{key}:")
            for i, item in enumerate(v):
                lines.append(f"{pad}  - [{i}]")
                lines += _human_lines(item, indent + 2)
        elif isinstance(v, list) and v and all(isinstance(x, str) for x in v):
            lines.append(f"{pad}{key}:")
            lines += [f"{pad}  - {x}" for x in v]
        elif isinstance(v, list) and not isinstance(v, _Set):
            lines.append(f"{pad}{key}: " + " ".join(_scalar(x) for x in v))
        else:
            lines.append(f"{pad}{key}: {_scalar(v)}")
    return lines


def render_human(report):
    if isinstance(report, CosetReport):
        return "\n".join(_coset_lines(report)) + "\n"
    if isinstance(report, dict) and any(isinstance(v, CosetReport) for v in report.values()):
        lines = []
        for key, v in report.items():
            if isinstance(v, CosetReport):
                lines += _coset_lines(v)
            else:
                lines += _human_lines({key: to_tree(v, True)})
        return "\n".join(lines) + "\n"
    tree = to_tree(report, True)
    if not tree:
        return ""
    if not isinstance(tree, dict):
        tree = {"result": tree}
    return "\n".join(_human_lines(tree)) + "\n"


def render_report(report, format="human"):
    if format == "machine":
        return render_machine(report)
    if format == "human":
        return render_human(report)
    raise ValueError(f"unknown format {format!r}")
