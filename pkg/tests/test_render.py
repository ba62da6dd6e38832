import subprocess
import sys

import pytest
import yaml

from pomkit.core import PASS, Submonoid, Verdict, whole
from pomkit.pom import classify, coset_table
from pomkit.relations import closure_from_edges
from pomkit.render import CosetReport, render_human, render_machine, render_report, to_tree

EX2_2_COSETS = """\
a | a+A | A+a
0 | A | A
1 | {1,4} | {1,2,3,4}
2 | {2,4} | {2,4}
3 | {3,4} | {3,4}
4 | {4} | {4}
"""

EX2_3_COSETS = """\
a | a+A | A+a
0 | A | A
1 | {1,2,4} | {1,4}
2 | {1,2,4} | {2,4}
3 | {1,2,3,4} | {1,2,3,4}
4 | {4} | {4}
"""


def cosets(doc, name):
    M = doc.monoid(name)
    return CosetReport(M.size, tuple(M.elements), coset_table(M, whole(M)))


@pytest.mark.parametrize("name,text", [("ex2_2", EX2_2_COSETS), ("ex2_3", EX2_3_COSETS)])
def test_coset_tables(doc, name, text):
    assert render_report(cosets(doc, name)) == text


def test_proper_submonoid_label(doc):
    M = doc.monoid("ex2_2")
    S = Submonoid(M, frozenset({0, 1}))
    text = render_human(CosetReport(M.size, (0, 1), coset_table(M, S)))
    assert text.splitlines()[0] == "a | a+S | S+a"
    assert text.splitlines()[2] == "1 | {1} | {1}"
    assert text.splitlines()[3] == "2 | {2} | {2,4}"


def test_empty_machine():
    assert render_machine({}) == "{}\n"
    assert yaml.safe_load(render_machine({})) == {}


def test_classify_ex2_3_machine(doc):
    text = render_report(classify(doc["ex2_3"]), "machine")
    assert "cone_right_normal: false" in text
    tree = yaml.safe_load(text)
    assert tree["witnesses"]["cone_right_normal"]["a"] == 1
    assert tree["cone_left_normal"] is True


def test_verdict_tree():
    assert to_tree(PASS) == {"ok": True}
    assert to_tree(Verdict(False, (1, 2), "why")) == {"ok": False, "witness": [1, 2], "detail": "why"}
    text = render_human({"check": Verdict(False, (1, 2), "why")})
    assert text == "check: FAIL at (1,2) (why)\n"


def test_preorder_tree():
    R = closure_from_edges(3, [(0, 1), (1, 2)])
    assert to_tree(R) == {"edges": [[0, 1], [0, 2], [1, 2]]}
    assert render_human({"order": R}) == "order: 0->1 0->2 1->2\n"


def test_human_scalars():
    text = render_human({"flag": True, "set": frozenset({2, 0}), "seq": (1, 2), "none": None})
    assert text.splitlines() == ["flag: yes", "set: {0,2}", "seq: 1 2", "none: -"]


def test_matrix_rows():
    text = render_human({"table": ((0, 1), (1, 0))})
    assert text.splitlines() == ["table:", "  0 1", "  1 0"]


def test_unknown_format():
    with pytest.raises(ValueError):
        render_report({}, "xml")


def test_unrenderable():
    with pytest.raises(TypeError):
        to_tree(object())


def test_machine_stable_across_processes():
    code = ("from pomkit.builtin import builtin_examples;from pomkit.pom import classify;"
            "from pomkit.render import render_machine;import sys;"
            "sys.stdout.write(render_machine(classify(builtin_examples()['ex2_2'])))")
    runs = {subprocess.run([sys.executable, "-c", code], capture_output=True, check=True,
                           env={"PYTHONHASHSEED": seed, "PATH": ""}).stdout
            for seed in ("0", "1", "random")}
    assert len(runs) == 1
