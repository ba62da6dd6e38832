import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from pomkit import _purekernels  # noqa: E402
from pomkit.builtin import builtin_examples  # noqa: E402
from pomkit.core import FiniteMonoid, trivial_monoid  # noqa: E402

try:
    from pomkit import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

BACKENDS = [pytest.param(_purekernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture(scope="session")
def doc():
    return builtin_examples()


Z2 = FiniteMonoid(2, 0, ((0, 1), (1, 0)))
SL2 = FiniteMonoid(2, 0, ((0, 1), (1, 1)))
TRIV = trivial_monoid()
CHAIN3 = FiniteMonoid(3, 0, ((0, 1, 2), (1, 1, 2), (2, 2, 2)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
