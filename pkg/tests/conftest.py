import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nilext import catalog  # noqa: E402

FAMILY_SAMPLES = ["abelian(3)", "heisenberg(2)", "filiform(5)", "filiform(6)", "triangular(4)"]

ACCEPTANCE_RESULTS: dict = {}


def all_algebras():
    out = [(e.id, e.table) for e in catalog.all_entries()]
    out += [(name, catalog.catalog_lookup(name).table) for name in FAMILY_SAMPLES]
    return out


def nonabelian_algebras():
    return [(name, t) for name, t in all_algebras() if not t.is_abelian]


@pytest.fixture(scope="session")
def acceptance_results():
    return ACCEPTANCE_RESULTS


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
