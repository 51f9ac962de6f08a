import pytest

from implalg import new_hypergraph

T = new_hypergraph("abc", [["a", "b"], ["b", "c"], ["a", "c"]])
P = new_hypergraph("abc", [["a", "b"], ["b", "c"]])
M2 = new_hypergraph("abcd", [["a", "b"], ["c", "d"]])
S1 = new_hypergraph("ab", [["a", "b"]])


@pytest.fixture
def corpus():
    return {"T": T, "P": P, "M2": M2, "S1": S1}


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key in report.keywords:
        if key.startswith("criterion_"):
            n = int(key.split("_")[1])
            prev = _criteria.get(n, "PASS")
            _criteria[n] = "PASS" if prev == "PASS" and report.passed else "FAIL"


def pytest_collection_modifyitems(items):
    for item in items:
        for mark in item.iter_markers("criterion"):
            item.keywords[f"criterion_{mark.args[0]}"] = True
            item.extra_keyword_matches.add(f"criterion_{mark.args[0]}")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        terminalreporter.write_line(f"criterion {n}: {_criteria[n]}")
