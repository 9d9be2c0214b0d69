import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_CRITERIA: dict[int, dict] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            entry = _CRITERIA.setdefault(number, {"title": title, "nodes": set(), "failed": False, "ran": 0})
            entry["nodes"].add(item.nodeid)


def pytest_runtest_logreport(report):
    for entry in _CRITERIA.values():
        if report.nodeid in entry["nodes"]:
            if report.failed:
                entry["failed"] = True
            if report.when == "call":
                entry["ran"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        ok = e["ran"] == len(e["nodes"]) and not e["failed"]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {e['title']}")
