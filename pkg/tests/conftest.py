import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# (criterion id, title, passed, detail) appended by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, title, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{cid}] {title}: {detail}")
