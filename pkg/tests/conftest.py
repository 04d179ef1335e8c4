from helpers import ACCEPTANCE


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, detail, seconds, limit = ACCEPTANCE[num]
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {mark}  ({seconds:.2f}s, limit {limit:g}s)  {detail}")
