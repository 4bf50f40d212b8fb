from _support import ACCEPTANCE_LOG


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LOG):
        passed, detail = ACCEPTANCE_LOG[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if passed else 'FAIL'} - {detail}")
