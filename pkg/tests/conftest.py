import sys


def pytest_terminal_summary(terminalreporter):
    # Scorecard lines recorded by the acceptance tests; printing here
    # keeps them visible under the default output capture.
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "SCORECARD", None) if module else None
    if lines:
        terminalreporter.write_sep("-", "acceptance scorecard")
        for line in lines:
            terminalreporter.write_line(line)
