from hypothesis import settings

from acceptance_log import RESULTS

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=150)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[key])
