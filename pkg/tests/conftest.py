from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS, _line

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        name, ok, detail = RESULTS[num]
        terminalreporter.write_line(_line(num, name, ok, detail))
