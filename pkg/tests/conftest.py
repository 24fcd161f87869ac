from __future__ import annotations

import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter):
    rows = {}
    for outcome in ("passed", "failed", "error", "skipped"):
        for report in terminalreporter.stats.get(outcome, []):
            match = _CRITERION.search(getattr(report, "nodeid", ""))
            if match and report.when in ("call", "setup"):
                number = int(match.group(1))
                if rows.get(number, ("PASS",))[0] == "PASS":
                    rows[number] = ("PASS" if outcome == "passed" else "FAIL", report.duration)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, (verdict, seconds) in sorted(rows.items()):
        terminalreporter.write_line(f"criterion {number:2d}: {verdict} ({seconds:.2f}s)")
