import numpy as np
import pytest


def complex_randn(rng, *shape):
    """Unit-variance circular complex Gaussian array."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion at the end of the run."""
    stats = terminalreporter.stats
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in stats.get(status, []):
            name = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in name:
                tag = name.split("test_criterion_")[1].split("[")[0]
                number = int(tag.split("_")[0])
                verdict = "PASS" if status == "passed" else "FAIL"
                # a criterion is only as good as its worst check
                if outcomes.get(number) != "FAIL":
                    outcomes[number] = verdict
    if outcomes:
        terminalreporter.write_sep("-", "acceptance criteria")
        for number in sorted(outcomes):
            terminalreporter.write_line(f"criterion {number}: {outcomes[number]}")
