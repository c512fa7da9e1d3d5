import pytest

from ciskit.classify import classify_buildup, classify_exhaustive


@pytest.fixture(scope="session")
def exhaustive_reports():
    """Exhaustive classification for n = 1..5 (lengths 2..10)."""
    return {n: classify_exhaustive(n) for n in range(1, 6)}


@pytest.fixture(scope="session")
def buildup_reports():
    """Build-up classification chained from n = 1 up to n = 5."""
    reports = {1: classify_buildup(1)}
    for n in range(2, 6):
        reports[n] = classify_buildup(n, base=reports[n - 1])
    return reports


@pytest.fixture(scope="session")
def report12(buildup_reports):
    """The length-12 extended run (about two minutes)."""
    return classify_buildup(6, base=buildup_reports[5])
