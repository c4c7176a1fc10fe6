import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from torifan import catalog, classify


@pytest.fixture(scope="session")
def surfaces_named():
    return catalog.surfaces()


@pytest.fixture(scope="session")
def threefolds_named():
    return catalog.threefolds()


@pytest.fixture(scope="session")
def extras_named():
    return catalog.extras()


@pytest.fixture(scope="session")
def surface_report():
    """(report, elapsed seconds) of the weak del Pezzo enumeration."""
    t0 = time.monotonic()
    report = classify.enumerate_weak_del_pezzo()
    return report, time.monotonic() - t0


@pytest.fixture(scope="session")
def threefold_report_b3():
    t0 = time.monotonic()
    report = classify.enumerate_weakened_threefolds(3)
    return report, time.monotonic() - t0


@pytest.fixture(scope="session")
def threefold_report_b4():
    t0 = time.monotonic()
    report = classify.enumerate_weakened_threefolds(4)
    return report, time.monotonic() - t0
