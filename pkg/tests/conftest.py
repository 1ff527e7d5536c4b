from __future__ import annotations

import pytest

from grcodes import distance

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False, help="run long-running checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "extended: long-running check, needs --extended")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="needs --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session", autouse=True)
def _warm_jit():
    # compile the enumeration kernels once so timed checks measure the search only
    import numpy as np

    distance.min_distance(np.array([[1, 1, 0], [0, 1, 1]]), 2)
    distance.min_distance(np.eye(70, dtype=np.int64)[:2], 2)
    distance.min_distance(np.array([[1, 2, 0], [0, 1, 1]]), 3)
