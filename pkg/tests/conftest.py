import os

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--deep",
        action="store_true",
        default=False,
        help="also run the n=5 exhaustive verifications (takes minutes)",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "deep: n=5 exhaustive run, enabled with --deep or UCF_DEEP=1"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--deep") or os.environ.get("UCF_DEEP") == "1":
        return
    skip = pytest.mark.skip(reason="n=5 exhaustive run; enable with --deep or UCF_DEEP=1")
    for item in items:
        if "deep" in item.keywords:
            item.add_marker(skip)
