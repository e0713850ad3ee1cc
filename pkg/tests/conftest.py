"""pytest config"""

import os
from typing import List

import pytest
from _pytest.config import Config
from _pytest.config.argparsing import Parser
from _pytest.nodes import Item
from hypothesis import HealthCheck, settings

# searches on n = 7 graphs routinely take longer than the default deadline
settings.register_profile("default", deadline=None)
settings.register_profile(
    "thorough",
    deadline=None,
    max_examples=1000,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


def pytest_addoption(parser: Parser) -> None:
    """Add option to run the exhaustive corpus checks"""
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run exhaustive checks over small graph corpora",
    )


def pytest_collection_modifyitems(config: Config, items: List[Item]) -> None:
    """Skip slow tests if --runslow is not provided"""
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def pytest_configure(config: Config) -> None:
    """Register the slow marker"""
    config.addinivalue_line(
        "markers", "slow: exhaustive check, skipped unless --runslow is provided"
    )
