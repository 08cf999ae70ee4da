import os

import allure  # noreorder
import pytest

from covseq.corpus import corpus_entries
from covseq.corpus import get_entry


def pytest_addoption(parser):
    parser.addoption(
        "--covseq-max-n",
        help="Widest coverage table the tests may build, can also be set in env with COVSEQ_MAX_N",
        type=int,
        default=None,
    )
    parser.addoption(
        "--slow",
        help="Run the exhaustive checks of very long sequences, can also be set with COVSEQ_SLOW",
        action="store_true",
        default=False,
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: exhaustive checks of the widest interleaved sequences"
    )


def pytest_collection_modifyitems(config, items):
    if os.environ.get("COVSEQ_SLOW") or config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow or COVSEQ_SLOW")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def max_n(pytestconfig):
    value = os.environ.get("COVSEQ_MAX_N") or pytestconfig.getoption("--covseq-max-n")
    return int(value) if value else 28


@pytest.fixture(scope="session")
def entries():
    return corpus_entries()


@pytest.fixture(scope="session")
def entry():
    return get_entry


@pytest.fixture(scope="session")
def six_one():
    """The (6,1) covering sequence of length 12 used for the two dimensional constructions."""
    return get_entry("cs-6-1-12").sequence


@pytest.fixture(scope="session")
def self_dual_sequence():
    return get_entry("cs-16-1-4462").sequence


@pytest.fixture
def rng_seed(worker_id):
    """A seed that differs between xdist workers but is fixed for each of them."""
    return 0 if worker_id == "master" else int(worker_id.lstrip("gw")) + 1


def pytest_exception_interact(node, call, report):
    allure.attach(str(report.longrepr), "Error traceback", allure.attachment_type.TEXT)
