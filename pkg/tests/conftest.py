import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run slow tests (Sz(8) and exhaustive hole search)")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running optional checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def catalog():
    from commgraph.catalog import load_bundled_catalog

    return load_bundled_catalog()
