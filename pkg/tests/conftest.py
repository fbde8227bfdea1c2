import pytest

from arc_miner import datasets, load_polarity, load_shifters


@pytest.fixture(scope="session")
def polarity():
    return load_polarity(datasets.polarity_path())


@pytest.fixture(scope="session")
def shifters():
    return load_shifters(datasets.shifters_path())
