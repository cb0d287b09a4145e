import os

import pytest

from zeta_toolkit import zero_sums

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")
ZEROS_PATH = os.path.join(FIXTURE_DIR, "zeros_100k.txt")


@pytest.fixture(scope="session")
def zeros_table():
    if not os.path.exists(ZEROS_PATH):
        pytest.skip("zeros_100k.txt fixture not present")
    return zero_sums.parse_zeros(ZEROS_PATH)


@pytest.fixture(scope="session")
def zeros_path():
    if not os.path.exists(ZEROS_PATH):
        pytest.skip("zeros_100k.txt fixture not present")
    return ZEROS_PATH
