import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sagakit import from_regular_sequence
from sagakit.gnlab import monomial_quadric_ci, perazzo_algebra, perazzo_form


@pytest.fixture(scope="session")
def perazzo_f():
    return perazzo_form()


@pytest.fixture(scope="session")
def perazzo_alg():
    return perazzo_algebra()


@pytest.fixture(scope="session")
def monomial_ci():
    return from_regular_sequence(monomial_quadric_ci())
