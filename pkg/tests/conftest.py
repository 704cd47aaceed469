import pytest

from constructions.generators import tight_cycle
from tests.builders import complete


@pytest.fixture
def tight63():
    return tight_cycle(6, 3)


@pytest.fixture
def k5_4():
    return complete(5, 4)
