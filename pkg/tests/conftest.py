import pytest

from backlund import EvalParams


@pytest.fixture(scope="session")
def params():
    return EvalParams()
