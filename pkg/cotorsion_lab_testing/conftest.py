import pytest

from cotorsion_lab.fixtures import TWIN_FIXTURES, fixture_category, fixture_twin
from cotorsion_lab.heartcat import Heart
from cotorsion_lab.pairs import compute_hearts
from cotorsion_lab.subcat import DEFAULT_BOUNDS


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweep, skipped unless COTORSION_LAB_SLOW is set")


@pytest.fixture(scope="session")
def nakayama_ctx():
    return fixture_category("nakayama_six")


@pytest.fixture(scope="session")
def twins(nakayama_ctx):
    return {name: fixture_twin(name, nakayama_ctx) for name in TWIN_FIXTURES}


@pytest.fixture(scope="session")
def hearts(twins):
    """Lazily computed hearts of the shipped twin pairs, shared by the whole session"""
    computed = {}

    def heart_of(name):
        if name not in computed:
            computed[name] = Heart(compute_hearts(twins[name], DEFAULT_BOUNDS))

        return computed[name]

    return heart_of


@pytest.fixture(scope="session")
def not_integral(hearts):
    return hearts("twin_not_integral")


@pytest.fixture(scope="session")
def abelian(hearts):
    return hearts("twin_abelian")


@pytest.fixture(scope="session")
def not_abelian(hearts):
    return hearts("twin_not_abelian")


@pytest.fixture(scope="session")
def zero_heart(hearts):
    return hearts("twin_zero_heart")
