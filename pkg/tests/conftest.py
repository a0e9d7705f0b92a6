import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "suite",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

from eragreats import (  # noqa: E402
    default_population_table,
    default_ranked_lists,
    default_weight_regimes,
)


@pytest.fixture(scope="session")
def table():
    return default_population_table()


@pytest.fixture(scope="session")
def regimes():
    return default_weight_regimes()


@pytest.fixture(scope="session")
def ranked_lists():
    return default_ranked_lists()


@pytest.fixture(scope="session")
def lists_by_name(ranked_lists):
    return {ranked.source: ranked for ranked in ranked_lists}
