import pytest

from hexamagic.cache import Cache
from hexamagic.pipeline import Pipeline
from hexamagic.space import space


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    return str(tmp_path_factory.mktemp("hexamagic-cache"))


@pytest.fixture(scope="session")
def pipeline(cache_dir):
    return Pipeline(cache=Cache(root=cache_dir))


@pytest.fixture(scope="session")
def sp():
    return space()


@pytest.fixture(scope="session")
def hexagon(pipeline):
    return pipeline.hexagon


@pytest.fixture(scope="session")
def pentagrams(pipeline):
    return pipeline.pentagrams


@pytest.fixture(scope="session")
def wa_census(pipeline):
    return pipeline.wa_full
