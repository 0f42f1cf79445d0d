import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact", deadline=None, max_examples=30,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")


@pytest.fixture(scope="session")
def fixture_dir(tmp_path_factory):
    """The shipped corpus written to a temp directory once per session."""
    from homalg.fixtures import write_corpus
    d = tmp_path_factory.mktemp("corpus")
    write_corpus(d)
    return d
