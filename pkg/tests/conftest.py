import pytest
from hypothesis import settings

from tokenspectra.corpus import load_connected_corpus

settings.register_profile("ci", max_examples=60, derandomize=True, deadline=None)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def corpus_le7():
    return load_connected_corpus()


@pytest.fixture(scope="session")
def corpus_le6(corpus_le7):
    return [g for g in corpus_le7 if g.n <= 6]
