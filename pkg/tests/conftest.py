import os

import pytest

from nligen.conllu import load_conllu_file
from nligen.lexicon import load_lexicon, load_paraphrases
from nligen.pool import build_pool

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


@pytest.fixture(scope="session")
def golden():
    return {s.id: s for s in load_conllu_file(fixture_path("golden.conllu"), strict=True)}


@pytest.fixture(scope="session")
def small_pool():
    return build_pool(load_conllu_file(fixture_path("pool_small.conllu"), strict=True))


@pytest.fixture(scope="session")
def lex():
    return load_lexicon(fixture_path("lexicon.tsv"))


@pytest.fixture(scope="session")
def paraphrases():
    return load_paraphrases(fixture_path("paraphrases.tsv"))


@pytest.fixture(scope="session")
def reparse():
    return {
        s.text: s
        for s in load_conllu_file(fixture_path("reparse.conllu"), strict=True)
    }
