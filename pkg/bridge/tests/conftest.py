"""Shared fixtures: the lexical-resource files are built once per session
into a temp directory by the builders in resources.py."""

import pytest

import resources

from nlpbridge.config import BridgeConfig


@pytest.fixture(scope="session")
def wn_dir(tmp_path_factory):
    return resources.write_wordnet(tmp_path_factory.mktemp("wn"))


@pytest.fixture(scope="session")
def emb_path(tmp_path_factory):
    return resources.write_embeddings(tmp_path_factory.mktemp("emb") / "embeddings.txt")


@pytest.fixture(scope="session")
def cn_path(tmp_path_factory):
    return resources.write_conceptnet(tmp_path_factory.mktemp("cn") / "conceptnet.tsv")


@pytest.fixture
def cfg():
    return BridgeConfig()
