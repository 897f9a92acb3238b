"""Lexicon export: row content, similarity filtering, determinism, and
the error surface for absent resources."""

import pytest

from nlpbridge.config import BridgeConfig
from nlpbridge.exports import export_lexicons, harvest_modifiers, morph_variant
from nlpbridge.fileio import MissingResource
from nlpbridge.textparse import parse_text, to_conllu

KNOWN_RELATIONS = {
    "hypernym", "antonym", "contra_noun", "contra_verb", "modifier",
    "pronoun", "number_word",
}


def data_rows(path):
    rows = []
    for line in path.read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        rows.append(tuple(line.split("\t")))
    return rows


@pytest.fixture(scope="module")
def exported(tmp_path_factory, wn_dir, emb_path, cn_path):
    out = tmp_path_factory.mktemp("lexicons")
    counts = export_lexicons(wn_dir, emb_path, cn_path, out, BridgeConfig())
    return out, counts


def test_wordnet_rows(exported):
    out, counts = exported
    rows = data_rows(out / "wordnet.tsv")
    assert ("hypernym", "dog", "animal") in rows
    assert ("hypernym", "violin", "instrument") in rows
    assert ("antonym", "big", "small") in rows
    assert ("antonym", "sit", "stand") in rows
    assert counts["wordnet.tsv"] == len(rows)


def test_contra_rows_keep_cluster_neighbors(exported):
    out, _ = exported
    rows = data_rows(out / "contra.tsv")
    violin = {t for rel, s, t in rows if rel == "contra_noun" and s == "violin"}
    assert "piano" in violin
    assert "flute" in violin


def test_contra_drops_high_similarity_pair(exported):
    # violin and viola sit at cosine 0.9, over the 0.75 threshold
    out, _ = exported
    rows = data_rows(out / "contra.tsv")
    violin = {t for rel, s, t in rows if rel == "contra_noun" and s == "violin"}
    assert "viola" not in violin


def test_contra_drops_shared_synset_pair(exported):
    out, _ = exported
    rows = data_rows(out / "contra.tsv")
    sleep = {t for rel, s, t in rows if rel == "contra_verb" and s == "sleep"}
    assert "nap" in sleep
    assert "doze" not in sleep


def test_conceptnet_rows_use_prefixed_relations(exported):
    out, _ = exported
    rows = data_rows(out / "conceptnet.tsv")
    assert ("conceptnet:AtLocation", "dog", "yard") in rows
    assert all(rel.startswith("conceptnet:") for rel, _, _ in rows)
    # multiword sources are unusable as lemma keys
    assert not any(" " in s for _, s, _ in rows)


def test_every_row_loads_as_engine_lexicon(exported):
    out, _ = exported
    for name in ("wordnet.tsv", "contra.tsv", "conceptnet.tsv"):
        for row in data_rows(out / name):
            assert len(row) == 3
            rel, src, tgt = row
            assert src and tgt
            assert rel in KNOWN_RELATIONS or rel.startswith("conceptnet:")


def test_outputs_carry_provenance_headers(exported):
    out, _ = exported
    for name in ("wordnet.tsv", "contra.tsv", "conceptnet.tsv"):
        head = (out / name).read_text().splitlines()[0]
        assert head.startswith("# produced by nlpbridge ")


def test_zero_neighbors_yields_empty_contra(tmp_path, wn_dir, emb_path, cn_path):
    export_lexicons(wn_dir, emb_path, cn_path, tmp_path, BridgeConfig(neighbor_k=0))
    assert data_rows(tmp_path / "contra.tsv") == []


def test_exports_are_deterministic(tmp_path, wn_dir, emb_path, cn_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    export_lexicons(wn_dir, emb_path, cn_path, a, BridgeConfig())
    export_lexicons(wn_dir, emb_path, cn_path, b, BridgeConfig())
    for name in ("wordnet.tsv", "contra.tsv", "conceptnet.tsv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_missing_resource_is_a_named_error(tmp_path, wn_dir, emb_path, cn_path):
    with pytest.raises(MissingResource):
        export_lexicons(tmp_path / "no_wn", emb_path, cn_path, tmp_path, BridgeConfig())
    with pytest.raises(MissingResource):
        export_lexicons(wn_dir, tmp_path / "no_emb.txt", cn_path, tmp_path, BridgeConfig())
    with pytest.raises(MissingResource):
        export_lexicons(wn_dir, emb_path, tmp_path / "no_cn.tsv", tmp_path, BridgeConfig())


def test_morph_variant():
    assert morph_variant("dog", "dogs")
    assert morph_variant("run", "running")
    assert morph_variant("walk", "walker")
    assert not morph_variant("dog", "cat")


def test_harvest_modifiers(tmp_path):
    parses, skipped = parse_text(
        "A black dog is sleeping. A red car is parked near the house. "
        "A black dog is running.", "t"
    )
    assert not skipped
    corpus = tmp_path / "corpus.conllu"
    corpus.write_text("\n".join(to_conllu(p) for p in parses))
    out = tmp_path / "modifiers.tsv"
    n = harvest_modifiers(corpus, out)
    rows = data_rows(out)
    assert ("modifier", "dog", "black") in rows
    assert ("modifier", "car", "red") in rows
    # the repeated black/dog pair collapses to one row
    assert n == len(rows) == 2
