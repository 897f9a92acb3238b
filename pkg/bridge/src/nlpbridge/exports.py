"""Build engine lexicon TSVs from raw lexical resources.

Three outputs, all in the engine's ``relation<TAB>source<TAB>target``
layout with ``#`` provenance headers:

* ``wordnet.tsv``: hypernym and antonym rows read from the WordNet
  database files.
* ``contra.tsv``: contra_noun and contra_verb rows. Candidates are the
  top-k embedding neighbors that share the source's part of speech; a
  neighbor is dropped when the pair reads as a paraphrase rather than an
  alternative: cosine at or above the similarity threshold, shared
  synset, or morphological variant of the source.
* ``conceptnet.tsv``: assertion rows for the configured relations as
  ``conceptnet:<RelName>`` facts, weight-ranked within each source.

``harvest_modifiers`` is a fourth, corpus-driven export: adjective-noun
modifier rows read back from parsed CoNLL-U.
"""

from __future__ import annotations

from pathlib import Path

from .conceptnet import read_assertions
from .config import BridgeConfig
from .embeddings import Embeddings
from .fileio import atomic_write, header, require
from .textparse import noun_lemma, verb_lemma
from .wordnet import WordNetData


def morph_variant(a: str, b: str) -> bool:
    """Inflectional or close derivational variants of one another."""
    a, b = a.lower(), b.lower()
    if a == b:
        return True
    if noun_lemma(a) == noun_lemma(b) or verb_lemma(a) == verb_lemma(b):
        return True
    shorter, longer = sorted((a, b), key=len)
    return longer.startswith(shorter) and len(longer) - len(shorter) <= 3


def paraphrase_like(
    a: str, b: str, emb: Embeddings, wn: WordNetData, threshold: float
) -> bool:
    """True when the pair is too close in meaning to contrast."""
    if morph_variant(a, b):
        return True
    if wn.share_synset(a, b):
        return True
    return emb.similarity(a, b) >= threshold


def contra_rows(
    emb: Embeddings, wn: WordNetData, cfg: BridgeConfig
) -> list[tuple[str, str, str]]:
    rows: list[tuple[str, str, str]] = []
    for relation, pos in (("contra_noun", "n"), ("contra_verb", "v")):
        for word in emb.words:
            if " " in word or not wn.has_pos(word, pos):
                continue
            for nb, sim in emb.neighbors(word, cfg.neighbor_k):
                if sim <= 0.0 or not wn.has_pos(nb, pos):
                    continue  # orthogonal fill-ins are not semantic neighbors
                if paraphrase_like(word, nb, emb, wn, cfg.sts_threshold):
                    continue
                rows.append((relation, word, nb))
    return rows


def export_lexicons(
    wordnet_dir: Path,
    embeddings_path: Path,
    conceptnet_path: Path,
    out_dir: Path,
    cfg: BridgeConfig,
) -> dict[str, int]:
    """Write wordnet.tsv, contra.tsv, conceptnet.tsv into ``out_dir``.

    Returns row counts per output file. Raises MissingResource when any
    input is absent.
    """
    wordnet_dir = Path(wordnet_dir)
    embeddings_path = require(Path(embeddings_path), "embedding file")
    conceptnet_path = require(Path(conceptnet_path), "conceptnet dump")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    wn = WordNetData.open(wordnet_dir)
    emb = Embeddings.load(embeddings_path)

    counts: dict[str, int] = {}

    wn_inputs = {name: wordnet_dir / name for name in WordNetData.FILES.values()}
    wn_rows = [("hypernym", s, t) for s, t in wn.hypernym_pairs("n")]
    wn_rows += [("antonym", s, t) for s, t in wn.antonym_pairs()]
    counts["wordnet.tsv"] = len(wn_rows)
    atomic_write(
        out_dir / "wordnet.tsv",
        header("export-lexicons", wn_inputs, {}) + _tsv(wn_rows),
    )

    c_rows = contra_rows(emb, wn, cfg)
    counts["contra.tsv"] = len(c_rows)
    atomic_write(
        out_dir / "contra.tsv",
        header(
            "export-lexicons",
            {"embeddings": embeddings_path, **wn_inputs},
            {"neighbor_k": cfg.neighbor_k, "sts_threshold": cfg.sts_threshold},
        )
        + _tsv(c_rows),
    )

    assertions = read_assertions(conceptnet_path, cfg.conceptnet_relations)
    seen = set()
    ranked = sorted(
        enumerate(assertions),
        key=lambda t: (t[1][0], t[1][1], -t[1][3], t[0]),
    )
    cn_rows = []
    for _i, (rel, start, end, _w) in ranked:
        key = (rel, start, end)
        if key in seen or " " in start:
            continue
        seen.add(key)
        cn_rows.append((f"conceptnet:{rel}", start, end))
    counts["conceptnet.tsv"] = len(cn_rows)
    atomic_write(
        out_dir / "conceptnet.tsv",
        header(
            "export-lexicons",
            {"conceptnet": conceptnet_path},
            {"relations": ",".join(cfg.conceptnet_relations)},
        )
        + _tsv(cn_rows),
    )
    return counts


def harvest_modifiers(conllu_path: Path, out_path: Path) -> int:
    """Collect amod (adjective, noun) pairs from parsed sentences into
    ``modifier`` rows; returns the row count."""
    conllu_path = require(Path(conllu_path), "conllu file")
    pairs: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    tokens: list[list[str]] = []

    def flush() -> None:
        by_index = {t[0]: t for t in tokens}
        for t in tokens:
            if t[7] == "amod" and t[3] == "ADJ":
                head = by_index.get(t[6])
                if head is not None and head[3] == "NOUN":
                    pair = (head[2].lower(), t[2].lower())
                    if pair not in seen:
                        seen.add(pair)
                        pairs.append(pair)
        tokens.clear()

    with open(conllu_path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip():
                flush()
                continue
            if line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) >= 8:
                tokens.append(cols)
    flush()

    rows = [("modifier", noun, adj) for noun, adj in pairs]
    atomic_write(
        Path(out_path),
        header("harvest-modifiers", {"corpus": conllu_path}, {}) + _tsv(rows),
    )
    return len(rows)


def _tsv(rows: list[tuple[str, str, str]]) -> str:
    return "".join("\t".join(r) + "\n" for r in rows)
