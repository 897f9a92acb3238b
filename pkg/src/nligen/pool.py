"""Premise pool: indexed access to a parsed corpus for retrieval transforms.

Subject/object/noun/verb lemma sets per sentence, with inverted indexes by
subject lemma and verb lemma. All query results are in ascending sentence-id
order so retrieval is deterministic.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .conllu import ParsedSentence, Token, dep_base, parse_conllu, serialize_conllu

SUBJECT_DEPRELS = {"nsubj", "nsubjpass"}
OBJECT_DEPRELS = {"obj", "dobj", "pobj"}
AUXLIKE_DEPRELS = {"aux", "auxpass", "cop"}

SNAPSHOT_VERSION = 1


class PoolError(ValueError):
    pass


class DuplicateSentenceId(PoolError):
    pass


class NoSubject(PoolError):
    pass


class NoVerb(PoolError):
    pass


class SnapshotFormatError(PoolError):
    pass


class StaleSnapshot(PoolError):
    """Snapshot was built from different input (hash mismatch)."""


def subject_tokens(s: ParsedSentence) -> list[Token]:
    return [t for t in s.tokens if dep_base(t.deprel) in SUBJECT_DEPRELS]


def object_tokens(s: ParsedSentence) -> list[Token]:
    return [t for t in s.tokens if dep_base(t.deprel) in OBJECT_DEPRELS]


def subject_lemmas(s: ParsedSentence) -> frozenset[str]:
    return frozenset(t.lemma.lower() for t in subject_tokens(s))


def object_lemmas(s: ParsedSentence) -> frozenset[str]:
    return frozenset(t.lemma.lower() for t in object_tokens(s))


def noun_lemmas(s: ParsedSentence) -> frozenset[str]:
    return frozenset(t.lemma.lower() for t in s.tokens if t.upos in ("NOUN", "PROPN"))


def verb_lemmas(s: ParsedSentence) -> frozenset[str]:
    return frozenset(
        t.lemma.lower()
        for t in s.tokens
        if t.upos == "VERB" and dep_base(t.deprel) not in AUXLIKE_DEPRELS
    )


def main_verb(s: ParsedSentence) -> Token:
    """The sentence's content verb: the root when it is a VERB other than
    "be", else the first surface VERB that is not an auxiliary/copula and not
    "be". Raises NoVerb when the sentence has none."""
    root = s.root
    if root.upos == "VERB" and root.lemma.lower() != "be":
        return root
    for t in s.tokens:
        if t.upos == "VERB" and dep_base(t.deprel) not in AUXLIKE_DEPRELS and t.lemma.lower() != "be":
            return t
    raise NoVerb(f"{s.id}: no content verb")


@dataclass(frozen=True)
class SentenceFacts:
    subjects: frozenset[str]
    objects: frozenset[str]
    nouns: frozenset[str]
    verbs: frozenset[str]


class PremisePool:
    """Immutable after construction; safe to share across workers."""

    def __init__(self, sentences: Iterable[ParsedSentence]):
        self.sentences: dict[str, ParsedSentence] = {}
        self.facts: dict[str, SentenceFacts] = {}
        self.by_subject: dict[str, list[str]] = {}
        self.by_verb: dict[str, list[str]] = {}
        for s in sentences:
            if s.id in self.sentences:
                raise DuplicateSentenceId(f"duplicate sentence id {s.id!r}")
            self.sentences[s.id] = s
            self.facts[s.id] = SentenceFacts(
                subjects=subject_lemmas(s),
                objects=object_lemmas(s),
                nouns=noun_lemmas(s),
                verbs=verb_lemmas(s),
            )
        for sid, f in self.facts.items():
            for lem in f.subjects:
                self.by_subject.setdefault(lem, []).append(sid)
            for lem in f.verbs:
                self.by_verb.setdefault(lem, []).append(sid)
        for ids in self.by_subject.values():
            ids.sort()
        for ids in self.by_verb.values():
            ids.sort()

    def __len__(self) -> int:
        return len(self.sentences)

    def ids(self) -> list[str]:
        return sorted(self.sentences)

    def same_subject_candidates(self, s: ParsedSentence) -> list[str]:
        """Ids of other pool sentences sharing at least one subject lemma
        with ``s``, ascending id. Raises NoSubject when ``s`` has no subject."""
        subjects = subject_lemmas(s)
        if not subjects:
            raise NoSubject(f"{s.id}: no subject token")
        hits: set[str] = set()
        for lem in subjects:
            hits.update(self.by_subject.get(lem, ()))
        hits.discard(s.id)
        return sorted(hits)

    def irrelevant_sentences(self, s: ParsedSentence) -> list[str]:
        """Ids of pool sentences sharing no subject lemma and no object lemma
        with ``s``, ascending id."""
        subjects = subject_lemmas(s)
        objects = object_lemmas(s)
        out = []
        for sid in sorted(self.sentences):
            if sid == s.id:
                continue
            f = self.facts[sid]
            if f.subjects & subjects:
                continue
            if f.objects & objects:
                continue
            out.append(sid)
        return out


def build_pool(sentences: Iterable[ParsedSentence]) -> PremisePool:
    return PremisePool(sentences)


def input_fingerprint(paths: Sequence[str | os.PathLike]) -> str:
    """Stable hash over the bytes of the corpus files a pool was built from."""
    h = hashlib.sha256()
    for p in sorted(os.fspath(x) for x in paths):
        h.update(os.path.basename(p).encode("utf-8"))
        with open(p, "rb") as fh:
            for chunk in iter(lambda: fh.read(1 << 16), b""):
                h.update(chunk)
    return h.hexdigest()


def save_pool(pool: PremisePool, path: str | os.PathLike, *, input_hash: str = "") -> None:
    """Snapshot = versioned JSON header + embedded CoNLL-U corpus."""
    payload = {
        "version": SNAPSHOT_VERSION,
        "input_hash": input_hash,
        "count": len(pool),
        "corpus": "".join(serialize_conllu(pool.sentences[sid]) for sid in pool.sentences),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_pool(path: str | os.PathLike, *, expect_input_hash: str | None = None) -> PremisePool:
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as err:
            raise SnapshotFormatError(f"{path}: not a pool snapshot ({err})") from None
    if not isinstance(payload, dict) or payload.get("version") != SNAPSHOT_VERSION:
        raise SnapshotFormatError(f"{path}: unsupported snapshot version {payload.get('version')!r}")
    if expect_input_hash is not None and payload.get("input_hash") != expect_input_hash:
        raise StaleSnapshot(f"{path}: snapshot out of date with its corpus")
    sentences = list(parse_conllu(payload.get("corpus", ""), strict=True))
    if len(sentences) != payload.get("count"):
        raise SnapshotFormatError(f"{path}: corpus count mismatch")
    return PremisePool(sentences)
