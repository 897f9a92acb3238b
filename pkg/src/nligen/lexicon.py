"""Flat-file lexical resources.

One TSV row per fact: ``relation<TAB>source<TAB>target``. ``#`` starts a
comment line. Sources are matched case-insensitively; targets keep file
order. Recognized relations: hypernym, antonym, contra_noun, contra_verb,
modifier, pronoun, number_word, and conceptnet:<RelName>.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

KNOWN_RELATIONS = {
    "hypernym",
    "antonym",
    "contra_noun",
    "contra_verb",
    "modifier",
    "pronoun",
    "number_word",
}
CONCEPTNET_PREFIX = "conceptnet:"

# built-in pronoun defaults; loaded `pronoun` rows take precedence
_MALE_NOUNS = {
    "man", "boy", "guy", "lord", "husband", "father", "boyfriend", "son",
    "brother", "grandfather", "uncle",
}
_FEMALE_NOUNS = {
    "woman", "girl", "lady", "wife", "mother", "daughter", "sister",
    "girlfriend", "grandmother", "aunt",
}


class LexiconFormatError(ValueError):
    def __init__(self, message: str, *, path: str = "<stream>", line_no: int | None = None):
        loc = path + (f":{line_no}" if line_no is not None else "")
        super().__init__(f"{loc}: {message}")


class MalformedRow(LexiconFormatError):
    """Row does not have exactly three tab-separated fields, or a field is empty."""


class UnknownRelationTag(LexiconFormatError):
    """Relation is neither a known tag nor conceptnet:<RelName>."""


@dataclass
class Lexicon:
    """Relation -> source lemma (lowercased) -> targets in file order."""

    _maps: dict[str, dict[str, list[str]]] = field(default_factory=dict)
    self_pairs_dropped: int = 0

    # -- loading ---------------------------------------------------------

    def add(self, relation: str, source: str, target: str) -> bool:
        """Insert one fact; returns False when dropped as duplicate/self-pair."""
        src = source.strip().lower()
        tgt = target.strip()
        if src == tgt.lower():
            # e.g. an antonym row pairing a word with itself carries no signal
            self.self_pairs_dropped += 1
            return False
        targets = self._maps.setdefault(relation, {}).setdefault(src, [])
        if any(t.lower() == tgt.lower() for t in targets):
            return False
        targets.append(tgt)
        return True

    # -- queries ---------------------------------------------------------

    def targets(self, relation: str, lemma: str) -> list[str]:
        return list(self._maps.get(relation, {}).get(lemma.lower(), []))

    def hypernyms(self, lemma: str) -> list[str]:
        return self.targets("hypernym", lemma)

    def antonyms(self, lemma: str) -> list[str]:
        return self.targets("antonym", lemma)

    def contra_nouns(self, lemma: str) -> list[str]:
        return self.targets("contra_noun", lemma)

    def contra_verbs(self, lemma: str) -> list[str]:
        return self.targets("contra_verb", lemma)

    def modifiers(self, lemma: str) -> list[str]:
        return self.targets("modifier", lemma)

    def number_words(self, lemma: str) -> list[str]:
        return self.targets("number_word", lemma)

    def conceptnet_relations(self) -> list[str]:
        """Names of conceptnet relations present (without the prefix), sorted."""
        return sorted(
            r[len(CONCEPTNET_PREFIX):] for r in self._maps if r.startswith(CONCEPTNET_PREFIX)
        )

    def conceptnet_facts(self, lemma: str) -> list[tuple[str, str]]:
        """(RelName, target) facts for a lemma, relation name sorted, file order within."""
        out = []
        for name in self.conceptnet_relations():
            for tgt in self.targets(CONCEPTNET_PREFIX + name, lemma):
                out.append((name, tgt))
        return out

    def pronoun_for(self, lemma: str, *, plural: bool = False) -> str:
        """Substitute pronoun for a subject noun. Plural wins; then loaded
        rows; then the built-in gendered noun lists; unknown singulars get
        "it"."""
        if plural:
            return "they"
        loaded = self.targets("pronoun", lemma)
        if loaded:
            return loaded[0]
        w = lemma.lower()
        if w in _MALE_NOUNS:
            return "he"
        if w in _FEMALE_NOUNS:
            return "she"
        return "it"

    def relation_counts(self) -> dict[str, int]:
        return {
            rel: sum(len(v) for v in srcs.values())
            for rel, srcs in sorted(self._maps.items())
        }


def _check_relation(relation: str, path: str, line_no: int) -> None:
    if relation in KNOWN_RELATIONS:
        return
    if relation.startswith(CONCEPTNET_PREFIX) and len(relation) > len(CONCEPTNET_PREFIX):
        return
    raise UnknownRelationTag(f"unknown relation tag {relation!r}", path=path, line_no=line_no)


def load_lexicon_lines(lines: Iterable[str], *, path: str = "<stream>", into: Lexicon | None = None) -> Lexicon:
    lex = into if into is not None else Lexicon()
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 3:
            raise MalformedRow(
                f"expected 3 tab-separated fields, got {len(cols)}", path=path, line_no=line_no
            )
        relation, source, target = (c.strip() for c in cols)
        if not relation or not source or not target:
            raise MalformedRow("empty field", path=path, line_no=line_no)
        _check_relation(relation, path, line_no)
        lex.add(relation, source, target)
    return lex


def load_lexicon(paths: Iterable[str | os.PathLike] | str | os.PathLike) -> Lexicon:
    """Load one or more TSV files into a single merged lexicon."""
    if isinstance(paths, (str, os.PathLike)):
        paths = [paths]
    lex = Lexicon()
    for p in paths:
        with open(p, encoding="utf-8") as fh:
            load_lexicon_lines(fh, path=os.fspath(p), into=lex)
    return lex


def load_paraphrases(path: str | os.PathLike) -> dict[str, list[str]]:
    """Sidecar TSV: ``sentence_id<TAB>paraphrase_text``, one row per paraphrase."""
    out: dict[str, list[str]] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 2:
                raise MalformedRow(
                    f"expected 2 tab-separated fields, got {len(cols)}",
                    path=os.fspath(path), line_no=line_no,
                )
            sid, text = cols[0].strip(), cols[1].strip()
            if not sid or not text:
                raise MalformedRow("empty field", path=os.fspath(path), line_no=line_no)
            out.setdefault(sid, [])
            if text not in out[sid]:
                out[sid].append(text)
    return out
