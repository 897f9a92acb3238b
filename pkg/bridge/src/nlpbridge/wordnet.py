"""Reader for WordNet database files (the ``data.noun`` / ``data.verb`` /
``data.adj`` flat format).

Each data line is::

    offset lex_filenum ss_type w_cnt word lex_id [word lex_id ...]
    p_cnt [symbol offset pos source_target ...] [frame data] | gloss

``w_cnt`` is two-digit hex, ``lex_id`` one hex digit, ``p_cnt`` three-digit
decimal. ``source_target`` is four hex digits: the high byte numbers the
source word inside this synset, the low byte the target word (00/00 means
the pointer is semantic, relating whole synsets). License header lines
start with whitespace and are skipped. Pair extraction keeps single-word
lemmas as keys; multiword targets have underscores turned into spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .fileio import MissingResource, require

HYPERNYM = "@"
INSTANCE_HYPERNYM = "@i"
ANTONYM = "!"


@dataclass
class Synset:
    offset: str
    pos: str
    words: list[str] = field(default_factory=list)
    # (symbol, target_offset, target_pos, source_word_num, target_word_num)
    pointers: list[tuple[str, str, str, int, int]] = field(default_factory=list)


def _clean_word(raw: str) -> str:
    """Drop the adjective position marker and make underscores spaces."""
    if raw.endswith(")") and "(" in raw:
        raw = raw[: raw.rindex("(")]
    return raw.replace("_", " ").lower()


def parse_data_line(line: str) -> Synset:
    data = line.split("|", 1)[0]
    fields = data.split()
    offset, _lex_filenum, ss_type = fields[0], fields[1], fields[2]
    pos = "a" if ss_type == "s" else ss_type
    w_cnt = int(fields[3], 16)
    idx = 4
    words = []
    for _ in range(w_cnt):
        words.append(_clean_word(fields[idx]))
        idx += 2  # word then lex_id
    p_cnt = int(fields[idx])
    idx += 1
    pointers = []
    for _ in range(p_cnt):
        symbol, t_offset, t_pos, st = fields[idx : idx + 4]
        pointers.append((symbol, t_offset, t_pos, int(st[:2], 16), int(st[2:], 16)))
        idx += 4
    return Synset(offset=offset, pos=pos, words=words, pointers=pointers)


def parse_data_file(path: Path) -> dict[str, Synset]:
    synsets: dict[str, Synset] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip() or line[0].isspace():
                continue
            syn = parse_data_line(line)
            synsets[syn.offset] = syn
    return synsets


class WordNetData:
    """The noun, verb, and adjective databases of one WordNet release."""

    FILES = {"n": "data.noun", "v": "data.verb", "a": "data.adj"}

    def __init__(self, root: Path):
        self.root = Path(root)
        self.synsets: dict[str, dict[str, Synset]] = {}
        for pos, name in self.FILES.items():
            path = require(self.root / name, f"wordnet {name}")
            self.synsets[pos] = parse_data_file(path)
        self._membership: dict[str, set[tuple[str, str]]] = {}
        for pos, table in self.synsets.items():
            for syn in table.values():
                for w in syn.words:
                    self._membership.setdefault(w, set()).add((pos, syn.offset))

    @classmethod
    def open(cls, root: Path) -> "WordNetData":
        root = Path(root)
        if not root.is_dir():
            raise MissingResource(f"wordnet directory not found: {root}")
        return cls(root)

    def synset_ids(self, word: str) -> set[tuple[str, str]]:
        return self._membership.get(word.lower(), set())

    def has_pos(self, word: str, pos: str) -> bool:
        return any(p == pos for p, _ in self.synset_ids(word))

    def share_synset(self, a: str, b: str) -> bool:
        return bool(self.synset_ids(a) & self.synset_ids(b))

    def hypernym_pairs(self, pos: str = "n") -> list[tuple[str, str]]:
        """(word, hypernym head word) for every direct hypernym link."""
        table = self.synsets[pos]
        pairs = set()
        for syn in table.values():
            targets = [
                table[t_off]
                for sym, t_off, t_pos, _s, _t in syn.pointers
                if sym in (HYPERNYM, INSTANCE_HYPERNYM) and t_pos == pos and t_off in table
            ]
            for target in targets:
                if not target.words:
                    continue
                value = target.words[0]
                for word in syn.words:
                    if " " in word or word == value:
                        continue
                    pairs.add((word, value))
        return sorted(pairs)

    def antonym_pairs(self) -> list[tuple[str, str]]:
        """(word, antonym) from lemma-level antonym pointers, all POS."""
        pairs = set()
        for pos, table in self.synsets.items():
            for syn in table.values():
                for sym, t_off, t_pos, s_num, t_num in syn.pointers:
                    if sym != ANTONYM:
                        continue
                    target = self.synsets.get(t_pos, {}).get(t_off)
                    if target is None:
                        continue
                    sources = (
                        [syn.words[s_num - 1]] if 0 < s_num <= len(syn.words) else syn.words
                    )
                    values = (
                        [target.words[t_num - 1]]
                        if 0 < t_num <= len(target.words)
                        else target.words[:1]
                    )
                    for w in sources:
                        for v in values:
                            if " " in w or not v or w == v:
                                continue
                            pairs.add((w, v))
        return sorted(pairs)
