"""Raw caption text to the engine's CoNLL-U dialect.

A rule-based tagger and dependency builder for caption-style English: one
clause, optional coordination in the subject, progressive/passive/simple
predicates, PPs attached to the verb, and the existential "There is X
doing Y" frame. Sentences outside the grammar raise ParseSkip and the
caller skips them; this is a corpus adapter, not a general parser.

Output matches the engine's expectations: Stanford-style prep/pobj,
auxpass/nsubjpass passives, cc on the first conjunct with conj pointing
second to first, SpaceAfter=No gluing punctuation, # sent_id and # text
comments per block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

TOKEN_RE = re.compile(r"[A-Za-z0-9'-]+|[.,!?;:]")
END_PUNCT = {".", "!", "?"}
VOWELS = "aeiou"

DETS = {"a", "an", "the", "this", "that", "these", "those", "some", "every", "each", "no"}
ADPS = {
    "in", "on", "at", "near", "under", "over", "by", "behind", "beside",
    "with", "without", "across", "through", "down", "up", "of", "for",
    "from", "to", "into", "onto", "along", "around", "above", "below",
    "outside", "inside", "between",
}
CCONJS = {"and", "or"}
PRONOUNS = {"he", "she", "it", "they", "we", "i", "you", "him", "her", "them"}
BE_FORMS = {"is", "are", "was", "were", "am", "be", "been", "being"}
AUX_FORMS = BE_FORMS | {"do", "does", "did", "has", "have", "had"}
NUMBER_WORDS = {
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen", "twenty",
}

IRREGULAR_PAST = {
    "sat": "sit", "slept": "sleep", "stood": "stand", "ran": "run",
    "drove": "drive", "rode": "ride", "went": "go", "flew": "fly",
    "ate": "eat", "held": "hold", "read": "read", "sang": "sing",
    "swam": "swim", "lay": "lie", "left": "leave", "came": "come",
    "took": "take", "saw": "see",
}
IRREGULAR_ING = {"lying": "lie", "dying": "die", "tying": "tie"}
IRREGULAR_PLURAL = {
    "men": "man", "women": "woman", "people": "person", "children": "child",
    "geese": "goose", "feet": "foot", "mice": "mouse", "teeth": "tooth",
}

# small open-class lists resolving caption vocabulary the heuristics can't
KNOWN_ADJS = {
    "big", "small", "old", "young", "happy", "sad", "black", "white",
    "brown", "gray", "red", "green", "blue", "yellow", "tall", "short",
    "little", "large", "quiet", "busy", "sleepy", "playful", "gentle",
    "fast", "slow", "sandy", "muddy", "wooden", "shiny", "bright", "dark",
    "fluffy", "tiny", "long", "new", "dusty", "empty", "warm", "cold",
}
KNOWN_VERB_LEMMAS = {
    "sleep", "run", "walk", "sit", "stand", "ride", "drive", "fly", "eat",
    "read", "play", "jump", "swim", "sing", "dance", "wave", "rest", "bark",
    "chirp", "wait", "park", "hold", "carry", "watch", "chase", "climb",
    "smile", "look", "go", "strike", "cover", "lie", "graze", "doze",
    "gallop", "trot", "nap", "wander", "stroll", "race", "drift",
}


class ParseSkip(ValueError):
    """Sentence falls outside the caption grammar."""


def tokenize(text: str) -> list[str]:
    return TOKEN_RE.findall(text)


def split_sentences(text: str) -> list[list[str]]:
    """Token lists, split on terminal punctuation (kept with its sentence)."""
    out: list[list[str]] = []
    cur: list[str] = []
    for tok in tokenize(text):
        cur.append(tok)
        if tok in END_PUNCT:
            out.append(cur)
            cur = []
    if cur:
        out.append(cur)
    return [s for s in out if any(t not in END_PUNCT for t in s)]


def _one_vowel_group(w: str) -> bool:
    return len(re.findall(r"[aeiouy]+", w)) == 1


def _restore_stem(stem: str) -> str:
    """Undo the spelling changes suffixation applies to a verb stem."""
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "lsz":
        return stem[:-1]                      # sitt -> sit
    if stem.endswith("e"):
        return stem
    if stem in KNOWN_VERB_LEMMAS:
        return stem                           # sing, not singe
    if len(stem) >= 3 and stem[-1] in "cgsvz" and stem[-1] != stem[-2]:
        return stem + "e"                     # danc -> dance, chas -> chase
    if (
        len(stem) >= 2
        and _one_vowel_group(stem)
        and stem[-1] not in VOWELS + "wxy"
        and stem[-2] in VOWELS
        and (len(stem) < 3 or stem[-3] not in VOWELS)
    ):
        return stem + "e"                     # tak -> take, but sleep stays
    return stem


def verb_lemma(form: str) -> str:
    w = form.lower()
    if w in IRREGULAR_PAST:
        return IRREGULAR_PAST[w]
    if w in IRREGULAR_ING:
        return IRREGULAR_ING[w]
    if w in BE_FORMS:
        return "be"
    if w == "did" or w == "does":
        return "do"
    if w in ("has", "had"):
        return "have"
    if w.endswith("ing") and len(w) > 4:
        return _restore_stem(w[:-3])
    if w.endswith("ied") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ed") and len(w) > 3:
        stem = w[:-2]
        return stem if stem.endswith("e") else _restore_stem(stem)
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith(("oes", "ses", "xes", "zes", "ches", "shes")) and len(w) > 3:
        return _restore_stem(w[:-2])
    if w.endswith("s") and not w.endswith("ss") and len(w) > 2:
        return w[:-1]
    return w


def noun_lemma(form: str) -> str:
    w = form.lower()
    if w in IRREGULAR_PLURAL:
        return IRREGULAR_PLURAL[w]
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith(("ses", "xes", "zes", "ches", "shes")) and len(w) > 4:
        return w[:-2]
    if w.endswith("s") and not w.endswith(("ss", "us", "is")) and len(w) > 3:
        return w[:-1]
    return w


def _is_verbish(w: str) -> bool:
    base = verb_lemma(w)
    return base in KNOWN_VERB_LEMMAS


@dataclass
class Word:
    form: str
    lemma: str = ""
    upos: str = ""
    head: int = 0          # 1-based index into the sentence, 0 = root
    deprel: str = "dep"
    space_after: bool = True


def _tag(tokens: list[str]) -> list[Word]:
    words = [Word(form=t) for t in tokens]
    n = len(words)
    for i, w in enumerate(words):
        low = w.form.lower()
        if w.form in ".,!?;:":
            w.upos, w.lemma = "PUNCT", w.form
        elif low == "there" and i == 0 and n > 1 and words[1].form.lower() in ("is", "are", "was", "were"):
            w.upos, w.lemma = "PRON", "there"
        elif low in DETS:
            w.upos, w.lemma = "DET", low
        elif low in NUMBER_WORDS or w.form.isdigit():
            w.upos, w.lemma = "NUM", low
        elif low in CCONJS:
            w.upos, w.lemma = "CCONJ", low
        elif low in PRONOUNS:
            w.upos, w.lemma = "PRON", low
        elif low in AUX_FORMS:
            w.upos, w.lemma = "AUX", verb_lemma(low)    # refined below
        elif low in ADPS:
            w.upos, w.lemma = "ADP", low
        elif low in KNOWN_ADJS:
            w.upos, w.lemma = "ADJ", low
        elif low.endswith(("ing", "ed")) and _is_verbish(low):
            w.upos, w.lemma = "VERB", verb_lemma(low)
        elif _is_verbish(low) and low not in ("park",):  # "park" the noun is commoner in captions
            w.upos, w.lemma = "VERB", verb_lemma(low)
        else:
            w.upos, w.lemma = "NOUN", noun_lemma(low)
    # contextual repairs
    for i, w in enumerate(words):
        if w.upos == "AUX":
            nxt = next((x for x in words[i + 1:] if x.upos != "PUNCT"), None)
            if nxt is None or nxt.upos not in ("VERB", "ADJ"):
                # final or copular "be": keep as verb of its own
                if w.form.lower() in BE_FORMS:
                    w.upos = "VERB"
        if w.upos == "NOUN" and i > 0 and words[i - 1].upos == "AUX":
            low = w.form.lower()
            if low.endswith("ing") or low.endswith("ed"):
                w.upos, w.lemma = "VERB", verb_lemma(low)
        if w.upos == "VERB" and i > 0 and words[i - 1].upos in ("DET", "ADJ", "NUM"):
            # "the walk", "a smile": determiner context wins
            w.upos, w.lemma = "NOUN", noun_lemma(w.form.lower())
    return words


@dataclass
class ParsedCaption:
    sent_id: str
    words: list[Word] = field(default_factory=list)

    @property
    def text(self) -> str:
        out = []
        for w in self.words:
            out.append(w.form + (" " if w.space_after else ""))
        return "".join(out).rstrip()


def _noun_phrase(words: list[Word], start: int) -> tuple[int, int] | None:
    """(head_index, end_exclusive) of the NP starting at ``start``, indices
    0-based; None when no NP starts there."""
    i = start
    n = len(words)
    if i < n and words[i].upos == "DET":
        i += 1
    if i < n and words[i].upos == "NUM":
        i += 1
    while i < n and words[i].upos == "ADJ":
        i += 1
    # allow noun-noun compounds: keep consuming nouns while the next token
    # is also a noun (the last one heads the phrase)
    if i >= n or words[i].upos != "NOUN":
        return None
    while i + 1 < n and words[i + 1].upos == "NOUN":
        i += 1
    return i, i + 1


def _attach_np(words: list[Word], start: int, head_idx: int) -> None:
    """Point the NP's determiners/numbers/adjectives/compounds at its head."""
    for j in range(start, head_idx):
        w = words[j]
        if w.upos == "DET":
            w.head, w.deprel = head_idx + 1, "det"
        elif w.upos == "NUM":
            w.head, w.deprel = head_idx + 1, "nummod"
        elif w.upos == "ADJ":
            w.head, w.deprel = head_idx + 1, "amod"
        elif w.upos == "NOUN":
            w.head, w.deprel = head_idx + 1, "compound"


def parse_caption(tokens: list[str], sent_id: str) -> ParsedCaption:
    words = _tag(tokens)
    content = [i for i, w in enumerate(words) if w.upos != "PUNCT"]
    if not content:
        raise ParseSkip("punctuation only")

    if words[0].lemma == "there" and words[0].upos == "PRON":
        _parse_existential(words)
    else:
        _parse_plain(words)

    # punctuation hangs off the root; glue it to the previous token
    root = next(i for i, w in enumerate(words) if w.head == 0)
    for i, w in enumerate(words):
        if w.upos == "PUNCT":
            w.head, w.deprel = root + 1, "punct"
            if i > 0:
                words[i - 1].space_after = False
    return ParsedCaption(sent_id=sent_id, words=words)


def _parse_existential(words: list[Word]) -> None:
    """There is/are NP [participle PP*]: copula is the root."""
    if len(words) < 3 or words[1].form.lower() not in ("is", "are", "was", "were"):
        raise ParseSkip("existential without copula")
    cop = 1
    words[cop].upos, words[cop].lemma = "VERB", "be"
    words[cop].head, words[cop].deprel = 0, "root"
    words[0].head, words[0].deprel = cop + 1, "expl"
    np = _noun_phrase(words, 2)
    if np is None:
        raise ParseSkip("existential without subject noun")
    head, end = np
    _attach_np(words, 2, head)
    words[head].head, words[head].deprel = cop + 1, "nsubj"
    i = _coordination(words, end, head)
    attach_verb = None
    if i < len(words) and words[i].upos == "VERB":
        words[i].head, words[i].deprel = head + 1, "acl"
        attach_verb = i
        i += 1
    _parse_postverb(words, i, attach_verb if attach_verb is not None else cop)


def _coordination(words: list[Word], i: int, head: int) -> int:
    """Attach ``and NP`` continuations to the first conjunct at ``head``;
    returns the index after the last conjunct."""
    while i < len(words) and words[i].upos == "CCONJ":
        np2 = _noun_phrase(words, i + 1)
        if np2 is None:
            break
        words[i].head, words[i].deprel = head + 1, "cc"
        h2, e2 = np2
        _attach_np(words, i + 1, h2)
        words[h2].head, words[h2].deprel = head + 1, "conj"
        i = e2
    return i


def _parse_plain(words: list[Word]) -> None:
    np = _noun_phrase(words, 0)
    if np is not None:
        subj_start = 0
        subj_head, end = np
    elif words[0].upos == "PRON":
        subj_start, subj_head, end = 0, 0, 1
    else:
        raise ParseSkip("no subject phrase")

    i = _coordination(words, end, subj_head)

    # auxiliary chain then the main verb
    aux_idx = []
    while i < len(words) and words[i].upos == "AUX":
        aux_idx.append(i)
        i += 1
    if i >= len(words) or words[i].upos != "VERB":
        raise ParseSkip("no main verb")
    verb = i
    words[verb].head, words[verb].deprel = 0, "root"
    if subj_start < subj_head:
        _attach_np(words, subj_start, subj_head)

    passive = (
        bool(aux_idx)
        and words[aux_idx[-1]].form.lower() in BE_FORMS
        and words[verb].form.lower().endswith("ed")
    )
    subj_rel = "nsubjpass" if passive else "nsubj"
    words[subj_head].head, words[subj_head].deprel = verb + 1, subj_rel
    for a in aux_idx:
        words[a].head = verb + 1
        words[a].deprel = "auxpass" if passive and a == aux_idx[-1] else "aux"

    _parse_postverb(words, verb + 1, verb)


def _parse_postverb(words: list[Word], start: int, verb: int) -> None:
    """Objects and PPs after the verb, all attaching to ``verb``."""
    i = start
    saw_obj = False
    while i < len(words):
        w = words[i]
        if w.upos == "PUNCT":
            i += 1
            continue
        if w.upos == "ADP":
            np = _noun_phrase(words, i + 1)
            if np is None:
                raise ParseSkip(f"preposition {w.form!r} without object")
            w.head, w.deprel = verb + 1, "prep"
            h, e = np
            _attach_np(words, i + 1, h)
            words[h].head, words[h].deprel = i + 1, "pobj"
            i = e
            continue
        np = _noun_phrase(words, i)
        if np is not None and not saw_obj:
            h, e = np
            _attach_np(words, i, h)
            words[h].head, words[h].deprel = verb + 1, "dobj"
            saw_obj = True
            i = e
            continue
        if w.upos == "ADV" or (w.form.lower().endswith("ly") and w.upos == "NOUN"):
            w.upos = "ADV"
            w.lemma = w.form.lower()
            w.head, w.deprel = verb + 1, "advmod"
            i += 1
            continue
        raise ParseSkip(f"unexpected token {w.form!r}")


def to_conllu(parsed: ParsedCaption, text: str | None = None) -> str:
    lines = [f"# sent_id = {parsed.sent_id}", f"# text = {text or parsed.text}"]
    for i, w in enumerate(parsed.words, start=1):
        misc = "_" if w.space_after else "SpaceAfter=No"
        lines.append(
            "\t".join([
                str(i), w.form, w.lemma, w.upos, "_", "_",
                str(w.head), w.deprel, "_", misc,
            ])
        )
    return "\n".join(lines) + "\n"


def read_conllu(path) -> list[ParsedCaption]:
    """Read blocks this package wrote earlier (10-column lines, # comments)."""
    out: list[ParsedCaption] = []
    cur_id = ""
    words: list[Word] = []

    def flush() -> None:
        nonlocal cur_id, words
        if words:
            out.append(ParsedCaption(sent_id=cur_id, words=words))
        cur_id, words = "", []

    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip():
                flush()
                continue
            if line.startswith("#"):
                m = re.match(r"#\s*sent_id\s*=\s*(\S+)", line)
                if m:
                    cur_id = m.group(1)
                continue
            cols = line.split("\t")
            if len(cols) != 10:
                raise ValueError(f"{path}: expected 10 columns, got {len(cols)}")
            words.append(
                Word(
                    form=cols[1], lemma=cols[2], upos=cols[3],
                    head=int(cols[6]), deprel=cols[7],
                    space_after="SpaceAfter=No" not in cols[9],
                )
            )
    flush()
    return out


def parse_text(text: str, id_prefix: str) -> tuple[list[ParsedCaption], list[str]]:
    """All sentences of ``text`` parsed; returns (parses, skip messages)."""
    parses = []
    skipped = []
    for n, tokens in enumerate(split_sentences(text), start=1):
        sid = f"{id_prefix}{n:04d}"
        try:
            parses.append(parse_caption(tokens, sid))
        except ParseSkip as err:
            skipped.append(f"{sid}: {err} ({' '.join(tokens)})")
    return parses, skipped
