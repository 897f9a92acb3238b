"""Neutral-generating rules: adding modifiers, appending concept relations,
and same-subject retrieval with extra content."""

from __future__ import annotations

from ..conllu import ParsedSentence, dep_base
from ..lexicon import Lexicon
from ..pool import NoSubject, PremisePool, noun_lemmas, verb_lemmas
from ..rng import local_rng
from .base import NEUTRAL, TransformOutcome, finish_pieces, insert_words, pieces_of
from .contradiction import _sample_ids


def _outcome(text: str, tag: str, *, swap: str | None = None) -> TransformOutcome:
    return TransformOutcome(
        hypothesis=text, label=NEUTRAL, tag=tag,
        swap_eligible=swap is not None, swap_label=swap,
    )


def am(s: ParsedSentence, lex: Lexicon, rng_seed: int) -> list[TransformOutcome]:
    """Add a modifier the premise doesn't license: each (noun, modifier)
    insertion immediately before the noun. Deterministic enumeration; the
    seed parameter is part of the rule interface."""
    del rng_seed
    outcomes = []
    pos = {tok.index: i for i, tok in enumerate(s.tokens)}
    for t in s.tokens:
        if t.upos not in ("NOUN", "PROPN"):
            continue
        existing = {
            c.lemma.lower() for c in s.children(t.index) if dep_base(c.deprel) == "amod"
        }
        for mod in lex.modifiers(t.lemma):
            if mod.lower() in existing:
                continue
            pieces = insert_words(pieces_of(s), pos[t.index], mod)
            text = finish_pieces(pieces)
            if text != s.text:
                outcomes.append(_outcome(text, "AM", swap="E"))
    return outcomes


# phrase templates per concept relation; anything unlisted reads "which is X"
_CON_TEMPLATES = {
    "AtLocation": "at {t}",
    "MadeOf": "which is made of {t}",
    "CapableOf": "which can {t}",
    "HasA": "which has {t}",
    "UsedFor": "which is used for {t}",
    "PartOf": "which is part of {t}",
}


def con(s: ParsedSentence, lex: Lexicon, rng_seed: int) -> list[TransformOutcome]:
    """Append a concept-relation phrase right after a noun's subtree."""
    del rng_seed
    outcomes = []
    pos = {tok.index: i for i, tok in enumerate(s.tokens)}
    for t in s.tokens:
        if t.upos not in ("NOUN", "PROPN"):
            continue
        facts = lex.conceptnet_facts(t.lemma)
        if not facts:
            continue
        subtree = [x for x in s.subtree(t.index) if x.upos != "PUNCT"]
        if not subtree:
            continue
        insert_at = pos[subtree[-1].index] + 1
        for rel, target in facts:
            template = _CON_TEMPLATES.get(rel, "which is {t}")
            phrase = template.format(t=target)
            pieces = insert_words(pieces_of(s), insert_at, phrase)
            text = finish_pieces(pieces)
            if text != s.text:
                outcomes.append(_outcome(text, "Con", swap="E"))
    return outcomes


def ssncv(
    s: ParsedSentence, pool: PremisePool, lex: Lexicon, k: int, rng_seed: int
) -> list[TransformOutcome]:
    """Same subject, extra noun, no contradicting verb: retrieve pool
    sentences that share a subject with the premise, mention at least one
    noun the premise doesn't, and use no verb that contradicts a premise
    verb."""
    try:
        candidates = pool.same_subject_candidates(s)
    except NoSubject:
        return []
    s_nouns = noun_lemmas(s)
    forbidden: set[str] = set()
    for v in verb_lemmas(s):
        forbidden.update(x.lower() for x in lex.contra_verbs(v))

    hits = []
    for sid in candidates:
        cand = pool.sentences[sid]
        f = pool.facts[sid]
        if not (f.nouns - s_nouns):
            continue
        if f.verbs & forbidden:
            continue
        if cand.text == s.text:
            continue
        hits.append(sid)
    rng = local_rng(rng_seed, s.id, "SSNCV")
    return [
        _outcome(pool.sentences[sid].text, "SSNCV", swap=None)
        for sid in _sample_ids(hits, k, rng)
    ]
