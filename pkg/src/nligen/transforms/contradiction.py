"""Contradiction-generating rules: contradictory word/verb substitution,
contradictory-verb retrieval, subject-object swap, negation introduction,
number substitution, and irrelevant-hypothesis retrieval."""

from __future__ import annotations

from ..conllu import ParsedSentence, Token, dep_base
from ..inflect import (
    classify_verb_form,
    inflect_verb,
    match_capitalization,
    parse_count,
    pluralize,
    render_count,
)
from ..lexicon import Lexicon
from ..pool import NoSubject, NoVerb, PremisePool, main_verb
from ..rng import local_rng
from .base import (
    CONTRADICTION,
    SentenceEditor,
    TransformOutcome,
    finish_pieces,
    insert_words,
    pieces_of,
)
from .entailment import _is_plural_use, _substitute_noun


def _outcome(text: str, tag: str, *, swap: str | None = None,
             derived=None) -> TransformOutcome:
    return TransformOutcome(
        hypothesis=text, label=CONTRADICTION, tag=tag,
        swap_eligible=swap is not None, swap_label=swap, derived=derived,
    )


def cw(s: ParsedSentence, lex: Lexicon, rng_seed: int) -> list[TransformOutcome]:
    """Contradictory words: swap in a contradicting noun, an antonymous
    adjective, or one of each. Outcomes enumerate deterministically (noun
    substitutions, then adjective, then pairs); the seed parameter is part
    of the rule interface but enumeration needs no sampling."""
    del rng_seed
    noun_subs: list[tuple[int, str]] = []
    adj_subs: list[tuple[int, str]] = []
    for t in s.tokens:
        if t.upos in ("NOUN", "PROPN"):
            for target in lex.contra_nouns(t.lemma):
                noun_subs.append((t.index, target))
        elif t.upos == "ADJ":
            for target in lex.antonyms(t.lemma):
                adj_subs.append((t.index, target))

    outcomes = []

    def build(pairs: list[tuple[int, str]]):
        ed = SentenceEditor(s)
        for idx, target in pairs:
            tok = s.token(idx)
            if tok.upos in ("NOUN", "PROPN"):
                new = target
                if _is_plural_use(tok.form, tok.lemma):
                    new = pluralize(new)
                ed.set_form(idx, match_capitalization(tok.form, new), lemma=target.lower())
            else:
                ed.set_form(idx, match_capitalization(tok.form, target), lemma=target.lower())
        try:
            text = ed.build().text
        except ValueError:
            return
        if text != s.text:
            outcomes.append(_outcome(text, "CW", swap="C"))

    for sub in noun_subs:
        build([sub])
    for sub in adj_subs:
        build([sub])
    for nsub in noun_subs:
        for asub in adj_subs:
            build([nsub, asub])
    return outcomes


def _reinflect(target_lemma: str, like: Token) -> str | None:
    slot = classify_verb_form(like.form, like.lemma)
    if slot is None:
        return None
    return inflect_verb(target_lemma, slot)


def cv_substitute(s: ParsedSentence, lex: Lexicon) -> list[TransformOutcome]:
    """Contradictory verbs, substitution flavor: the main verb is replaced by
    each contradicting verb, matched to the original's inflection."""
    try:
        verb = main_verb(s)
    except NoVerb:
        return []
    outcomes = []
    for target in lex.contra_verbs(verb.lemma):
        form = _reinflect(target, verb)
        if form is None:
            continue
        ed = SentenceEditor(s).set_form(
            verb.index, match_capitalization(verb.form, form), lemma=target.lower()
        )
        try:
            text = ed.build().text
        except ValueError:
            continue
        if text != s.text:
            outcomes.append(_outcome(text, "CV", swap=None))
    return outcomes


def _sample_ids(ids: list[str], k: int, rng) -> list[str]:
    if len(ids) <= k:
        return list(ids)
    picked = rng.sample(range(len(ids)), k)
    return [ids[i] for i in sorted(picked)]


def cv_retrieve(
    s: ParsedSentence, pool: PremisePool, lex: Lexicon, k: int, rng_seed: int
) -> list[TransformOutcome]:
    """Contradictory verbs, retrieval flavor: pool sentences with a shared
    subject whose main verb contradicts the premise's main verb."""
    try:
        verb = main_verb(s)
        candidates = pool.same_subject_candidates(s)
    except (NoVerb, NoSubject):
        return []
    targets = {t.lower() for t in lex.contra_verbs(verb.lemma)}
    if not targets:
        return []
    hits = []
    for sid in candidates:
        cand = pool.sentences[sid]
        try:
            cand_verb = main_verb(cand)
        except NoVerb:
            continue
        if cand_verb.lemma.lower() in targets and cand.text != s.text:
            hits.append(sid)
    rng = local_rng(rng_seed, s.id, "CVr")
    return [
        _outcome(pool.sentences[sid].text, "CVr", swap=None)
        for sid in _sample_ids(hits, k, rng)
    ]


def sos(s: ParsedSentence) -> list[TransformOutcome]:
    """Swap the subject noun with the last object in surface order."""
    subjects = [
        t for t in s.tokens
        if dep_base(t.deprel) in ("nsubj", "nsubjpass") and t.upos in ("NOUN", "PROPN")
    ]
    objects = [
        t for t in s.tokens
        if dep_base(t.deprel) in ("obj", "dobj", "pobj") and t.upos in ("NOUN", "PROPN")
    ]
    if not subjects or not objects:
        return []
    subj = subjects[0]
    obj = objects[-1]
    if subj.lemma.lower() == obj.lemma.lower():
        return []

    def incoming(target: Token, source: Token) -> str:
        form = source.form if source.upos == "PROPN" else source.form.lower()
        return match_capitalization(target.form, form)

    ed = SentenceEditor(s)
    ed.set_form(subj.index, incoming(subj, obj), lemma=obj.lemma)
    ed.set_form(obj.index, incoming(obj, subj), lemma=subj.lemma)
    ed.drop_final_punct()
    ed.lowercase_first_if_det()
    try:
        text = ed.build().text
    except ValueError:
        return []
    if text == s.text:
        return []
    return [_outcome(text, "SOS", swap=None)]


NEGATORS = {"not", "n't", "never"}


def _find_target_verb(s: ParsedSentence) -> Token | None:
    root = s.root
    if root.upos == "VERB":
        return root
    for t in s.tokens:
        if t.upos == "VERB" and dep_base(t.deprel) not in ("aux", "auxpass", "cop"):
            return t
    return None


def ni(s: ParsedSentence) -> list[TransformOutcome]:
    """Negation introduction around the main verb; already-negated premises
    yield nothing."""
    verb = _find_target_verb(s)
    if verb is None:
        return []
    kids = s.children(verb.index)
    aux = [t for t in kids if dep_base(t.deprel) in ("aux", "auxpass") and t.index < verb.index]
    negated = any(t.form.lower() in NEGATORS for t in kids)
    for a in aux:
        negated = negated or any(
            t.form.lower() in NEGATORS for t in s.children(a.index)
        )
    if negated:
        return []

    pieces = pieces_of(s)
    pos = {t.index: i for i, t in enumerate(s.tokens)}
    if aux:
        out = insert_words(pieces, pos[aux[0].index] + 1, "not")
    else:
        slot = classify_verb_form(verb.form, verb.lemma)
        if slot == "ing":
            # bare participle ("a boy ... throwing a ball"): negate in place
            out = insert_words(pieces, pos[verb.index], "not")
        elif slot in ("past", "3sg", "base"):
            do = {"past": "did", "3sg": "does", "base": "do"}[slot]
            out = list(pieces)
            out[pos[verb.index]].form = verb.lemma.lower()
            out = insert_words(out, pos[verb.index], f"{do} not")
        else:
            return []
    text = finish_pieces(out, strip_punct=True, lower_det=True)
    if text == s.text:
        return []
    return [_outcome(text, "NI", swap=None)]


def ns(s: ParsedSentence, lex: Lexicon, rng_seed: int) -> list[TransformOutcome]:
    """Number substitution: each counted quantity gets one wrong value."""
    rng = local_rng(rng_seed, s.id, "NS")
    outcomes = []
    for t in s.tokens:
        if dep_base(t.deprel) != "nummod":
            continue
        value = parse_count(t.form)
        if value is None:
            continue
        loaded = [
            w for w in lex.number_words(t.form)
            if parse_count(w) not in (None, value)
        ]
        if loaded:
            replacement = rng.choice(loaded)
        else:
            candidates = [v for v in range(1, 21) if v != value]
            style = "word" if not t.form.isdigit() else "digit"
            replacement = render_count(rng.choice(candidates), style)
        ed = SentenceEditor(s).set_form(
            t.index, match_capitalization(t.form, replacement), lemma=replacement.lower()
        )
        try:
            text = ed.build().text
        except ValueError:
            continue
        if text != s.text:
            outcomes.append(_outcome(text, "NS", swap=None))
    return outcomes


def irh(s: ParsedSentence, pool: PremisePool, k: int, rng_seed: int) -> list[TransformOutcome]:
    """Irrelevant hypothesis: pool sentences sharing no subject and no
    object lemma with the premise."""
    ids = [
        sid for sid in pool.irrelevant_sentences(s)
        if pool.sentences[sid].text != s.text
    ]
    rng = local_rng(rng_seed, s.id, "IrH")
    return [
        _outcome(pool.sentences[sid].text, "IrH", swap=None)
        for sid in _sample_ids(ids, k, rng)
    ]
