"""Deterministic paraphrase rules over parsed captions.

Three structure-preserving rewrites:

* plain progressive clause to the existential frame
  ("A dog is sleeping on a mat." -> "There is a dog sleeping on a mat.")
* existential frame back to a plain progressive clause
* present progressive to simple present
  ("A dog is sleeping." -> "A dog sleeps.")

Outputs identical to the source text are dropped, duplicates collapse,
and at most ``paraphrase_cap`` survive per sentence. The sidecar TSV is
``sentence_id<TAB>paraphrase`` and a companion CoNLL-U file carries the
parses of the paraphrases themselves so downstream consumers never need
to re-parse them.
"""

from __future__ import annotations

from .config import BridgeConfig
from .textparse import (
    ParsedCaption,
    ParseSkip,
    Word,
    parse_caption,
    tokenize,
    verb_lemma,
)

PRESENT_BE = {"is", "are"}


def third_person(base: str) -> str:
    if base == "be":
        return "is"
    if base == "have":
        return "has"
    if base == "go" or base == "do":
        return base + "es"
    if base.endswith("y") and len(base) > 1 and base[-2] not in "aeiou":
        return base[:-1] + "ies"
    if base.endswith(("s", "x", "z", "ch", "sh", "o")):
        return base + "es"
    return base + "s"


def _subtree(words: list[Word], root_i: int) -> list[int]:
    """0-based indices of the subtree rooted at ``root_i``, surface order."""
    kids: dict[int, list[int]] = {}
    for i, w in enumerate(words):
        kids.setdefault(w.head - 1, []).append(i)
    out = []
    stack = [root_i]
    while stack:
        i = stack.pop()
        out.append(i)
        stack.extend(kids.get(i, []))
    return sorted(out)


def _children(words: list[Word], head_i: int, deprel: str) -> list[int]:
    return [i for i, w in enumerate(words) if w.head - 1 == head_i and w.deprel == deprel]


def _render(forms: list[str]) -> str:
    """Space-join, gluing sentence punctuation, sentence-case the front."""
    out = ""
    for f in forms:
        if f in ".,!?;:":
            out = out.rstrip() + f + " "
        else:
            out += f + " "
    out = out.strip()
    return out[:1].upper() + out[1:] if out else out


def _decap(form: str) -> str:
    return form if form == "I" else form[:1].lower() + form[1:]


def _root(words: list[Word]) -> int | None:
    for i, w in enumerate(words):
        if w.head == 0:
            return i
    return None


def _progressive_parts(words: list[Word]) -> tuple[int, int, int] | None:
    """(subject, aux, root) for a plain present-progressive clause."""
    r = _root(words)
    if r is None or words[r].upos != "VERB" or not words[r].form.lower().endswith("ing"):
        return None
    if _children(words, r, "expl"):
        return None
    aux = [i for i in _children(words, r, "aux") if words[i].form.lower() in PRESENT_BE]
    subj = _children(words, r, "nsubj")
    if len(aux) != 1 or len(subj) != 1:
        return None
    return subj[0], aux[0], r


def _passive_parts(words: list[Word]) -> tuple[int, int, int] | None:
    """(subject, aux, root) for a present passive clause."""
    r = _root(words)
    if r is None or words[r].upos != "VERB":
        return None
    aux = [i for i in _children(words, r, "auxpass") if words[i].form.lower() in PRESENT_BE]
    subj = _children(words, r, "nsubjpass")
    if len(aux) != 1 or len(subj) != 1:
        return None
    return subj[0], aux[0], r


def _definite(words: list[Word], subj: int) -> bool:
    return any(
        words[i].lemma in ("the", "this", "that", "these", "those")
        for i in _children(words, subj, "det")
    )


def to_existential(p: ParsedCaption) -> str | None:
    parts = _progressive_parts(p.words) or _passive_parts(p.words)
    if parts is None:
        return None
    subj, aux, r = parts
    if _definite(p.words, subj):
        return None  # "There is the dog sleeping" reads marked
    subj_idx = set(_subtree(p.words, subj))
    rest = [
        i for i in range(len(p.words))
        if i not in subj_idx and i not in (aux, r) and p.words[i].upos != "PUNCT"
    ]
    if any(i < aux for i in rest):
        return None  # leading adverbials would scramble
    forms = ["There", p.words[aux].form.lower()]
    forms += [
        _decap(p.words[i].form) if i == min(subj_idx) else p.words[i].form
        for i in sorted(subj_idx)
    ]
    forms.append(p.words[r].form)
    forms += [p.words[i].form for i in rest]
    forms += [w.form for w in p.words if w.upos == "PUNCT"]
    return _render(forms)


def from_existential(p: ParsedCaption) -> str | None:
    r = _root(p.words)
    if r is None or p.words[r].lemma != "be" or not _children(p.words, r, "expl"):
        return None
    subj = _children(p.words, r, "nsubj")
    if len(subj) != 1:
        return None
    acl = [i for i in _children(p.words, subj[0], "acl") if p.words[i].upos == "VERB"]
    if len(acl) != 1 or not p.words[acl[0]].form.lower().endswith(("ing", "ed")):
        return None
    subj_idx = set(_subtree(p.words, subj[0]))
    acl_idx = set(_subtree(p.words, acl[0]))
    np_idx = sorted(subj_idx - acl_idx)
    covered = subj_idx | {r} | set(_children(p.words, r, "expl")) | {
        i for i, w in enumerate(p.words) if w.upos == "PUNCT"
    }
    if len(covered) != len(p.words):
        return None
    forms = [p.words[i].form for i in np_idx]
    forms.append(p.words[r].form.lower())
    forms += [p.words[i].form for i in sorted(acl_idx)]
    forms += [w.form for w in p.words if w.upos == "PUNCT"]
    return _render(forms)


def to_simple_present(p: ParsedCaption) -> str | None:
    parts = _progressive_parts(p.words)
    if parts is None:
        return None
    _subj, aux, r = parts
    base = verb_lemma(p.words[r].form)
    inflected = third_person(base) if p.words[aux].form.lower() == "is" else base
    forms = []
    for i, w in enumerate(p.words):
        if i == aux:
            continue
        forms.append(inflected if i == r else w.form)
    return _render(forms)


RULES = (to_existential, from_existential, to_simple_present)


def candidates(p: ParsedCaption) -> list[str]:
    out = []
    for rule in RULES:
        text = rule(p)
        if text and text not in out:
            out.append(text)
    return out


def cap_candidates(texts: list[str], source_text: str, cap: int) -> list[str]:
    """Drop source-identical and duplicate texts, keep the first ``cap``."""
    out: list[str] = []
    for t in texts:
        if t == source_text or t in out:
            continue
        out.append(t)
        if len(out) >= cap:
            break
    return out


def gen_paraphrases(
    sentences: list[ParsedCaption], cfg: BridgeConfig
) -> tuple[list[tuple[str, str]], list[ParsedCaption]]:
    """(sidecar rows, parses of the paraphrase texts themselves)."""
    rows: list[tuple[str, str]] = []
    reparses: list[ParsedCaption] = []
    seen_texts: set[str] = set()
    for p in sentences:
        kept = cap_candidates(candidates(p), p.text, cfg.paraphrase_cap)
        for n, text in enumerate(kept, start=1):
            rows.append((p.sent_id, text))
            if text in seen_texts:
                continue
            seen_texts.add(text)
            try:
                reparses.append(parse_caption(tokenize(text), f"{p.sent_id}-p{n}"))
            except ParseSkip:
                pass
    return rows, reparses
