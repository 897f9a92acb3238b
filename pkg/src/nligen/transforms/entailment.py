"""Entailment-generating rules: paraphrase lookup, snippet extraction,
hypernym substitution, pronoun substitution, and counting (which also emits
its contradiction variants)."""

from __future__ import annotations

from itertools import combinations

from ..conllu import ParsedSentence, dep_base
from ..inflect import (
    ALWAYS_PLURAL,
    indefinite_article,
    match_capitalization,
    parse_count,
    pluralize,
    render_count,
)
from ..lexicon import Lexicon
from ..rng import local_rng
from .base import (
    CONTRADICTION,
    ENTAILMENT,
    SentenceEditor,
    TransformOutcome,
)

PA_CAP = 10           # hard upper bound on paraphrases consumed per premise
SUBSET_LIMIT = 6      # max droppable modifiers enumerated as full powerset


def pa(
    s: ParsedSentence,
    paraphrases: dict[str, list[str]],
    reparse: dict[str, ParsedSentence] | None = None,
) -> list[TransformOutcome]:
    """Paraphrase lookup by sentence id. First ten sidecar rows only. The
    hypothesis parse comes from the reparse cache (keyed by exact text) when
    one is supplied; without it PA still emits but cannot feed a chain."""
    out = []
    for text in paraphrases.get(s.id, [])[:PA_CAP]:
        if text == s.text:
            continue
        derived = None
        if reparse is not None and text in reparse:
            derived = reparse[text]
        out.append(
            TransformOutcome(
                hypothesis=text, label=ENTAILMENT, tag="PA",
                swap_eligible=False, derived=derived,
            )
        )
    return out


def _childless(s: ParsedSentence, index: int) -> bool:
    return not s.children(index)


def _drop_to_outcome(s: ParsedSentence, drop: set[int], tag: str = "ES") -> TransformOutcome | None:
    if not drop or len(drop) >= len(s.tokens):
        return None
    try:
        derived = SentenceEditor(s).delete(drop).build()
    except ValueError:
        return None
    if derived.text == s.text:
        return None
    return TransformOutcome(
        hypothesis=derived.text, label=ENTAILMENT, tag=tag,
        swap_eligible=True, swap_label="N", derived=derived,
    )


def es(s: ParsedSentence) -> list[TransformOutcome]:
    """Snippet extraction: deletion-only simplifications.

    (i) drop non-empty subsets of childless adjectival modifiers of nouns;
    (ii) same for childless adverbial modifiers; (iii) drop all childless
    non-conjunct adjectives at once; (iv) keep the root plus its left-side
    direct dependents when that span holds a verb and three or more tokens;
    (v) drop prepositional/oblique modifier subtrees singly and in
    combination.
    """
    outcomes: list[TransformOutcome] = []
    seen: set[str] = set()

    def push(drop: set[int]):
        o = _drop_to_outcome(s, drop)
        if o is not None and o.hypothesis not in seen:
            seen.add(o.hypothesis)
            outcomes.append(o)

    def subset_drops(indices: list[int]):
        if not indices:
            return
        if len(indices) > SUBSET_LIMIT:
            # powerset would blow up; keep singletons and the full set
            for i in indices:
                push({i})
            push(set(indices))
            return
        for r in range(1, len(indices) + 1):
            for combo in combinations(indices, r):
                push(set(combo))

    amods = [
        t.index for t in s.tokens
        if dep_base(t.deprel) == "amod" and _childless(s, t.index)
        and s.token(t.head).upos in ("NOUN", "PROPN")
    ]
    subset_drops(amods)

    advmods = [
        t.index for t in s.tokens
        if dep_base(t.deprel) == "advmod" and _childless(s, t.index)
    ]
    subset_drops(advmods)

    bare_adjs = {
        t.index for t in s.tokens
        if t.upos == "ADJ" and _childless(s, t.index) and dep_base(t.deprel) != "conj"
    }
    push(bare_adjs)

    root = s.root
    left_kids = [t.index for t in s.children(root.index) if t.index < root.index]
    keep = set(left_kids) | {root.index}
    if len(keep) >= 3 and any(s.token(i).upos in ("VERB", "AUX") for i in keep):
        push({t.index for t in s.tokens} - keep)

    pp_roots = [
        t.index for t in s.tokens
        if dep_base(t.deprel) in ("prep", "obl", "nmod")
    ]
    pp_subtrees = [frozenset(t.index for t in s.subtree(i)) for i in pp_roots]
    # nested PPs: drop subtrees that sit inside another candidate's subtree
    pp_subtrees = [
        st for st in pp_subtrees
        if not any(st < other for other in pp_subtrees)
    ]
    if len(pp_subtrees) <= SUBSET_LIMIT:
        for r in range(1, len(pp_subtrees) + 1):
            for combo in combinations(pp_subtrees, r):
                push(set().union(*combo))
    else:
        for st in pp_subtrees:
            push(set(st))

    return outcomes


def _is_plural_use(form: str, lemma: str) -> bool:
    f, w = form.lower(), lemma.lower()
    return (f != w and f == pluralize(w)) or w in ALWAYS_PLURAL


def _substitute_noun(s: ParsedSentence, index: int, replacement: str, *,
                     fix_article: bool) -> SentenceEditor:
    """In-place noun swap keeping number and capitalization; optionally
    repairs an immediately preceding a/an."""
    tok = s.token(index)
    new = replacement
    if _is_plural_use(tok.form, tok.lemma):
        new = pluralize(new)
    new = match_capitalization(tok.form, new)
    ed = SentenceEditor(s).set_form(index, new, lemma=replacement.lower())
    if fix_article and index > 1:
        prev = s.token(index - 1)
        if prev.upos == "DET" and prev.form.lower() in ("a", "an"):
            art = indefinite_article(replacement.split()[0])
            ed.set_form(index - 1, match_capitalization(prev.form, art))
    return ed


def hs(s: ParsedSentence, lex: Lexicon) -> list[TransformOutcome]:
    """Hypernym substitution: one noun generalized per outcome."""
    outcomes = []
    for t in s.tokens:
        if t.upos not in ("NOUN", "PROPN"):
            continue
        for target in lex.hypernyms(t.lemma):
            try:
                derived = _substitute_noun(s, t.index, target, fix_article=True).build()
            except ValueError:
                continue
            if derived.text == s.text:
                continue
            outcomes.append(
                TransformOutcome(
                    hypothesis=derived.text, label=ENTAILMENT, tag="HS",
                    swap_eligible=True, swap_label="N", derived=derived,
                )
            )
    return outcomes


def ps(s: ParsedSentence, lex: Lexicon) -> list[TransformOutcome]:
    """Pronoun substitution: each subject noun phrase collapses to its
    pronoun; trailing punctuation is dropped."""
    outcomes = []
    for t in s.tokens:
        if dep_base(t.deprel) not in ("nsubj", "nsubjpass"):
            continue
        if t.upos not in ("NOUN", "PROPN"):
            continue
        # a coordinated subject collapses to one plural referent
        plural = _is_plural_use(t.form, t.lemma) or any(
            dep_base(c.deprel) == "conj" for c in s.children(t.index)
        )
        pronoun = lex.pronoun_for(t.lemma, plural=plural)
        subtree = {x.index for x in s.subtree(t.index)}
        if len(subtree) >= len(s.tokens):
            continue
        ed = SentenceEditor(s)
        ed.delete(subtree - {t.index})
        ed.set_form(t.index, pronoun, lemma=pronoun, upos="PRON")
        ed.drop_final_punct()
        try:
            derived = ed.build()
        except ValueError:
            continue
        if derived.text == s.text:
            continue
        outcomes.append(
            TransformOutcome(
                hypothesis=derived.text, label=ENTAILMENT, tag="PS",
                swap_eligible=False, derived=derived,
            )
        )
    return outcomes


def _count_of(s: ParsedSentence, noun_index: int) -> int:
    """Tokens a noun contributes to a counted group: its nummod value when
    present, else 1."""
    for c in s.children(noun_index):
        if dep_base(c.deprel) == "nummod":
            v = parse_count(c.form)
            if v is not None:
                return v
    return 1


def ct(s: ParsedSentence, lex: Lexicon, rng_seed: int) -> list[TransformOutcome]:
    """Counting: group nouns under a shared hypernym and state how many.

    Emits entailed count statements (true totals) and contradictory ones
    (a seeded wrong total). When the group's tokens form one contiguous span
    the count phrase also substitutes directly into the sentence.
    """
    rng = local_rng(rng_seed, s.id, "CT")
    groups: dict[str, list[int]] = {}
    for t in s.tokens:
        if t.upos not in ("NOUN", "PROPN"):
            continue
        for h in lex.hypernyms(t.lemma):
            groups.setdefault(h, []).append(t.index)

    outcomes = []
    for hypernym in sorted(groups):
        members = groups[hypernym]
        if len(members) < 2:
            continue
        total = sum(_count_of(s, i) for i in members)
        if total < 2:
            continue
        plural = pluralize(hypernym)
        true_word = render_count(total, "word" if total <= 20 else "digit")

        # one seeded wrong count per group, reused across templates
        pool = [v for v in range(2, 21) if v != total]
        wrong = rng.choice(pool)
        wrong_word = render_count(wrong, "word")
        over = total + rng.choice([1, 2, 3])
        over_word = render_count(over, "word" if over <= 20 else "digit")

        def emit(text: str, label: str):
            outcomes.append(
                TransformOutcome(hypothesis=text, label=label, tag="CT", swap_eligible=False)
            )

        direct = _direct_count_substitution(s, members, f"{true_word} {plural}")
        if direct is not None:
            emit(direct, ENTAILMENT)

        cap = true_word.capitalize()
        emit(f"There are {true_word} {plural} present", ENTAILMENT)
        emit(f"{cap} {plural} are present", ENTAILMENT)
        emit(f"There are multiple {plural} present", ENTAILMENT)
        emit(f"Several {plural} are present", ENTAILMENT)
        if total >= 3:
            # "more than one X are present" reads badly; start at two
            fewer = render_count(total - 1, "word" if total - 1 <= 20 else "digit")
            emit(f"There are more than {fewer} {plural} present", ENTAILMENT)
        emit(f"There are at least {true_word} {plural} present", ENTAILMENT)

        emit(f"There are {wrong_word} {plural} present", CONTRADICTION)
        emit(f"{wrong_word.capitalize()} {plural} are present", CONTRADICTION)
        emit(f"There are more than {true_word} {plural} present", CONTRADICTION)
        emit(f"There are at least {over_word} {plural} present", CONTRADICTION)

    return outcomes


def _direct_count_substitution(s: ParsedSentence, members: list[int], phrase: str) -> str | None:
    """Replace a contiguous coordination span ("A man and woman") with the
    count phrase ("two people"), capitalized at sentence start."""
    span: set[int] = set()
    for i in members:
        span.update(t.index for t in s.subtree(i))
    lo, hi = min(span), max(span)
    if span != set(range(lo, hi + 1)):
        return None
    # the span head must be the only member whose head lies outside the span
    heads_out = [i for i in span if s.token(i).head == 0 or s.token(i).head not in span]
    if len(heads_out) != 1:
        return None
    anchor = heads_out[0]
    text = phrase[0].upper() + phrase[1:] if lo == 1 else phrase
    ed = SentenceEditor(s)
    ed.delete(span - {anchor})
    ed.set_form(anchor, text, lemma=phrase)
    try:
        return ed.build().text
    except ValueError:
        return None
