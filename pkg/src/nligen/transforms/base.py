"""Shared plumbing for transformation rules: the outcome record and
index-stable sentence surgery (delete / substitute) plus string-level
insertion helpers for rules that only need the surface form."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..conllu import ParsedSentence, Token

ENTAILMENT = "E"
CONTRADICTION = "C"
NEUTRAL = "N"
LABELS = (ENTAILMENT, CONTRADICTION, NEUTRAL)


@dataclass(frozen=True)
class TransformOutcome:
    """One generated hypothesis for one premise.

    ``derived`` carries the hypothesis's dependency parse when the rule can
    produce it structurally (needed only for rules that may feed another rule
    in a composite chain); otherwise None.
    """

    hypothesis: str
    label: str
    tag: str
    swap_eligible: bool = False
    swap_label: str | None = None
    derived: ParsedSentence | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"bad label {self.label!r}")
        if self.swap_eligible != (self.swap_label is not None):
            raise ValueError("swap_label must be set exactly when swap_eligible")
        if self.swap_label is not None and self.swap_label not in LABELS:
            raise ValueError(f"bad swap label {self.swap_label!r}")


class EditError(ValueError):
    pass


class SentenceEditor:
    """Deletion and in-place substitution on a parsed sentence, producing a
    valid ParsedSentence (indices re-packed, heads re-mapped). A surviving
    token whose head was deleted is an error: callers delete whole subtrees
    or leaf tokens only."""

    def __init__(self, s: ParsedSentence):
        self._s = s
        self._deleted: set[int] = set()
        self._over: dict[int, dict] = {}

    def _field(self, index: int, name: str):
        ov = self._over.get(index)
        if ov and name in ov:
            return ov[name]
        return getattr(self._s.token(index), name)

    def delete(self, indices) -> "SentenceEditor":
        for i in indices:
            self._deleted.add(int(i))
        return self

    def set_form(self, index: int, form: str, *, lemma: str | None = None,
                 upos: str | None = None, deprel: str | None = None) -> "SentenceEditor":
        ov = self._over.setdefault(index, {})
        ov["form"] = form
        if lemma is not None:
            ov["lemma"] = lemma
        if upos is not None:
            ov["upos"] = upos
        if deprel is not None:
            ov["deprel"] = deprel
        return self

    def swap_forms(self, i: int, j: int) -> "SentenceEditor":
        fi, li = self._field(i, "form"), self._field(i, "lemma")
        fj, lj = self._field(j, "form"), self._field(j, "lemma")
        self.set_form(i, fj, lemma=lj)
        self.set_form(j, fi, lemma=li)
        return self

    def survivors(self) -> list[int]:
        return [t.index for t in self._s.tokens if t.index not in self._deleted]

    def drop_final_punct(self) -> "SentenceEditor":
        alive = self.survivors()
        if alive and self._field(alive[-1], "upos") == "PUNCT":
            self._deleted.add(alive[-1])
        return self

    def lowercase_first_if_det(self) -> "SentenceEditor":
        alive = self.survivors()
        if alive and self._field(alive[0], "upos") == "DET":
            form = self._field(alive[0], "form")
            self.set_form(alive[0], form.lower())
        return self

    def build(self, sent_id: str | None = None) -> ParsedSentence:
        alive = self.survivors()
        if not alive:
            raise EditError(f"{self._s.id}: all tokens deleted")
        remap = {old: new for new, old in enumerate(alive, start=1)}
        tokens = []
        for old in alive:
            t = self._s.token(old)
            head = t.head
            if head != 0 and head not in remap:
                raise EditError(f"{self._s.id}: token {old} survives but its head {head} was deleted")
            ov = self._over.get(old, {})
            tokens.append(
                Token(
                    index=remap[old],
                    form=ov.get("form", t.form),
                    lemma=ov.get("lemma", t.lemma),
                    upos=ov.get("upos", t.upos),
                    head=0 if head == 0 else remap[head],
                    deprel=ov.get("deprel", t.deprel),
                    space_after=t.space_after,
                )
            )
        # sentence punctuation glues to the word on its left even when the
        # original neighbor was deleted
        for i in range(1, len(tokens)):
            if tokens[i].upos == "PUNCT" and tokens[i].form in (".", ",", "!", "?", ";", ":"):
                if tokens[i - 1].space_after:
                    tokens[i - 1] = replace(tokens[i - 1], space_after=False)
        return ParsedSentence(id=sent_id or self._s.id, tokens=tuple(tokens))


# -- string-level surgery (for insertion rules; no derived parse) ---------

@dataclass
class Piece:
    form: str
    space_after: bool
    token: Token | None  # None for inserted material


def pieces_of(s: ParsedSentence) -> list[Piece]:
    return [Piece(t.form, t.space_after, t) for t in s.tokens]


def insert_words(pieces: list[Piece], at: int, words: str) -> list[Piece]:
    """Insert the space-separated ``words`` before position ``at``, keeping
    the spacing flags on both sides of the splice consistent."""
    new = [Piece(w, True, None) for w in words.split()]
    if not new:
        return [Piece(p.form, p.space_after, p.token) for p in pieces]
    out = [Piece(p.form, p.space_after, p.token) for p in pieces]
    if out and at == len(out):
        new[-1].space_after = out[-1].space_after
        out[-1].space_after = True
    elif at > 0 and not out[at - 1].space_after:
        # glued boundary (e.g. before final "."): move the glue to the splice end
        new[-1].space_after = False
        out[at - 1].space_after = True
    return out[:at] + new + out[at:]


def render_pieces(pieces: list[Piece]) -> str:
    return "".join(p.form + (" " if p.space_after else "") for p in pieces).rstrip()


def finish_pieces(pieces: list[Piece], *, strip_punct: bool = False,
                  lower_det: bool = False) -> str:
    out = list(pieces)
    if strip_punct and out and out[-1].token is not None and out[-1].token.upos == "PUNCT":
        out = out[:-1]
    if lower_det and out and out[0].token is not None and out[0].token.upos == "DET":
        out[0] = Piece(out[0].form.lower(), out[0].space_after, out[0].token)
    return render_pieces(out)
