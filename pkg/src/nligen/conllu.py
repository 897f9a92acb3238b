"""CoNLL-U reading, writing and dependency-tree access.

Only the UD v2 surface this project needs: 10 tab-separated columns,
``# sent_id`` / ``# text`` comments, ``SpaceAfter=No`` detokenization.
Multiword-token ranges (``1-2``) and empty nodes (``1.1``) are skipped.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class ConlluError(ValueError):
    """Base class for malformed CoNLL-U input."""

    def __init__(self, message: str, *, sent_id: str = "?", line_no: int | None = None):
        loc = f"{sent_id}" + (f" (line {line_no})" if line_no is not None else "")
        super().__init__(f"{loc}: {message}")
        self.sent_id = sent_id
        self.line_no = line_no


class MalformedLine(ConlluError):
    """Token line does not have 10 tab-separated columns or has bad field values."""


class CyclicTree(ConlluError):
    """Head chain loops (includes self-attachment)."""


class MultipleRoots(ConlluError):
    """Number of tokens with head 0 differs from one."""


class IndexGap(ConlluError):
    """Token indices are not 1..n after range/empty-node skipping, or a head points outside 0..n."""


@dataclass(frozen=True)
class Token:
    """One syntactic word. ``index`` is 1-based; ``head`` 0 means root."""

    index: int
    form: str
    lemma: str
    upos: str
    head: int
    deprel: str
    space_after: bool = True

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"token index must be >= 1, got {self.index}")
        if self.head < 0:
            raise ValueError(f"head must be >= 0, got {self.head}")
        if not self.form:
            raise ValueError("empty form")


def detokenize(tokens: Sequence[Token]) -> str:
    """Join forms using each token's space_after flag; no trailing whitespace."""
    return "".join(t.form + (" " if t.space_after else "") for t in tokens).rstrip()


@dataclass(frozen=True)
class ParsedSentence:
    """An immutable dependency-parsed sentence.

    Invariants (enforced at construction): indices are 1..n in order, exactly
    one token has head 0, every head is in 0..n, and the head relation is
    acyclic. ``text`` is always the detokenization of ``tokens``.
    """

    id: str
    tokens: tuple[Token, ...]
    text: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.tokens:
            raise ValueError(f"{self.id}: sentence with no tokens")
        n = len(self.tokens)
        for pos, t in enumerate(self.tokens, start=1):
            if t.index != pos:
                raise IndexGap(f"expected index {pos}, got {t.index}", sent_id=self.id)
            if t.head > n:
                raise IndexGap(f"head {t.head} out of range 1..{n}", sent_id=self.id)
        roots = [t.index for t in self.tokens if t.head == 0]
        if len(roots) != 1:
            raise MultipleRoots(f"expected exactly one root, found {len(roots)}", sent_id=self.id)
        for t in self.tokens:
            seen = set()
            cur = t.index
            while cur != 0:
                if cur in seen:
                    raise CyclicTree(f"cycle through token {t.index}", sent_id=self.id)
                seen.add(cur)
                cur = self.tokens[cur - 1].head
        object.__setattr__(self, "text", detokenize(self.tokens))

    def token(self, index: int) -> Token:
        return self.tokens[index - 1]

    @property
    def root(self) -> Token:
        for t in self.tokens:
            if t.head == 0:
                return t
        raise AssertionError("unreachable: validated at construction")

    def children(self, index: int) -> list[Token]:
        """Direct dependents of ``index`` in surface order."""
        return [t for t in self.tokens if t.head == index]

    def subtree(self, index: int) -> list[Token]:
        """Token at ``index`` plus all transitive dependents, surface order."""
        keep = {index}
        # tree is acyclic, so one forward+backward sweep per depth terminates
        changed = True
        while changed:
            changed = False
            for t in self.tokens:
                if t.head in keep and t.index not in keep:
                    keep.add(t.index)
                    changed = True
        return [t for t in self.tokens if t.index in keep]


def dep_base(deprel: str) -> str:
    """Normalize a deprel across UD/spacy conventions: lowercase, strip the
    ``:`` subtype and any internal separators (``nsubj:pass`` -> ``nsubjpass``)."""
    return deprel.lower().replace(":", "")


def _misc_space_after(misc: str) -> bool:
    for part in misc.split("|"):
        if part.strip() == "SpaceAfter=No":
            return False
    return True


def parse_conllu(
    source: Iterable[str] | str,
    *,
    strict: bool = False,
    source_name: str = "stream",
    dropped: list[ConlluError] | None = None,
) -> Iterator[ParsedSentence]:
    """Yield one ParsedSentence per blank-line-separated block.

    ``source`` may be a string or any iterable of lines. Blocks are counted
    1-based for synthesized ids (``<source_name>:<ordinal>``) when no
    ``# sent_id`` comment is present. In strict mode the first bad block
    raises; otherwise bad blocks are skipped and recorded in ``dropped``.
    """
    if isinstance(source, str):
        source = io.StringIO(source)

    block: list[tuple[int, str]] = []
    ordinal = 0
    line_no = 0

    def flush():
        nonlocal ordinal
        if not any(line.strip() for _, line in block):
            block.clear()
            return None
        ordinal += 1
        try:
            return _parse_block(block, ordinal, source_name)
        except ConlluError as err:
            if strict:
                raise
            if dropped is not None:
                dropped.append(err)
            return None
        finally:
            block.clear()

    for raw in source:
        line_no += 1
        line = raw.rstrip("\n").rstrip("\r")
        if line.strip() == "":
            sent = flush()
            if sent is not None:
                yield sent
        else:
            block.append((line_no, line))
    sent = flush()
    if sent is not None:
        yield sent


def _parse_block(block: list[tuple[int, str]], ordinal: int, source_name: str) -> ParsedSentence:
    sent_id = f"{source_name}:{ordinal}"
    tokens: list[Token] = []
    for line_no, line in block:
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("sent_id"):
                _, _, value = body.partition("=")
                if value.strip():
                    sent_id = value.strip()
            # "# text = ..." is advisory; text is always re-derived from tokens
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise MalformedLine(
                f"expected 10 tab-separated columns, got {len(cols)}",
                sent_id=sent_id, line_no=line_no,
            )
        idx_field = cols[0]
        if "-" in idx_field or "." in idx_field:
            continue  # multiword range / empty node: not part of the tree
        try:
            index = int(idx_field)
        except ValueError:
            raise MalformedLine(f"bad token index {idx_field!r}", sent_id=sent_id, line_no=line_no) from None
        try:
            head = int(cols[6])
        except ValueError:
            raise MalformedLine(f"bad head {cols[6]!r}", sent_id=sent_id, line_no=line_no) from None
        if head == index:
            raise CyclicTree(f"token {index} attached to itself", sent_id=sent_id, line_no=line_no)
        if not cols[1]:
            raise MalformedLine("empty FORM", sent_id=sent_id, line_no=line_no)
        tokens.append(
            Token(
                index=index,
                form=cols[1],
                lemma=cols[2] if cols[2] not in ("", "_") else cols[1].lower(),
                upos=cols[3],
                head=head,
                deprel=cols[7],
                space_after=_misc_space_after(cols[9]),
            )
        )
    if not tokens:
        raise MalformedLine("block has no token lines", sent_id=sent_id, line_no=block[0][0])
    tokens.sort(key=lambda t: t.index)
    try:
        return ParsedSentence(id=sent_id, tokens=tuple(tokens))
    except ConlluError:
        raise
    except ValueError as err:
        raise MalformedLine(str(err), sent_id=sent_id, line_no=block[0][0]) from None


def load_conllu_file(
    path: str | os.PathLike,
    *,
    strict: bool = False,
    dropped: list[ConlluError] | None = None,
) -> list[ParsedSentence]:
    """Parse a .conllu file; sentence ids default to ``<basename>:<ordinal>``."""
    name = os.path.basename(os.fspath(path))
    with open(path, encoding="utf-8") as fh:
        return list(parse_conllu(fh, strict=strict, source_name=name, dropped=dropped))


def serialize_conllu(sentence: ParsedSentence) -> str:
    """Render one sentence as a CoNLL-U block (with trailing blank line)."""
    out = [f"# sent_id = {sentence.id}", f"# text = {sentence.text}"]
    for t in sentence.tokens:
        misc = "_" if t.space_after else "SpaceAfter=No"
        out.append(
            "\t".join(
                [str(t.index), t.form, t.lemma, t.upos, "_", "_", str(t.head), t.deprel, "_", misc]
            )
        )
    return "\n".join(out) + "\n\n"


def serialize_corpus(sentences: Iterable[ParsedSentence]) -> str:
    return "".join(serialize_conllu(s) for s in sentences)
