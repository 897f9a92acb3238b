"""Raw text documents to one parsed CoNLL-U corpus file.

Each input document is sentence-split and parsed; sentences outside the
caption grammar are skipped and logged, and a document that cannot be
read at all is skipped whole with a log line. Output is atomic. The
provenance header rides inside the first sentence's comment block so the
file stays valid for consumers that treat a comment-only block as
malformed; a corpus with no sentences is written as an empty file.
"""

from __future__ import annotations

from pathlib import Path

from .fileio import atomic_write, header
from .textparse import ParsedCaption, parse_text, to_conllu


def preprocess_corpus(
    inputs: list[Path], out_path: Path
) -> tuple[int, list[str]]:
    """Parse every document into ``out_path``; returns (sentence count,
    log lines for skipped material)."""
    parses: list[ParsedCaption] = []
    log: list[str] = []
    for doc in inputs:
        doc = Path(doc)
        try:
            text = doc.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as err:
            log.append(f"document skipped: {doc} ({err})")
            continue
        got, skipped = parse_text(text, f"{doc.stem}-s")
        parses.extend(got)
        log.extend(f"sentence skipped: {s}" for s in skipped)

    if not parses:
        atomic_write(Path(out_path), "")
        return 0, log

    head = header("preprocess", {p.name: p for p in map(Path, inputs) if p.is_file()}, {})
    blocks = []
    for i, p in enumerate(parses):
        block = to_conllu(p)
        if i == 0:
            block = head.rstrip("\n") + "\n" + block
        blocks.append(block)
    atomic_write(Path(out_path), "\n".join(blocks))
    return len(parses), log
