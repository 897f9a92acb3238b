"""Reader for assertion dumps in the five-column tab-separated layout:

    /a/[...]  /r/Relation  /c/en/start  /c/en/end  {json metadata}

Only English-to-English edges whose relation is in the configured set are
kept. Concept URIs reduce to surface words: the term after ``/c/en/`` up to
any further slash, underscores to spaces.
"""

from __future__ import annotations

import json
from pathlib import Path

from .fileio import require


def _concept_word(uri: str) -> str | None:
    parts = uri.split("/")
    # ['', 'c', 'en', 'term', ...possible sense tags]
    if len(parts) < 4 or parts[1] != "c" or parts[2] != "en":
        return None
    term = parts[3].replace("_", " ").strip().lower()
    return term or None


def read_assertions(
    path: Path, relations: tuple[str, ...]
) -> list[tuple[str, str, str, float]]:
    """(relation, start, end, weight) rows, deterministic file order."""
    path = require(Path(path), "conceptnet dump")
    wanted = set(relations)
    rows: list[tuple[str, str, str, float]] = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            parts = line.rstrip("\n").split("\t")
            if len(parts) < 4:
                continue
            rel_uri, start_uri, end_uri = parts[1], parts[2], parts[3]
            if not rel_uri.startswith("/r/"):
                continue
            rel = rel_uri[3:]
            if rel not in wanted:
                continue
            start = _concept_word(start_uri)
            end = _concept_word(end_uri)
            if start is None or end is None or start == end:
                continue
            weight = 1.0
            if len(parts) >= 5:
                try:
                    weight = float(json.loads(parts[4]).get("weight", 1.0))
                except (ValueError, AttributeError):
                    weight = 1.0
            rows.append((rel, start, end, weight))
    return rows
