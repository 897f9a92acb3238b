"""Confidence filtering of model predictions into pseudo-labeled triplets.

Predictions arrive as JSONL rows {premise, hypothesis, probs} where probs is
a 3-vector over (entailment, contradiction, neutral). A row survives when its
top probability clears the threshold; its pseudo label is the argmax.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .compose import LABEL_TO_NAME, PHLTriplet

PROB_ORDER = ("E", "C", "N")
PROB_SUM_TOLERANCE = 1e-4
DEFAULT_THRESHOLD = 0.9


class InvalidProbabilityVector(ValueError):
    pass


@dataclass(frozen=True)
class PredictionRecord:
    premise: str
    hypothesis: str
    probs: tuple[float, float, float]

    def __post_init__(self):
        validate_probs(self.probs)


def validate_probs(probs: Sequence[float]) -> None:
    if len(probs) != 3:
        raise InvalidProbabilityVector(f"expected 3 probabilities, got {len(probs)}")
    for p in probs:
        if not isinstance(p, (int, float)) or isinstance(p, bool):
            raise InvalidProbabilityVector(f"non-numeric probability {p!r}")
        if p < 0:
            raise InvalidProbabilityVector(f"negative probability {p}")
    total = sum(probs)
    if abs(total - 1.0) > PROB_SUM_TOLERANCE:
        raise InvalidProbabilityVector(f"probabilities sum to {total}, not 1")


def argmax_label(probs: Sequence[float]) -> str:
    """Winning class; ties break toward the earlier position (E, then C)."""
    best = 0
    for i in (1, 2):
        if probs[i] > probs[best]:
            best = i
    return PROB_ORDER[best]


def pseudo_label(record: PredictionRecord, source_id: str = "pred") -> PHLTriplet:
    return PHLTriplet(
        premise=record.premise,
        hypothesis=record.hypothesis,
        label=argmax_label(record.probs),
        transform="pseudo",
        source_id=source_id,
        swapped=False,
    )


@dataclass
class FilterReport:
    threshold: float
    input_count: int
    kept: int
    per_label: dict[str, int]

    def to_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "input_count": self.input_count,
            "kept": self.kept,
            "per_label": {
                LABEL_TO_NAME[k]: v for k, v in sorted(self.per_label.items())
            },
        }


def maxprob_filter(
    records: Iterable[PredictionRecord], threshold: float = DEFAULT_THRESHOLD
) -> tuple[list[PHLTriplet], FilterReport]:
    """Keep records whose top probability is >= threshold, in input order.
    Premise and hypothesis strings pass through untouched."""
    kept: list[PHLTriplet] = []
    per_label: dict[str, int] = {}
    n = 0
    for i, rec in enumerate(records):
        n += 1
        if max(rec.probs) >= threshold:
            t = pseudo_label(rec, source_id=f"pred:{i}")
            kept.append(t)
            per_label[t.label] = per_label.get(t.label, 0) + 1
    report = FilterReport(
        threshold=threshold, input_count=n, kept=len(kept), per_label=per_label
    )
    return kept, report


def augment_with_generated(
    pseudo: Sequence[PHLTriplet], generated: Sequence[PHLTriplet]
) -> list[PHLTriplet]:
    """Union keyed on (premise, hypothesis); pseudo-labeled rows win
    collisions."""
    seen = {(t.premise, t.hypothesis) for t in pseudo}
    out = list(pseudo)
    for t in generated:
        if (t.premise, t.hypothesis) in seen:
            continue
        seen.add((t.premise, t.hypothesis))
        out.append(t)
    return out


def read_predictions(path: str | os.PathLike) -> list[PredictionRecord]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as err:
                raise ValueError(f"{path}:{line_no}: bad JSON ({err})") from None
            try:
                probs = obj["probs"]
                rec = PredictionRecord(
                    premise=obj["premise"],
                    hypothesis=obj["hypothesis"],
                    probs=tuple(float(p) for p in probs),
                )
            except InvalidProbabilityVector as err:
                raise InvalidProbabilityVector(f"{path}:{line_no}: {err}") from None
            except (KeyError, TypeError, ValueError) as err:
                raise ValueError(f"{path}:{line_no}: bad prediction row ({err})") from None
            out.append(rec)
    return out
