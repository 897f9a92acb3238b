"""Transformation catalog: tag registry plus the rule implementations.

Registry order is the canonical application/emission order everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .base import (
    CONTRADICTION,
    ENTAILMENT,
    LABELS,
    NEUTRAL,
    TransformOutcome,
)
from . import contradiction, entailment, neutral


@dataclass(frozen=True)
class TransformInfo:
    tag: str
    family: str
    swap_label: str | None   # label a swapped triplet takes; None = not swappable
    chainable: bool          # may appear before the final step of a composite
    needs_pool: bool
    run: Callable


def _run_pa(s, res, cfg):
    return entailment.pa(s, res.paraphrases, res.reparse)


def _run_es(s, res, cfg):
    return entailment.es(s)


def _run_hs(s, res, cfg):
    return entailment.hs(s, res.lexicon)


def _run_ps(s, res, cfg):
    return entailment.ps(s, res.lexicon)


def _run_ct(s, res, cfg):
    return entailment.ct(s, res.lexicon, cfg.seed)


def _run_cw(s, res, cfg):
    return contradiction.cw(s, res.lexicon, cfg.seed)


def _run_cv(s, res, cfg):
    return contradiction.cv_substitute(s, res.lexicon)


def _run_cvr(s, res, cfg):
    return contradiction.cv_retrieve(s, res.pool, res.lexicon, cfg.retrieval_k, cfg.seed)


def _run_sos(s, res, cfg):
    return contradiction.sos(s)


def _run_ni(s, res, cfg):
    return contradiction.ni(s)


def _run_ns(s, res, cfg):
    return contradiction.ns(s, res.lexicon, cfg.seed)


def _run_irh(s, res, cfg):
    return contradiction.irh(s, res.pool, cfg.retrieval_k, cfg.seed)


def _run_am(s, res, cfg):
    return neutral.am(s, res.lexicon, cfg.seed)


def _run_con(s, res, cfg):
    return neutral.con(s, res.lexicon, cfg.seed)


def _run_ssncv(s, res, cfg):
    return neutral.ssncv(s, res.pool, res.lexicon, cfg.retrieval_k, cfg.seed)


REGISTRY: dict[str, TransformInfo] = {
    i.tag: i
    for i in [
        TransformInfo("PA", "entailment", None, True, False, _run_pa),
        TransformInfo("ES", "entailment", "N", True, False, _run_es),
        TransformInfo("HS", "entailment", "N", True, False, _run_hs),
        TransformInfo("PS", "entailment", None, True, False, _run_ps),
        TransformInfo("CT", "mixed", None, False, False, _run_ct),
        TransformInfo("CW", "contradiction", "C", False, False, _run_cw),
        TransformInfo("CV", "contradiction", None, False, False, _run_cv),
        TransformInfo("CVr", "contradiction", None, False, True, _run_cvr),
        TransformInfo("SOS", "contradiction", None, False, False, _run_sos),
        TransformInfo("NI", "contradiction", None, False, False, _run_ni),
        TransformInfo("NS", "contradiction", None, False, False, _run_ns),
        TransformInfo("IrH", "contradiction", None, False, True, _run_irh),
        TransformInfo("AM", "neutral", "E", False, False, _run_am),
        TransformInfo("Con", "neutral", "E", False, False, _run_con),
        TransformInfo("SSNCV", "neutral", None, False, True, _run_ssncv),
    ]
}

ALL_TAGS = tuple(REGISTRY)
CHAINABLE_TAGS = tuple(t for t, i in REGISTRY.items() if i.chainable)


def expected_labels(tag: str) -> frozenset[str]:
    """Labels a tag may legally emit (composite tags derive from the final step)."""
    if "+" in tag:
        tag = tag.split("+")[-1]
    info = REGISTRY.get(tag)
    if info is None:
        raise KeyError(f"unknown transform tag {tag!r}")
    if info.family == "entailment":
        return frozenset({ENTAILMENT})
    if info.family == "contradiction":
        return frozenset({CONTRADICTION})
    if info.family == "neutral":
        return frozenset({NEUTRAL})
    return frozenset({ENTAILMENT, CONTRADICTION})  # counting emits both


def label_ok(tag: str, label: str, swapped: bool) -> bool:
    """Whether a triplet's label is legal for its tag and swap flag."""
    if swapped:
        if "+" in tag:
            return False
        info = REGISTRY.get(tag)
        return info is not None and info.swap_label == label
    try:
        return label in expected_labels(tag)
    except KeyError:
        return False


__all__ = [
    "ALL_TAGS",
    "CHAINABLE_TAGS",
    "CONTRADICTION",
    "ENTAILMENT",
    "LABELS",
    "NEUTRAL",
    "REGISTRY",
    "TransformInfo",
    "TransformOutcome",
    "expected_labels",
    "label_ok",
    "contradiction",
    "entailment",
    "neutral",
]
