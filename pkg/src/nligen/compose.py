"""Dataset assembly: run the transform catalog over premises, chain
composites, apply the swap rule, then sort, deduplicate, balance and count.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .conllu import ParsedSentence
from .lexicon import Lexicon
from .pool import PremisePool
from .rng import local_rng
from .transforms import (
    ALL_TAGS,
    REGISTRY,
    TransformOutcome,
)

DEFAULT_COMPOSITES: tuple[tuple[str, ...], ...] = (
    ("PA", "ES"),
    ("PA", "CW"),
    ("PA", "AM"),
    ("PA", "ES", "HS"),
)

LABEL_TO_NAME = {"E": "entailment", "C": "contradiction", "N": "neutral"}
NAME_TO_LABEL = {v: k for k, v in LABEL_TO_NAME.items()}


class RecipeLabelViolation(ValueError):
    """A composite recipe puts a non-chainable rule before its final step."""


@dataclass(frozen=True)
class PHLTriplet:
    premise: str
    hypothesis: str
    label: str
    transform: str
    source_id: str
    swapped: bool = False


@dataclass
class Resources:
    """Everything the rules read besides the premise itself."""

    lexicon: Lexicon
    pool: PremisePool | None = None
    paraphrases: dict[str, list[str]] = field(default_factory=dict)
    reparse: dict[str, ParsedSentence] = field(default_factory=dict)


@dataclass
class GenerationConfig:
    seed: int = 13
    enabled: tuple[str, ...] = ALL_TAGS
    max_per_transform: int = 10
    per_transform_caps: Mapping[str, int] = field(default_factory=dict)
    composites: tuple[tuple[str, ...], ...] = DEFAULT_COMPOSITES
    swap: bool = True
    balance: bool = False
    balance_target: int | None = None
    retrieval_k: int = 3

    def cap_for(self, tag: str) -> int:
        return int(self.per_transform_caps.get(tag, self.max_per_transform))

    def composite_enabled(self, recipe: Sequence[str]) -> bool:
        return all(step in self.enabled for step in recipe)


def _bump(counts: dict[str, int] | None, key: str) -> None:
    if counts is not None:
        counts[key] = counts.get(key, 0) + 1


def apply_all(
    s: ParsedSentence,
    resources: Resources,
    config: GenerationConfig,
    error_counts: dict[str, int] | None = None,
) -> list[TransformOutcome]:
    """All enabled single transforms in registry order, each capped. A rule
    that raises is skipped and counted, never fatal. Pool-backed rules are
    skipped when no pool is attached."""
    outcomes: list[TransformOutcome] = []
    for tag, info in REGISTRY.items():
        if tag not in config.enabled:
            continue
        if info.needs_pool and resources.pool is None:
            continue
        try:
            outs = info.run(s, resources, config)
        except Exception as err:  # noqa: BLE001 - isolation is the contract
            _bump(error_counts, f"{tag}:{type(err).__name__}")
            continue
        outcomes.extend(outs[: config.cap_for(tag)])
    return outcomes


def apply_composite(
    s: ParsedSentence,
    recipe: Sequence[str],
    resources: Resources,
    config: GenerationConfig,
    error_counts: dict[str, int] | None = None,
) -> list[TransformOutcome]:
    """Chain transforms: intermediate steps must be entailment-preserving
    rewrites that supply a parse for the next step; the final step decides
    the label. Composite outcomes never enter the swap rule."""
    recipe = tuple(recipe)
    if len(recipe) < 2:
        raise ValueError(f"composite recipe needs at least two steps, got {recipe!r}")
    for step in recipe:
        if step not in REGISTRY:
            raise KeyError(f"unknown transform tag {step!r}")
    for step in recipe[:-1]:
        if not REGISTRY[step].chainable:
            raise RecipeLabelViolation(
                f"{step} cannot precede another step in {'+'.join(recipe)}"
            )
    tag = "+".join(recipe)
    cap = config.cap_for(tag)

    frontier: list[ParsedSentence] = [s]
    for step in recipe[:-1]:
        nxt: list[ParsedSentence] = []
        seen: set[str] = set()
        for sent in frontier:
            try:
                outs = REGISTRY[step].run(sent, resources, config)
            except Exception as err:  # noqa: BLE001
                _bump(error_counts, f"{tag}:{type(err).__name__}")
                continue
            for o in outs[: config.cap_for(step)]:
                derived = o.derived
                if derived is None and o.hypothesis in resources.reparse:
                    derived = resources.reparse[o.hypothesis]
                if derived is None:
                    _bump(error_counts, f"{tag}:no_parse")
                    continue
                if derived.text in seen:
                    continue
                seen.add(derived.text)
                nxt.append(derived)
        frontier = nxt
        if not frontier:
            return []

    results: list[TransformOutcome] = []
    emitted: set[tuple[str, str]] = set()
    for sent in frontier:
        try:
            outs = REGISTRY[recipe[-1]].run(sent, resources, config)
        except Exception as err:  # noqa: BLE001
            _bump(error_counts, f"{tag}:{type(err).__name__}")
            continue
        for o in outs[: config.cap_for(recipe[-1])]:
            if o.hypothesis == s.text:
                continue
            key = (o.hypothesis, o.label)
            if key in emitted:
                continue
            emitted.add(key)
            results.append(
                TransformOutcome(
                    hypothesis=o.hypothesis, label=o.label, tag=tag,
                    swap_eligible=False,
                )
            )
            if len(results) >= cap:
                return results
    return results


def swap_triplets(triplets: Iterable[PHLTriplet]) -> list[PHLTriplet]:
    """Additional triplets obtained by exchanging premise and hypothesis
    where the catalog defines a swapped label. Input rows are not modified."""
    out = []
    for t in triplets:
        if t.swapped or "+" in t.transform:
            continue
        info = REGISTRY.get(t.transform)
        if info is None or info.swap_label is None:
            continue
        out.append(
            PHLTriplet(
                premise=t.hypothesis,
                hypothesis=t.premise,
                label=info.swap_label,
                transform=t.transform,
                source_id=t.source_id,
                swapped=True,
            )
        )
    return out


@dataclass
class DatasetStats:
    premises: int
    generated: int
    per_transform: dict[str, int]
    per_label: dict[str, int]
    dedup_dropped: int
    balance_dropped: int
    errors: dict[str, int]

    def to_dict(self) -> dict:
        return {
            "premises": self.premises,
            "generated": self.generated,
            "per_transform": dict(sorted(self.per_transform.items())),
            "per_label": {
                LABEL_TO_NAME[k]: v for k, v in sorted(self.per_label.items())
            },
            "dedup_dropped": self.dedup_dropped,
            "balance_dropped": self.balance_dropped,
            "errors": dict(sorted(self.errors.items())),
        }


def _sort_key(t: PHLTriplet):
    return (t.source_id, t.transform, t.hypothesis, t.swapped, t.label, t.premise)


def dedup_triplets(triplets: Sequence[PHLTriplet]) -> tuple[list[PHLTriplet], int]:
    """Drop exact (premise, hypothesis) repeats, keeping the first; identity
    pairs (premise == hypothesis) are dropped outright."""
    seen: set[tuple[str, str]] = set()
    kept: list[PHLTriplet] = []
    dropped = 0
    for t in triplets:
        key = (t.premise, t.hypothesis)
        if t.premise == t.hypothesis or key in seen:
            dropped += 1
            continue
        seen.add(key)
        kept.append(t)
    return kept, dropped


def balance_dataset(
    triplets: Sequence[PHLTriplet], seed: int, target: int | None = None
) -> tuple[list[PHLTriplet], int]:
    """Seeded downsampling of each label class to the smallest class size
    (or ``target`` if smaller), preserving row order."""
    by_label: dict[str, list[int]] = {}
    for i, t in enumerate(triplets):
        by_label.setdefault(t.label, []).append(i)
    if not by_label:
        return list(triplets), 0
    floor = min(len(v) for v in by_label.values())
    if target is not None:
        floor = min(floor, int(target))
    keep: set[int] = set()
    for label in sorted(by_label):
        idxs = by_label[label]
        if len(idxs) <= floor:
            keep.update(idxs)
            continue
        rng = local_rng(seed, "balance", label)
        picked = rng.sample(range(len(idxs)), floor)
        keep.update(idxs[i] for i in sorted(picked))
    kept = [t for i, t in enumerate(triplets) if i in keep]
    return kept, len(triplets) - len(kept)


def generate_for_sentence(
    s: ParsedSentence,
    resources: Resources,
    config: GenerationConfig,
    error_counts: dict[str, int] | None = None,
) -> list[PHLTriplet]:
    """Unsorted, un-deduplicated triplets for one premise (singles plus
    enabled composites; swap handled at dataset level)."""
    outcomes = apply_all(s, resources, config, error_counts)
    for recipe in config.composites:
        if not config.composite_enabled(recipe):
            continue
        outcomes.extend(apply_composite(s, recipe, resources, config, error_counts))
    out = []
    for o in outcomes:
        if o.hypothesis == s.text:
            continue
        out.append(
            PHLTriplet(
                premise=s.text,
                hypothesis=o.hypothesis,
                label=o.label,
                transform=o.tag,
                source_id=s.id,
                swapped=False,
            )
        )
    return out


def generate_dataset(
    sentences: Iterable[ParsedSentence],
    resources: Resources,
    config: GenerationConfig,
) -> tuple[list[PHLTriplet], DatasetStats]:
    errors: dict[str, int] = {}
    raw: list[PHLTriplet] = []
    premises = 0
    for s in sentences:
        premises += 1
        raw.extend(generate_for_sentence(s, resources, config, errors))
    return assemble_dataset(raw, premises, errors, config)


def assemble_dataset(
    raw: list[PHLTriplet],
    premises: int,
    errors: dict[str, int],
    config: GenerationConfig,
) -> tuple[list[PHLTriplet], DatasetStats]:
    """Swap + sort + dedup + optional balance + stats over raw triplets."""
    if config.swap:
        raw = raw + swap_triplets(raw)
    generated = len(raw)
    raw.sort(key=_sort_key)
    kept, dedup_dropped = dedup_triplets(raw)
    balance_dropped = 0
    if config.balance:
        kept, balance_dropped = balance_dataset(kept, config.seed, config.balance_target)
    per_transform: dict[str, int] = {}
    per_label: dict[str, int] = {}
    for t in kept:
        per_transform[t.transform] = per_transform.get(t.transform, 0) + 1
        per_label[t.label] = per_label.get(t.label, 0) + 1
    stats = DatasetStats(
        premises=premises,
        generated=generated,
        per_transform=per_transform,
        per_label=per_label,
        dedup_dropped=dedup_dropped,
        balance_dropped=balance_dropped,
        errors=errors,
    )
    return kept, stats


# -- JSONL dataset format -------------------------------------------------

def triplet_to_obj(t: PHLTriplet) -> dict:
    return {
        "premise": t.premise,
        "hypothesis": t.hypothesis,
        "label": LABEL_TO_NAME[t.label],
        "transform": t.transform,
        "source_id": t.source_id,
        "swapped": t.swapped,
    }


def obj_to_triplet(obj: dict) -> PHLTriplet:
    label = obj.get("label")
    if label not in NAME_TO_LABEL:
        raise ValueError(f"unknown label {label!r}")
    for key in ("premise", "hypothesis", "transform", "source_id"):
        if not isinstance(obj.get(key), str):
            raise ValueError(f"missing or non-string field {key!r}")
    return PHLTriplet(
        premise=obj["premise"],
        hypothesis=obj["hypothesis"],
        label=NAME_TO_LABEL[label],
        transform=obj["transform"],
        source_id=obj["source_id"],
        swapped=bool(obj.get("swapped", False)),
    )


def write_jsonl(path: str | os.PathLike, triplets: Iterable[PHLTriplet]) -> int:
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for t in triplets:
            fh.write(json.dumps(triplet_to_obj(t), ensure_ascii=True) + "\n")
            n += 1
    return n


def read_jsonl(path: str | os.PathLike) -> list[PHLTriplet]:
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
                out.append(obj_to_triplet(obj))
            except ValueError as err:
                raise ValueError(f"{path}:{line_no}: {err}") from None
    return out
