#!/usr/bin/env python3
"""Per-transform ablation over a corpus: regenerate the dataset with each
transform disabled in turn and report what changed.

With clean fixtures the only difference between the full dataset and a
run without transform X is the disappearance of X-tagged rows (and of any
chain containing X), so the "other rows changed" column should read 0
everywhere. A nonzero value means two transforms produced the same
(premise, hypothesis) pair and the dedup pass is coupling them.

Usage:
  python3 scripts/ablation_counts.py [corpus.conllu ...]
Defaults to the checked-in acceptance corpus. Balancing is off: balancing
resamples across labels and would mask locality.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from nligen.compose import GenerationConfig, Resources, generate_dataset
from nligen.conllu import load_conllu_file
from nligen.lexicon import load_lexicon, load_paraphrases
from nligen.pool import build_pool
from nligen.transforms import ALL_TAGS

FIXTURE_DIR = os.path.join(
    os.path.dirname(__file__), os.pardir, "tests", "fixtures", "corpus"
)


def load_resources(sentences):
    lexicon = load_lexicon([os.path.join(FIXTURE_DIR, "lexicon.tsv")])
    paraphrases = load_paraphrases(os.path.join(FIXTURE_DIR, "paraphrases.tsv"))
    reparse = {
        s.text: s
        for s in load_conllu_file(os.path.join(FIXTURE_DIR, "reparse.conllu"), strict=True)
    }
    return Resources(
        lexicon=lexicon, pool=build_pool(sentences),
        paraphrases=paraphrases, reparse=reparse,
    )


def key(t):
    return (t.premise, t.hypothesis, t.label, t.transform, t.source_id, t.swapped)


def main(argv):
    paths = argv or [os.path.join(FIXTURE_DIR, "captions.conllu")]
    sentences = []
    for p in paths:
        sentences.extend(load_conllu_file(p, strict=True))
    resources = load_resources(sentences)

    full_cfg = GenerationConfig(balance=False)
    full, _ = generate_dataset(sentences, resources, full_cfg)
    full_keys = {key(t) for t in full}
    print(f"full dataset: {len(full)} rows from {len(sentences)} premises")
    print(f"{'disabled':8s}  {'rows':>6s}  {'removed':>8s}  {'other rows changed':>19s}")

    violations = 0
    for tag in ALL_TAGS:
        cfg = GenerationConfig(
            balance=False, enabled=tuple(t for t in ALL_TAGS if t != tag)
        )
        ablated, _ = generate_dataset(sentences, resources, cfg)
        ablated_keys = {key(t) for t in ablated}
        removed = full_keys - ablated_keys
        added = ablated_keys - full_keys
        foreign = [k for k in removed if tag not in k[3].split("+")] + list(added)
        if foreign:
            violations += 1
        print(f"{tag:8s}  {len(ablated):>6d}  {len(removed):>8d}  {len(foreign):>19d}")

    if violations:
        print(f"LOCALITY VIOLATED for {violations} transform(s)", file=sys.stderr)
        return 1
    print("locality holds: every ablation changed only its own rows")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
