"""Reference classifier over generated sentence-pair data.

A deliberately small model: each side of the pair becomes a hashed
bag-of-words vector, the pair is encoded as ``[p, h, |p-h|, p*h]``, and a
single linear layer maps that to the three labels. The point is a fast,
dependency-light check that generated data carries learnable signal, not
a competitive baseline.

Training aborts on an empty training file and on label vocabulary
mismatch between the training and evaluation files.
"""

from __future__ import annotations

import hashlib
import json
import re
from pathlib import Path

import numpy as np
import torch
from torch import nn

from . import __version__
from .config import BridgeConfig
from .fileio import atomic_write, require

LABELS = ("entailment", "contradiction", "neutral")
WORD_RE = re.compile(r"[a-z0-9']+")


class TrainingDataError(ValueError):
    pass


def read_pairs(path: Path) -> list[tuple[str, str, str]]:
    path = require(Path(path), "triplet file")
    out = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as err:
                raise TrainingDataError(f"{path}:{line_no}: bad JSON ({err})") from None
            try:
                out.append((obj["premise"], obj["hypothesis"], obj["label"]))
            except KeyError as err:
                raise TrainingDataError(f"{path}:{line_no}: missing field {err}") from None
    return out


def check_labels(train: list[tuple[str, str, str]], eval_: list[tuple[str, str, str]]) -> None:
    train_labels = {t[2] for t in train}
    eval_labels = {t[2] for t in eval_}
    unknown = (train_labels | eval_labels) - set(LABELS)
    if unknown:
        raise TrainingDataError(f"unknown labels: {sorted(unknown)}")
    if not eval_labels <= train_labels:
        raise TrainingDataError(
            "label vocabulary mismatch: evaluation labels "
            f"{sorted(eval_labels)} not covered by training labels {sorted(train_labels)}"
        )


def _bucket(token: str, dim: int) -> int:
    digest = hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") % dim


def _bow(text: str, dim: int) -> np.ndarray:
    vec = np.zeros(dim, dtype=np.float32)
    for tok in WORD_RE.findall(text.lower()):
        vec[_bucket(tok, dim)] += 1.0
    return vec


def featurize(premise: str, hypothesis: str, dim: int) -> np.ndarray:
    p = _bow(premise, dim)
    h = _bow(hypothesis, dim)
    return np.concatenate([p, h, np.abs(p - h), p * h])


def _batch(pairs: list[tuple[str, str, str]], idxs: np.ndarray, dim: int) -> tuple[torch.Tensor, torch.Tensor]:
    feats = np.stack([featurize(pairs[i][0], pairs[i][1], dim) for i in idxs])
    labels = np.array([LABELS.index(pairs[i][2]) for i in idxs], dtype=np.int64)
    return torch.from_numpy(feats), torch.from_numpy(labels)


def train_demo(
    train_path: Path, eval_path: Path, report_path: Path, cfg: BridgeConfig
) -> dict:
    """Train on ``train_path``, evaluate on ``eval_path``, write a JSON
    metrics report to ``report_path``; returns the report dict."""
    train_pairs = read_pairs(train_path)
    eval_pairs = read_pairs(eval_path)
    if not train_pairs:
        raise TrainingDataError(f"training file {train_path} has no rows")
    if not eval_pairs:
        raise TrainingDataError(f"evaluation file {eval_path} has no rows")
    check_labels(train_pairs, eval_pairs)

    torch.manual_seed(cfg.seed)
    rng = np.random.default_rng(cfg.seed)
    dim = cfg.hash_dim
    model = nn.Linear(4 * dim, len(LABELS))
    opt = torch.optim.Adam(model.parameters(), lr=cfg.learning_rate)
    loss_fn = nn.CrossEntropyLoss()

    n = len(train_pairs)
    for _epoch in range(cfg.epochs):
        order = rng.permutation(n)
        for start in range(0, n, cfg.batch_size):
            idxs = order[start : start + cfg.batch_size]
            feats, labels = _batch(train_pairs, idxs, dim)
            opt.zero_grad()
            loss = loss_fn(model(feats), labels)
            loss.backward()
            opt.step()

    model.eval()
    predictions = []
    with torch.no_grad():
        for start in range(0, len(eval_pairs), cfg.batch_size):
            idxs = np.arange(start, min(start + cfg.batch_size, len(eval_pairs)))
            feats, _ = _batch(eval_pairs, idxs, dim)
            predictions.extend(model(feats).argmax(dim=1).tolist())

    gold = [LABELS.index(p[2]) for p in eval_pairs]
    correct = sum(1 for g, p in zip(gold, predictions) if g == p)
    per_label = {}
    for li, name in enumerate(LABELS):
        tp = sum(1 for g, p in zip(gold, predictions) if g == li and p == li)
        pred_n = sum(1 for p in predictions if p == li)
        gold_n = sum(1 for g in gold if g == li)
        per_label[name] = {
            "precision": tp / pred_n if pred_n else 0.0,
            "recall": tp / gold_n if gold_n else 0.0,
            "support": gold_n,
        }

    report = {
        "produced_by": f"nlpbridge {__version__} (train)",
        "torch_version": torch.__version__,
        "accuracy": correct / len(eval_pairs),
        "n_train": len(train_pairs),
        "n_eval": len(eval_pairs),
        "per_label": per_label,
        "config": {
            "epochs": cfg.epochs,
            "batch_size": cfg.batch_size,
            "learning_rate": cfg.learning_rate,
            "hash_dim": cfg.hash_dim,
            "seed": cfg.seed,
        },
    }
    atomic_write(Path(report_path), json.dumps(report, indent=2) + "\n")
    return report
