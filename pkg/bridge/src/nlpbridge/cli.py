"""Command line entry points.

Subcommands mirror the pipeline stages: ``preprocess`` raw text into
CoNLL-U, ``export-lexicons`` from lexical resources, ``harvest-modifiers``
and ``paraphrase`` from the parsed corpus, and ``train`` on generated
sentence-pair files. Every stage reads and writes plain files; nothing
here links against the consumer of those files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .config import BridgeConfig, BridgeConfigError
from .exports import export_lexicons, harvest_modifiers
from .fileio import MissingResource, atomic_write, header
from .paraphrase import gen_paraphrases
from .preprocess import preprocess_corpus
from .textparse import read_conllu, to_conllu
from .train import TrainingDataError, train_demo


def _cmd_preprocess(args: argparse.Namespace) -> int:
    n, log = preprocess_corpus([Path(p) for p in args.inputs], Path(args.output))
    for line in log:
        print(line, file=sys.stderr)
    print(f"wrote {n} sentences to {args.output}")
    return 0


def _cmd_export_lexicons(args: argparse.Namespace) -> int:
    cfg = BridgeConfig(
        neighbor_k=args.neighbor_k,
        sts_threshold=args.sts_threshold,
        conceptnet_relations=tuple(args.relations.split(","))
        if args.relations
        else BridgeConfig().conceptnet_relations,
    )
    counts = export_lexicons(
        Path(args.wordnet), Path(args.embeddings), Path(args.conceptnet),
        Path(args.output), cfg,
    )
    for name, count in sorted(counts.items()):
        print(f"{name}: {count} rows")
    return 0


def _cmd_harvest_modifiers(args: argparse.Namespace) -> int:
    n = harvest_modifiers(Path(args.corpus), Path(args.output))
    print(f"{args.output}: {n} rows")
    return 0


def _cmd_paraphrase(args: argparse.Namespace) -> int:
    cfg = BridgeConfig(paraphrase_cap=args.cap)
    sentences = read_conllu(Path(args.corpus))
    rows, reparses = gen_paraphrases(sentences, cfg)
    head = header("paraphrase", {"corpus": Path(args.corpus)}, {"cap": cfg.paraphrase_cap})
    atomic_write(
        Path(args.output),
        head + "".join(f"{sid}\t{text}\n" for sid, text in rows),
    )
    print(f"{args.output}: {len(rows)} rows")
    if args.reparse:
        blocks = []
        for i, p in enumerate(reparses):
            block = to_conllu(p)
            if i == 0:
                block = head.rstrip("\n") + "\n" + block
            blocks.append(block)
        atomic_write(Path(args.reparse), "\n".join(blocks))
        print(f"{args.reparse}: {len(reparses)} parses")
    return 0


def _cmd_train(args: argparse.Namespace) -> int:
    cfg = BridgeConfig(
        epochs=args.epochs,
        batch_size=args.batch_size,
        learning_rate=args.lr,
        hash_dim=args.hash_dim,
        seed=args.seed,
    )
    report = train_demo(Path(args.train), Path(args.eval), Path(args.output), cfg)
    print(f"accuracy: {report['accuracy']:.4f} ({report['n_eval']} pairs)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nlpbridge")
    ap.add_argument("--version", action="version", version=f"nlpbridge {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preprocess", help="parse raw text files into CoNLL-U")
    p.add_argument("inputs", nargs="+", help="raw text documents")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_preprocess)

    p = sub.add_parser("export-lexicons", help="build lexicon TSVs from resources")
    p.add_argument("--wordnet", required=True, help="directory with data.noun/verb/adj")
    p.add_argument("--embeddings", required=True, help="word2vec text file")
    p.add_argument("--conceptnet", required=True, help="assertion dump TSV")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.add_argument("--neighbor-k", type=int, default=BridgeConfig().neighbor_k)
    p.add_argument("--sts-threshold", type=float, default=BridgeConfig().sts_threshold)
    p.add_argument("--relations", help="comma-separated relation names")
    p.set_defaults(func=_cmd_export_lexicons)

    p = sub.add_parser("harvest-modifiers", help="modifier rows from a parsed corpus")
    p.add_argument("corpus", help="CoNLL-U corpus")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_harvest_modifiers)

    p = sub.add_parser("paraphrase", help="rule paraphrases for a parsed corpus")
    p.add_argument("corpus", help="CoNLL-U corpus")
    p.add_argument("-o", "--output", required=True, help="sidecar TSV")
    p.add_argument("--reparse", help="also write parses of the paraphrases here")
    p.add_argument("--cap", type=int, default=BridgeConfig().paraphrase_cap)
    p.set_defaults(func=_cmd_paraphrase)

    p = sub.add_parser("train", help="train and evaluate the reference classifier")
    p.add_argument("--train", required=True, help="training JSONL")
    p.add_argument("--eval", required=True, help="evaluation JSONL")
    p.add_argument("-o", "--output", required=True, help="metrics report JSON")
    p.add_argument("--epochs", type=int, default=BridgeConfig().epochs)
    p.add_argument("--batch-size", type=int, default=BridgeConfig().batch_size)
    p.add_argument("--lr", type=float, default=BridgeConfig().learning_rate)
    p.add_argument("--hash-dim", type=int, default=BridgeConfig().hash_dim)
    p.add_argument("--seed", type=int, default=BridgeConfig().seed)
    p.set_defaults(func=_cmd_train)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MissingResource, BridgeConfigError, TrainingDataError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
