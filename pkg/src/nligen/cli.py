"""Command-line interface.

Subcommands: generate (corpus -> triplets), pool-build (corpus -> snapshot),
filter (model predictions -> pseudo-labeled triplets), stats (recount a
triplet file), validate (sample a review sheet).

The PHL_RESOURCES environment variable names a directory searched for
default resources: any ``*.tsv`` lexicon files (``paraphrases.tsv`` is
treated as the paraphrase sidecar) and ``reparse.conllu``.
"""

from __future__ import annotations

import argparse
import glob
import json
import multiprocessing
import os
import sys

from .compose import (
    DEFAULT_COMPOSITES,
    GenerationConfig,
    Resources,
    assemble_dataset,
    generate_for_sentence,
    read_jsonl,
    write_jsonl,
    LABEL_TO_NAME,
)
from .conllu import ConlluError, load_conllu_file
from .filtering import (
    DEFAULT_THRESHOLD,
    InvalidProbabilityVector,
    augment_with_generated,
    maxprob_filter,
    read_predictions,
)
from .lexicon import LexiconFormatError, load_lexicon, load_paraphrases
from .pool import PoolError, build_pool, input_fingerprint, load_pool, save_pool
from .rng import local_rng
from .transforms import ALL_TAGS

ENV_RESOURCES = "PHL_RESOURCES"


class CliError(Exception):
    """User-facing configuration problem; exits with status 2."""


def _resource_dir_files() -> tuple[list[str], str | None, str | None]:
    """(lexicon tsvs, paraphrases tsv, reparse conllu) from PHL_RESOURCES."""
    root = os.environ.get(ENV_RESOURCES)
    if not root or not os.path.isdir(root):
        return [], None, None
    tsvs = sorted(glob.glob(os.path.join(root, "*.tsv")))
    para = None
    lexicons = []
    for p in tsvs:
        if os.path.basename(p) == "paraphrases.tsv":
            para = p
        else:
            lexicons.append(p)
    reparse = os.path.join(root, "reparse.conllu")
    return lexicons, para, (reparse if os.path.isfile(reparse) else None)


def _parse_tags(values: list[str] | None) -> list[str] | None:
    if not values:
        return None
    tags = []
    for v in values:
        tags.extend(x.strip() for x in v.split(",") if x.strip())
    unknown = [t for t in tags if t not in ALL_TAGS]
    if unknown:
        raise CliError(f"unknown transform tag(s): {', '.join(unknown)}")
    return tags


def _resolve_enabled(enable: list[str] | None, disable: list[str] | None) -> tuple[str, ...]:
    enabled = list(enable) if enable else list(ALL_TAGS)
    if disable:
        enabled = [t for t in enabled if t not in disable]
    return tuple(enabled)


def _load_corpus(paths: list[str], strict: bool, errors: dict[str, int]) -> list:
    sentences = []
    seen_ids = set()
    for path in paths:
        if not os.path.isfile(path):
            raise CliError(f"corpus file not found: {path}")
        dropped: list[ConlluError] = []
        try:
            batch = load_conllu_file(path, strict=strict, dropped=dropped)
        except ConlluError as err:
            raise CliError(f"parse failure in {path}: {err}")
        for err in dropped:
            key = f"parse:{type(err).__name__}"
            errors[key] = errors.get(key, 0) + 1
        for s in batch:
            if s.id in seen_ids:
                raise CliError(f"duplicate sentence id across corpus files: {s.id}")
            seen_ids.add(s.id)
            sentences.append(s)
    return sentences


# -- generate -------------------------------------------------------------

_WORKER_STATE: dict = {}


def _worker_init(resources, config):
    _WORKER_STATE["resources"] = resources
    _WORKER_STATE["config"] = config


def _worker_run(chunk):
    resources = _WORKER_STATE["resources"]
    config = _WORKER_STATE["config"]
    errors: dict[str, int] = {}
    raw = []
    for s in chunk:
        raw.extend(generate_for_sentence(s, resources, config, errors))
    return raw, errors


def _generate_raw(sentences, resources, config, jobs: int, errors: dict[str, int]):
    if jobs <= 1 or len(sentences) < 2:
        raw = []
        for s in sentences:
            raw.extend(generate_for_sentence(s, resources, config, errors))
        return raw
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        ctx = None
    if ctx is None:
        return _generate_raw(sentences, resources, config, 1, errors)
    chunks = [sentences[i::jobs] for i in range(jobs)]
    chunks = [c for c in chunks if c]
    with ctx.Pool(len(chunks), initializer=_worker_init, initargs=(resources, config)) as pool:
        parts = pool.map(_worker_run, chunks)
    # round-robin split: reassemble raw rows in original sentence order
    by_id: dict[str, list] = {}
    for raw_part, err_part in parts:
        for t in raw_part:
            by_id.setdefault(t.source_id, []).append(t)
        for k, v in err_part.items():
            errors[k] = errors.get(k, 0) + v
    raw = []
    for s in sentences:
        raw.extend(by_id.get(s.id, ()))
    return raw


def _source_of(source_id: str) -> str:
    return source_id.rsplit(":", 1)[0] if ":" in source_id else source_id


def cmd_generate(args) -> int:
    env_lex, env_para, env_reparse = _resource_dir_files()
    lexicon_paths = args.lexicon or env_lex
    if not lexicon_paths:
        raise CliError(
            "no lexicon: pass --lexicon or set PHL_RESOURCES to a directory with .tsv files"
        )
    paraphrase_path = args.paraphrases or env_para
    reparse_path = args.reparse or env_reparse

    try:
        lexicon = load_lexicon(lexicon_paths)
    except (LexiconFormatError, OSError) as err:
        raise CliError(f"lexicon: {err}")

    paraphrases = {}
    if paraphrase_path:
        try:
            paraphrases = load_paraphrases(paraphrase_path)
        except (LexiconFormatError, OSError) as err:
            raise CliError(f"paraphrases: {err}")

    reparse = {}
    if reparse_path:
        try:
            for s in load_conllu_file(reparse_path, strict=True):
                reparse[s.text] = s
        except (ConlluError, OSError) as err:
            raise CliError(f"reparse cache: {err}")

    errors: dict[str, int] = {}
    sentences = _load_corpus(args.corpus, args.strict_parse, errors)
    if not sentences:
        raise CliError("no sentences parsed from corpus input")

    if args.pool:
        try:
            pool = load_pool(args.pool)
        except (PoolError, OSError) as err:
            raise CliError(f"pool snapshot: {err}")
    else:
        pool = build_pool(sentences)

    enabled = _resolve_enabled(_parse_tags(args.enable), _parse_tags(args.disable))
    config = GenerationConfig(
        seed=args.seed,
        enabled=enabled,
        max_per_transform=args.max_per_transform,
        composites=DEFAULT_COMPOSITES,
        balance=args.balance,
        balance_target=args.balance_target,
        retrieval_k=args.k,
    )
    resources = Resources(
        lexicon=lexicon, pool=pool, paraphrases=paraphrases, reparse=reparse
    )

    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    raw = _generate_raw(sentences, resources, config, jobs, errors)
    triplets, stats = assemble_dataset(raw, len(sentences), errors, config)

    write_jsonl(args.out, triplets)

    by_transform_source: dict[str, dict[str, int]] = {}
    for t in triplets:
        row = by_transform_source.setdefault(t.transform, {})
        src = _source_of(t.source_id)
        row[src] = row.get(src, 0) + 1
    report = stats.to_dict()
    report["by_transform_source"] = {
        k: dict(sorted(v.items())) for k, v in sorted(by_transform_source.items())
    }
    stats_path = args.stats or (os.fspath(args.out) + ".stats.json")
    with open(stats_path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, sort_keys=False)
        fh.write("\n")

    label_bits = ", ".join(
        f"{LABEL_TO_NAME[k]}={v}" for k, v in sorted(stats.per_label.items())
    )
    print(
        f"wrote {len(triplets)} triplets from {stats.premises} premises to {args.out}"
    )
    print(f"labels: {label_bits or 'none'}")
    print(f"stats: {stats_path}")
    if errors:
        total = sum(errors.values())
        print(f"nonfatal errors: {total} (see stats file)")
    return 0


def cmd_pool_build(args) -> int:
    errors: dict[str, int] = {}
    sentences = _load_corpus(args.corpus, args.strict_parse, errors)
    if not sentences:
        raise CliError("no sentences parsed from corpus input")
    try:
        pool = build_pool(sentences)
    except PoolError as err:
        raise CliError(str(err))
    save_pool(pool, args.out, input_hash=input_fingerprint(args.corpus))
    print(f"pool snapshot with {len(pool)} sentences written to {args.out}")
    if errors:
        print(f"dropped blocks: {sum(errors.values())}")
    return 0


def cmd_filter(args) -> int:
    try:
        records = read_predictions(args.predictions)
    except InvalidProbabilityVector as err:
        raise CliError(f"predictions: {err}")
    except (ValueError, OSError) as err:
        raise CliError(f"predictions: {err}")
    kept, report = maxprob_filter(records, args.threshold)
    if args.merge:
        try:
            generated = read_jsonl(args.merge)
        except (ValueError, OSError) as err:
            raise CliError(f"merge file: {err}")
        kept = augment_with_generated(kept, generated)
    write_jsonl(args.out, kept)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
    print(
        f"kept {report.kept}/{report.input_count} predictions at threshold {args.threshold}"
        + (f"; wrote {len(kept)} rows after merge" if args.merge else "")
    )
    print(f"output: {args.out}")
    return 0


def cmd_stats(args) -> int:
    try:
        triplets = read_jsonl(args.triplets)
    except (ValueError, OSError) as err:
        raise CliError(str(err))
    matrix: dict[str, dict[str, int]] = {}
    per_label: dict[str, int] = {}
    for t in triplets:
        row = matrix.setdefault(t.transform, {})
        row[t.label] = row.get(t.label, 0) + 1
        per_label[t.label] = per_label.get(t.label, 0) + 1
    report = {
        "rows": len(triplets),
        "per_label": {LABEL_TO_NAME[k]: v for k, v in sorted(per_label.items())},
        "per_transform_label": {
            tag: {LABEL_TO_NAME[k]: v for k, v in sorted(row.items())}
            for tag, row in sorted(matrix.items())
        },
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    width = max((len(t) for t in matrix), default=9)
    print(f"{'transform':<{width}}  {'E':>6}  {'C':>6}  {'N':>6}  {'total':>6}")
    for tag in sorted(matrix):
        row = matrix[tag]
        print(
            f"{tag:<{width}}  {row.get('E', 0):>6}  {row.get('C', 0):>6}  "
            f"{row.get('N', 0):>6}  {sum(row.values()):>6}"
        )
    print(f"{'all':<{width}}  {per_label.get('E', 0):>6}  {per_label.get('C', 0):>6}  "
          f"{per_label.get('N', 0):>6}  {len(triplets):>6}")
    return 0


def cmd_validate(args) -> int:
    try:
        triplets = read_jsonl(args.triplets)
    except (ValueError, OSError) as err:
        raise CliError(str(err))
    if not triplets:
        raise CliError("empty triplet file")
    by_transform: dict[str, list[int]] = {}
    for i, t in enumerate(triplets):
        by_transform.setdefault(t.transform, []).append(i)
    total = 0
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("premise\thypothesis\tlabel\ttransform\tok\n")
        for tag in sorted(by_transform):
            idxs = by_transform[tag]
            n = min(args.n, len(idxs))
            rng = local_rng(args.seed, "validate", tag)
            picked = sorted(rng.sample(range(len(idxs)), n))
            for p in picked:
                t = triplets[idxs[p]]
                fh.write(
                    "\t".join(
                        [t.premise, t.hypothesis, LABEL_TO_NAME[t.label], t.transform, ""]
                    )
                    + "\n"
                )
            total += n
    print(
        f"review sheet with {total} rows ({args.n} per transform ceiling, "
        f"{len(by_transform)} transforms) written to {args.out}"
    )
    print("fill the ok column with y/n and keep the file with the dataset")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nligen",
        description="Rule-based generation of labeled NLI triplets from parsed corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate triplets from a parsed corpus")
    gen.add_argument("corpus", nargs="+", help="CoNLL-U corpus file(s)")
    gen.add_argument("--out", required=True, help="output JSONL path")
    gen.add_argument("--stats", help="stats JSON path (default: <out>.stats.json)")
    gen.add_argument("--lexicon", action="append", help="lexicon TSV (repeatable)")
    gen.add_argument("--paraphrases", help="paraphrase sidecar TSV")
    gen.add_argument("--reparse", help="CoNLL-U cache of hypothesis parses, keyed by text")
    gen.add_argument("--pool", help="premise pool snapshot (default: built from corpus)")
    gen.add_argument("--seed", type=int, default=13, help="global random seed")
    gen.add_argument("--max-per-transform", type=int, default=10,
                     help="cap on outcomes per transform per premise")
    gen.add_argument("--enable", action="append", metavar="TAGS",
                     help="comma-separated transform tags to run (default: all)")
    gen.add_argument("--disable", action="append", metavar="TAGS",
                     help="comma-separated transform tags to skip")
    gen.add_argument("--balance", action="store_true",
                     help="downsample classes to the smallest class")
    gen.add_argument("--balance-target", type=int, default=None,
                     help="optional per-class ceiling when balancing")
    gen.add_argument("--k", type=int, default=3, help="retrieved hypotheses per premise")
    gen.add_argument("--strict-parse", action="store_true",
                     help="fail on the first malformed corpus block")
    gen.add_argument("--jobs", type=int, default=0,
                     help="worker processes (default: all cores)")
    gen.set_defaults(func=cmd_generate)

    pb = sub.add_parser("pool-build", help="index a corpus into a pool snapshot")
    pb.add_argument("corpus", nargs="+")
    pb.add_argument("--out", required=True)
    pb.add_argument("--strict-parse", action="store_true")
    pb.set_defaults(func=cmd_pool_build)

    fl = sub.add_parser("filter", help="confidence-filter model predictions")
    fl.add_argument("predictions", help="JSONL with premise, hypothesis, probs")
    fl.add_argument("--out", required=True)
    fl.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    fl.add_argument("--merge", help="generated triplets JSONL to union in")
    fl.add_argument("--report", help="filter report JSON path")
    fl.set_defaults(func=cmd_filter)

    st = sub.add_parser("stats", help="recount a triplet file")
    st.add_argument("triplets")
    st.add_argument("--out", help="write the counts as JSON")
    st.set_defaults(func=cmd_stats)

    va = sub.add_parser("validate", help="sample triplets into a review sheet")
    va.add_argument("triplets")
    va.add_argument("--out", required=True, help="TSV review sheet path")
    va.add_argument("--n", type=int, default=50, help="rows sampled per transform")
    va.add_argument("--seed", type=int, default=13)
    va.set_defaults(func=cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
