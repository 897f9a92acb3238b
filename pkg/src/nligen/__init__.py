"""Rule-based generation of labeled NLI triplets from dependency-parsed text."""

from .compose import (
    DatasetStats,
    GenerationConfig,
    PHLTriplet,
    Resources,
    generate_dataset,
    read_jsonl,
    write_jsonl,
)
from .conllu import ParsedSentence, Token, load_conllu_file, parse_conllu
from .lexicon import Lexicon, load_lexicon, load_paraphrases
from .pool import PremisePool, build_pool
from .transforms import REGISTRY, TransformOutcome

__version__ = "0.1.0"

__all__ = [
    "DatasetStats",
    "GenerationConfig",
    "Lexicon",
    "PHLTriplet",
    "ParsedSentence",
    "PremisePool",
    "REGISTRY",
    "Resources",
    "Token",
    "TransformOutcome",
    "build_pool",
    "generate_dataset",
    "load_conllu_file",
    "load_lexicon",
    "load_paraphrases",
    "parse_conllu",
    "read_jsonl",
    "write_jsonl",
    "__version__",
]
