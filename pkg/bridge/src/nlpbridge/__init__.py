"""Adapter package around the nligen engine.

Turns raw text into the engine's CoNLL-U dialect, exports lexicon TSVs from
WordNet database files, word-vector files, and ConceptNet assertion dumps,
generates paraphrase sidecars with deterministic rewrite rules, and trains
a small from-scratch classifier as a smoke test. Everything crosses the
engine boundary as files; nothing here imports the engine.
"""

__version__ = "0.1.0"
