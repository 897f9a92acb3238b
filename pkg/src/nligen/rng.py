"""Deterministic per-premise randomness.

Every stochastic choice draws from a Random seeded by a hash of
(global seed, sentence id, purpose tag), so outputs for one premise do not
depend on processing order, worker count, or which other transforms ran.
"""

from __future__ import annotations

import hashlib
import random


def derive_seed(global_seed: int, *parts: str) -> int:
    h = hashlib.blake2b(digest_size=8)
    h.update(str(int(global_seed)).encode("utf-8"))
    for p in parts:
        h.update(b"\x1f")
        h.update(p.encode("utf-8"))
    return int.from_bytes(h.digest(), "big")


def local_rng(global_seed: int, *parts: str) -> random.Random:
    return random.Random(derive_seed(global_seed, *parts))
