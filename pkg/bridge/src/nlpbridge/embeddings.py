"""Word embeddings in the word2vec text format.

The file starts with ``<vocab_size> <dim>`` and one ``word v1 .. vD`` line
per entry. Vectors are L2-normalized on load so cosine similarity is a dot
product. Neighbor queries are deterministic: ties in similarity break by
vocabulary order.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .fileio import require


class Embeddings:
    def __init__(self, words: list[str], matrix: np.ndarray):
        self.words = words
        self.index = {w: i for i, w in enumerate(words)}
        norms = np.linalg.norm(matrix, axis=1, keepdims=True)
        norms[norms == 0] = 1.0
        self.matrix = matrix / norms

    @classmethod
    def load(cls, path: Path) -> "Embeddings":
        path = require(Path(path), "embedding file")
        words: list[str] = []
        rows: list[np.ndarray] = []
        with open(path, encoding="utf-8") as fh:
            head = fh.readline().split()
            if len(head) != 2:
                raise ValueError(f"embedding file {path} lacks a 'count dim' header")
            dim = int(head[1])
            for line in fh:
                parts = line.rstrip("\n").split(" ")
                if len(parts) != dim + 1:
                    continue
                words.append(parts[0])
                rows.append(np.asarray(parts[1:], dtype=np.float64))
        matrix = np.vstack(rows) if rows else np.zeros((0, dim))
        return cls(words, matrix)

    def __contains__(self, word: str) -> bool:
        return word in self.index

    def similarity(self, a: str, b: str) -> float:
        ia, ib = self.index.get(a), self.index.get(b)
        if ia is None or ib is None:
            return 0.0
        return float(self.matrix[ia] @ self.matrix[ib])

    def neighbors(self, word: str, k: int) -> list[tuple[str, float]]:
        """Top ``k`` most similar words, the query itself excluded."""
        i = self.index.get(word)
        if i is None or k <= 0:
            return []
        sims = self.matrix @ self.matrix[i]
        sims[i] = -np.inf
        # stable order: sort by (-similarity, vocab position)
        order = np.lexsort((np.arange(len(sims)), -sims))
        out = []
        for j in order[:k]:
            if np.isfinite(sims[j]):
                out.append((self.words[int(j)], float(sims[j])))
        return out
