"""Atomic file writes and provenance headers.

Every exported file is written to a temp path in the target directory and
renamed into place, so a crashed run never leaves a half-written resource.
Header comments record the producing tool and its inputs; the engine's
loaders skip comment lines.
"""

from __future__ import annotations

import hashlib
import os
import tempfile

from . import __version__


class MissingResource(FileNotFoundError):
    """A required input file or directory does not exist."""


def require(path: str | os.PathLike, kind: str = "file") -> str:
    p = os.fspath(path)
    ok = os.path.isdir(p) if kind == "dir" else os.path.isfile(p)
    if not ok:
        raise MissingResource(f"required {kind} not found: {p}")
    return p


def atomic_write(path: str | os.PathLike, text: str) -> None:
    path = os.fspath(path)
    d = os.path.dirname(path) or "."
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def input_digest(path: str | os.PathLike) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()[:12]


def header(op: str, inputs: dict[str, str], params: dict | None = None) -> str:
    """Comment header naming the producer, input digests, and parameters."""
    lines = [f"# produced by nlpbridge {__version__} ({op})"]
    for name, path in inputs.items():
        lines.append(f"# input {name}: {os.path.basename(os.fspath(path))} sha256:{input_digest(path)}")
    if params:
        kv = " ".join(f"{k}={v}" for k, v in sorted(params.items()))
        lines.append(f"# params: {kv}")
    return "\n".join(lines) + "\n"
