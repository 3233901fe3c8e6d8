"""Canonical JSON, JSONL streams, and content hashing.

Canonical form (sorted keys, no whitespace, shortest-repr floats, no NaN)
backs both the inference cache keys and the run-manifest artifact hashes,
so "semantically identical" always means "byte identical" downstream.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable, Iterator


def _reject_nonfinite(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError(f"non-finite float {value!r} is not canonicalizable")
    raise TypeError(f"not JSON-serializable: {type(value).__name__}")


def canonical_json(obj: Any) -> str:
    """Serialize with sorted keys and minimal separators; rejects NaN/inf."""
    text = json.dumps(
        obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False,
        allow_nan=False, default=_reject_nonfinite,
    )
    return text


def content_hash(obj: Any) -> str:
    """SHA-256 hex digest of the canonical JSON form."""
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


def file_hash(path: Path | str) -> str:
    """SHA-256 hex digest of a file's bytes."""
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def read_jsonl(path: Path | str) -> Iterator[tuple[int, Any]]:
    """Yield (1-based line number, parsed object) for non-blank lines."""
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.strip():
                yield lineno, json.loads(line)


def write_jsonl(path: Path | str, records: Iterable[Any]) -> None:
    """Write records atomically, one canonical-JSON line each."""
    atomic_write_text(path, "".join(canonical_json(r) + "\n" for r in records))


def atomic_write_text(path: Path | str, text: str) -> None:
    """Write-then-rename so concurrent readers never see partial files."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def atomic_write_json(path: Path | str, obj: Any, pretty: bool = False) -> None:
    if pretty:
        text = json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"
    else:
        text = canonical_json(obj) + "\n"
    atomic_write_text(path, text)


def load_json(path: Path | str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
