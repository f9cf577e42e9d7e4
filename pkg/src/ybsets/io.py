"""Solution files: JSON with format_version, n, r (row-major 0-based pairs) and metadata."""

from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path
from typing import Any

from .core import QuadraticSet, YBError, from_table

FORMAT_VERSION = 1


class ParseError(YBError):
    pass


def to_record(qs: QuadraticSet, metadata: dict[str, Any] | None = None) -> dict[str, Any]:
    rec: dict[str, Any] = {"format_version": FORMAT_VERSION, "n": qs.n, "r": [list(p) for p in qs.rmap]}
    if metadata:
        rec["metadata"] = metadata
    return rec


def dumps(qs: QuadraticSet, metadata: dict[str, Any] | None = None) -> str:
    return canonical_json(to_record(qs, metadata))


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def parse(text: str) -> tuple[QuadraticSet, dict[str, Any]]:
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(rec, dict):
        raise ParseError("top level must be an object")
    for key in ("format_version", "n", "r"):
        if key not in rec:
            raise ParseError(f"missing field {key!r}")
    if rec["format_version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {rec['format_version']!r}")
    n = rec["n"]
    r = rec["r"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError("n must be an integer")
    if not isinstance(r, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in p)
        for p in r
    ):
        raise ParseError("r must be a list of two-element integer lists")
    meta = rec.get("metadata") or {}
    try:
        return from_table(n, r), meta
    except YBError as exc:
        raise ParseError(str(exc)) from exc


def fixture_dir() -> Path:
    return Path(str(resources.files("ybsets") / "fixtures"))


def resolve(path: str) -> Path:
    """A filesystem path, or failing that a bundled fixture by file name."""
    p = Path(path)
    if p.exists():
        return p
    cand = fixture_dir() / p.name
    if cand.exists():
        return cand
    cand = fixture_dir() / f"{p.name}.json"
    if cand.exists():
        return cand
    raise ParseError(f"no such file: {path}")


def load(path: str) -> tuple[QuadraticSet, dict[str, Any]]:
    if path == "-":
        return parse(sys.stdin.read())
    return parse(resolve(path).read_text(encoding="utf-8"))


def load_fixture(name: str) -> QuadraticSet:
    return load(name)[0]
