"""Polyline samples ``(s, x, y, z)`` and their CSV / JSON serialization."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import numpy as np

from . import __version__

CSV_HEADER = ("s", "x", "y", "z")


def _fmt(v: float) -> str:
    # 17 significant digits round-trips every double
    return format(float(v), ".17g")


def make_meta(source: str, kind: str, params: dict[str, Any] | None = None) -> dict[str, Any]:
    return {
        "source": source,
        "kind": kind,
        "params": dict(params or {}),
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "tool_version": __version__,
    }


@dataclass
class Polyline:
    samples: np.ndarray
    meta: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.samples = np.asarray(self.samples, dtype=float).reshape(-1, 4)
        if not np.all(np.isfinite(self.samples)):
            raise ValueError("polyline samples must be finite")
        if np.any(np.diff(self.samples[:, 0]) <= 0):
            raise ValueError("polyline parameter values must be strictly increasing")

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def s(self) -> np.ndarray:
        return self.samples[:, 0]

    @property
    def points(self) -> np.ndarray:
        return self.samples[:, 1:]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in self.samples:
            writer.writerow([_fmt(v) for v in row])
        return buf.getvalue()

    def to_json(self, with_meta: bool = True) -> str:
        meta = dict(self.meta)
        if not with_meta:
            meta.pop("generated_at", None)
        doc = {"meta": meta, "samples": [[float(v) for v in row] for row in self.samples]}
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def dumps(self, fmt: str, with_meta: bool = True) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json(with_meta)
        raise ValueError(f"unknown format {fmt!r}")

    @classmethod
    def from_csv(cls, text: str) -> Polyline:
        rows = list(csv.reader(io.StringIO(text)))
        if tuple(rows[0]) != CSV_HEADER:
            raise ValueError(f"bad CSV header {rows[0]!r}")
        return cls(np.array([[float(v) for v in row] for row in rows[1:]]))

    @classmethod
    def from_json(cls, text: str) -> Polyline:
        doc = json.loads(text)
        return cls(np.array(doc["samples"], dtype=float), doc.get("meta", {}))


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write ``text`` to a temporary file next to ``path`` and rename it into place."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
