"""Append-only on-disk ledger of exact counts.

One JSON object per line: {graph_key, kind, params, n, value}, with the value
as a decimal string.  Writes go through a file lock and a single write call;
readers skip any torn trailing line.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from filelock import FileLock

ENV_VAR = "SAWLAB_CACHE_DIR"
FILENAME = "series.jsonl"


def default_cache_path() -> Path:
    root = os.environ.get(ENV_VAR)
    if root:
        return Path(root) / FILENAME
    return Path.home() / ".cache" / "sawlab" / FILENAME


def _params_key(params: dict) -> str:
    return json.dumps(params, sort_keys=True, separators=(",", ":"))


class SeriesCache:
    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else default_cache_path()
        if self.path.is_dir() or self.path.suffix == "":
            self.path = self.path / FILENAME
        self._lock = FileLock(str(self.path) + ".lock")
        self._index: dict = {}
        self._offset = 0

    def _refresh(self):
        if not self.path.exists():
            return
        with open(self.path, "rb") as fh:
            fh.seek(self._offset)
            data = fh.read()
        end = data.rfind(b"\n") + 1
        for line in data[:end].splitlines():
            try:
                rec = json.loads(line)
                key = (rec["graph_key"], rec["kind"], _params_key(rec["params"]))
                self._index.setdefault(key, {})[int(rec["n"])] = int(rec["value"])
            except (ValueError, KeyError, TypeError):
                continue
        self._offset += end

    def lookup(self, graph_key: str, kind: str, params: dict, n_max: int):
        """Values for n = 0..n_max if every one is cached, else None."""
        self._refresh()
        entry = self._index.get((graph_key, kind, _params_key(params)))
        if entry is None or any(n not in entry for n in range(n_max + 1)):
            return None
        return [entry[n] for n in range(n_max + 1)]

    def get(self, graph_key: str, kind: str, params: dict, n: int):
        self._refresh()
        return self._index.get((graph_key, kind, _params_key(params)), {}).get(n)

    def store(self, graph_key: str, kind: str, params: dict, values: dict):
        """Append the (n, value) pairs not yet recorded."""
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self._lock:
            self._refresh()
            known = self._index.setdefault((graph_key, kind, _params_key(params)), {})
            lines = []
            for n in sorted(values):
                if n in known:
                    continue
                rec = {"graph_key": graph_key, "kind": kind, "params": params, "n": n, "value": str(values[n])}
                lines.append(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
            if lines:
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write("".join(lines))
                    fh.flush()
                self._refresh()
