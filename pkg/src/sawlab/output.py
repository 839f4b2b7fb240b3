"""CSV/JSON table emission shared by every CLI command.

Floats are written with 10 significant digits, big counts as decimal
strings.  CSV output carries the version and run config as leading
``#`` lines so a table can be parsed back with its provenance.
"""

from __future__ import annotations

import csv
import io
import json


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".10g")
    return str(value)


def render(columns, rows, *, fmt_name="csv", config=None, version=None, extra=None) -> str:
    cells = [[fmt(row.get(c)) for c in columns] for row in rows]
    if fmt_name == "json":
        doc = {
            "version": version,
            "config": config,
            "columns": list(columns),
            "rows": [dict(zip(columns, r)) for r in cells],
        }
        if extra:
            doc.update({k: fmt(v) for k, v in extra.items()})
        return json.dumps(doc, sort_keys=True, indent=1) + "\n"
    buf = io.StringIO()
    if version is not None:
        buf.write(f"# sawlab {version}\n")
    if config is not None:
        buf.write("# config: " + json.dumps(config, sort_keys=True, separators=(",", ":")) + "\n")
    for key, value in (extra or {}).items():
        buf.write(f"# {key}: {fmt(value)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(cells)
    return buf.getvalue()


def parse(text: str) -> dict:
    """Inverse of render: {'meta': {...}, 'columns': [...], 'rows': [dict, ...]}."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(stripped)
        meta = {k: v for k, v in doc.items() if k not in ("columns", "rows")}
        return {"meta": meta, "columns": doc["columns"], "rows": doc["rows"]}
    meta, body = {}, []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            if key.startswith("sawlab "):
                meta["version"] = key.split(" ", 1)[1]
            elif key == "config":
                meta["config"] = json.loads(value)
            else:
                meta[key] = value
        elif line:
            body.append(line)
    reader = csv.reader(body)
    columns = next(reader)
    return {"meta": meta, "columns": columns, "rows": [dict(zip(columns, r)) for r in reader]}
