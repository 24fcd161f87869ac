"""Canonical edge-list text format.

Line 1 is ``n m``; each following line is ``u v``.  Lines starting with ``#``
are comments.  Writers emit ``u < v`` in ascending order; readers accept any
order and orientation but reject repeated edges.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import TextIO

from powerdom.graph import Graph, GraphError, build_graph


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphError("empty edge list: missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges but {len(edges)} were listed")
    return build_graph(n, edges)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Graph, out: str | Path | TextIO) -> None:
    text = format_edge_list(g)
    if isinstance(out, (str, Path)):
        Path(out).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def write_labels(labels: dict[str, int], path: str | Path) -> None:
    """Sidecar label map, keys sorted by name."""
    payload = {name: labels[name] for name in sorted(labels)}
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def read_labels(path: str | Path) -> dict[str, int]:
    return json.loads(Path(path).read_text(encoding="utf-8"))
