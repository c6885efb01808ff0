"""DIMACS-style edge lists: ``p edge <n> <m>`` then ``e <u> <v>`` (1-based)."""

from __future__ import annotations

import io
from pathlib import Path
from typing import Iterable

from .graph import Graph


class DimacsError(ValueError):
    pass


def dumps(g: Graph, comments: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    for c in comments:
        buf.write(f"c {c}\n")
    buf.write(f"p edge {g.n} {g.num_edges()}\n")
    for u, v in g.edges():
        buf.write(f"e {u + 1} {v + 1}\n")
    return buf.getvalue()


def loads(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        try:
            if tag == "p":
                if n is not None:
                    raise DimacsError(f"line {lineno}: duplicate problem line")
                if len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise DimacsError(f"line {lineno}: expected 'p edge <n> <m>'")
                n, m = int(parts[2]), int(parts[3])
                if n < 0 or m < 0:
                    raise DimacsError(f"line {lineno}: negative size")
            elif tag == "e":
                if n is None:
                    raise DimacsError(f"line {lineno}: edge before problem line")
                if len(parts) != 3:
                    raise DimacsError(f"line {lineno}: expected 'e <u> <v>'")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= n and 1 <= v <= n) or u == v:
                    raise DimacsError(f"line {lineno}: bad edge {u} {v}")
                edges.append((u - 1, v - 1))
            else:
                raise DimacsError(f"line {lineno}: unknown line type {tag!r}")
        except ValueError as exc:
            if isinstance(exc, DimacsError):
                raise
            raise DimacsError(f"line {lineno}: {exc}") from None
    if n is None:
        raise DimacsError("missing problem line")
    g = Graph.from_edges(n, edges)
    if g.num_edges() != m:
        raise DimacsError(f"header declares {m} edges, found {g.num_edges()} distinct")
    return g


def write(g: Graph, path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(dumps(g, comments))


def read(path) -> Graph:
    return loads(Path(path).read_text())
