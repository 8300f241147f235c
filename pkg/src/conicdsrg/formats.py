"""Text formats for digraphs.

matrix01: optional ``#`` header lines, then n lines of n characters from
{0,1}; row i is the out-neighbourhood of vertex i; trailing newline
required.

edgelist: optional ``#`` header lines (``# n=<n>`` fixes the vertex
count), then one ``u v`` line per arc, sorted.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .digraph import Digraph


class FormatError(ValueError):
    pass


def dumps_matrix01(D: Digraph, header: list[str] | tuple[str, ...] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += ["".join("1" if x else "0" for x in row) for row in D.adj]
    return "\n".join(lines) + "\n"


def loads_matrix01(text: str) -> Digraph:
    if not text.endswith("\n"):
        raise FormatError("missing final newline")
    rows = [ln for ln in text.split("\n")[:-1] if not ln.startswith("#")]
    n = len(rows)
    if n == 0:
        raise FormatError("no matrix rows")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise FormatError(f"row {i} has {len(row)} characters, expected {n}")
        if set(row) - {"0", "1"}:
            raise FormatError(f"row {i} contains characters other than 0 and 1")
        if row[i] == "1":
            raise FormatError(f"loop at vertex {i}")
    a = np.array([[c == "1" for c in row] for row in rows], dtype=np.uint8)
    return Digraph(a)


def dumps_edgelist(D: Digraph, header: list[str] | tuple[str, ...] = ()) -> str:
    lines = [f"# {h}" for h in header] + [f"# n={D.n}"]
    lines += [f"{u} {v}" for u, v in sorted(D.arcs())]
    return "\n".join(lines) + "\n"


def loads_edgelist(text: str) -> Digraph:
    n = None
    arcs = []
    for lineno, ln in enumerate(text.splitlines(), 1):
        if ln.startswith("#"):
            m = re.fullmatch(r"#\s*n=(\d+)\s*", ln)
            if m:
                n = int(m.group(1))
            continue
        if not ln.strip():
            continue
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"line {lineno}: expected 'u v'")
        arcs.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = 1 + max((max(a) for a in arcs), default=-1)
    if any(max(a) >= n for a in arcs):
        raise FormatError("arc endpoint out of range")
    if any(u == v for u, v in arcs):
        raise FormatError("loops are not allowed")
    return Digraph.from_arcs(n, arcs)


FORMATS = {
    "matrix01": (dumps_matrix01, loads_matrix01),
    "edgelist": (dumps_edgelist, loads_edgelist),
}


def write_digraph(path, D: Digraph, fmt: str = "matrix01", header=()) -> None:
    Path(path).write_text(FORMATS[fmt][0](D, header))


def read_digraph(path, fmt: str | None = None) -> Digraph:
    text = Path(path).read_text()
    if fmt is None:
        fmt = sniff_format(text)
    return FORMATS[fmt][1](text)


def sniff_format(text: str) -> str:
    for ln in text.splitlines():
        if ln.startswith("#") or not ln.strip():
            continue
        return "edgelist" if " " in ln.strip() else "matrix01"
    return "matrix01"
