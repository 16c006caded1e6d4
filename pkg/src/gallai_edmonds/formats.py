"""Edge-list and DIMACS readers/writers, decomposition JSON and DOT output."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Literal

from .decomposition import Decomposition
from .errors import GraphError, ParseError
from .graph import Graph


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    source_format: Literal["edgelist", "dimacs"]
    name: str | None = None


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno) from None


def _build(n: int, edges: list[tuple[int, int]], linenos: list[int], base: int) -> Graph:
    seen: set[tuple[int, int]] = set()
    for (u, v), lineno in zip(edges, linenos):
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(
                f"vertex id out of range: ({u + base}, {v + base}) with n={n}", lineno
            )
        if u == v:
            raise ParseError(f"self-loop at vertex {u + base}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u + base}, {v + base})", lineno)
        seen.add(key)
    return Graph(n, edges)


def parse_edgelist(text: str, name: str | None = None) -> GraphDocument:
    """Read ``n m`` followed by ``m`` lines ``u v`` (0-based); ``#`` starts a comment line."""
    header = None
    edges: list[tuple[int, int]] = []
    linenos: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        a, b = _ints(fields, lineno)
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative vertex or edge count", lineno)
            header = (a, b)
            continue
        edges.append((a, b))
        linenos.append(lineno)
    if header is None:
        raise ParseError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return GraphDocument(_build(n, edges, linenos, 0), "edgelist", name)


def parse_dimacs(text: str, name: str | None = None) -> GraphDocument:
    """Read ``p edge n m`` with ``e u v`` lines (1-based ids); ``c`` lines are comments."""
    header = None
    edges: list[tuple[int, int]] = []
    linenos: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        kind = fields[0]
        if kind == "p":
            if header is not None:
                raise ParseError("second 'p' line", lineno)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError(f"bad problem line {raw.strip()!r}", lineno)
            header = tuple(_ints(fields[2:], lineno))
        elif kind == "e":
            if header is None:
                raise ParseError("edge before 'p edge' header", lineno)
            if len(fields) != 3:
                raise ParseError(f"bad edge line {raw.strip()!r}", lineno)
            u, v = _ints(fields[1:], lineno)
            edges.append((u - 1, v - 1))
            linenos.append(lineno)
        else:
            raise ParseError(f"unknown descriptor {kind!r}", lineno)
    if header is None:
        raise ParseError("missing 'p edge n m' header")
    n, m = header
    if n < 0:
        raise ParseError("negative vertex count")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return GraphDocument(_build(n, edges, linenos, 1), "dimacs", name)


def parse_graph(text: str, name: str | None = None) -> GraphDocument:
    """Parse either format, recognizing DIMACS by its ``p`` header or ``c`` comments."""
    for raw in text.splitlines():
        fields = raw.split()
        if not fields or raw.lstrip().startswith("#"):
            continue
        if fields[0] in ("p", "c"):
            return parse_dimacs(text, name)
        break
    return parse_edgelist(text, name)


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def decomposition_dict(d: Decomposition) -> dict:
    return {
        "n": d.n,
        "nu": d.nu,
        "deficiency": d.deficiency,
        "D": list(d.D),
        "A": list(d.A),
        "C": list(d.C),
        "odd_components": [list(c) for c in d.odd_components],
        "even_components": [list(c) for c in d.even_components],
    }


def emit_decomposition_json(d: Decomposition) -> str:
    return json.dumps(decomposition_dict(d), separators=(",", ":"))


def emit_dot(g: Graph, d: Decomposition) -> str:
    if g.n != d.n:
        raise GraphError("decomposition belongs to a different graph")
    cls = {}
    for v in d.D:
        cls[v] = "D"
    for v in d.A:
        cls[v] = "A"
    for v in d.C:
        cls[v] = "C"
    lines = ["graph G {"]
    clusters = [("odd", c) for c in d.odd_components] + [("even", c) for c in d.even_components]
    clusters.sort(key=lambda item: item[1][0])
    for i, (parity, comp) in enumerate(clusters):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="{parity}";')
        for v in comp:
            lines.append(f'    {v} [class="{cls[v]}"];')
        lines.append("  }")
    for v in d.A:
        lines.append(f'  {v} [class="A"];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_decomposition_text(d: Decomposition) -> str:
    def fmt(vs) -> str:
        return "{" + ", ".join(map(str, vs)) + "}"

    lines = [
        f"n = {d.n}, nu = {d.nu}, deficiency = {d.deficiency}",
        f"D = {fmt(d.D)}",
        f"A = {fmt(d.A)}",
        f"C = {fmt(d.C)}",
    ]
    lines += [f"odd component {fmt(c)}" for c in d.odd_components]
    lines += [f"even component {fmt(c)}" for c in d.even_components]
    return "\n".join(lines) + "\n"
