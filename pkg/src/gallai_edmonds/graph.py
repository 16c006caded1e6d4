"""Immutable simple graphs, vertex deletion, S-components and the bipartite minor."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .errors import GraphError, MinorUndefinedError

VertexSet = tuple[int, ...]
Edge = tuple[int, int]


class Graph:
    """Undirected simple graph on the vertices ``0..n-1``.

    Edges are stored canonically as ``(u, v)`` with ``u < v`` in ascending
    order, and adjacency lists are sorted, so every traversal in this package
    is deterministic.

    ``labels[i]`` is the identifier vertex ``i`` had in the graph this one
    was derived from (see :func:`delete_vertices`). Labels do not take part in
    equality.
    """

    __slots__ = ("n", "edges", "adjacency", "labels", "_masks")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Sequence[int] | None = None,
    ) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        for edge in edges:
            u, v = edge
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"parallel edge {key}")
            seen.add(key)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adjacency
        )
        if labels is None:
            self.labels: tuple[int, ...] = tuple(range(n))
        else:
            if len(labels) != n:
                raise GraphError("labels must name every vertex")
            self.labels = tuple(labels)
        self._masks: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``u`` set in ``masks[v]`` iff uv is an edge)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)
        return self._masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def vertex_set(g: Graph, members: Iterable[int] = ()) -> VertexSet:
    """Canonical (sorted, duplicate-free) vertex set, validated against ``g``."""
    result = tuple(sorted(set(members)))
    for v in result:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} is not in a graph on {g.n} vertices")
    return result


@dataclass(frozen=True)
class ComponentSplit:
    """Connected components of G - S, split by parity and ordered by smallest vertex."""

    odd_components: tuple[VertexSet, ...]
    even_components: tuple[VertexSet, ...]
    deleted: VertexSet

    @property
    def od(self) -> int:
        return len(self.odd_components)

    @property
    def components(self) -> tuple[VertexSet, ...]:
        return tuple(sorted(self.odd_components + self.even_components))


class BipartiteMinor(NamedTuple):
    """S on the left, one node per odd S-component on the right.

    Right node ``j`` stands for the odd component ``back_map[j]``. Edges are
    ``(s, j)`` pairs, sorted.
    """

    left: VertexSet
    back_map: tuple[VertexSet, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def right(self) -> tuple[int, ...]:
        return tuple(range(len(self.back_map)))

    def neighbors(self, s: int) -> tuple[int, ...]:
        return tuple(j for u, j in self.edges if u == s)

    def as_graph(self, without_right: int | None = None) -> Graph:
        """The minor as a plain :class:`Graph`: left vertices first, then right nodes.

        ``without_right`` drops one right node (it stays in the vertex range,
        isolated) which is all the surplus check needs.
        """
        index = {s: i for i, s in enumerate(self.left)}
        offset = len(self.left)
        return Graph(
            offset + len(self.back_map),
            ((index[s], offset + j) for s, j in self.edges if j != without_right),
        )


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """G - S with the survivors relabeled densely in ascending order.

    The returned graph's ``labels`` map each new vertex back to its label in
    ``g``.
    """
    removed = set(vertex_set(g, s))
    if not removed:
        return g
    keep = [v for v in range(g.n) if v not in removed]
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id]
    return Graph(len(keep), edges, labels=[g.labels[v] for v in keep])


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    kept = set(vertex_set(g, keep))
    return delete_vertices(g, (v for v in range(g.n) if v not in kept))


def components_avoiding(g: Graph, removed: Iterable[int]) -> list[VertexSet]:
    """Connected components of G - removed, each sorted, listed by smallest vertex."""
    seen = [False] * g.n
    for v in removed:
        seen[v] = True
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        members = []
        while stack:
            v = stack.pop()
            members.append(v)
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        components.append(tuple(sorted(members)))
    return components


def component_split(g: Graph, s: Iterable[int] = ()) -> ComponentSplit:
    deleted = vertex_set(g, s)
    odd, even = [], []
    for comp in components_avoiding(g, deleted):
        (odd if len(comp) % 2 else even).append(comp)
    return ComponentSplit(tuple(odd), tuple(even), deleted)


def bipartite_minor(g: Graph, s: Iterable[int]) -> BipartiteMinor:
    """Build the bipartite minor of G for S.

    Even S-components and edges inside S are dropped and each odd
    S-component becomes one right node. Undefined when ``|S| + od(S) < 2``.
    """
    split = component_split(g, s)
    left = split.deleted
    if len(left) + split.od < 2:
        raise MinorUndefinedError(
            f"minor undefined: |S| + od(S) = {len(left) + split.od} < 2"
        )
    owner = {}
    for j, comp in enumerate(split.odd_components):
        for v in comp:
            owner[v] = j
    edges = sorted({(u, owner[v]) for u in left for v in g.adjacency[u] if v in owner})
    return BipartiteMinor(left, split.odd_components, tuple(edges))


def neighborhood(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """Vertices outside ``vertices`` adjacent to at least one of them."""
    inside = set(vertices)
    return tuple(sorted({u for v in inside for u in g.adjacency[v]} - inside))


# Named graphs used by tests, examples and the CLI.


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
