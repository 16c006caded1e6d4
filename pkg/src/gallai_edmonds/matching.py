"""Maximum-cardinality matching in general graphs (Edmonds' blossom shrinking).

The engine grows one alternating tree at a time from an exposed root, in
ascending vertex order, scanning neighbors in ascending order. Blossoms are
contracted implicitly through a ``base`` array: every vertex of a shrunken
odd cycle points at the cycle's base. The first augmenting path found is
used, so the result is a deterministic function of the graph (and of the
optional starting matching).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import GraphError
from .graph import BipartiteMinor, Graph, VertexSet, delete_vertices


@dataclass(frozen=True)
class Matching:
    """``mate[v]`` is the partner of ``v``, or ``None`` if ``v`` is exposed."""

    mate: tuple[int | None, ...]

    @classmethod
    def empty(cls, n: int) -> Matching:
        return cls((None,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Matching:
        mate: list[int | None] = [None] * n
        for u, v in edges:
            if mate[u] is not None or mate[v] is not None:
                raise GraphError(f"edge ({u}, {v}) shares a vertex with another matched edge")
            mate[u], mate[v] = v, u
        return cls(tuple(mate))

    @property
    def size(self) -> int:
        return sum(1 for v in self.mate if v is not None) // 2

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, w) for v, w in enumerate(self.mate) if w is not None and v < w)

    def __len__(self) -> int:
        return self.size


def check_matching(g: Graph, m: Matching) -> None:
    """Raise :class:`GraphError` unless ``m`` is a matching of ``g``."""
    if len(m.mate) != g.n:
        raise GraphError(f"matching covers {len(m.mate)} vertices, graph has {g.n}")
    for v, w in enumerate(m.mate):
        if w is None:
            continue
        if not 0 <= w < g.n or m.mate[w] != v:
            raise GraphError(f"mate is not an involution at vertex {v}")
        if not g.has_edge(v, w):
            raise GraphError(f"matched pair ({v}, {w}) is not an edge")


def _augment_from(root: int, adj: tuple[tuple[int, ...], ...], mate: list[int]) -> bool:
    n = len(adj)
    base = list(range(n))
    parent = [-1] * n
    in_tree = [False] * n  # even (outer) vertices of the tree
    in_tree[root] = True
    queue = deque([root])

    def lowest_common_base(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[mate[b]]

    def mark_blossom(v: int, stem: int, child: int, blossom: list[bool]) -> None:
        while base[v] != stem:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if base[v] == base[u] or mate[v] == u:
                continue
            if u == root or (mate[u] != -1 and parent[mate[u]] != -1):
                # Edge between two outer vertices of the tree: shrink the blossom.
                stem = lowest_common_base(v, u)
                blossom = [False] * n
                mark_blossom(v, stem, u, blossom)
                mark_blossom(u, stem, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = stem
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[u] == -1:
                parent[u] = v
                if mate[u] == -1:
                    # Augment along the alternating path ending at u.
                    while u != -1:
                        pv = parent[u]
                        nxt = mate[pv]
                        mate[u] = pv
                        mate[pv] = u
                        u = nxt
                    return True
                in_tree[mate[u]] = True
                queue.append(mate[u])
    return False


def maximum_matching(g: Graph, initial: Matching | None = None) -> Matching:
    """A maximum matching of ``g``.

    ``initial`` seeds the search with an existing matching of ``g``; the
    result is then the first maximum matching reached by augmenting it.
    A single sweep over exposed roots suffices: once no augmenting path
    starts at a vertex, none ever will after later augmentations.
    """
    if initial is None:
        mate = [-1] * g.n
    else:
        check_matching(g, initial)
        mate = [-1 if w is None else w for w in initial.mate]
    for root in range(g.n):
        if mate[root] == -1 and g.adjacency[root]:
            _augment_from(root, g.adjacency, mate)
    return Matching(tuple(None if w == -1 else w for w in mate))


def matching_number(g: Graph) -> int:
    return maximum_matching(g).size


def bipartite_maximum_matching(h: BipartiteMinor, without_right: int | None = None) -> Matching:
    """Maximum matching of the minor, indexed as in :meth:`BipartiteMinor.as_graph`.

    The left side is covered iff the result has size ``len(h.left)``.
    """
    return maximum_matching(h.as_graph(without_right))


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return 2 * matching_number(g) == g.n


def is_factor_critical(g: Graph) -> bool:
    """True iff G - v has a perfect matching for every vertex v."""
    if g.n % 2 == 0:
        return False
    return all(has_perfect_matching(delete_vertices(g, (v,))) for v in range(g.n))


def exposed_vertices(g: Graph, m: Matching) -> VertexSet:
    check_matching(g, m)
    return tuple(v for v, w in enumerate(m.mate) if w is None)
