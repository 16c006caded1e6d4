"""Reproducible graph generators.

Random graphs use splitmix64 so any implementation can regenerate them bit
for bit. One step of the generator:

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

The state starts at the seed. Edge slots ``(u, v)``, ``u < v``, are visited
in lexicographic order and each consumes one draw; the edge is kept when
``draw % p_den < p_num``.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from .errors import GraphError, SizeGuardError
from .graph import Graph

MASK64 = (1 << 64) - 1
MAX_LABELED_N = 6


def splitmix64(seed: int) -> Iterator[int]:
    state = seed & MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def random_graph(n: int, p_num: int, p_den: int, seed: int = 0) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if p_den <= 0 or not 0 <= p_num <= p_den:
        raise GraphError(f"invalid edge probability {p_num}/{p_den}")
    draws = splitmix64(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if next(draws) % p_den < p_num])


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on ``n`` vertices; bit ``i`` of the mask selects the i-th slot."""
    if n > MAX_LABELED_N:
        raise SizeGuardError(f"labeled enumeration limited to n <= {MAX_LABELED_N}, got {n}")
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    slots = list(combinations(range(n), 2))

    def graphs() -> Iterator[Graph]:
        for mask in range(1 << len(slots)):
            yield Graph(n, [e for i, e in enumerate(slots) if mask >> i & 1])

    return graphs()
