"""Brute-force ground truth for small graphs.

Nothing here calls the blossom engine when computing its own answers: matchings
are enumerated edge by edge, perfect matchings are decided by a bitmask
recursion, and vertex sets are swept exhaustively. The engine is only
consulted to compare against.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any

from .decomposition import (
    VerificationReport,
    gallai_edmonds,
    hall_violation,
    verify_ge_conditions,
)
from .errors import InvariantError, MinorUndefinedError, SizeGuardError
from .graph import BipartiteMinor, Graph, VertexSet, bipartite_minor, component_split, neighborhood
from .matching import Matching, has_perfect_matching, maximum_matching

MAX_ENUM_EDGES = 24
MAX_SWEEP_VERTICES = 16
MAX_THEOREM_VERTICES = 10


@dataclass(frozen=True)
class ExtremalResult:
    candidates: tuple[VertexSet, ...]
    max_df: int
    min_Df: int

    @property
    def unique(self) -> bool:
        return len(self.candidates) == 1


def _bits(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _components(masks: tuple[int, ...], alive: int) -> list[int]:
    """Connected components (as bitmasks) of the subgraph induced by ``alive``."""
    comps = []
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            grow = masks[low.bit_length() - 1] & alive & ~comp
            comp |= grow
            frontier |= grow
        alive &= ~comp
        comps.append(comp)
    return comps


def _pm_oracle(masks: tuple[int, ...]):
    @lru_cache(maxsize=None)
    def perfect(mask: int) -> bool:
        # the lowest remaining vertex must be matched to some neighbor
        if not mask:
            return True
        if mask.bit_count() % 2:
            return False
        low = mask & -mask
        rest = mask ^ low
        options = masks[low.bit_length() - 1] & rest
        while options:
            nb = options & -options
            options ^= nb
            if perfect(rest ^ nb):
                return True
        return False

    return perfect


def brute_has_perfect_matching(g: Graph) -> bool:
    return _pm_oracle(g.masks)((1 << g.n) - 1)


def brute_is_factor_critical(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    perfect = _pm_oracle(g.masks)
    full = (1 << g.n) - 1
    return all(perfect(full ^ (1 << v)) for v in range(g.n))


def brute_hall_violation(h: BipartiteMinor, surplus: int = 0) -> dict[str, Any] | None:
    """Hall's condition checked directly over every nonempty subset of the left side."""
    nbrs: dict[int, set[int]] = {s: set() for s in h.left}
    for s, j in h.edges:
        nbrs[s].add(j)
    for size in range(1, len(h.left) + 1):
        for subset in combinations(h.left, size):
            reach = set().union(*(nbrs[s] for s in subset))
            if len(reach) < size + surplus:
                return {"reason": "subset with too few neighbors", "left_subset": list(subset)}
    return None


def brute_hall_condition(h: BipartiteMinor, surplus: int = 0) -> bool:
    return brute_hall_violation(h, surplus) is None


def enumerate_matchings(g: Graph) -> Iterator[Matching]:
    """Every matching of ``g`` once, empty first, lexicographic over the sorted edge list."""
    if g.m > MAX_ENUM_EDGES:
        raise SizeGuardError(f"matching enumeration limited to {MAX_ENUM_EDGES} edges, got {g.m}")
    edges = g.edges
    chosen: list[tuple[int, int]] = []

    def extend(start: int, used: int) -> Iterator[Matching]:
        yield Matching.from_edges(g.n, chosen)
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not (used >> u) & 1 and not (used >> v) & 1:
                chosen.append(edges[i])
                yield from extend(i + 1, used | (1 << u) | (1 << v))
                chosen.pop()

    return extend(0, 0)


def brute_nu(g: Graph) -> int:
    return max(m.size for m in enumerate_matchings(g))


def _sweep_guard(g: Graph) -> None:
    if g.n > MAX_SWEEP_VERTICES:
        raise SizeGuardError(f"subset sweep limited to {MAX_SWEEP_VERTICES} vertices, got {g.n}")


def _deficiencies(g: Graph) -> list[int]:
    masks = g.masks
    full = (1 << g.n) - 1
    return [
        sum(c.bit_count() & 1 for c in _components(masks, full & ~s)) - s.bit_count()
        for s in range(1 << g.n)
    ]


def max_deficiency(g: Graph) -> int:
    _sweep_guard(g)
    return max(_deficiencies(g))


def _select(g: Graph, score) -> tuple[list[int], int]:
    """Tutte-Berge sets (maximum df) minimizing ``score(components)``."""
    dfs = _deficiencies(g)
    top = max(dfs)
    masks = g.masks
    full = (1 << g.n) - 1
    best: list[int] = []
    best_score = None
    for s, df in enumerate(dfs):
        if df != top:
            continue
        value = score(_components(masks, full & ~s))
        if best_score is None or value < best_score:
            best, best_score = [s], value
        elif value == best_score:
            best.append(s)
    return best, top


def extremal_set(g: Graph) -> ExtremalResult:
    """Sets of maximum deficiency that, among those, minimize Df."""
    _sweep_guard(g)
    perfect = _pm_oracle(g.masks)

    def lacking(comps: list[int]) -> int:
        return sum(c.bit_count() for c in comps if not perfect(c))

    best, top = _select(g, lacking)
    full = (1 << g.n) - 1
    min_df = lacking(_components(g.masks, full & ~best[0]))
    return ExtremalResult(tuple(sorted(_bits(s) for s in best)), top, min_df)


def remark3_set(g: Graph) -> ExtremalResult:
    """Tutte-Berge sets minimizing the number of vertices in odd components.

    ``min_Df`` carries that minimized odd-vertex count.
    """
    _sweep_guard(g)

    def odd_vertices(comps: list[int]) -> int:
        return sum(c.bit_count() for c in comps if c.bit_count() & 1)

    best, top = _select(g, odd_vertices)
    full = (1 << g.n) - 1
    value = odd_vertices(_components(g.masks, full & ~best[0]))
    return ExtremalResult(tuple(sorted(_bits(s) for s in best)), top, value)


def tutte_check(g: Graph) -> bool:
    """Tutte's criterion: a perfect matching exists iff no S has positive deficiency."""
    return max_deficiency(g) <= 0


def _structure_violation(g: Graph, s: VertexSet, m: Matching) -> str | None:
    """Why maximum matching ``m`` fails the structure forced by a Gallai-Edmonds set ``s``."""
    split = component_split(g, s)
    owner: dict[int, int] = {}
    comps = split.odd_components + split.even_components
    for idx, comp in enumerate(comps):
        for v in comp:
            owner[v] = idx
    hit: set[int] = set()
    for v in s:
        w = m.mate[v]
        if w is None:
            return f"vertex {v} of S is exposed"
        if w not in owner or owner[w] >= split.od:
            return f"vertex {v} of S is not matched into an odd component"
        if owner[w] in hit:
            return f"two vertices of S are matched into component {list(comps[owner[w]])}"
        hit.add(owner[w])
    for idx, comp in enumerate(comps):
        inside = sum(1 for v in comp if m.mate[v] is not None and owner.get(m.mate[v]) == idx)
        if len(comp) - inside != len(comp) % 2:
            kind = "near-perfect" if len(comp) % 2 else "perfect"
            return f"matching is not {kind} on component {list(comp)}"
    return None


def verify_structure_theorem(g: Graph) -> VerificationReport:
    """Check every claim of the Gallai-Edmonds Structure Theorem on ``g`` by brute force.

    Failures are returned as data: the report names each clause and carries
    the graph, subset and matching of the first one that fails.
    """
    if g.n > MAX_THEOREM_VERTICES:
        raise SizeGuardError(
            f"theorem verification limited to {MAX_THEOREM_VERTICES} vertices, got {g.n}"
        )
    graph_payload = {"n": g.n, "edges": [list(e) for e in g.edges]}
    report = VerificationReport()

    def record(name: str, ok: bool, **witness: Any) -> bool:
        return report.record(name, ok, graph=graph_payload, **witness)

    matchings = list(enumerate_matchings(g))
    nu = max(m.size for m in matchings)
    maximum = [m for m in matchings if m.size == nu]
    exposable = tuple(sorted({v for m in maximum for v, w in enumerate(m.mate) if w is None}))

    ext = extremal_set(g)
    record("tutte_berge_formula", g.n - 2 * nu == ext.max_df, nu=nu, max_df=ext.max_df)
    record("extremal_unique", ext.unique, candidates=[list(c) for c in ext.candidates])

    ge_sets = []
    for mask in range(1 << g.n):
        subset = _bits(mask)
        brute = verify_ge_conditions(
            g,
            subset,
            has_pm=brute_has_perfect_matching,
            factor_critical=brute_is_factor_critical,
            surplus_violation=lambda h: brute_hall_violation(h, 1),
        )
        engine = verify_ge_conditions(g, subset)
        record(
            "ge_conditions_engine_agreement",
            brute.clauses == engine.clauses,
            subset=list(subset), brute=brute.clauses, engine=engine.clauses,
        )
        if subset:
            try:
                h = bipartite_minor(g, subset)
            except MinorUndefinedError:
                pass
            else:
                record(
                    "surplus_check_agreement",
                    (hall_violation(h, 1) is None) == (brute_hall_violation(h, 1) is None),
                    subset=list(subset),
                )
        if brute.passed:
            ge_sets.append(subset)

    for cand in ext.candidates:
        record("i_extremal_set_is_gallai_edmonds", cand in ge_sets, subset=list(cand))
    record("iii_unique_gallai_edmonds_set", len(ge_sets) == 1, ge_sets=[list(s) for s in ge_sets])

    s = ge_sets[0] if ge_sets else ext.candidates[0]
    record("ge_set_equals_extremal_set", ext.candidates[0] == s, subset=list(s))
    try:
        production = gallai_edmonds(g)
    except InvariantError as exc:
        production = None
        record("production_decomposition", False, reason=str(exc))
    else:
        record("production_decomposition", True)
        record("ge_set_equals_production_A", production.A == s, subset=list(s), A=list(production.A))
    rem = remark3_set(g)
    record(
        "remark3_set_agrees",
        rem.unique and rem.candidates[0] == s,
        candidates=[list(c) for c in rem.candidates],
    )

    split = component_split(g, s)
    odd_union = tuple(sorted(v for comp in split.odd_components for v in comp))
    record("iii_D_is_odd_component_union", odd_union == exposable, subset=list(s), D=list(exposable))
    if production is not None:
        record("iii_production_D", production.D == exposable, D=list(production.D))
    record("iii_S_is_neighborhood_of_D", neighborhood(g, exposable) == s, subset=list(s))
    record("ii_tutte_berge", split.od - len(s) == g.n - 2 * nu, subset=list(s))
    for m in maximum:
        why = _structure_violation(g, s, m)
        if not record(
            "ii_maximum_matching_structure",
            why is None,
            subset=list(s), matching=[list(e) for e in m.edges], reason=why,
        ):
            break

    pm = 2 * nu == g.n
    record("tutte_corollary", tutte_check(g) == pm == has_perfect_matching(g))
    record("nu_engine_agreement", maximum_matching(g).size == nu, nu=nu)
    return report


def _sweep_chunk(args: tuple[int, int, int]) -> tuple[int, int, list[dict[str, Any]]]:
    from itertools import combinations as _comb

    n, lo, hi = args
    slots = list(_comb(range(n), 2))
    failures = []
    for mask in range(lo, hi):
        g = Graph(n, [e for i, e in enumerate(slots) if mask >> i & 1])
        report = verify_structure_theorem(g)
        if not report.passed:
            failures.append({"n": n, "mask": mask, **report.to_dict()})
    return n, hi - lo, failures


def exhaustive_sweep(max_n: int, jobs: int = 1, chunk: int = 256) -> dict[str, Any]:
    """Run :func:`verify_structure_theorem` on every labeled graph with up to ``max_n`` vertices.

    Work is split into fixed mask ranges; results are merged in range order so
    the summary does not depend on how workers were scheduled.
    """
    from .generators import MAX_LABELED_N

    if max_n > MAX_LABELED_N:
        raise SizeGuardError(f"exhaustive sweep limited to n <= {MAX_LABELED_N}, got {max_n}")
    tasks = []
    for n in range(max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        tasks += [(n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results = pool.map(_sweep_chunk, tasks)
    else:
        results = [_sweep_chunk(t) for t in tasks]
    counts: dict[int, int] = {}
    failures: list[dict[str, Any]] = []
    for n, checked, bad in results:
        counts[n] = counts.get(n, 0) + checked
        failures.extend(bad)
    return {
        "max_n": max_n,
        "graphs": {str(n): counts[n] for n in sorted(counts)},
        "total": sum(counts.values()),
        "failures": len(failures),
        "witnesses": failures[:10],
        "passed": not failures,
    }
