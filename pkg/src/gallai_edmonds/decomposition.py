"""Deficiency bookkeeping and the Gallai-Edmonds decomposition.

For a vertex set S of G:

* ``od(S)`` is the number of odd components of G - S,
* ``df(S) = od(S) - |S|`` is its deficiency; every matching leaves at least
  ``df(S)`` vertices exposed,
* ``Df(S)`` is the number of vertices lying in components of G - S (of either
  parity) that have no perfect matching.

The decomposition itself is computed from matching numbers: D is the set of
vertices some maximum matching leaves exposed, A its neighborhood, C the rest.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Any

from .errors import InvariantError, MinorUndefinedError
from .graph import (
    BipartiteMinor,
    ComponentSplit,
    Graph,
    VertexSet,
    bipartite_minor,
    component_split,
    induced_subgraph,
    neighborhood,
)
from .matching import (
    Matching,
    bipartite_maximum_matching,
    has_perfect_matching,
    is_factor_critical,
    maximum_matching,
)


@dataclass(frozen=True)
class DeficiencyProfile:
    set: VertexSet
    od: int
    s: int
    df: int
    Df: int


@dataclass(frozen=True)
class Decomposition:
    n: int
    D: VertexSet
    A: VertexSet
    C: VertexSet
    split: ComponentSplit
    nu: int
    deficiency: int

    @property
    def odd_components(self) -> tuple[VertexSet, ...]:
        return self.split.odd_components

    @property
    def even_components(self) -> tuple[VertexSet, ...]:
        return self.split.even_components


@dataclass
class VerificationReport:
    """Named clause results plus a witness for the first failing clause."""

    clauses: dict[str, bool] = field(default_factory=dict)
    witness: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())

    def record(self, name: str, ok: bool, **witness: Any) -> bool:
        if name in self.clauses:
            ok = ok and self.clauses[name]
        self.clauses[name] = ok
        if not ok and self.witness is None:
            self.witness = {"clause": name, **witness}
        return ok

    def merge(self, other: VerificationReport, prefix: str = "") -> None:
        for name, ok in other.clauses.items():
            self.clauses[prefix + name] = self.clauses.get(prefix + name, True) and ok
        if self.witness is None and other.witness is not None:
            self.witness = {**other.witness, "clause": prefix + other.witness["clause"]}

    def to_dict(self) -> dict[str, Any]:
        return {"passed": self.passed, "clauses": dict(self.clauses), "witness": self.witness}


def deficiency_profile(
    g: Graph,
    s: Iterable[int],
    has_pm: Callable[[Graph], bool] = has_perfect_matching,
) -> DeficiencyProfile:
    split = component_split(g, s)
    size = len(split.deleted)
    # odd components never have a perfect matching
    lacking = sum(len(c) for c in split.odd_components) + sum(
        len(c) for c in split.even_components if not has_pm(induced_subgraph(g, c))
    )
    return DeficiencyProfile(split.deleted, split.od, size, split.od - size, lacking)


def compute_D(g: Graph, nu_matching: Matching | None = None) -> VertexSet:
    """Vertices left exposed by at least one maximum matching.

    v qualifies iff deleting it does not lower the matching number. Each
    deletion is solved by re-augmenting the maximum matching of G with v's
    edge removed, which needs at most one augmentation.
    """
    m = nu_matching if nu_matching is not None else maximum_matching(g)
    nu = m.size
    result = []
    for v in range(g.n):
        partner = m.mate[v]
        if partner is None:
            result.append(v)
            continue
        # G - v keeps v as an isolated vertex so the matching stays aligned
        h = Graph(g.n, ((a, b) for a, b in g.edges if v not in (a, b)))
        seed = list(m.mate)
        seed[v] = seed[partner] = None
        if maximum_matching(h, Matching(tuple(seed))).size == nu:
            result.append(v)
    return tuple(result)


def gallai_edmonds(g: Graph) -> Decomposition:
    m = maximum_matching(g)
    D = compute_D(g, m)
    A = neighborhood(g, D)
    in_da = set(D) | set(A)
    C = tuple(v for v in range(g.n) if v not in in_da)
    split = component_split(g, A)
    odd_union = tuple(sorted(v for comp in split.odd_components for v in comp))
    even_union = tuple(sorted(v for comp in split.even_components for v in comp))
    if odd_union != D or even_union != C:
        raise InvariantError(
            f"D={D} is not the union of odd A-components {split.odd_components}"
        )
    return Decomposition(g.n, D, A, C, split, m.size, g.n - 2 * m.size)


def is_tutte_berge(g: Graph, s: Iterable[int], nu: int | None = None) -> bool:
    split = component_split(g, s)
    if nu is None:
        nu = maximum_matching(g).size
    return split.od - len(split.deleted) == g.n - 2 * nu


def tutte_berge_formula_check(g: Graph, max_df: int, nu: int | None = None) -> bool:
    if nu is None:
        nu = maximum_matching(g).size
    return g.n - 2 * nu == max_df


def hall_violation(h: BipartiteMinor, surplus: int = 0) -> dict[str, Any] | None:
    """Why Hall's condition (with the given surplus) fails on the left side, or None.

    With surplus one the condition says every nonempty T on the left has at
    least |T| + 1 neighbors. That is the same as: no left vertex is isolated,
    and the left side can still be covered after deleting any one right node.
    """
    if surplus not in (0, 1):
        raise ValueError(f"surplus must be 0 or 1, got {surplus}")
    need = len(h.left)
    if surplus == 0:
        if bipartite_maximum_matching(h).size < need:
            return {"reason": "left side not coverable"}
        return None
    touched = {s for s, _ in h.edges}
    for s in h.left:
        if s not in touched:
            return {"reason": "left vertex without neighbors", "vertex": s}
    for j in sorted({j for _, j in h.edges}):
        if bipartite_maximum_matching(h, without_right=j).size < need:
            return {
                "reason": "left side not coverable after deleting a right node",
                "deleted_right": j,
                "component": list(h.back_map[j]),
            }
    return None


def hall_condition(h: BipartiteMinor, surplus: int = 0) -> bool:
    return hall_violation(h, surplus) is None


def verify_ge_conditions(
    g: Graph,
    s: Iterable[int],
    has_pm: Callable[[Graph], bool] = has_perfect_matching,
    factor_critical: Callable[[Graph], bool] = is_factor_critical,
    surplus_violation: Callable[[BipartiteMinor], dict[str, Any] | None] | None = None,
) -> VerificationReport:
    """Check conditions (a), (b), (c) for S.

    (a) every even S-component has a perfect matching, (b) every odd one is
    factor-critical, (c) S is empty or has Hall surplus one in the bipartite
    minor. The predicates can be swapped for brute-force versions.
    """
    if surplus_violation is None:
        surplus_violation = lambda h: hall_violation(h, 1)  # noqa: E731
    split = component_split(g, s)
    subset = list(split.deleted)
    report = VerificationReport({"a": True, "b": True, "c": True})
    for comp in split.even_components:
        if not has_pm(induced_subgraph(g, comp)):
            report.record("a", False, subset=subset, component=list(comp))
            break
    for comp in split.odd_components:
        if not factor_critical(induced_subgraph(g, comp)):
            report.record("b", False, subset=subset, component=list(comp))
            break
    if subset:
        try:
            h = bipartite_minor(g, subset)
        except MinorUndefinedError as exc:
            report.record("c", False, subset=subset, reason=str(exc))
        else:
            why = surplus_violation(h)
            if why is not None:
                report.record("c", False, subset=subset, **why)
    return report


def check_decomposition(g: Graph, d: Decomposition | None = None) -> VerificationReport:
    """Structural checks of a decomposition that need no exhaustive search."""
    if d is None:
        d = gallai_edmonds(g)
    report = VerificationReport()
    every = set(d.D) | set(d.A) | set(d.C)
    report.record(
        "partition",
        len(d.D) + len(d.A) + len(d.C) == g.n and every == set(range(g.n)),
        D=list(d.D), A=list(d.A), C=list(d.C),
    )
    report.record("A_is_neighborhood_of_D", neighborhood(g, d.D) == d.A, A=list(d.A))
    odd_union = tuple(sorted(v for comp in d.split.odd_components for v in comp))
    even_union = tuple(sorted(v for comp in d.split.even_components for v in comp))
    report.record("D_is_odd_union", odd_union == d.D, D=list(d.D))
    report.record("C_is_even_union", even_union == d.C, C=list(d.C))
    report.record(
        "deficiency",
        d.split.od - len(d.A) == g.n - 2 * d.nu == d.deficiency,
        od=d.split.od, A=len(d.A), nu=d.nu,
    )
    report.merge(verify_ge_conditions(g, d.A), prefix="ge_")
    return report
