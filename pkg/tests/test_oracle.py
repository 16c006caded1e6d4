import pytest
from hypothesis import given, settings

from conftest import C5, K1, K2, K3, K4, P3, STAR3, TRIANGLE_PENDANT, graphs
from gallai_edmonds.decomposition import gallai_edmonds
from gallai_edmonds.errors import SizeGuardError
from gallai_edmonds.graph import Graph, complete_graph, petersen_graph
from gallai_edmonds.matching import Matching, has_perfect_matching, is_factor_critical
from gallai_edmonds.oracle import (
    brute_has_perfect_matching,
    brute_is_factor_critical,
    brute_nu,
    enumerate_matchings,
    exhaustive_sweep,
    extremal_set,
    remark3_set,
    tutte_check,
    verify_structure_theorem,
)


def test_enumerate_matchings_examples():
    assert [m.edges for m in enumerate_matchings(K2)] == [(), ((0, 1),)]
    assert [m.edges for m in enumerate_matchings(P3)] == [(), ((0, 1),), ((1, 2),)]
    assert [m.edges for m in enumerate_matchings(K3)] == [(), ((0, 1),), ((0, 2),), ((1, 2),)]


def test_enumeration_is_exhaustive_and_unique():
    # K4 has 1 + 6 + 3 matchings
    found = [m.edges for m in enumerate_matchings(K4)]
    assert len(found) == len(set(found)) == 10


def test_enumeration_guard():
    with pytest.raises(SizeGuardError):
        list(enumerate_matchings(complete_graph(8)))


@pytest.mark.parametrize("g, nu", [(C5, 2), (K4, 2), (Graph(6), 0), (petersen_graph(), 5)])
def test_brute_nu(g, nu):
    assert brute_nu(g) == nu


@pytest.mark.parametrize(
    "g, candidates, max_df, min_Df",
    [
        (P3, ((1,),), 1, 2),
        (K3, ((),), 1, 3),
        (K4, ((),), 0, 0),
        (STAR3, ((0,),), 2, 3),
    ],
)
def test_extremal_set(g, candidates, max_df, min_Df):
    result = extremal_set(g)
    assert (result.candidates, result.max_df, result.min_Df) == (candidates, max_df, min_Df)
    assert result.unique


def test_extremal_tiebreak_on_k4():
    # singletons reach the same deficiency but leave a triangle
    from gallai_edmonds.decomposition import deficiency_profile

    p = deficiency_profile(K4, (0,))
    assert (p.df, p.Df) == (0, 3)


@pytest.mark.parametrize("g, expected", [(P3, (1,)), (K2, ()), (STAR3, (0,))])
def test_remark3_set(g, expected):
    result = remark3_set(g)
    assert result.candidates == (expected,)


def test_remark3_odd_vertex_totals_on_p3():
    assert remark3_set(P3).min_Df == 2


@pytest.mark.parametrize("g, expected", [(K2, True), (STAR3, False), (TRIANGLE_PENDANT, True), (K1, False)])
def test_tutte_check(g, expected):
    assert tutte_check(g) is expected


def test_sweep_guard():
    with pytest.raises(SizeGuardError):
        extremal_set(Graph(17))
    with pytest.raises(SizeGuardError):
        verify_structure_theorem(Graph(11))


@pytest.mark.parametrize("g", [P3, C5, K1, Graph(0), STAR3, TRIANGLE_PENDANT, petersen_graph()])
def test_verify_structure_theorem_named(g):
    report = verify_structure_theorem(g)
    assert report.passed, report.witness
    assert report.witness is None


def test_c5_unique_set_is_empty():
    assert extremal_set(C5).candidates == ((),)
    assert gallai_edmonds(C5).A == ()


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_brute_predicates_agree_with_engine(g):
    assert brute_has_perfect_matching(g) == has_perfect_matching(g)
    assert brute_is_factor_critical(g) == is_factor_critical(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_oracle_agreement_properties(g):
    ext = extremal_set(g)
    assert g.n - 2 * brute_nu(g) == ext.max_df
    assert ext.unique
    assert ext.candidates[0] == remark3_set(g).candidates[0] == gallai_edmonds(g).A
    assert tutte_check(g) == has_perfect_matching(g)


def test_broken_engine_is_reported(monkeypatch):
    """A matching engine that stops one augmentation short must be caught as data."""
    import gallai_edmonds.oracle as oracle
    from gallai_edmonds import decomposition, matching

    real = matching.maximum_matching

    def short(g, initial=None):
        m = real(g, initial)
        if not m.edges:
            return m
        u, v = m.edges[-1]
        mate = list(m.mate)
        mate[u] = mate[v] = None
        return Matching(tuple(mate))

    monkeypatch.setattr(oracle, "maximum_matching", short)
    monkeypatch.setattr(decomposition, "maximum_matching", short)
    monkeypatch.setattr(matching, "maximum_matching", short)
    report = verify_structure_theorem(K2)
    assert not report.passed
    assert report.witness["graph"] == {"n": 2, "edges": [[0, 1]]}
    assert not report.clauses["nu_engine_agreement"]


def test_exhaustive_sweep_small():
    summary = exhaustive_sweep(3)
    assert summary["graphs"] == {"0": 1, "1": 1, "2": 2, "3": 8}
    assert summary["passed"] and summary["failures"] == 0
    with pytest.raises(SizeGuardError):
        exhaustive_sweep(7)


def test_exhaustive_sweep_parallel_is_identical():
    assert exhaustive_sweep(4, jobs=2, chunk=16) == exhaustive_sweep(4)
