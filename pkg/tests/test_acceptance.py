"""Exit criteria: exhaustive, randomized and named-instance checks at their stated bounds."""

import json
import subprocess
import sys
import time
from math import comb

from conftest import C5, P3, STAR3
from gallai_edmonds.decomposition import check_decomposition, gallai_edmonds, hall_condition
from gallai_edmonds.errors import MinorUndefinedError
from gallai_edmonds.formats import emit_decomposition_json
from gallai_edmonds.generators import enumerate_labeled_graphs, random_graph
from gallai_edmonds.graph import bipartite_minor, induced_subgraph, petersen_graph
from gallai_edmonds.matching import has_perfect_matching, maximum_matching
from gallai_edmonds.oracle import (
    brute_hall_condition,
    brute_nu,
    extremal_set,
    tutte_check,
    verify_structure_theorem,
)

LABELED_UP_TO_6 = sum(2 ** comb(n, 2) for n in range(7))
LABELED_UP_TO_5 = sum(2 ** comb(n, 2) for n in range(6))


def _subsets(n):
    return [tuple(v for v in range(n) if mask >> v & 1) for mask in range(1 << n)]


def test_criterion_1_and_3_exhaustive_nu_and_tutte(criterion):
    start = time.perf_counter()
    graphs = nu_fail = tutte_fail = 0
    for n in range(7):
        for g in enumerate_labeled_graphs(n):
            graphs += 1
            nu_fail += maximum_matching(g).size != brute_nu(g)
            tutte_fail += tutte_check(g) != has_perfect_matching(g)
    elapsed = time.perf_counter() - start
    ok1 = criterion(
        "1 exhaustive nu-equivalence n<=6",
        graphs == LABELED_UP_TO_6 and nu_fail == 0 and elapsed <= 120,
        f"{graphs} graphs, {nu_fail} failures, {elapsed:.1f}s (limit 120s)",
    )
    ok3 = criterion(
        "3 Tutte corollary n<=6",
        graphs == LABELED_UP_TO_6 and tutte_fail == 0,
        f"{graphs} graphs, {tutte_fail} failures",
    )
    assert ok1 and ok3


def test_criterion_2_exhaustive_structure_theorem(criterion):
    start = time.perf_counter()
    graphs = 0
    failures = []
    for n in range(6):
        for g in enumerate_labeled_graphs(n):
            graphs += 1
            report = verify_structure_theorem(g)
            if not report.passed:
                failures.append(report.witness)
    elapsed = time.perf_counter() - start
    ok = criterion(
        "2 exhaustive structure theorem n<=5",
        graphs == LABELED_UP_TO_5 and not failures and elapsed <= 120,
        f"{graphs} graphs, {len(failures)} failures, {elapsed:.1f}s (limit 120s)",
    )
    assert ok, failures[:3]


def test_criterion_4_surplus_check_equivalence(criterion):
    minors = mismatches = 0
    for n in range(6):
        for g in enumerate_labeled_graphs(n):
            for s in _subsets(n):
                if not s:
                    continue
                try:
                    h = bipartite_minor(g, s)
                except MinorUndefinedError:
                    continue
                minors += 1
                mismatches += hall_condition(h, 1) != brute_hall_condition(h, 1)
    ok = criterion(
        "4 surplus-check equivalence",
        minors > 0 and mismatches == 0,
        f"{minors} minors, {mismatches} mismatches",
    )
    assert ok


def test_criterion_5_randomized_consistency(criterion):
    start = time.perf_counter()
    failures = []
    for i in range(1000):
        g = random_graph(30, 1, 10, seed=42 + i)
        report = check_decomposition(g)
        if not report.passed:
            failures.append((i, report.witness))
    disagreements = []
    for i in range(100):
        g = induced_subgraph(random_graph(30, 1, 10, seed=42 + i), range(16))
        ext = extremal_set(g)
        if not (ext.unique and ext.candidates[0] == gallai_edmonds(g).A):
            disagreements.append(i)
    elapsed = time.perf_counter() - start
    ok = criterion(
        "5 randomized consistency n=30 p=1/10 seed=42",
        not failures and not disagreements and elapsed <= 600,
        f"1000 graphs, {len(failures)} invariant failures; 100 n=16 sub-samples, "
        f"{len(disagreements)} extremal disagreements; {elapsed:.1f}s (limit 600s)",
    )
    assert ok, (failures[:3], disagreements[:3])


def test_criterion_6_named_instances(criterion, golden):
    petersen = gallai_edmonds(petersen_graph())
    c5 = gallai_edmonds(C5)
    star = gallai_edmonds(STAR3)
    checks = {
        "Petersen nu=5, D empty": petersen.nu == 5 and petersen.D == (),
        "C5 D=all, A empty": c5.D == (0, 1, 2, 3, 4) and c5.A == (),
        "K1,3 D=leaves, A=center, deficiency 2": (
            star.D == (1, 2, 3) and star.A == (0,) and star.deficiency == 2
        ),
        "P3 JSON golden": emit_decomposition_json(gallai_edmonds(P3))
        == (golden / "p3.json").read_text(),
    }
    # the named values above agree with the brute-force oracle
    checks["oracle confirms"] = all(
        verify_structure_theorem(g).passed for g in (petersen_graph(), C5, STAR3, P3)
    )
    failed = [name for name, ok in checks.items() if not ok]
    ok = criterion("6 named instances", not failed, "all match" if not failed else f"failed: {failed}")
    assert ok


def _cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "gallai_edmonds", *args], capture_output=True, check=False
    )


def test_criterion_7_determinism(criterion, golden):
    runs = {
        "decompose": [_cli("decompose", "--input", str(golden / "petersen.dimacs")) for _ in range(2)],
        "decompose-dot": [
            _cli("decompose", "--input", str(golden / "p3.edgelist"), "--format", "dot")
            for _ in range(2)
        ],
        "oracle --max-n 4": [_cli("oracle", "--max-n", "4", "--format", "json") for _ in range(2)],
    }
    same = {
        name: a.returncode == b.returncode == 0 and a.stdout == b.stdout and a.stdout
        for name, (a, b) in runs.items()
    }
    summary = json.loads(runs["oracle --max-n 4"][0].stdout)
    ok = criterion(
        "7 determinism",
        all(same.values()) and summary["total"] == 76,
        ", ".join(f"{k}: {'identical' if v else 'DIFFERENT'}" for k, v in same.items()),
    )
    assert ok
