import json

import pytest

from domchrom.chromatic import dominated_chromatic_number
from domchrom.errors import ArgumentError, BudgetError
from domchrom.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
    star_on_vertices,
    wheel_graph,
)
from domchrom.graph6 import parse_graph6, write_graph6, write_graph6_file
from domchrom.ops import OperationDescriptor, apply_operation
from domchrom.verify import (
    BOUND_FORMULAS,
    SuiteConfig,
    ValueCache,
    VerificationRecord,
    check_corollaries,
    check_edge_contraction,
    check_edge_deletion,
    check_odot,
    check_odot_ratio,
    check_path_cycle_formula,
    check_subdivision,
    check_vertex_contraction,
    check_vertex_deletion,
    check_wheel_equality,
    check_wheel_gap,
    find_sharpness_witnesses,
    run_suite,
    search_conjecture,
)
from domchrom.verify.checks import SolverOracleMismatch, confirm


@pytest.fixture(scope="module")
def cache():
    return ValueCache()


def q(rec, *names):
    return tuple(rec.quantities[n] for n in names)


def replay(rec: VerificationRecord, cache: ValueCache) -> None:
    """Recompute a record's values from its serialized graph and operation."""
    g = parse_graph6(rec.graph)
    h, _ = apply_operation(g, rec.operation)
    assert cache.chidom(g) == rec.quantities["chidom_G"]
    assert dominated_chromatic_number(h).value == rec.quantities["chidom_result"]


# -- per-theorem examples -----------------------------------------------------


def test_edge_deletion_examples(cache):
    recs = check_edge_deletion(complete_graph(3), cache)
    assert len(recs) == 3
    for r in recs:
        assert q(r, "chidom_G", "chidom_result") == (3, 2)
        assert r.tight == ["lower"]
    for r in check_edge_deletion(cycle_graph(4), cache):
        assert q(r, "chidom_G", "chidom_result") == (2, 2) and not r.violated and r.tight == []
    for r in check_edge_deletion(cycle_graph(5), cache):
        assert q(r, "chidom_G", "chidom_result") == (3, 3)


def test_edge_deletion_skips_bridges_and_disconnected(cache):
    recs = check_edge_deletion(path_graph(4), cache)
    assert [r.skip for r in recs] == ["bridge"] * 3
    (r,) = check_edge_deletion(Graph.from_edges(4, [(0, 1), (2, 3)]), cache)
    assert r.skip == "disconnected"


def test_vertex_deletion_examples(cache):
    for r in check_vertex_deletion(complete_graph(4), cache):
        assert q(r, "chidom_G", "chidom_result") == (4, 3) and "lower" in r.tight
    hub = next(r for r in check_vertex_deletion(wheel_graph(5), cache) if r.operation.vertex == 5)
    assert q(hub, "chidom_G", "chidom_result", "deg_v") == (4, 3, 5)
    for r in check_vertex_deletion(cycle_graph(4), cache):
        assert q(r, "chidom_G", "chidom_result") == (2, 2) and not r.violated


def test_vertex_deletion_skip_reasons(cache):
    star = check_vertex_deletion(star_graph(3), cache)
    assert star[0].skip == "cut_vertex"
    assert all(r.skip is None for r in star[1:])
    # removing either end of K_2 leaves a single vertex
    assert [r.skip for r in check_vertex_deletion(complete_graph(2), cache)] == ["degenerate_size"] * 2
    # the shared apex of two triangles is a cut vertex
    bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert check_vertex_deletion(bowtie, cache)[0].skip == "cut_vertex"


def test_wheel_equality_examples(cache):
    for g, v in [(wheel_graph(6), 3), (complete_graph(5), 5), (path_graph(3), 2)]:
        r = check_wheel_equality(g, cache)
        assert q(r, "chi", "chidom", "chidt") == (v, v, v)
        assert not r.violated
    assert check_wheel_equality(cycle_graph(5), cache) is None


def test_wheel_gap_examples(cache):
    recs = {r.quantities["n"]: r for r in check_wheel_gap(16, cache)}
    assert q(recs[8], "chidom_C", "chidom_W", "gap") == (4, 3, 1)
    assert q(recs[12], "chidom_C", "chidom_W", "gap") == (6, 3, 3)
    assert q(recs[16], "chidom_C", "chidom_W", "gap") == (8, 3, 5)
    assert recs[4].bounds == [] and recs[8].bounds and not any(r.violated for r in recs.values())
    with pytest.raises(ArgumentError):
        check_wheel_gap(3, cache)


def test_edge_contraction_examples(cache):
    recs = check_edge_contraction(cycle_graph(4), cache)
    th = [r for r in recs if r.theorem == "edge_contraction"]
    assert len(th) == 4 and len(recs) == 8
    for r in th:
        assert q(r, "chidom_G", "chidom_result") == (2, 3) and r.tight == ["upper"]
    conj = [r for r in check_edge_contraction(complete_graph(4), cache) if r.theorem == "contraction_conjecture"]
    for r in conj:
        assert q(r, "chidom_G", "chidom_result") == (4, 3) and r.tight == ["conjecture"]
    for r in check_edge_contraction(cycle_graph(8), cache, conjecture=False):
        assert q(r, "chidom_G", "chidom_result") == (4, 4)


def test_edge_contraction_k2_degenerate(cache):
    recs = check_edge_contraction(complete_graph(2), cache)
    assert {(r.theorem, r.skip) for r in recs} == {
        ("edge_contraction", "degenerate_size"),
        ("contraction_conjecture", "degenerate_size"),
    }


def test_vertex_contraction_examples(cache):
    for r in check_vertex_contraction(cycle_graph(4), cache):
        assert q(r, "chidom_G", "chidom_result") == (2, 3) and r.tight == ["upper"]
    for r in check_vertex_contraction(cycle_graph(5), cache):
        assert q(r, "chidom_G", "chidom_result") == (3, 2) and r.tight == ["lower"]
    center = check_vertex_contraction(star_graph(3), cache)[0]
    assert q(center, "chidom_G", "chidom_result", "deg_v") == (2, 3, 3)
    assert not center.violated


def test_odot_examples(cache):
    r = check_odot(complete_graph(5), cache)[0]
    assert q(r, "chidom_G", "chidom_result") == (5, 2) and "lower" in r.tight
    for r in check_odot(cycle_graph(5), cache):
        assert q(r, "chidom_G", "chidom_result") == (3, 3)
        assert "ratio_num" not in r.quantities
    r = check_odot(complete_graph(4), cache)[0]
    assert q(r, "ratio_num", "ratio_den") == (4, 2)


def test_odot_ratio_grows(cache):
    recs = check_odot_ratio(10, cache)
    assert [q(r, "num", "den") for r in recs] == [(n, 2) for n in range(3, 11)]
    assert not any(r.violated for r in recs)


def test_corollary_examples(cache):
    recs = check_corollaries(cycle_graph(4), cache)
    edge = [r for r in recs if r.theorem == "corollary_edge"]
    assert len(edge) == 4
    for r in edge:
        assert q(r, "chidom_delete", "chidom_contract") == (2, 3)
        assert (r.bound("lower_x2").lhs, r.bound("upper_x2").rhs) == (2, 8)
    for r in check_corollaries(cycle_graph(5), cache):
        if r.theorem == "corollary_vertex":
            assert q(r, "chidom_delete", "chidom_contract", "deg_v") == (2, 2, 2)
            assert not r.violated
    for r in check_corollaries(complete_graph(3), cache):
        if r.theorem == "corollary_edge":
            assert q(r, "chidom_delete", "chidom_contract") == (2, 2) and not r.violated


def test_subdivision_examples(cache):
    frac, dfrac = check_subdivision(complete_graph(3), 2, cache)
    assert frac.quantities["chidom_sub"] == 4
    assert (frac.bound("lower").lhs, frac.bound("upper").rhs) == (2, 6)
    assert dfrac.skip == "formula_domain"
    frac, dfrac = check_subdivision(star_graph(3), 3, cache)
    assert frac.quantities["chidom_sub"] == 6 and "upper" in frac.tight
    frac, dfrac = check_subdivision(star_graph(3), 5, cache)
    assert dfrac.bound("lower").lhs == dfrac.bound("upper").rhs == 7
    assert dfrac.quantities["chidom_sub"] == 8
    assert dfrac.violated and dfrac.oracle_confirmed is None  # 16 vertices, over the oracle cap
    assert dfrac.certificates["chidom_sub"]["k"] == 8


def test_subdivision_open_question_instance(cache):
    frac, dfrac = check_subdivision(star_graph(2), 5, cache)
    assert dfrac.quantities["n_sub"] == 11 and dfrac.quantities["chidom_sub"] == 6
    assert dfrac.bound("upper").rhs == 5 and not dfrac.bound("upper").holds
    assert not frac.violated


def test_subdivision_budget_skip(cache):
    recs = check_subdivision(complete_graph(4), 4, cache, cap_vertices=20)
    assert {r.skip for r in recs} == {"budget"}
    assert recs[0].quantities["n_sub"] == 22
    with pytest.raises(ArgumentError):
        check_subdivision(complete_graph(3), 1, cache)


def test_path_cycle_formula(cache):
    recs = check_path_cycle_formula(3, 12, cache)
    assert not any(r.violated for r in recs)
    c3 = [r for r in recs if r.skip]
    assert len(c3) == 1 and c3[0].skip == "formula_domain"
    assert q(c3[0], "chidom", "formula_expression") == (3, 2)


# -- record plumbing ------------------------------------------------------------


def test_record_json_round_trip_and_consistency(cache):
    recs = check_edge_deletion(complete_graph(4), cache) + check_subdivision(star_graph(2), 5, cache)
    for r in recs:
        data = json.loads(json.dumps(r.to_json()))
        back = VerificationRecord.from_json(data)
        assert back == r and back.consistent()
    tampered = VerificationRecord.from_json(recs[0].to_json())
    tampered.quantities["chidom_result"] += 5
    assert not tampered.consistent()


def test_bound_formulas_cover_all_theorems():
    from domchrom.verify import THEOREMS

    assert set(BOUND_FORMULAS) == set(THEOREMS)


def test_confirm_detects_solver_oracle_mismatch(cache):
    g = cycle_graph(5)
    rec = VerificationRecord.evaluated(
        "edge_deletion", write_graph6(g), OperationDescriptor("delete_edge", edge=(0, 1)), {"chidom_G": 9, "chidom_result": 3}
    )
    assert rec.violated
    with pytest.raises(SolverOracleMismatch):
        confirm(rec, cache, {"chidom_G": g})


def test_violations_replay_from_serialized_instance(cache):
    for g, k in [(star_graph(2), 5), (path_graph(3), 3), (star_graph(3), 3)]:
        for r in check_subdivision(g, k, cache):
            if r.violated:
                back = VerificationRecord.from_json(r.to_json())
                h, _ = apply_operation(parse_graph6(back.graph), back.operation)
                assert dominated_chromatic_number(h).value == back.quantities["chidom_sub"]
                if h.n <= 8:
                    assert back.oracle_confirmed


# -- searches -----------------------------------------------------------------


def test_conjecture_small():
    rep = search_conjecture(3)
    assert rep.graphs_scanned == 4
    rep4 = search_conjecture(4)
    assert rep4.scanned == {3: 4, 4: 38}
    for r in rep4.counterexamples:
        assert r.oracle_confirmed
    with pytest.raises(BudgetError):
        search_conjecture(8)
    with pytest.raises(BudgetError):
        search_conjecture(2)


def test_sharpness_examples(cache):
    k3 = write_graph6(complete_graph(3))
    found = find_sharpness_witnesses("edge_deletion", "lower", 5, cache)
    assert k3 in {r.graph for r in found}
    c4 = write_graph6(cycle_graph(4))
    assert c4 in {r.graph for r in find_sharpness_witnesses("vertex_contraction", "upper", 5, cache)}
    first = find_sharpness_witnesses("edge_deletion", "lower", 5, cache, smallest_only=True)
    assert {parse_graph6(r.graph).n for r in first} == {3}
    with pytest.raises(ArgumentError):
        find_sharpness_witnesses("wheel_gap", "lower", 4)
    with pytest.raises(ArgumentError):
        find_sharpness_witnesses("contraction_conjecture", "upper", 4)


def test_sharpness_edge_deletion_plus_two_absent_below_six(cache):
    assert find_sharpness_witnesses("edge_deletion", "upper", 5, cache) == []


# -- suite ----------------------------------------------------------------------


def test_suite_counts_sum_and_determinism():
    cfg = dict(n_max=4, k_max=3)
    a = run_suite(SuiteConfig(**cfg, workers=1))
    b = run_suite(SuiteConfig(**cfg, workers=2))
    assert a.body_text() == b.body_text()
    s = a.summary
    assert s["checked"] == sum(row["checked"] for row in s["per_theorem"].values())
    assert s["checked"] + s["skipped"] == len(a.records)
    assert s["violations"] == sum(r.violated for r in a.records)
    assert a.records == sorted(a.records, key=VerificationRecord.sort_key)
    assert "runtime" in a.to_json() and "runtime" not in a.body()


def test_suite_findings_mode_keeps_only_violations():
    rep = run_suite(SuiteConfig(n_max=3, theorems=("subdivision_dfrac",), records="findings"))
    assert rep.records and all(r.violated for r in rep.records)
    assert rep.summary["per_theorem"]["subdivision_dfrac"]["skipped"] > 0


def test_suite_corpus_and_csv(tmp_path):
    path = tmp_path / "corpus.g6"
    write_graph6_file(path, [cycle_graph(5), star_on_vertices(4)])
    rep = run_suite(SuiteConfig(theorems=("edge_deletion", "vertex_deletion"), corpus=str(path)))
    graphs = {r.graph for r in rep.records}
    assert graphs == {write_graph6(cycle_graph(5)), write_graph6(star_on_vertices(4))}
    lines = rep.to_csv().splitlines()
    assert lines[0] == "theorem,checked,violations,tight,skipped"
    assert len(lines) == 3


def test_suite_unreadable_corpus(tmp_path):
    with pytest.raises(OSError):
        run_suite(SuiteConfig(theorems=("odot",), corpus=str(tmp_path / "missing.g6")))


def test_suite_rejects_unknown_theorem():
    with pytest.raises(ArgumentError):
        SuiteConfig(theorems=("nope",))
