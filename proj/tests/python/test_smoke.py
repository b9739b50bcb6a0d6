import json
import math

import specdev


def test_graph_construction_and_graph6():
    g = specdev.star(5)
    assert g.n == 5
    assert g.m == 4
    assert g.degree(0) == 4
    assert g.to_graph6() == "Ds_"
    assert specdev.Graph.from_graph6("Ds_") == g
    assert specdev.Graph.from_edges(3, [(0, 1), (1, 2)]).m == 2

    try:
        specdev.Graph.from_graph6("Ba")
    except ValueError as e:
        assert "padding" in str(e) or "offset" in str(e)
    else:
        raise AssertionError("malformed graph6 accepted")


def test_degree_stats_exact():
    st = specdev.degree_stats(specdev.star(5))
    assert st.s == "24/5"
    assert st.avg_degree == "8/5"
    assert st.d_ceil == 2
    assert st.partition_high == [0]
    assert st.high_side_deviation == "12/5"
    assert specdev.half_deviation_identity_holds(specdev.gnp(12, 0.3, 7))


def test_certified_interval():
    iv = specdev.certified_interval(specdev.complete(5))
    assert iv.lo == iv.hi == 4.0
    assert iv.lo_exact == "4"
    assert iv.converged

    p3 = specdev.certified_interval(specdev.path(3))
    assert abs(p3.mid() - math.sqrt(2)) < 1e-9
    assert p3.width() <= 1e-9


def test_bound_report():
    rep = specdev.evaluate_bounds(specdev.star(5))
    assert rep.s == "24/5"
    assert rep.d_ceil == 2
    assert all(rep.verdicts.values())
    assert abs(rep.gap - 0.4) < 1e-7

    parsed = json.loads(rep.json())
    assert parsed["s"] == "24/5"
    assert parsed["verdict_theorem1"] is True


def test_rowsum_and_cases():
    g = specdev.star(5)
    chk = specdev.rowsum_check(g)
    assert chk.passed
    assert chk.max_row == "3"
    assert chk.budget == "22/5"

    center = specdev.case_decomposition(g, 0)
    assert center.case_id == 2
    leaf = specdev.case_decomposition(g, 1)
    assert leaf.case_id == 1
    assert leaf.slack == "7/5"

    assert specdev.poly_row_sums(g, [0, -1, 1]) == ["0", "3", "3", "3", "3"]
    assert specdev.lemma1_check(g, [0, -1, 1])["passed"]


def test_exhaustive_corpus():
    summary = specdev.exhaustive_check(4)
    assert summary.graphs_checked == 64
    assert summary.violations == []
    assert summary.max_gap_ratio_witness == "C_"


def test_random_corpus():
    summary = specdev.random_corpus_check(
        ["star", "cycle", "gnp"], [6, 9], count=24, seed=3, p=0.4
    )
    assert summary.graphs_checked == 24
    assert summary.violations == []


def test_blowup_scaling():
    g = specdev.path(3)
    g2 = specdev.blow_up(g, 2)
    assert (g2.n, g2.m) == (6, 8)
    rows = specdev.blowup_demo(g, [2, 3])
    assert all(r.rho_scaled_check for r in rows)


def test_star_sweep():
    rows = specdev.star_sweep([5, 1000])
    assert rows[0].s == "24/5"
    assert rows[1].ratio > rows[0].ratio
    r = specdev.star_gap_ratio(10**6)
    assert 0.7046 < r < 0.7072
