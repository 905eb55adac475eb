import math

import pytest

import asigma


def test_f33_closed_form():
    g = asigma.family("f_graph:3,3")
    lam, perron = asigma.spectral_radius(g, 0.5)
    assert lam == pytest.approx(2.5, abs=1e-12)
    assert sum(x * x for x in perron) == pytest.approx(1.0)
    for s in (0.0, 0.3, 0.9):
        closed = 1.5 * s + math.sqrt(9 * s * s - 16 * s + 8) / 2 + 1
        assert asigma.spectral_radius(g.graph6(), s)[0] == pytest.approx(closed, abs=1e-9)


def test_graph_roundtrip_and_alpha():
    d10 = asigma.family("d_graph:10")
    assert asigma.Graph.from_graph6(d10.graph6()) == d10
    assert asigma.independence_number(d10) == 6
    assert d10.order == 10 and d10.size == 9


def test_search_matches_named_minimizer():
    (rec,) = asigma.find_minimizers(6, 2, [0.4], cls="graph")
    assert rec["minimizers"] == [asigma.canonical_code(asigma.family("f_graph:3,3"))]
    recs = asigma.find_minimizers(11, 7, [0.5, 0.9])
    w11 = asigma.canonical_code(asigma.family("w_graph:11"))
    assert all(r["minimizers"] == [w11] for r in recs)


def test_candidates_and_checks():
    rows = asigma.candidate_rows(19, True)
    assert ("T2", [4, 2, 2, 4], 3, 0) in [(s.upper(), list(c), t, lp) for s, c, t, lp in rows]
    out = asigma.run_check("path_radius", seed=1)
    assert out["status"] == "pass"
    assert "degree_bound" in asigma.check_ids()


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        asigma.spectral_radius("C~", 1.0)
    with pytest.raises(ValueError):
        asigma.Graph.from_graph6("")
    with pytest.raises(TypeError):
        asigma.independence_number(42)
