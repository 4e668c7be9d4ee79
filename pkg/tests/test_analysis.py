"""Reports, coefficient certifications, sweeps, minimum search."""

from fractions import Fraction

import pytest

from coxlinks.analysis import (
    analyze,
    log_concavity_check,
    min_dilatation_search,
    sign_alternation_check,
    trapezoidal_check,
    verify_theorems,
)
from coxlinks.exact import IntPolynomial
from coxlinks.fixtures import fixture_graph
from coxlinks.graphs import parse_graph

F = Fraction


def P(*coeffs):
    return IntPolynomial(coeffs)


class TestSignAlternation:
    def test_examples(self):
        assert sign_alternation_check(P(-1, 10, -27, 27, -10, 1)) is True
        assert sign_alternation_check(P(1, -3, 1)) is True
        assert sign_alternation_check(P(1, 0, 1)) is False
        assert sign_alternation_check(P(1, 3, 1)) is False

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            sign_alternation_check(P())


class TestTrapezoidal:
    def test_examples(self):
        assert trapezoidal_check(P(1, 10, 27, 27, 10, 1)) == (True, 2)
        assert trapezoidal_check(P(1, 3, 1)) == (True, 1)
        assert trapezoidal_check(P(1, 2, 1, 2, 1)) == (False, None)

    def test_signs_are_ignored(self):
        assert trapezoidal_check(P(-1, 10, -27, 27, -10, 1)) == (True, 2)

    def test_zero_coefficient_fails(self):
        assert trapezoidal_check(P(1, 0, 1)) == (False, None)

    def test_plateau_must_be_symmetric(self):
        assert trapezoidal_check(P(1, 2, 2, 2, 1)) == (True, 1)
        assert trapezoidal_check(P(1, 2, 2, 1, 1)) == (False, None)

    def test_constant_and_flat(self):
        assert trapezoidal_check(P(5)) == (True, 0)
        assert trapezoidal_check(P(2, 2)) == (True, 0)


class TestLogConcavity:
    def test_examples(self):
        assert log_concavity_check(P(-1, 10, -27, 27, -10, 1)) is True
        assert log_concavity_check(P(1, -3, 1)) is True
        assert log_concavity_check(P(1, 1, 1)) is False


class TestAnalyzeAlternating:
    def test_five_vertex_fixture_report(self):
        rep = analyze(fixture_graph("paper-5"))
        assert rep.alternating is True
        assert rep.coxeter.coeffs == (1, 10, 27, 27, 10, 1)
        assert rep.alexander.coeffs == (-1, 10, -27, 27, -10, 1)
        assert rep.real_stable and rep.sign_alternating
        assert rep.trapezoidal and rep.plateau_k == 2
        assert rep.log_concave and rep.biorderable_implied
        assert rep.proof_identities_ok
        assert rep.spectral_radius.width <= F(1, 10**9)
        assert abs(float(rep.spectral_radius.midpoint) - 6.40543540040998) < 1e-8

    def test_a2_report(self):
        rep = analyze(fixture_graph("a2"))
        assert rep.biorderable_implied is True
        lo, hi = rep.spectral_radius.lo, rep.spectral_radius.hi
        y, z = 2 * lo - 3, 2 * hi - 3
        assert (y <= 0 or y * y <= 5) and (z >= 0 and z * z >= 5)

    def test_epsilon_controls_width(self):
        rep = analyze(fixture_graph("a2"), eps=F(1, 100))
        assert rep.spectral_radius.width <= F(1, 100)

    def test_json_schema(self):
        d = analyze(fixture_graph("paper-5")).to_json_dict()
        assert d["graph"] == {"n": 5, "edges": 5, "alternating": True}
        assert d["polynomials"]["coxeter"] == [1, 10, 27, 27, 10, 1]
        assert d["polynomials"]["alexander"] == [-1, 10, -27, 27, -10, 1]
        assert set(d["flags"]) == {
            "real_stable", "sign_alternating", "trapezoidal", "plateau_k",
            "log_concave", "biorderable_implied", "proof_identities_ok"}
        assert all(d["flags"][k] for k in d["flags"] if k != "plateau_k")
        assert d["flags"]["plateau_k"] == 2
        for bound in ("lo", "hi"):
            num, den = d["spectral_radius"][bound].split("/")
            int(num), int(den)

    def test_text_report_mentions_radius(self):
        text = analyze(fixture_graph("a2")).render_text()
        assert "spectral radius in [2.61803398" in text
        assert "trapezoidal: yes (plateau k = 1)" in text


class TestAnalyzeClassical:
    def test_e10_reduced_report(self):
        rep = analyze(fixture_graph("e10-classical"))
        assert rep.alternating is False
        assert rep.alexander is None and rep.spectral_radius is None
        assert rep.real_stable is None and rep.proof_identities_ok is None
        mid = rep.max_real_root.midpoint
        assert abs(mid - F("1.176281")) < F(1, 10**6)

    def test_classical_without_real_roots(self):
        g = parse_graph("vertex a +\nvertex b +\nedge a b\n")
        rep = analyze(g)
        assert rep.coxeter.coeffs == (1, 1, 1)
        assert rep.max_real_root is None

    def test_classical_json(self):
        d = analyze(fixture_graph("e10-classical")).to_json_dict()
        assert d["graph"]["alternating"] is False
        assert d["polynomials"]["alexander"] is None
        assert d["flags"] is None
        assert d["spectral_radius"] is None
        assert d["max_real_root"] is not None

    def test_contract_checks(self):
        single = parse_graph("vertex a +\n")
        with pytest.raises(ValueError):
            analyze(single)
        with pytest.raises(ValueError):
            analyze(fixture_graph("a2"), eps=F(0))


class TestVerifyTheorems:
    def test_exhaustive_small_sweep(self):
        s = verify_theorems(5, extension_trials=10, seed=3)
        assert s.ok and s.counterexample is None
        counters = dict((name, (p, f)) for name, p, f in s.counters)
        trees = 1 + 3 + 16 + 125
        for name in ("symmetry", "real-negative-spectrum", "proof-identities",
                     "monodromy-charpoly", "reciprocality", "real-stability",
                     "sign-alternation", "trapezoidality", "log-concavity"):
            assert counters[name] == (trees, 0)
        for name in ("coxeter-interlacing", "alexander-interlacing",
                     "radius-monotonicity"):
            assert counters[name] == (4 * 10, 0)

    def test_dedup_reaches_same_verdict(self):
        s = verify_theorems(6, extension_trials=5, seed=3, dedup=True)
        assert s.ok
        counters = dict((name, (p, f)) for name, p, f in s.counters)
        assert counters["symmetry"] == (1 + 1 + 2 + 3 + 6, 0)

    def test_vacuous_trials(self):
        s = verify_theorems(2, extension_trials=0, seed=0)
        counters = dict((name, (p, f)) for name, p, f in s.counters)
        assert counters["symmetry"] == (1, 0)
        assert counters["coxeter-interlacing"] == (0, 0)
        assert s.ok

    def test_seed_reproducibility(self):
        a = verify_theorems(4, extension_trials=8, seed=42)
        b = verify_theorems(4, extension_trials=8, seed=42)
        assert a.render_text() == b.render_text()
        assert a.graphs_examined == b.graphs_examined

    def test_contract_checks(self):
        with pytest.raises(ValueError):
            verify_theorems(1)
        with pytest.raises(ValueError):
            verify_theorems(3, extension_trials=-1)


class TestMinSearch:
    def test_minimum_is_golden_ratio_squared_at_a2(self):
        r = min_dilatation_search(6)
        assert r.graph.n == 2
        assert r.enclosure.width <= F(1, 10**9)
        y, z = 2 * r.enclosure.lo - 3, 2 * r.enclosure.hi - 3
        assert (y <= 0 or y * y <= 5) and (z >= 0 and z * z >= 5)
        assert r.trees_examined == 1 + 3 + 16 + 125 + 1296

    def test_dedup_finds_same_enclosure(self):
        a = min_dilatation_search(5)
        b = min_dilatation_search(5, dedup=True)
        assert a.enclosure == b.enclosure
        assert b.trees_examined == 1 + 1 + 2 + 3

    def test_n2_baseline(self):
        r = min_dilatation_search(2)
        assert r.graph.n == 2 and r.trees_examined == 1

    def test_contract_checks(self):
        with pytest.raises(ValueError):
            min_dilatation_search(1)
        with pytest.raises(ValueError):
            min_dilatation_search(4, eps=F(-1))

    def test_render_mentions_attaining_graph(self):
        text = min_dilatation_search(4).render_text()
        assert "vertex v0 +" in text
        assert "2.6180339" in text
